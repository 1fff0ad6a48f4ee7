#include <algorithm>
#include <exception>
#include <set>
#include <thread>
#include <sstream>

#include "classify_util.hpp"

namespace nil7 {

using detail::to_field;

namespace {

[[noreturn]] void internal(const std::string& what) { throw Error(ErrorCode::Internal, what); }

KForm restrict(const KForm& a, int n) {
  KForm out(a.field(), n, a.degree());
  for (const auto& [m, c] : a.terms()) {
    if (m >> n) internal("differential leaves the closed part");
    out.add_term(m, c);
  }
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  Matrix m(f, a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// dx5 = x1x2, dx6 = x3x4, dx7 = (x1x3 - b x2x4) / (2 sqrt(a)) over k(sqrt(a)).
Presentation anisotropic_split_model(const Field& k, const Scalar& b) {
  Presentation p(k, 7);
  const Scalar s = (k.from_int(2) * k.sqrt_param()).inv();
  p.d[4].add_term(mono({0, 1}), k.one());
  p.d[5].add_term(mono({2, 3}), k.one());
  p.d[6].add_term(mono({0, 2}), s);
  p.d[6].add_term(mono({1, 3}), -(to_field(b, k) * s));
  return p;
}

// Generator substitution x_i = sum_j E(j, i) y_j returning to the rational model.
Matrix descent_matrix(const Field& k, Shape s) {
  Matrix e(k, 7, 7);
  const Scalar r = k.sqrt_param(), one = k.one();
  auto set = [&](int x, int y, const Scalar& v) { e(static_cast<std::size_t>(y), static_cast<std::size_t>(x)) = v; };
  if (s == Shape::BisecantConjugate) {
    set(0, 0, one), set(0, 1, r);
    set(1, 2, one), set(1, 3, r);
    set(2, 0, one), set(2, 1, -r);
    set(3, 2, one), set(3, 3, -r);
    set(4, 4, one);
    set(5, 5, one), set(5, 6, r);
    set(6, 5, one), set(6, 6, -r);
    return e;
  }
  set(0, 0, r), set(0, 1, one);
  set(1, 2, r), set(1, 3, one);
  set(2, 0, -r), set(2, 1, one);
  set(3, 2, -r), set(3, 3, one);
  set(4, 4, r), set(4, 5, one);
  set(5, 4, -r), set(5, 5, one);
  set(6, 6, s == Shape::LinePairConjugate ? k.from_int(2) * r : one);
  return e;
}

struct Adapted {
  Matrix m;  // closed generators first
  int f0 = 0, f1 = 0;
  std::vector<KForm> phis;
};

Adapted adapt(const Presentation& p, std::vector<TraceStep>& trace) {
  if (p.n != 7) throw Error(ErrorCode::WrongDimension, "expected 7 generators, got " + std::to_string(p.n));
  const Filtration filt = characteristic_filtration(p);
  std::ostringstream fv;
  for (std::size_t i = 0; i < filt.f.size(); ++i) fv << (i ? "," : "") << filt.f[i];
  if (filt.length() != 2) throw Error(ErrorCode::WrongLength, "f-vector (" + fv.str() + ")");
  trace.push_back({"filtration", "f-vector (" + fv.str() + ")"});
  Adapted ad;
  ad.f0 = static_cast<int>(filt.f[0]);
  ad.f1 = static_cast<int>(filt.f[1]);
  std::vector<Vector> cols = filt.w[0];
  for (auto& e : complete_with_units(p.field, 7, cols)) cols.push_back(std::move(e));
  ad.m = Matrix::from_columns(p.field, cols);
  const Presentation q = apply_basis_change(p, BasisChange(ad.m));
  for (int j = ad.f0; j < 7; ++j) ad.phis.push_back(restrict(q.d[static_cast<std::size_t>(j)], ad.f0));
  return ad;
}

Certificate build_certificate(const Presentation& p, const Adapted& ad, const CaseResult& cr) {
  Certificate cert;
  if (!cr.x_basis) {
    cert.reason = cr.reason.empty() ? "no construction" : cr.reason;
    return cert;
  }
  const Field& f = p.field;
  const Shape shape = cr.form.shape;
  const Field l = cr.extension ? *cr.extension : f;
  Presentation target;
  if (!cr.extension) {
    target = model_presentation(f, shape, cr.raw_a, cr.raw_b);
  } else if (shape == Shape::BisecantConjugate) {
    target = model_presentation(l, Shape::Bisecant);
  } else if (shape == Shape::LinePairConjugate) {
    target = model_presentation(l, Shape::LinePair);
  } else {
    target = anisotropic_split_model(l, *cr.raw_b);
  }
  const auto f0 = static_cast<std::size_t>(ad.f0), f1 = static_cast<std::size_t>(ad.f1);
  const Matrix ml = to_field(ad.m, l);
  const Matrix t1 = block_diag(*cr.x_basis, Matrix::identity(l, f1));
  const Presentation p1 = apply_basis_change(p, BasisChange(ml * t1));
  Matrix phi(l, 21, f1);
  for (std::size_t i = 0; i < f1; ++i) {
    const Vector c = p1.d[f0 + i].coefficient_vector();
    for (std::size_t r = 0; r < 21; ++r) phi(r, i) = c[r];
  }
  Matrix s(l, f1, f1);
  for (std::size_t j = 0; j < f1; ++j) {
    auto col = solve(phi, target.d[f0 + j].coefficient_vector());
    if (!col) internal("construction for " + tag(shape) + " misses the model span");
    for (std::size_t i = 0; i < f1; ++i) s(i, j) = (*col)[i];
  }
  const BasisChange pl(ml * t1 * block_diag(Matrix::identity(l, f0), s));
  if (apply_basis_change(p, pl) != target) internal("certificate for " + tag(shape) + " does not verify");
  const Presentation canon = canonical_presentation(cr.form);
  if (!cr.extension) {
    if (target != canon) internal("model differs from the canonical one");
    cert.kind = Certificate::Kind::Base;
    cert.base = pl;
    return cert;
  }
  const Presentation k_model = model_presentation(f, shape, cr.raw_a, cr.raw_b);
  const BasisChange desc(invert(descent_matrix(l, shape)));
  if (apply_basis_change(target, desc) != k_model.lift(l)) internal("descent for " + tag(shape) + " does not verify");
  cert.kind = Certificate::Kind::Extension;
  cert.extension = l;
  cert.to_split = pl;
  cert.split_model = target;
  cert.descent = desc;
  cert.k_model = k_model;
  const Matrix comb = BasisChange::compose(pl, desc).matrix;
  Matrix pk(f, 7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      if (!comb(i, j).im().is_zero()) internal("descended certificate is not rational");
      pk(i, j) = to_field(comb(i, j).re(), f);
    }
  BasisChange base(pk);
  if (apply_basis_change(p, base) != k_model) internal("descended certificate does not verify");
  if (k_model == canon) {
    cert.kind = Certificate::Kind::Base;
    cert.base = base;
  } else {
    cert.reason = detail::missing_root_reason(f);
  }
  return cert;
}

}  // namespace

ClassificationReport classify(const Presentation& p, const ClassifyOptions& opt) {
  ClassificationReport rep;
  rep.input = p;
  const Adapted ad = adapt(p, rep.trace);
  rep.signature = {ad.f0, ad.f1};
  CaseResult cr;
  switch (ad.f1) {
    case 1:
      cr = classify_61(ad.phis[0], opt);
      break;
    case 2:
      cr = classify_52(ad.phis[0], ad.phis[1], opt);
      break;
    case 3:
      cr = classify_43(ad.phis[0], ad.phis[1], ad.phis[2], opt);
      break;
    default:
      internal("signature (" + std::to_string(ad.f0) + "," + std::to_string(ad.f1) + ")");
  }
  for (auto& t : cr.trace) rep.trace.push_back(std::move(t));
  rep.canonical = cr.form;
  if (opt.certificate) {
    rep.certificate = build_certificate(p, ad, cr);
  } else {
    rep.certificate.reason = "not requested";
  }
  return rep;
}

bool is_isomorphic(const Presentation& x, const Presentation& y) {
  if (x.field != y.field) throw Error(ErrorCode::FieldMismatch, x.field.name() + " vs " + y.field.name());
  ClassifyOptions opt;
  opt.certificate = false;
  return classify(x, opt).canonical == classify(y, opt).canonical;
}

std::vector<CanonicalForm> enumerate_classes(const Field& f, std::size_t samples, std::uint64_t seed) {
  ClassifyOptions opt;
  opt.certificate = false;
  std::set<CanonicalForm> found;
  for (int r = 1; r <= kShapeCount; ++r) {
    const Shape s = shape_from_row(r);
    switch (parameter_count(s)) {
      case 0:
        found.insert(classify(model_presentation(f, s), opt).canonical);
        break;
      case 1:
        for (const auto& a : seed_square_classes(f)) found.insert(classify(model_presentation(f, s, a), opt).canonical);
        break;
      default:
        for (const auto& [a, b] : seed_quaternion_pairs(f))
          found.insert(classify(model_presentation(f, s, a, b), opt).canonical);
    }
  }
  // Sample i always uses seed + i, so the result does not depend on the split.
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::set<CanonicalForm>> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const int sigs[3][2] = {{6, 1}, {5, 2}, {4, 3}};
      try {
        for (std::size_t i = w; i < samples; i += workers) {
          const auto& sg = sigs[i % 3];
          parts[w].insert(classify(random_presentation(sg[0], sg[1], seed + i, f), opt).canonical);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& part : parts) found.insert(part.begin(), part.end());
  return {found.begin(), found.end()};
}

}  // namespace nil7
