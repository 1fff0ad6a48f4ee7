#include <sstream>

#include "classify_util.hpp"

namespace nil7 {

using detail::to_field;

namespace {

[[noreturn]] void internal(const std::string& what) { throw Error(ErrorCode::Internal, what); }

std::string str(const Scalar& s) { return s.to_string(); }

Vector conj(const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(galois_conjugate(x));
  return out;
}

KForm combo(const std::vector<KForm>& phis, const Vector& c) {
  const Field l = c[0].field();
  KForm out(l, phis[0].dim(), 2);
  for (std::size_t i = 0; i < phis.size(); ++i)
    if (!c[i].is_zero()) out += c[i] * to_field(phis[i], l);
  return out;
}

Vector scaled(const Scalar& s, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

Vector sum(const Vector& a, const Vector& b) {
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

// Some v with z ^ v = phi.
Vector solve_wedge(const Vector& z, const KForm& phi) {
  const Field& f = phi.field();
  const auto n = static_cast<std::size_t>(phi.dim());
  const KForm zf = KForm::linear(f, z);
  const Vector target = phi.coefficient_vector();
  Matrix m(f, target.size(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector c = wedge(zf, KForm::linear(f, unit_vector(f, n, i))).coefficient_vector();
    for (std::size_t r = 0; r < c.size(); ++r) m(r, i) = c[r];
  }
  auto v = solve(m, target);
  if (!v) internal("vector does not divide the bivector");
  return *v;
}

// phi written in the basis whose vectors are the columns of b.
KForm in_basis(const KForm& phi, const Matrix& b) { return substitute(phi, invert(b)); }

Scalar coef(const KForm& phi, int i, int j) { return phi.coeff(mono({i, j})); }

Matrix columns(const Field& f, const std::vector<Vector>& cols) { return Matrix::from_columns(f, cols); }

// The list extended by unit vectors to a basis.
std::vector<Vector> completed(const Field& f, std::size_t n, std::vector<Vector> vs) {
  for (auto& e : complete_with_units(f, n, vs)) vs.push_back(std::move(e));
  return vs;
}

Vector only(const std::vector<Vector>& vs, const char* what) {
  if (vs.size() != 1) internal(std::string(what) + " is not a line");
  return vs[0];
}

std::vector<Vector> supp(const KForm& phi) { return support(phi); }

Vector line_meet(const Field& f, std::size_t n, const KForm& a, const KForm& b) {
  return only(intersect(f, n, supp(a), supp(b)), "support intersection");
}

std::pair<Vector, Vector> factor(const KForm& phi) {
  if (bivector_rank(phi) != 2) internal("expected a decomposable member");
  return factor_rank2(phi);
}

// Evaluates A l^2 + B l m + C m^2.
Scalar eval_quadratic(const Vector& q, const Scalar& l, const Scalar& m) {
  return q[0] * l * l + q[1] * l * m + q[2] * m * m;
}

struct PencilAnalysis {
  PencilKind kind;
  std::optional<SquareClass> a;
  std::size_t span = 0;
  Vector g;             // the gcd quadratic when span == 1
  Scalar disc;          // its discriminant
  Vector root;          // (l, m) of the decomposable member for tangent cases
  std::vector<TraceStep> trace;
};

PencilAnalysis analyze_pencil(const KForm& phi6, const KForm& phi7) {
  const Field& f = phi6.field();
  if (span_basis(f, 10, {phi6.coefficient_vector(), phi7.coefficient_vector()}).size() != 2) {
    throw Error(ErrorCode::DependentPencil, "the two differentials are proportional");
  }
  const Vector a = wedge(phi6, phi6).coefficient_vector();
  const Vector b = (f.from_int(2) * wedge(phi6, phi7)).coefficient_vector();
  const Vector c = wedge(phi7, phi7).coefficient_vector();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.size(); ++i) rows.push_back({a[i], b[i], c[i]});
  Matrix m = Matrix::from_rows(f, rows);
  Echelon e = rref(m);
  PencilAnalysis out;
  out.span = e.pivots.size();
  out.trace.push_back({"pencil_quadrics", "independent quadratics: " + std::to_string(out.span)});
  auto tangent = [&](Vector root, const char* gcd) {
    // Decomposable member psi6; another member psi7 has rank 4.
    out.root = root;
    KForm psi6 = combo({phi6, phi7}, root);
    KForm psi7 = root[1].is_zero() ? phi7 : phi6;
    if (bivector_rank(psi6) != 2 || bivector_rank(psi7) != 4) internal("tangent pencil ranks");
    const auto meet = intersect(f, 5, supp(psi6), supp(psi7));
    out.kind = meet.size() == 2 ? PencilKind::TangentLagrangian : PencilKind::TangentLine;
    out.trace.push_back({"tangent", std::string("gcd ") + gcd + ", plane meets support in dim " +
                                        std::to_string(meet.size())});
  };
  if (out.span == 0) {
    out.kind = PencilKind::ContainedInGrassmannian;
    out.trace.push_back({"contained", "all members decomposable"});
    return out;
  }
  if (out.span == 1) {
    out.g = e.reduced.row(0);
    const Vector& g = out.g;
    out.disc = g[1] * g[1] - f.from_int(4) * g[0] * g[2];
    std::string w = "g = (" + str(g[0]) + ", " + str(g[1]) + ", " + str(g[2]) + "), disc " + str(out.disc);
    if (out.disc.is_zero()) {
      Vector root = g[0].is_zero() ? Vector{f.one(), f.zero()} : Vector{-g[1], f.from_int(2) * g[0]};
      out.trace.push_back({"double_root", w});
      tangent(root, "degree 2");
    } else if (is_square(out.disc)) {
      out.kind = PencilKind::Bisecant;
      out.trace.push_back({"bisecant", w});
    } else {
      out.kind = PencilKind::BisecantConjugate;
      out.a = square_class(out.disc);
      out.trace.push_back({"bisecant_conjugate", w + ", class " + str(out.a->representative)});
    }
    return out;
  }
  if (out.span == 2) {
    const Vector q1 = e.reduced.row(0), q2 = e.reduced.row(1);
    const Scalar bp = q2[0] * q1[1] - q1[0] * q2[1], cp = q2[0] * q1[2] - q1[0] * q2[2];
    std::vector<Vector> cands{{f.one(), f.zero()}};
    if (!bp.is_zero()) cands.push_back({-cp, bp});
    for (const auto& r : cands) {
      bool common = true;
      for (const auto& q : rows) common = common && eval_quadratic(q, r[0], r[1]).is_zero();
      if (common) {
        tangent(r, "degree 1");
        return out;
      }
    }
  }
  out.kind = PencilKind::Disjoint;
  out.trace.push_back({"disjoint", "no common root"});
  return out;
}

CaseResult base_result(const Field& f, Shape s) {
  CaseResult r;
  r.form = make_canonical(f, s);
  return r;
}

}  // namespace

PencilClass pencil_position(const KForm& phi6, const KForm& phi7) {
  auto an = analyze_pencil(phi6, phi7);
  return {an.kind, an.a};
}

Matrix net_conic(const KForm& phi5, const KForm& phi6, const KForm& phi7) {
  const Field& f = phi5.field();
  const std::vector<KForm> phis{phi5, phi6, phi7};
  std::vector<Vector> cv;
  for (const auto& p : phis) cv.push_back(p.coefficient_vector());
  if (span_basis(f, cv[0].size(), cv).size() != 3) throw Error(ErrorCode::DependentNet, "the net is degenerate");
  Matrix g(f, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) g(i, j) = g(j, i) = top_component(wedge(phis[i], phis[j]));
  return g;
}

CaseResult classify_61(const KForm& phi, const ClassifyOptions& opt) {
  if (phi.is_zero()) throw Error(ErrorCode::ZeroBivector, "dx7 = 0");
  const std::size_t rk = bivector_rank(phi);
  const Shape s = rk == 2 ? Shape::Rank2 : rk == 4 ? Shape::Rank4 : Shape::Rank6;
  CaseResult r = base_result(phi.field(), s);
  r.trace.push_back({"rank", std::to_string(rk)});
  if (opt.certificate) r.x_basis = darboux_basis(phi).basis.matrix;
  return r;
}

namespace {

Matrix disjoint_basis(const KForm& phi6, const KForm& phi7) {
  const Field& f = phi6.field();
  std::vector<Scalar> vals;
  if (f.kind() == FieldKind::PrimeField) {
    for (std::int64_t v = 0; v < f.characteristic(); ++v) vals.push_back(f.from_int(v));
  } else {
    for (int v : {0, 1, -1, 2, -2, 3, -3}) vals.push_back(f.from_int(v));
  }
  for (const auto& s : vals)
    for (const auto& t : vals) {
      if ((f.one() - s * t).is_zero()) continue;
      const KForm psi6 = phi6 + s * phi7, psi7 = phi7 + t * phi6;
      const auto h6 = supp(psi6), h7 = supp(psi7);
      const auto v = intersect(f, 5, h6, h7);
      if (v.size() != 3) continue;
      auto outside = [&](const std::vector<Vector>& h) {
        for (const auto& x : h)
          if (!in_span(f, 5, v, x)) return x;
        internal("support inside intersection");
      };
      const Vector e4 = outside(h6), e5 = outside(h7);
      const Matrix b1 = columns(f, {v[0], v[1], v[2], e4, e5});
      const KForm p6 = in_basis(psi6, b1), p7 = in_basis(psi7, b1);
      Vector a6 = zero_vector(f, 5), a7 = zero_vector(f, 5);
      for (int i = 0; i < 3; ++i) {
        a6 = sum(a6, scaled(coef(p6, i, 3), v[static_cast<std::size_t>(i)]));
        a7 = sum(a7, scaled(coef(p7, i, 4), v[static_cast<std::size_t>(i)]));
      }
      if (span_basis(f, 5, {a7, a6}).size() != 2) continue;
      const auto vb = span_basis(f, 5, {a7, a6, v[0], v[1], v[2]});
      const Matrix bm = columns(f, {vb[2], a7, a6, e4, e5});
      const KForm q6 = in_basis(psi6, bm), q7 = in_basis(psi7, bm);
      const Scalar p12 = coef(q6, 0, 1), p13 = coef(q6, 0, 2), p23 = coef(q6, 1, 2), k6 = coef(q6, 2, 3);
      const Scalar q12 = coef(q7, 0, 1), q13 = coef(q7, 0, 2), q23 = coef(q7, 1, 2), k7 = coef(q7, 1, 4);
      if (p12.is_zero() || q13.is_zero()) continue;
      const Vector b1v = bm.col(0), b2 = bm.col(1), b3 = bm.col(2);
      const Vector b4 = sum(bm.col(3), scaled(-(k6.inv()), sum(scaled(p13, b1v), scaled(p23, b2))));
      const Vector b5 = sum(bm.col(4), scaled(k7.inv(), sum(scaled(-q12, b1v), scaled(q23, b3))));
      return columns(f, {b1v, scaled(p12, b2), scaled(q13, b3), scaled(k6 / q13, b4), scaled(k7 / p12, b5)});
    }
  internal("no admissible pencil basis for the disjoint construction");
}

}  // namespace

CaseResult classify_52(const KForm& phi6, const KForm& phi7, const ClassifyOptions& opt) {
  const Field& f = phi6.field();
  PencilAnalysis an = analyze_pencil(phi6, phi7);
  CaseResult r;
  r.trace = an.trace;
  const Field ar = f.arithmetic();
  switch (an.kind) {
    case PencilKind::ContainedInGrassmannian: {
      r.form = make_canonical(f, Shape::Contained);
      if (!opt.certificate) break;
      const Vector z = line_meet(f, 5, phi6, phi7);
      r.x_basis = columns(f, completed(f, 5, {z, solve_wedge(z, phi6), solve_wedge(z, phi7)}));
      break;
    }
    case PencilKind::Bisecant: {
      r.form = make_canonical(f, Shape::Bisecant);
      if (!opt.certificate) break;
      const auto rt = try_sqrt(an.disc);
      if (!rt) {
        r.reason = detail::missing_root_reason(f);
        break;
      }
      const Vector& g = an.g;
      std::vector<Vector> roots;
      if (g[0].is_zero()) {
        roots = {{f.one(), f.zero()}, {-g[2], g[1]}};
      } else {
        roots = {{-g[1] + *rt, f.from_int(2) * g[0]}, {-g[1] - *rt, f.from_int(2) * g[0]}};
      }
      auto [p, q] = factor(combo({phi6, phi7}, roots[0]));
      auto [s, t] = factor(combo({phi6, phi7}, roots[1]));
      r.x_basis = columns(f, completed(f, 5, {p, q, s, t}));
      break;
    }
    case PencilKind::TangentLagrangian: {
      r.form = make_canonical(f, Shape::TangentLagrangian);
      if (!opt.certificate) break;
      const KForm psi6 = combo({phi6, phi7}, an.root);
      const KForm psi7 = an.root[1].is_zero() ? phi7 : phi6;
      auto [a, b] = factor(psi6);
      std::vector<Vector> cand{a, b};
      for (const auto& v : supp(psi7)) cand.push_back(v);
      auto pi7 = span_basis(f, 5, cand);
      const Matrix bm = columns(f, completed(f, 5, pi7));
      const KForm w = in_basis(psi7, bm);
      const Vector m = sum(scaled(coef(w, 0, 2), pi7[2]), scaled(coef(w, 0, 3), pi7[3]));
      const Vector n = sum(scaled(coef(w, 1, 2), pi7[2]), scaled(coef(w, 1, 3), pi7[3]));
      r.x_basis = columns(f, completed(f, 5, {a, b, m, n}));
      break;
    }
    case PencilKind::TangentLine: {
      r.form = make_canonical(f, Shape::TangentLine);
      if (!opt.certificate) break;
      const KForm psi6 = combo({phi6, phi7}, an.root);
      const KForm psi7 = an.root[1].is_zero() ? phi7 : phi6;
      const Vector z1 = line_meet(f, 5, psi6, psi7);
      const Vector z2 = solve_wedge(z1, psi6);
      std::vector<Vector> cand{z1};
      for (const auto& v : supp(psi7)) cand.push_back(v);
      const auto pi7 = span_basis(f, 5, cand);
      const Matrix bm = columns(f, completed(f, 5, pi7));
      const KForm w7 = in_basis(psi7, bm);
      Vector w = zero_vector(f, 5);
      for (int i = 1; i < 4; ++i) w = sum(w, scaled(coef(w7, 0, i), pi7[static_cast<std::size_t>(i)]));
      const KForm rho = psi7 - wedge(KForm::linear(f, z1), KForm::linear(f, w));
      auto [r1, r2] = factor(rho);
      r.x_basis = columns(f, {z1, z2, w, r1, r2});
      break;
    }
    case PencilKind::Disjoint:
      r.form = make_canonical(f, Shape::Disjoint);
      if (opt.certificate) r.x_basis = disjoint_basis(phi6, phi7);
      break;
    case PencilKind::BisecantConjugate: {
      const Scalar c = square_class(an.disc.recast(ar)).representative;
      r.form = make_canonical(f, Shape::BisecantConjugate, an.disc);
      r.raw_a = to_field(c, f);
      if (!opt.certificate) break;
      const Field k = Field::extension(ar, c);
      const auto t = try_sqrt(an.disc.recast(ar) / c);
      if (!t) internal("discriminant over its square class is not a square");
      const Vector& g = an.g;
      const Vector root{to_field(-g[1], k) + k.lift(*t) * k.sqrt_param(), to_field(f.from_int(2) * g[0], k)};
      auto [p, q] = factor(combo({phi6, phi7}, root));
      r.extension = k;
      r.x_basis = columns(k, completed(k, 5, {p, q, conj(p), conj(q)}));
      break;
    }
  }
  r.trace.push_back({"row", std::to_string(row(r.form.shape))});
  return r;
}

namespace {

// Hermitian congruence A H sigma(A)^T bringing H to a multiple of diag(1, -b).
Matrix hermitian_normalizer(Matrix h) {
  const Field& k = h.field();
  auto apply = [&](const Matrix& a) {
    Matrix sa = a.map(k, [](const Scalar& x) { return galois_conjugate(x); });
    h = a * h * sa.transpose();
  };
  Matrix total = Matrix::identity(k, 2);
  if (h(0, 0).is_zero()) {
    for (const Scalar& t : {k.one(), -k.one(), k.sqrt_param(), k.from_int(2)}) {
      Matrix a = Matrix::identity(k, 2);
      a(0, 1) = t;
      Matrix sa = a.map(k, [](const Scalar& x) { return galois_conjugate(x); });
      if (!(a * h * sa.transpose())(0, 0).is_zero()) {
        apply(a);
        total = a * total;
        break;
      }
    }
    if (h(0, 0).is_zero()) internal("hermitian form stays isotropic on e1");
  }
  Matrix a2 = Matrix::identity(k, 2);
  a2(1, 0) = -(h(1, 0) / h(0, 0));
  apply(a2);
  total = a2 * total;
  Matrix a3 = Matrix::identity(k, 2);
  a3(1, 1) = k.from_int(2) * h(0, 0);
  apply(a3);
  return a3 * total;
}

}  // namespace

CaseResult classify_43(const KForm& phi5, const KForm& phi6, const KForm& phi7, const ClassifyOptions& opt) {
  const Field& f = phi5.field();
  const Field ar = f.arithmetic();
  const std::vector<KForm> phis{phi5, phi6, phi7};
  const Matrix g = net_conic(phi5, phi6, phi7);
  CaseResult r;
  {
    std::ostringstream os;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) os << (i + j ? " " : "") << g(i, j);
    r.trace.push_back({"net_conic", "gram upper " + os.str()});
  }
  auto done = [&]() {
    r.trace.push_back({"row", std::to_string(row(r.form.shape))});
    return r;
  };
  if (g.is_zero()) {
    auto common = intersect(f, 4, intersect(f, 4, supp(phi5), supp(phi6)), supp(phi7));
    if (common.size() == 1) {
      r.form = make_canonical(f, Shape::CommonLine);
      r.trace.push_back({"zero_conic", "supports share a line"});
      if (opt.certificate) {
        const Vector z = common[0];
        r.x_basis = columns(f, {z, solve_wedge(z, phi5), solve_wedge(z, phi6), solve_wedge(z, phi7)});
      }
    } else {
      r.form = make_canonical(f, Shape::Hyperplane);
      r.trace.push_back({"zero_conic", "supports in a hyperplane"});
      if (opt.certificate) {
        r.x_basis = columns(f, completed(f, 4, {line_meet(f, 4, phi5, phi6), line_meet(f, 4, phi5, phi7),
                                                line_meet(f, 4, phi6, phi7)}));
      }
    }
    return done();
  }
  const NormalizedConic nc = normalize_conic(g);
  const Matrix& pn = nc.basis.matrix;
  auto member = [&](std::size_t j) { return combo(phis, pn.col(j)); };
  r.trace.push_back({"conic_normal_form", "rank " + std::to_string(nc.nf.rank) + ", a " + str(nc.nf.a) + ", b " +
                                              str(nc.nf.b)});
  if (nc.nf.rank == 1) {
    r.form = make_canonical(f, Shape::DoubleLine);
    if (opt.certificate) {
      const KForm psi5 = member(1), psi6 = member(2), psi7 = member(0);
      const Vector b1 = line_meet(f, 4, psi5, psi6);
      const auto b = completed(f, 4, {b1, solve_wedge(b1, psi5), solve_wedge(b1, psi6)});
      const KForm w = in_basis(psi7, columns(f, b));
      r.x_basis = columns(f, {b[0], b[1], scaled(coef(w, 1, 2), b[2]), scaled(coef(w, 0, 3), b[3])});
    }
    return done();
  }
  if (nc.nf.rank == 2) {
    const Scalar& a = nc.nf.a;
    if (is_square(a)) {
      r.form = make_canonical(f, Shape::LinePair);
      if (!opt.certificate) return done();
      const auto rt = try_sqrt(a);
      if (!rt) {
        r.reason = detail::missing_root_reason(f);
        return done();
      }
      const KForm n1 = member(0), n2 = member(1), psi7 = member(2);
      const KForm psi5 = *rt * n1 + n2, psi6 = n2 - *rt * n1;
      const Vector x1 = line_meet(f, 4, psi5, psi7), x3 = line_meet(f, 4, psi6, psi7);
      r.x_basis = columns(f, {x1, solve_wedge(x1, psi5), x3, solve_wedge(x3, psi6)});
      return done();
    }
    r.form = make_canonical(f, Shape::LinePairConjugate, a);
    r.raw_a = a;
    if (!opt.certificate) return done();
    const Field k = Field::extension(ar, a.recast(ar));
    const std::vector<KForm> nk{to_field(member(0), k), to_field(member(1), k), to_field(member(2), k)};
    const KForm psi5 = k.sqrt_param() * nk[0] + nk[1];
    const Vector x1 = line_meet(k, 4, psi5, nk[2]);
    const Vector x2 = solve_wedge(x1, psi5);
    r.extension = k;
    r.x_basis = columns(k, {x1, x2, conj(x1), conj(x2)});
    return done();
  }
  if (is_isotropic_ternary(nc.nf)) {
    r.form = make_canonical(f, Shape::SmoothIsotropic);
    r.trace.push_back({"isotropic", "quaternion algebra splits"});
    if (!opt.certificate) return done();
    std::optional<Vector> pt;
    if (f.kind() == FieldKind::RealsModel || f.kind() == FieldKind::AlgClosedModel) {
      try {
        pt = find_isotropic_vector(g, opt.height_bound);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RationalPointSearchExceeded) throw;
      }
    } else {
      pt = find_isotropic_vector(g, opt.height_bound);
      if (!pt) internal("isotropic conic without a point");
    }
    if (!pt) {
      r.reason = detail::missing_root_reason(f);
      return done();
    }
    auto bil = [&](const Vector& u, const Vector& v) {
      Scalar s = f.zero();
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s += u[i] * g(i, j) * v[j];
      return s;
    };
    const Vector& p = *pt;
    Vector rv;
    for (std::size_t i = 0; i < 3; ++i) {
      const Vector d = unit_vector(f, 3, i);
      const Scalar bpd = bil(p, d);
      if (bpd.is_zero()) continue;
      rv = sum(scaled(bil(d, d), p), scaled(f.from_int(-2) * bpd, d));
      break;
    }
    const Matrix constraints = Matrix::from_rows(f, {g * p, g * rv});
    const Vector w = only(kernel_basis(constraints), "orthogonal complement");
    auto [x1, x2] = factor(combo(phis, p));
    auto [x3, x4] = factor(combo(phis, rv));
    const KForm m = in_basis(combo(phis, w), columns(f, {x1, x2, x3, x4}));
    r.trace.push_back({"rational_point", "(" + str(p[0]) + ", " + str(p[1]) + ", " + str(p[2]) + ")"});
    r.x_basis = columns(f, {x1, x2, sum(scaled(coef(m, 0, 2), x3), scaled(coef(m, 0, 3), x4)),
                            sum(scaled(coef(m, 1, 2), x3), scaled(coef(m, 1, 3), x4))});
    return done();
  }
  const Scalar &a = nc.nf.a, &b = nc.nf.b;
  r.form = make_canonical(f, Shape::SmoothAnisotropic, a, b);
  r.trace.push_back({"anisotropic", to_string(*r.form.qclass)});
  r.raw_a = a;
  r.raw_b = b;
  if (!opt.certificate) return done();
  const Field k = Field::extension(ar, a.recast(ar));
  const KForm n1 = to_field(member(0), k), n2 = to_field(member(1), k), n3 = to_field(member(2), k);
  auto [y1, y2] = factor(k.sqrt_param() * n1 + n2);
  const KForm m = in_basis(n3, columns(k, {y1, y2, conj(y1), conj(y2)}));
  Matrix h(k, 2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = k.sqrt_param() * coef(m, i, 2 + j);
  const Matrix gi = invert(hermitian_normalizer(h));
  const Vector x1 = sum(scaled(gi(0, 0), y1), scaled(gi(1, 0), y2));
  const Vector x2 = sum(scaled(gi(0, 1), y1), scaled(gi(1, 1), y2));
  r.extension = k;
  r.x_basis = columns(k, {x1, x2, conj(x1), conj(x2)});
  return done();
}

}  // namespace nil7
