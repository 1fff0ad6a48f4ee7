#include "nil7/liealg.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace nil7 {

StructureConstants::StructureConstants(Field f, int n)
    : field_(f), n_(n), a_(static_cast<std::size_t>(n * n * n), f.zero()) {}

std::size_t StructureConstants::index(int i, int j, int k) const {
  return static_cast<std::size_t>((i * n_ + j) * n_ + k);
}

Scalar StructureConstants::get(int i, int j, int k) const {
  if (i == j) return field_.zero();
  if (i > j) return -a_[index(j, i, k)];
  return a_[index(i, j, k)];
}

void StructureConstants::set(int i, int j, int k, const Scalar& v) {
  if (i == j) {
    if (!v.is_zero()) throw Error(ErrorCode::DimensionMismatch, "[X_i, X_i] must vanish");
    return;
  }
  if (i > j) {
    a_[index(j, i, k)] = -v;
  } else {
    a_[index(i, j, k)] = v;
  }
}

Vector StructureConstants::bracket(const Vector& u, const Vector& v) const {
  Vector out = zero_vector(field_, static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    if (u[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (i == j || v[static_cast<std::size_t>(j)].is_zero()) continue;
      const Scalar c = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
      for (int k = 0; k < n_; ++k) {
        const Scalar a = get(i, j, k);
        if (!a.is_zero()) out[static_cast<std::size_t>(k)] += c * a;
      }
    }
  }
  return out;
}

Presentation::Presentation(Field f, int dim) : field(f), n(dim) {
  for (int k = 0; k < dim; ++k) d.emplace_back(f, dim, 2);
}

Presentation Presentation::from_strings(const Field& f, int n,
                                        const std::vector<std::pair<int, std::string>>& dx) {
  Presentation p(f, n);
  for (const auto& [k, text] : dx) {
    if (k < 1 || k > n) throw Error(ErrorCode::ParseError, "generator number out of range");
    p.d[static_cast<std::size_t>(k - 1)] = parse_form(f, n, 2, text);
  }
  return p;
}

bool operator==(const Presentation& a, const Presentation& b) {
  return a.field == b.field && a.n == b.n && a.d == b.d;
}

Presentation Presentation::lift(const Field& target) const {
  if (target == field) return *this;
  std::function<Scalar(const Scalar&)> conv;
  if (target.is_extension() && (target.base() == field || target.base() == field.arithmetic())) {
    conv = [target](const Scalar& x) { return target.lift(x.recast(target.base())); };
  } else if (target.rational_based() && field.rational_based() && !target.is_extension() &&
             !field.is_extension()) {
    conv = [target](const Scalar& x) { return x.recast(target); };
  } else {
    throw Error(ErrorCode::FieldMismatch, "cannot move " + field.name() + " into " + target.name());
  }
  Presentation out(target, n);
  for (int k = 0; k < n; ++k) out.d[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(k)].map(target, conv);
  return out;
}

std::string to_string(const Presentation& p) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < p.n; ++k) {
    const KForm& dk = p.d[static_cast<std::size_t>(k)];
    if (dk.is_zero()) continue;
    os << (first ? "" : ", ") << "dx" << k + 1 << " = " << to_string(dk);
    first = false;
  }
  if (first) os << "abelian";
  return os.str();
}

Presentation dualize(const StructureConstants& sc) {
  Presentation p(sc.field(), sc.dim());
  for (int k = 0; k < sc.dim(); ++k)
    for (int i = 0; i < sc.dim(); ++i)
      for (int j = i + 1; j < sc.dim(); ++j)
        p.d[static_cast<std::size_t>(k)].add_term(mono({i, j}), -sc.get(i, j, k));
  return p;
}

StructureConstants undualize(const Presentation& p) {
  StructureConstants sc(p.field, p.n);
  for (int k = 0; k < p.n; ++k)
    for (const auto& [m, c] : p.d[static_cast<std::size_t>(k)].terms()) {
      const auto idx = mono_indices(m);
      sc.set(idx[0], idx[1], k, -c);
    }
  return sc;
}

namespace {

// Sign of x_a ^ x_b reordered into increasing order: (-1)^(pairs i in a, j in b, i > j).
int merge_sign(Mono a, Mono b) {
  int inversions = 0;
  for (Mono rest = b; rest; rest &= rest - 1) {
    const int j = __builtin_ctz(rest);
    inversions += __builtin_popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace

KForm differential(const Presentation& p, const KForm& a) {
  KForm out(p.field, p.n, a.degree() + 1);
  for (const auto& [m, c] : a.terms()) {
    int pos = 0;
    for (Mono rest = m; rest; rest &= rest - 1, ++pos) {
      const int i = __builtin_ctz(rest);
      const KForm& dx = p.d[static_cast<std::size_t>(i)];
      if (dx.is_zero()) continue;
      const Mono others = m & ~(Mono{1} << i);
      // x_before ^ dx_i ^ x_after = (-1)^pos dx_i ^ others.
      for (const auto& [md, e] : dx.terms()) {
        if (md & others) continue;
        const int sign = (pos % 2 ? -1 : 1) * merge_sign(md, others);
        const Scalar v = c * e;
        out.add_term(md | others, sign > 0 ? v : -v);
      }
    }
  }
  return out;
}

bool check_flatness(const Presentation& p) {
  for (const auto& dk : p.d) {
    if (!differential(p, dk).is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> lower_central_series(const StructureConstants& sc) {
  const Field& f = sc.field();
  const auto n = static_cast<std::size_t>(sc.dim());
  std::vector<Vector> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(unit_vector(f, n, i));
  std::vector<std::size_t> dims;
  while (!current.empty()) {
    std::vector<Vector> brackets;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : current) {
        Vector b = sc.bracket(unit_vector(f, n, i), v);
        if (!is_zero(b)) brackets.push_back(std::move(b));
      }
    std::vector<Vector> next = span_basis(f, n, brackets);
    if (next.size() == current.size()) {
      throw Error(ErrorCode::NotNilpotent, "lower central series stabilizes in dimension " +
                                               std::to_string(next.size()));
    }
    dims.push_back(current.size() - next.size());
    current = std::move(next);
  }
  return dims;
}

namespace {

// Coordinates of u ^ v in Lambda^2, lexicographic monomial order.
Vector wedge2(const Field& f, const Vector& u, const Vector& v) {
  return wedge(KForm::linear(f, u), KForm::linear(f, v)).coefficient_vector();
}

}  // namespace

Filtration characteristic_filtration(const Presentation& p) {
  if (!check_flatness(p)) throw Error(ErrorCode::NotFlat, "d^2 != 0");
  const Field& f = p.field;
  const auto n = static_cast<std::size_t>(p.n);
  const std::size_t m2 = n * (n - 1) / 2;
  Matrix dm(f, m2, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vector c = p.d[k].coefficient_vector();
    for (std::size_t r = 0; r < m2; ++r) dm(r, k) = c[r];
  }
  Filtration out;
  std::vector<Vector> w = kernel_basis(dm);
  out.w.push_back(w);
  out.f.push_back(w.size());
  while (w.size() < n) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j) gens.push_back(wedge2(f, w[i], w[j]));
    gens = span_basis(f, m2, gens);
    Matrix aug(f, m2, n + gens.size());
    for (std::size_t r = 0; r < m2; ++r) {
      for (std::size_t k = 0; k < n; ++k) aug(r, k) = dm(r, k);
      for (std::size_t g = 0; g < gens.size(); ++g) aug(r, n + g) = -gens[g][r];
    }
    std::vector<Vector> proj;
    for (const auto& kv : kernel_basis(aug)) proj.emplace_back(kv.begin(), kv.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<Vector> next = span_basis(f, n, proj);
    if (next.size() == w.size()) {
      throw Error(ErrorCode::NotMinimal, "characteristic filtration stops at dimension " +
                                             std::to_string(w.size()));
    }
    out.f.push_back(next.size() - w.size());
    w = std::move(next);
    out.w.push_back(w);
  }
  return out;
}

Presentation apply_basis_change(const Presentation& p, const BasisChange& b) {
  if (b.dim() != static_cast<std::size_t>(p.n)) throw Error(ErrorCode::DimensionMismatch, "basis change size");
  const Presentation lifted = p.lift(b.field());
  const Field& f = b.field();
  const Matrix q = invert(b.matrix);
  Presentation out(f, p.n);
  for (int j = 0; j < p.n; ++j) {
    KForm dy(f, p.n, 2);
    for (int i = 0; i < p.n; ++i) {
      const Scalar& c = b.matrix(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (!c.is_zero()) dy += c * lifted.d[static_cast<std::size_t>(i)];
    }
    out.d[static_cast<std::size_t>(j)] = substitute(dy, q);
  }
  return out;
}

Presentation random_presentation(int f0, int f1, std::uint64_t seed, const Field& f) {
  if (f0 + f1 != 7 || f1 < 1 || f1 > 3) {
    throw Error(ErrorCode::BadSignature, "signature (" + std::to_string(f0) + "," + std::to_string(f1) + ")");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  const auto pairs = monomials(f0, 2);
  for (;;) {
    Presentation p(f, 7);
    std::vector<Vector> coeffs;
    for (int k = f0; k < 7; ++k) {
      KForm dk(f, 7, 2);
      for (Mono m : pairs) dk.add_term(m, f.from_int(coef(rng)));
      coeffs.push_back(dk.coefficient_vector());
      p.d[static_cast<std::size_t>(k)] = dk;
    }
    if (span_basis(f, 21, coeffs).size() == static_cast<std::size_t>(f1)) return p;
  }
}

BasisChange random_basis_change(const Field& f, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-2, 2);
  const auto un = static_cast<std::size_t>(n);
  Matrix lower = Matrix::identity(f, un), upper = Matrix::identity(f, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = f.from_int(small(rng));
      upper(j, i) = f.from_int(small(rng));
    }
  std::vector<std::size_t> perm(un);
  for (std::size_t i = 0; i < un; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix pm(f, un, un);
  for (std::size_t i = 0; i < un; ++i) pm(i, perm[i]) = f.one();
  Matrix diag(f, un, un);
  std::uniform_int_distribution<int> scale(0, 3);
  for (std::size_t i = 0; i < un; ++i) {
    const int s = scale(rng);
    diag(i, i) = f.from_int(s == 0 ? -1 : s == 3 ? 2 : 1);
  }
  return BasisChange(pm * lower * upper * diag);
}

}  // namespace nil7
