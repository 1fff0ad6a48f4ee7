#include "nil7/quadform.hpp"

#include <algorithm>
#include <numeric>

namespace nil7 {

namespace {

// Square-class representative and a t with x = rep * t^2, computed in the
// arithmetic field (Q for the reals/closure models).
std::pair<Scalar, Scalar> reduce_square_class(const Scalar& x) {
  const Field f = x.field();
  const Field ar = f.arithmetic();
  const Scalar xa = x.recast(ar);
  const Scalar rep = square_class(xa).representative;
  const Scalar t = sqrt_in_field(xa / rep);
  return {rep.recast(f), t.recast(f)};
}

mpz_class integer_part_product(const mpq_class& q) { return q.get_num() * q.get_den(); }

int valuation(mpz_class& n, std::int64_t p) {
  int v = 0;
  while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
    n /= p;
    ++v;
  }
  return v;
}

int mod8(const mpz_class& u) { return static_cast<int>(mpz_fdiv_ui(u.get_mpz_t(), 8)); }

}  // namespace

NormalizedConic normalize_conic(const Matrix& s) {
  if (s.rows() != 3 || s.cols() != 3) throw Error(ErrorCode::DimensionMismatch, "ternary form needs a 3x3 matrix");
  if (s.is_zero()) throw Error(ErrorCode::ZeroForm, "quadratic form is identically zero");
  const Field& f = s.field();
  Congruence c = diagonalize_congruence(s);
  // Nonzero diagonal entries first, keeping their relative order.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < 3; ++i)
    if (!c.d(i, i).is_zero()) order.push_back(i);
  const int rk = static_cast<int>(order.size());
  for (std::size_t i = 0; i < 3; ++i)
    if (c.d(i, i).is_zero()) order.push_back(i);
  Matrix p(f, 3, 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) p(i, j) = c.p.matrix(i, order[j]);
  const Scalar alpha = c.d(order[0], order[0]);
  Scalar coef[2] = {f.zero(), f.zero()};
  for (std::size_t j = 1; j < 3; ++j) {
    const Scalar x = -(c.d(order[j], order[j]) / alpha);
    if (x.is_zero()) continue;
    auto [rep, t] = reduce_square_class(x);
    coef[j - 1] = rep;
    const Scalar inv = t.inv();
    for (std::size_t i = 0; i < 3; ++i) p(i, j) *= inv;
  }
  return {ConicNormalForm{coef[0], coef[1], rk}, BasisChange(std::move(p)), alpha};
}

int legendre_symbol(const mpz_class& u, std::int64_t p) {
  const auto r = static_cast<std::int64_t>(mpz_fdiv_ui(u.get_mpz_t(), static_cast<unsigned long>(p)));
  if (r == 0) throw Error(ErrorCode::DividesP, std::to_string(p) + " divides " + u.get_str());
  return arith::powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int hilbert_symbol(mpq_class a, mpq_class b, Place place) {
  a.canonicalize();
  b.canonicalize();
  if (a == 0 || b == 0) throw Error(ErrorCode::ZeroParameter, "Hilbert symbol of zero");
  if (place == kInfinity) return (a < 0 && b < 0) ? -1 : 1;
  if (place < 2 || !arith::is_prime(place)) throw Error(ErrorCode::BadPlace, std::to_string(place));
  // num*den has the square class of the fraction.
  mpz_class u = integer_part_product(a), v = integer_part_product(b);
  const int alpha = valuation(u, place), beta = valuation(v, place);
  if (place != 2) {
    const int eps = static_cast<int>(((place - 1) / 2) % 2);
    int sign = (alpha * beta * eps) % 2 ? -1 : 1;
    if (beta % 2) sign *= legendre_symbol(u, place);
    if (alpha % 2) sign *= legendre_symbol(v, place);
    return sign;
  }
  const int u8 = mod8(u), v8 = mod8(v);
  auto eps = [](int x) { return ((x - 1) / 2) % 2; };
  auto omega = [](int x) { return ((x * x - 1) / 8) % 2; };
  const int e = eps(u8) * eps(v8) + alpha * omega(v8) + beta * omega(u8);
  return e % 2 ? -1 : 1;
}

std::vector<Place> relevant_primes(mpq_class a, mpq_class b) {
  a.canonicalize();
  b.canonicalize();
  std::vector<Place> out{2};
  for (mpz_class n : {mpz_class(a.get_num()), mpz_class(a.get_den()), mpz_class(b.get_num()), mpz_class(b.get_den())}) {
    n = abs(n);
    for (std::int64_t p = 3; mpz_class(p) * p <= n; p += 2) {
      if (p > kDefaultTrialDivisionBound) {
        throw Error(ErrorCode::SquareClassBoundExceeded, "cannot factor " + n.get_str());
      }
      if (valuation(n, p) > 0) out.push_back(p);
    }
    while (n % 2 == 0 && n != 0) n /= 2;
    if (n > 1) {
      if (!n.fits_slong_p()) throw Error(ErrorCode::SquareClassBoundExceeded, "prime too large: " + n.get_str());
      out.push_back(n.get_si());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QuaternionClass quaternion_class(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "quaternion parameters");
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroParameter, "quaternion algebra parameter is zero");
  const Field f = a.field();
  QuaternionClass c{f, {}};
  switch (f.kind()) {
    case FieldKind::Rationals: {
      const mpq_class &qa = a.rational(), &qb = b.rational();
      for (Place p : relevant_primes(qa, qb))
        if (hilbert_symbol(qa, qb, p) == -1) c.ramified.push_back(p);
      if (hilbert_symbol(qa, qb, kInfinity) == -1) c.ramified.push_back(kInfinity);
      if (c.ramified.size() % 2 != 0) {
        throw Error(ErrorCode::Internal, "odd number of ramified places for (" + a.to_string() + ", " + b.to_string() + ")");
      }
      break;
    }
    case FieldKind::RealsModel:
      if (a.rational() < 0 && b.rational() < 0) c.ramified.push_back(kInfinity);
      break;
    case FieldKind::PrimeField:
    case FieldKind::AlgClosedModel:
      break;
    case FieldKind::QuadraticExtension:
      throw Error(ErrorCode::UnsupportedField, "quaternion classes over " + f.name());
  }
  return c;
}

bool quaternion_iso(const QuaternionClass& x, const QuaternionClass& y) {
  if (x.field != y.field) throw Error(ErrorCode::FieldMismatch, "quaternion classes over different fields");
  return x.ramified == y.ramified;
}

std::string to_string(const QuaternionClass& c) {
  if (c.split()) return "split";
  std::string out = "ramified at {";
  for (std::size_t i = 0; i < c.ramified.size(); ++i) {
    out += (i ? ", " : "");
    out += c.ramified[i] == kInfinity ? "inf" : std::to_string(c.ramified[i]);
  }
  return out + "}";
}

bool is_isotropic_ternary(const ConicNormalForm& nf) {
  if (nf.rank != 3) throw Error(ErrorCode::NotRank3, "isotropy test needs a rank-3 form");
  return quaternion_class(nf.a, nf.b).split();
}

Quaternion quaternion_multiply(const Quaternion& p, const Quaternion& q) {
  if (p.a != q.a || p.b != q.b) throw Error(ErrorCode::AlgebraMismatch, "quaternions from different algebras");
  const Scalar &a = p.a, &b = p.b;
  const auto& x = p.xi;
  const auto& y = q.xi;
  Quaternion r{a, b, {}};
  r.xi[0] = x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3];
  r.xi[1] = x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2];
  r.xi[2] = x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1];
  r.xi[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
  return r;
}

Scalar quaternion_norm(const Quaternion& q) {
  const auto& x = q.xi;
  return x[0] * x[0] - q.a * x[1] * x[1] - q.b * x[2] * x[2] + q.a * q.b * x[3] * x[3];
}

std::int64_t conic_point_count(const ConicNormalForm& nf) {
  if (nf.rank != 3) throw Error(ErrorCode::NotRank3, "point count needs a smooth conic");
  const Field f = nf.a.field();
  if (f.kind() != FieldKind::PrimeField) throw Error(ErrorCode::UnsupportedField, "point count needs F_p");
  const std::int64_t p = f.characteristic();
  auto q = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    const Scalar X = f.from_int(x), Y = f.from_int(y), Z = f.from_int(z);
    return (X * X - nf.a * Y * Y - nf.b * Z * Z).is_zero();
  };
  std::int64_t count = 0;
  // Normalized representatives: (1, y, z), (0, 1, z), (0, 0, 1).
  for (std::int64_t y = 0; y < p; ++y)
    for (std::int64_t z = 0; z < p; ++z) count += q(1, y, z);
  for (std::int64_t z = 0; z < p; ++z) count += q(0, 1, z);
  count += q(0, 0, 1);
  return count;
}

namespace {

// Integer solution of X^2 = a Y^2 + b Z^2 for squarefree a, b with the
// quadratic form isotropic; Holzer's bounds make the box search complete.
std::optional<std::array<mpz_class, 3>> search_rational_point(const mpz_class& a, const mpz_class& b,
                                                              std::int64_t height) {
  if (a == 1) return std::array<mpz_class, 3>{1, 1, 0};
  if (b == 1) return std::array<mpz_class, 3>{1, 0, 1};
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const mpz_class a1 = a / g, b1 = b / g;
  // X = g X1 gives g X1^2 = a1 Y^2 + b1 Z^2 with pairwise coprime coefficients.
  mpz_class ybound, zbound;
  mpz_sqrt(ybound.get_mpz_t(), mpz_class(abs(g * b1)).get_mpz_t());
  mpz_sqrt(zbound.get_mpz_t(), mpz_class(abs(g * a1)).get_mpz_t());
  const bool truncated = ybound > height || zbound > height;
  if (ybound > height) ybound = height;
  if (zbound > height) zbound = height;
  for (mpz_class y = 0; y <= ybound; ++y) {
    for (mpz_class z = 0; z <= zbound; ++z) {
      if (y == 0 && z == 0) continue;
      mpz_class t = a1 * y * y + b1 * z * z;
      if (t < 0 || !mpz_divisible_p(t.get_mpz_t(), g.get_mpz_t())) continue;
      t /= g;
      if (auto x1 = arith::exact_sqrt(t)) return std::array<mpz_class, 3>{g * *x1, y, z};
    }
  }
  if (truncated) {
    throw Error(ErrorCode::RationalPointSearchExceeded,
                "no rational point of height <= " + std::to_string(height));
  }
  return std::nullopt;
}

}  // namespace

std::optional<Vector> find_isotropic_vector(const Matrix& s, std::int64_t height_bound) {
  const Field& f = s.field();
  const NormalizedConic n = normalize_conic(s);
  Vector w = zero_vector(f, 3);
  if (n.nf.rank < 3) {
    w[2] = f.one();
  } else if (f.kind() == FieldKind::PrimeField) {
    const std::int64_t p = f.characteristic();
    bool found = false;
    for (std::int64_t y = 0; y < p && !found; ++y) {
      const Scalar t = n.nf.a * f.from_int(y) * f.from_int(y) + n.nf.b;
      if (t.is_zero() || is_square(t)) {
        w = {t.is_zero() ? f.zero() : sqrt_in_field(t), f.from_int(y), f.one()};
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::Internal, "smooth conic over F_p without a point");
  } else if (f.rational_based() && !f.is_extension()) {
    const Field q = Field::rationals();
    const Scalar a = n.nf.a.recast(q), b = n.nf.b.recast(q);
    if (!quaternion_class(a, b).split()) return std::nullopt;
    auto pt = search_rational_point(a.rational().get_num(), b.rational().get_num(), height_bound);
    if (!pt) throw Error(ErrorCode::Internal, "isotropic conic without a point in the Holzer box");
    for (std::size_t i = 0; i < 3; ++i) w[i] = f.from_rational(mpq_class((*pt)[i]));
  } else {
    throw Error(ErrorCode::UnsupportedField, "isotropic vectors over " + f.name());
  }
  return n.basis.matrix * w;
}

}  // namespace nil7
