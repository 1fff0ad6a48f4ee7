#include "nil7/field.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <tuple>

namespace nil7 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::NotAnExtensionField: return "NotAnExtensionField";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::SquareClassBoundExceeded: return "SquareClassBoundExceeded";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::NotFlat: return "NotFlat";
    case ErrorCode::BadSignature: return "BadSignature";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::ZeroBivector: return "ZeroBivector";
    case ErrorCode::DependentPencil: return "DependentPencil";
    case ErrorCode::DependentNet: return "DependentNet";
    case ErrorCode::UnexpectedGcdDegree: return "UnexpectedGcdDegree";
    case ErrorCode::RationalPointSearchExceeded: return "RationalPointSearchExceeded";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::NotRank3: return "NotRank3";
    case ErrorCode::DividesP: return "DividesP";
    case ErrorCode::BadPlace: return "BadPlace";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Integer helpers

namespace arith {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t result = 1 % p;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_tuple(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_tuple(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(ErrorCode::DivisionByZero, "residue not invertible");
  return mod(t, p);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t least_nonresidue(std::int64_t p) {
  for (std::int64_t c = 2; c < p; ++c) {
    if (powmod(c, (p - 1) / 2, p) == p - 1) return c;
  }
  throw Error(ErrorCode::InvalidField, "no nonresidue modulo " + std::to_string(p));
}

std::int64_t sqrtmod(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) return 0;
  if (powmod(a, (p - 1) / 2, p) != 1) throw Error(ErrorCode::NotASquare, "nonresidue");
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  std::int64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::int64_t z = least_nonresidue(p);
  std::int64_t m = s;
  std::int64_t c = powmod(z, q, p);
  std::int64_t t = powmod(a, q, p);
  std::int64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

std::optional<mpz_class> exact_sqrt(const mpz_class& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<mpq_class> exact_sqrt(const mpq_class& q) {
  auto n = exact_sqrt(mpz_class(q.get_num()));
  if (!n) return std::nullopt;
  auto d = exact_sqrt(mpz_class(q.get_den()));
  if (!d) return std::nullopt;
  mpq_class r(*n, *d);
  r.canonicalize();
  return r;
}

mpz_class squarefree_part(const mpz_class& n, std::int64_t trial_bound) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "squarefree part of zero");
  mpz_class m = abs(n);
  mpz_class result = n < 0 ? -1 : 1;
  std::int64_t p = 2;
  for (; p <= trial_bound && mpz_class(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) result *= p;
  }
  if (m == 1) return result;
  if (mpz_class(p) * p > m) return result * m;  // m is prime
  if (auto r = exact_sqrt(m)) return result;
  mpz_class b(trial_bound);
  if (m < b * b * b) return result * m;  // at most two distinct large primes
  throw Error(ErrorCode::SquareClassBoundExceeded,
              "cannot certify squarefree part of " + n.get_str());
}

}  // namespace arith

// ---------------------------------------------------------------------------
// Field registry

namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::Rationals;
  std::int64_t p = 0;  // characteristic, 0 for rational-based
  const FieldData* base = nullptr;
  std::optional<Scalar> param;  // a of k(sqrt a), as base element
  std::int64_t param_res = 0;
  mpq_class param_q;
  std::string name;
};

namespace {

struct Registry {
  std::mutex mu;
  std::deque<std::unique_ptr<FieldData>> fields;

  const FieldData* find_or_add(FieldData proto) {
    std::lock_guard lock(mu);
    for (const auto& f : fields) {
      if (f->kind == proto.kind && f->p == proto.p && f->base == proto.base &&
          f->param_res == proto.param_res && f->param_q == proto.param_q) {
        return f.get();
      }
    }
    fields.push_back(std::make_unique<FieldData>(std::move(proto)));
    return fields.back().get();
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

const FieldData* simple(FieldKind kind, std::int64_t p, std::string name) {
  FieldData d;
  d.kind = kind;
  d.p = p;
  d.name = std::move(name);
  return registry().find_or_add(std::move(d));
}

}  // namespace
}  // namespace detail

Field Field::rationals() {
  static const detail::FieldData* q = detail::simple(FieldKind::Rationals, 0, "Q");
  return Field(q);
}

Field Field::reals() {
  static const detail::FieldData* r = detail::simple(FieldKind::RealsModel, 0, "R");
  return Field(r);
}

Field Field::alg_closed() {
  static const detail::FieldData* c = detail::simple(FieldKind::AlgClosedModel, 0, "Qbar");
  return Field(c);
}

Field Field::prime(std::int64_t p) {
  if (p == 2 || !arith::is_prime(p)) {
    throw Error(ErrorCode::InvalidField, "F_p needs an odd prime, got " + std::to_string(p));
  }
  return Field(detail::simple(FieldKind::PrimeField, p, "F_" + std::to_string(p)));
}

Field Field::extension(const Field& base, const Scalar& a) {
  if (base.kind() != FieldKind::Rationals && base.kind() != FieldKind::PrimeField) {
    throw Error(ErrorCode::UnsupportedField,
                "quadratic extensions are built over Q or F_p only, not " + base.name());
  }
  if (a.field() != base) throw Error(ErrorCode::FieldMismatch, "extension parameter");
  if (a.is_zero() || is_square(a)) {
    throw Error(ErrorCode::InvalidField, "extension parameter must be a nonsquare: " + a.to_string());
  }
  detail::FieldData d;
  d.kind = FieldKind::QuadraticExtension;
  d.p = base.characteristic();
  d.base = base.d_;
  d.param = a;
  if (base.kind() == FieldKind::PrimeField) {
    d.param_res = a.residue();
  } else {
    d.param_q = a.rational();
  }
  d.name = base.name() + "(sqrt(" + a.to_string() + "))";
  return Field(detail::registry().find_or_add(std::move(d)));
}

Field::Field() : Field(rationals()) {}

FieldKind Field::kind() const { return d_->kind; }

bool Field::rational_based() const { return d_->p == 0; }

std::int64_t Field::characteristic() const { return d_->p; }

Field Field::base() const {
  if (!is_extension()) throw Error(ErrorCode::NotAnExtensionField, name());
  return Field(d_->base);
}

const Scalar& Field::ext_param() const {
  if (!is_extension()) throw Error(ErrorCode::NotAnExtensionField, name());
  return *d_->param;
}

Field Field::arithmetic() const {
  if (kind() == FieldKind::RealsModel || kind() == FieldKind::AlgClosedModel) return rationals();
  return *this;
}

Scalar Field::zero() const { return from_int(0); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (rational_based()) return Scalar(*this, Scalar::Fractions{mpq_class(static_cast<long>(v)), 0});
  return Scalar(*this, Scalar::Residues{arith::mod(v, d_->p), 0});
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (rational_based()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(*this, Scalar::Fractions{c, 0});
  }
  mpz_class num = q.get_num() % d_->p;
  mpz_class den = q.get_den() % d_->p;
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator divisible by p");
  std::int64_t n = arith::mod(num.get_si(), d_->p);
  std::int64_t dd = arith::mod(den.get_si(), d_->p);
  return Scalar(*this, Scalar::Residues{arith::mulmod(n, arith::invmod(dd, d_->p), d_->p), 0});
}

Scalar Field::sqrt_param() const {
  if (!is_extension()) throw Error(ErrorCode::NotAnExtensionField, name());
  if (rational_based()) return Scalar(*this, Scalar::Fractions{0, 1});
  return Scalar(*this, Scalar::Residues{0, 1});
}

Scalar Field::lift(const Scalar& x) const {
  if (x.field() == *this) return x;
  if (!is_extension() || x.field() != base()) {
    throw Error(ErrorCode::FieldMismatch, "cannot lift " + x.field().name() + " into " + name());
  }
  if (rational_based()) return Scalar(*this, Scalar::Fractions{x.rational(), 0});
  return Scalar(*this, Scalar::Residues{x.residue(), 0});
}

std::string Field::name() const { return d_->name; }

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar() : field_(Field::rationals()), rep_(Fractions{0, 0}) {}

Scalar::Scalar(Field f, Residues r) : field_(f), rep_(r) {}

Scalar::Scalar(Field f, Fractions q) : field_(f), rep_(std::move(q)) {}

void Scalar::require_same(const Scalar& o) const {
  if (field_ != o.field_) {
    throw Error(ErrorCode::FieldMismatch, field_.name() + " vs " + o.field_.name());
  }
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residues>(&rep_)) return (*r)[0] == 0 && (*r)[1] == 0;
  const auto& q = std::get<Fractions>(rep_);
  return q[0] == 0 && q[1] == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residues>(&rep_)) return (*r)[0] == 1 && (*r)[1] == 0;
  const auto& q = std::get<Fractions>(rep_);
  return q[0] == 1 && q[1] == 0;
}

const mpq_class& Scalar::rational() const {
  if (!field_.rational_based() || field_.is_extension()) {
    throw Error(ErrorCode::FieldMismatch, "not a rational scalar: " + field_.name());
  }
  return std::get<Fractions>(rep_)[0];
}

std::int64_t Scalar::residue() const {
  if (field_.kind() != FieldKind::PrimeField) {
    throw Error(ErrorCode::FieldMismatch, "not a prime-field scalar: " + field_.name());
  }
  return std::get<Residues>(rep_)[0];
}

Scalar Scalar::re() const {
  if (!field_.is_extension()) return *this;
  Field b = field_.base();
  if (auto* r = std::get_if<Residues>(&rep_)) return Scalar(b, Residues{(*r)[0], 0});
  return Scalar(b, Fractions{std::get<Fractions>(rep_)[0], 0});
}

Scalar Scalar::im() const {
  if (!field_.is_extension()) return field_.zero();
  Field b = field_.base();
  if (auto* r = std::get_if<Residues>(&rep_)) return Scalar(b, Residues{(*r)[1], 0});
  return Scalar(b, Fractions{std::get<Fractions>(rep_)[1], 0});
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<Residues>(&out.rep_)) {
    const std::int64_t p = field_.characteristic();
    (*r)[0] = (*r)[0] == 0 ? 0 : p - (*r)[0];
    (*r)[1] = (*r)[1] == 0 ? 0 : p - (*r)[1];
  } else {
    auto& q = std::get<Fractions>(out.rep_);
    q[0] = -q[0];
    q[1] = -q[1];
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (auto* r = std::get_if<Residues>(&rep_)) {
    const auto& s = std::get<Residues>(o.rep_);
    const std::int64_t p = field_.characteristic();
    (*r)[0] = ((*r)[0] + s[0]) % p;
    (*r)[1] = ((*r)[1] + s[1]) % p;
  } else {
    auto& q = std::get<Fractions>(rep_);
    const auto& s = std::get<Fractions>(o.rep_);
    q[0] += s[0];
    q[1] += s[1];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  const bool ext = field_.is_extension();
  if (auto* r = std::get_if<Residues>(&rep_)) {
    const auto& s = std::get<Residues>(o.rep_);
    const std::int64_t p = field_.characteristic();
    if (!ext) {
      (*r)[0] = arith::mulmod((*r)[0], s[0], p);
    } else {
      const std::int64_t a = field_.d_->param_res;
      const std::int64_t u = (arith::mulmod((*r)[0], s[0], p) +
                              arith::mulmod(a, arith::mulmod((*r)[1], s[1], p), p)) % p;
      const std::int64_t v = (arith::mulmod((*r)[0], s[1], p) + arith::mulmod((*r)[1], s[0], p)) % p;
      (*r)[0] = u;
      (*r)[1] = v;
    }
  } else {
    auto& q = std::get<Fractions>(rep_);
    const auto& s = std::get<Fractions>(o.rep_);
    if (!ext) {
      q[0] *= s[0];
    } else {
      mpq_class u = q[0] * s[0] + field_.d_->param_q * q[1] * s[1];
      mpq_class v = q[0] * s[1] + q[1] * s[0];
      q[0] = std::move(u);
      q[1] = std::move(v);
    }
  }
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (auto* r = std::get_if<Residues>(&rep_)) {
    const std::int64_t p = field_.characteristic();
    if (!field_.is_extension()) return Scalar(field_, Residues{arith::invmod((*r)[0], p), 0});
    const std::int64_t a = field_.d_->param_res;
    const std::int64_t n = arith::mod(arith::mulmod((*r)[0], (*r)[0], p) -
                                          arith::mulmod(a, arith::mulmod((*r)[1], (*r)[1], p), p),
                                      p);
    const std::int64_t ni = arith::invmod(n, p);
    return Scalar(field_, Residues{arith::mulmod((*r)[0], ni, p),
                                   arith::mulmod(arith::mod(-(*r)[1], p), ni, p)});
  }
  const auto& q = std::get<Fractions>(rep_);
  if (!field_.is_extension()) return Scalar(field_, Fractions{1 / q[0], 0});
  mpq_class n = q[0] * q[0] - field_.d_->param_q * q[1] * q[1];
  return Scalar(field_, Fractions{q[0] / n, -q[1] / n});
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  return *this *= o.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.rep_ == b.rep_;
}

Scalar Scalar::recast(const Field& target) const {
  if (target == field_) return *this;
  if (!target.rational_based() || !field_.rational_based() || target.is_extension() ||
      field_.is_extension()) {
    throw Error(ErrorCode::FieldMismatch, "cannot recast " + field_.name() + " to " + target.name());
  }
  return Scalar(target, std::get<Fractions>(rep_));
}

std::string Scalar::to_string() const {
  auto base_str = [&](const Scalar& x) {
    if (auto* r = std::get_if<Residues>(&x.rep_)) return std::to_string((*r)[0]);
    return std::get<Fractions>(x.rep_)[0].get_str();
  };
  if (!field_.is_extension()) return base_str(*this);
  Scalar u = re(), v = im();
  std::string a = field_.ext_param().to_string();
  if (v.is_zero()) return base_str(u);
  bool negative = v.field().rational_based() && v.rational() < 0;
  if (negative) v = -v;
  std::string vs = (v.is_one() ? "" : base_str(v) + "*") + "sqrt(" + a + ")";
  if (u.is_zero()) return (negative ? "-" : "") + vs;
  return base_str(u) + (negative ? "-" : "+") + vs;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// Squares

Scalar norm(const Scalar& x) {
  if (!x.field().is_extension()) throw Error(ErrorCode::NotAnExtensionField, x.field().name());
  Scalar u = x.re(), v = x.im();
  return u * u - x.field().ext_param() * v * v;
}

bool is_square(const Scalar& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "is_square(0)");
  const Field f = x.field();
  switch (f.kind()) {
    case FieldKind::Rationals:
      return arith::exact_sqrt(x.rational()).has_value();
    case FieldKind::PrimeField: {
      const std::int64_t p = f.characteristic();
      return arith::powmod(x.residue(), (p - 1) / 2, p) == 1;
    }
    case FieldKind::RealsModel:
      return x.rational() > 0;
    case FieldKind::AlgClosedModel:
      return true;
    case FieldKind::QuadraticExtension:
      return try_sqrt(x).has_value();
  }
  return false;
}

SquareClass square_class(const Scalar& x, std::int64_t trial_bound) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "square_class(0)");
  const Field f = x.field();
  switch (f.kind()) {
    case FieldKind::Rationals: {
      const mpq_class& q = x.rational();
      mpz_class nd = q.get_num() * q.get_den();
      return {f.from_rational(mpq_class(arith::squarefree_part(nd, trial_bound)))};
    }
    case FieldKind::PrimeField:
      return {is_square(x) ? f.one() : f.from_int(arith::least_nonresidue(f.characteristic()))};
    case FieldKind::RealsModel:
      return {x.rational() > 0 ? f.one() : f.from_int(-1)};
    case FieldKind::AlgClosedModel:
      return {f.one()};
    case FieldKind::QuadraticExtension:
      break;
  }
  throw Error(ErrorCode::UnsupportedField, "square classes of " + f.name());
}

Scalar galois_conjugate(const Scalar& x) {
  const Field f = x.field();
  if (!f.is_extension()) throw Error(ErrorCode::NotAnExtensionField, f.name());
  return f.lift(x.re()) - f.lift(x.im()) * f.sqrt_param();
}

namespace {

std::optional<Scalar> base_sqrt(const Scalar& x) {
  const Field f = x.field();
  if (x.is_zero()) return x;
  if (f.kind() == FieldKind::PrimeField) {
    const std::int64_t p = f.characteristic();
    if (arith::powmod(x.residue(), (p - 1) / 2, p) != 1) return std::nullopt;
    std::int64_t r = arith::sqrtmod(x.residue(), p);
    return f.from_int(std::min(r, p - r));
  }
  auto r = arith::exact_sqrt(x.rational());
  if (!r) return std::nullopt;
  return f.from_rational(*r);
}

std::optional<Scalar> extension_sqrt(const Scalar& x) {
  const Field f = x.field();
  const Scalar a = f.ext_param();
  const Scalar u = x.re(), v = x.im();
  if (v.is_zero()) {
    if (auto s = base_sqrt(u)) return f.lift(*s);
    if (auto w = base_sqrt(u / a)) return f.lift(*w) * f.sqrt_param();
    return std::nullopt;
  }
  auto n = base_sqrt(u * u - a * v * v);
  if (!n) return std::nullopt;
  const Scalar two = u.field().from_int(2);
  for (const Scalar& cand : {(u + *n) / two, (u - *n) / two}) {
    if (cand.is_zero()) continue;
    if (auto s = base_sqrt(cand)) {
      Scalar t = v / (two * *s);
      return f.lift(*s) + f.lift(t) * f.sqrt_param();
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Scalar> try_sqrt(const Scalar& x) {
  const Field f = x.field();
  switch (f.kind()) {
    case FieldKind::Rationals:
    case FieldKind::PrimeField:
      return base_sqrt(x);
    case FieldKind::RealsModel:
    case FieldKind::AlgClosedModel: {
      if (x.is_zero()) return x;
      auto r = arith::exact_sqrt(x.rational());
      if (!r) return std::nullopt;
      return f.from_rational(*r);
    }
    case FieldKind::QuadraticExtension:
      return extension_sqrt(x);
  }
  return std::nullopt;
}

Scalar sqrt_in_field(const Scalar& x) {
  const FieldKind k = x.field().kind();
  if (k == FieldKind::RealsModel || k == FieldKind::AlgClosedModel) {
    throw Error(ErrorCode::UnsupportedField,
                "no element-level square roots in " + x.field().name());
  }
  auto r = try_sqrt(x);
  if (!r) throw Error(ErrorCode::NotASquare, x.to_string() + " in " + x.field().name());
  return *r;
}

}  // namespace nil7
