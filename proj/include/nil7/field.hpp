#pragma once

// Exact scalars over the supported ground fields: the rationals, prime fields
// F_p (p odd), two rational-arithmetic models (reals, algebraic closure) that
// differ from Q only in their square/isotropy semantics, and quadratic
// extensions k(sqrt(a)) of Q or F_p.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "nil7/error.hpp"

namespace nil7 {

class Scalar;

enum class FieldKind { Rationals, PrimeField, RealsModel, AlgClosedModel, QuadraticExtension };

namespace detail {
struct FieldData;
}

/// Handle to an interned field descriptor. Handles compare by identity; two
/// handles built from the same description are equal.
class Field {
 public:
  static Field rationals();
  static Field prime(std::int64_t p);
  static Field reals();
  static Field alg_closed();
  /// k(sqrt(a)) for a nonsquare a of a Rationals or PrimeField base.
  static Field extension(const Field& base, const Scalar& a);

  Field();  // the rationals

  FieldKind kind() const;
  bool is_extension() const { return kind() == FieldKind::QuadraticExtension; }
  /// True when elements are built from fractions (Q, the two models, Q(sqrt a)).
  bool rational_based() const;
  /// The characteristic; 0 for rational-based fields.
  std::int64_t characteristic() const;
  /// Base field of an extension; throws NotAnExtensionField otherwise.
  Field base() const;
  /// The a of k(sqrt(a)); throws NotAnExtensionField otherwise.
  const Scalar& ext_param() const;
  /// Field actually used for element arithmetic: Q for the reals/closure models.
  Field arithmetic() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// sqrt(a) as an element of an extension field.
  Scalar sqrt_param() const;
  /// Embeds an element of base() into this extension.
  Scalar lift(const Scalar& x) const;

  /// Short display name: "Q", "F_5", "R", "Qbar", "Q(sqrt(2))".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.d_ != b.d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  const detail::FieldData* d_;
  friend class Scalar;
};

/// An exact field element. Fractions are reduced with positive denominator,
/// residues live in [0, p), and extension elements are pairs (u, v) meaning
/// u + v*sqrt(a) with canonical base components.
class Scalar {
 public:
  Scalar();  // rational zero

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// The rational value; requires a rational-based non-extension field.
  const mpq_class& rational() const;
  /// The residue; requires a prime field.
  std::int64_t residue() const;
  /// Components of u + v*sqrt(a) as base-field elements. For non-extension
  /// fields re() is the element itself and im() is zero.
  Scalar re() const;
  Scalar im() const;

  Scalar operator-() const;
  Scalar inv() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Re-tags a rational-based scalar with another rational-based field of the
  /// same arithmetic (e.g. moves an R-model element into Q).
  Scalar recast(const Field& target) const;

  std::string to_string() const;

 private:
  using Residues = std::array<std::int64_t, 2>;
  using Fractions = std::array<mpq_class, 2>;

  Scalar(Field f, Residues r);
  Scalar(Field f, Fractions q);
  void require_same(const Scalar& o) const;

  Field field_;
  std::variant<Residues, Fractions> rep_;

  friend class Field;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Canonical representative of the coset x*(k*)^2.
struct SquareClass {
  Scalar representative;
  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.representative == b.representative;
  }
};

/// Squarefree integer part is computed by trial division up to this bound.
inline constexpr std::int64_t kDefaultTrialDivisionBound = 1'000'000;

/// Square test under the descriptor's semantics (R: positive, Qbar: always).
bool is_square(const Scalar& x);
SquareClass square_class(const Scalar& x,
                         std::int64_t trial_bound = kDefaultTrialDivisionBound);
/// (u, v) -> (u, -v) on an extension field.
Scalar galois_conjugate(const Scalar& x);
/// A deterministic y with y*y == x. Throws NotASquare or UnsupportedField.
Scalar sqrt_in_field(const Scalar& x);
/// Like sqrt_in_field but returns nullopt instead of throwing NotASquare. Over
/// the reals/closure models this searches for a root in the rational
/// arithmetic, which may not exist even when the model calls x a square.
std::optional<Scalar> try_sqrt(const Scalar& x);

/// Norm u^2 - a v^2 of an extension element, as a base-field scalar.
Scalar norm(const Scalar& x);

// Integer helpers shared with the quadratic-form code.
namespace arith {
bool is_prime(std::int64_t n);
std::int64_t mod(std::int64_t a, std::int64_t p);
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p);
std::int64_t invmod(std::int64_t a, std::int64_t p);
/// Tonelli-Shanks; a must be a nonzero quadratic residue mod p.
std::int64_t sqrtmod(std::int64_t a, std::int64_t p);
/// Least quadratic nonresidue mod p.
std::int64_t least_nonresidue(std::int64_t p);
/// Signed squarefree part of a nonzero integer. Throws
/// SquareClassBoundExceeded when the cofactor left after trial division could
/// still hide a square factor.
mpz_class squarefree_part(const mpz_class& n, std::int64_t trial_bound);
/// Exact integer square root, if n is a perfect square.
std::optional<mpz_class> exact_sqrt(const mpz_class& n);
std::optional<mpq_class> exact_sqrt(const mpq_class& q);
}  // namespace arith

}  // namespace nil7
