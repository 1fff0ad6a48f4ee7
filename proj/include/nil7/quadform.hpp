#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nil7/linalg.hpp"

namespace nil7 {

/// Q ~ Y0^2 - a Y1^2 - b Y2^2 up to a nonzero scalar. Rank 2 has b = 0,
/// rank 1 has a = b = 0.
struct ConicNormalForm {
  Scalar a, b;
  int rank = 0;
};

struct NormalizedConic {
  ConicNormalForm nf;
  BasisChange basis;  // P with P^T S P = alpha * diag(1, -a, -b)
  Scalar alpha;
};

/// S is the symmetric Gram matrix of the ternary form (Q(v) = v^T S v).
/// a, b come out as canonical square-class representatives; over the reals
/// and closure models they are squarefree integers, as over Q.
NormalizedConic normalize_conic(const Matrix& s);

/// A place of Q: an odd or even prime, or infinity.
using Place = std::int64_t;
inline constexpr Place kInfinity = 0;

int legendre_symbol(const mpz_class& u, std::int64_t p);
/// Inputs need not be in lowest terms.
int hilbert_symbol(mpq_class a, mpq_class b, Place place);
/// {2} together with the odd primes dividing numerators or denominators of a, b.
std::vector<Place> relevant_primes(mpq_class a, mpq_class b);

bool is_isotropic_ternary(const ConicNormalForm& nf);

/// Ramified places sorted by prime with infinity last; split iff empty.
struct QuaternionClass {
  Field field;
  std::vector<Place> ramified;
  bool split() const { return ramified.empty(); }
  friend bool operator==(const QuaternionClass& x, const QuaternionClass& y) {
    return x.field == y.field && x.ramified == y.ramified;
  }
};

QuaternionClass quaternion_class(const Scalar& a, const Scalar& b);
bool quaternion_iso(const QuaternionClass& x, const QuaternionClass& y);
std::string to_string(const QuaternionClass& c);

/// xi0 + xi1 x1 + xi2 x2 + xi3 x3 in the algebra (a, b): x1^2 = a, x2^2 = b, x3 = x1 x2 = -x2 x1.
struct Quaternion {
  Scalar a, b;
  std::array<Scalar, 4> xi;
};
Quaternion quaternion_multiply(const Quaternion& p, const Quaternion& q);
Scalar quaternion_norm(const Quaternion& q);

/// Projective points of Y0^2 - a Y1^2 - b Y2^2 over F_p.
std::int64_t conic_point_count(const ConicNormalForm& nf);

/// Largest coordinate tried by the rational point search on isotropic conics.
inline constexpr std::int64_t kDefaultHeightBound = 10'000;

/// A nonzero v with v^T S v = 0, in the coordinates of S. Over Q this runs a
/// search over integer points of the diagonalized form up to the height bound
/// (RationalPointSearchExceeded if the guaranteed box is larger and nothing
/// was found) and returns nullopt when the form is anisotropic; over F_p it
/// always succeeds; over the reals/closure models it looks for a rational
/// vector only.
std::optional<Vector> find_isotropic_vector(const Matrix& s,
                                            std::int64_t height_bound = kDefaultHeightBound);

}  // namespace nil7
