#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nil7/linalg.hpp"

namespace nil7 {

/// A monomial x_{i1}^...^x_{ik} (i1 < ... < ik, 0-based) as a bitmask.
using Mono = std::uint32_t;

/// Lexicographic order on increasing index tuples of equal length; shorter
/// tuples sort first.
struct MonoLess {
  bool operator()(Mono a, Mono b) const;
};

Mono mono(std::initializer_list<int> indices);
std::vector<int> mono_indices(Mono m);
/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Mono> monomials(int n, int k);

/// Homogeneous element of the exterior algebra on n generators.
class KForm {
 public:
  using Terms = std::map<Mono, Scalar, MonoLess>;

  KForm() = default;
  KForm(Field f, int n, int k);
  static KForm generator(const Field& f, int n, int i);
  static KForm monomial(const Field& f, int n, Mono m, const Scalar& c);
  /// Degree-1 form with the given coordinates.
  static KForm linear(const Field& f, const Vector& coords);

  const Field& field() const { return field_; }
  int dim() const { return n_; }
  int degree() const { return k_; }
  const Terms& terms() const { return terms_; }
  Scalar coeff(Mono m) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(Mono m, const Scalar& c);

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  KForm& operator*=(const Scalar& s);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const Scalar& s, KForm a) { return a *= s; }
  KForm operator-() const;
  friend bool operator==(const KForm& a, const KForm& b);
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

  /// Coefficients of a degree-1 form as a vector.
  Vector coords() const;
  /// Coefficients over all degree-k monomials in lexicographic order.
  Vector coefficient_vector() const;
  static KForm from_coefficient_vector(const Field& f, int n, int k, const Vector& v);

  template <class Fn>
  KForm map(const Field& target, Fn fn) const {
    KForm out(target, n_, k_);
    for (const auto& [m, c] : terms_) out.add_term(m, fn(c));
    return out;
  }

 private:
  Field field_;
  int n_ = 0, k_ = 0;
  Terms terms_;
};

KForm wedge(const KForm& a, const KForm& b);
/// Substitutes x_i -> sum_j m(j, i) y_j, i.e. generator i goes to column i.
KForm substitute(const KForm& a, const Matrix& m);
/// Coefficient of the top monomial x_1^...^x_n. Throws DegreeMismatch.
Scalar top_component(const KForm& a);

// Bivectors: phi = sum_{i<j} C_ij x_i^x_j with C antisymmetric.
Matrix bivector_matrix(const KForm& phi);
KForm bivector_from_matrix(const Matrix& c);
std::size_t bivector_rank(const KForm& phi);
/// Column space of the coefficient matrix.
std::vector<Vector> support(const KForm& phi);

struct Darboux {
  BasisChange basis;  // new generators in old coordinates
  int r = 0;          // phi = y1^y2 + ... + y_{2r-1}^y_{2r}
};
Darboux darboux_basis(const KForm& phi);

/// A rank-2 bivector as z ^ v.
std::pair<Vector, Vector> factor_rank2(const KForm& phi);

/// Canonical text: "x1^x2 + 3 x3^x4"; "0" for the zero form.
std::string to_string(const KForm& a);
/// Parses "x1^x2 - 1/2 x3^x4" (also "x1x2", "x1*x2"); every term must have
/// degree k. Throws ParseError.
KForm parse_form(const Field& f, int n, int k, std::string_view text);

}  // namespace nil7
