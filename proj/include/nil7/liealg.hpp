#pragma once

#include <cstdint>
#include <vector>

#include "nil7/exterior.hpp"

namespace nil7 {

/// Brackets [X_i, X_j] = sum_k a^k_ij X_k on a basis X_1..X_n (0-based here).
class StructureConstants {
 public:
  StructureConstants(Field f, int n);

  const Field& field() const { return field_; }
  int dim() const { return n_; }
  /// a^k_ij for i != j; antisymmetric in (i, j); zero when i == j.
  Scalar get(int i, int j, int k) const;
  void set(int i, int j, int k, const Scalar& v);
  /// [u, v] for coordinate vectors.
  Vector bracket(const Vector& u, const Vector& v) const;

 private:
  std::size_t index(int i, int j, int k) const;
  Field field_;
  int n_;
  std::vector<Scalar> a_;  // i < j only
};

/// A minimal-algebra presentation: dx_k for each generator, as bivectors.
struct Presentation {
  Field field;
  int n = 0;
  std::vector<KForm> d;

  Presentation() = default;
  Presentation(Field f, int n);
  /// Builds from texts such as {{7, "x1^x2"}} (1-based generator numbers);
  /// unspecified generators are closed.
  static Presentation from_strings(const Field& f, int n,
                                   const std::vector<std::pair<int, std::string>>& dx);

  friend bool operator==(const Presentation& a, const Presentation& b);
  friend bool operator!=(const Presentation& a, const Presentation& b) { return !(a == b); }
  /// Moves every coefficient into an extension of the current field.
  Presentation lift(const Field& ext) const;
};

std::string to_string(const Presentation& p);

Presentation dualize(const StructureConstants& sc);
StructureConstants undualize(const Presentation& p);

/// d on a k-form by the graded Leibniz rule.
KForm differential(const Presentation& p, const KForm& a);
bool check_flatness(const Presentation& p);

/// dims of g^(k)/g^(k+1), k = 1, 2, ...; throws NotNilpotent.
std::vector<std::size_t> lower_central_series(const StructureConstants& sc);

struct Filtration {
  std::vector<std::vector<Vector>> w;  // bases of W_0, W_1, ..., W_m = V
  std::vector<std::size_t> f;          // f_k = dim W_k / W_{k-1}
  std::size_t length() const { return f.size(); }
};
Filtration characteristic_filtration(const Presentation& p);

/// The presentation in new generators y = x P (columns of P are the y_j).
/// P may live over a quadratic extension of the presentation's field.
Presentation apply_basis_change(const Presentation& p, const BasisChange& b);

/// Random length-2 presentation with d = 0 on the first f0 generators and
/// independent differentials in Lambda^2 of them on the rest.
Presentation random_presentation(int f0, int f1, std::uint64_t seed, const Field& f = Field::rationals());
/// Random invertible change of generators with small integer entries.
BasisChange random_basis_change(const Field& f, int n, std::uint64_t seed);

}  // namespace nil7
