#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "nil7/field.hpp"

namespace nil7 {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, const std::vector<Vector>& rows);
  static Matrix from_columns(const Field& f, const std::vector<Vector>& cols);
  /// Convenience for tests and tables: integer entries, row-major.
  static Matrix from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  Matrix transpose() const;
  /// Applies f entrywise into another field (used for lifting to extensions).
  template <class Fn>
  Matrix map(const Field& target, Fn fn) const {
    Matrix out(target, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = fn(data_[k]);
    return out;
  }
  bool is_zero() const;
  bool is_symmetric() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Reduced row echelon form together with the pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);
/// Basis of {v : M v = 0}; one vector per free column, with a 1 in that column.
std::vector<Vector> kernel_basis(const Matrix& m);
Matrix invert(const Matrix& m);
Scalar determinant(const Matrix& m);
/// Some x with M x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Basis of the span of the given vectors (pivot columns of the original list).
std::vector<Vector> span_basis(const Field& f, std::size_t n, const std::vector<Vector>& vs);
/// Whether v lies in span(vs).
bool in_span(const Field& f, std::size_t n, const std::vector<Vector>& vs, const Vector& v);
/// Basis of span(a) intersected with span(b).
std::vector<Vector> intersect(const Field& f, std::size_t n, const std::vector<Vector>& a,
                              const std::vector<Vector>& b);
/// Unit vectors e_i, in increasing i, completing an independent list to a basis.
std::vector<Vector> complete_with_units(const Field& f, std::size_t n, const std::vector<Vector>& vs);

/// New generators expressed in old ones: column j holds y_j in x-coordinates.
struct BasisChange {
  Matrix matrix;

  explicit BasisChange(Matrix m);
  static BasisChange identity(const Field& f, std::size_t n);
  const Field& field() const { return matrix.field(); }
  std::size_t dim() const { return matrix.rows(); }
  BasisChange inverse() const;
  /// Performs `first`, then `second` expressed in first's new generators.
  static BasisChange compose(const BasisChange& first, const BasisChange& second);
};

struct Congruence {
  BasisChange p;
  Matrix d;  // diagonal, equal to P^T S P
};
/// Symmetric Gaussian elimination. Requires characteristic != 2.
Congruence diagonalize_congruence(const Matrix& s);

}  // namespace nil7
