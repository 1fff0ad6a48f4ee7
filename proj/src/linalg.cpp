#include "nil7/linalg.hpp"

#include <ostream>
#include <utility>

namespace nil7 {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v[i] = f.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vector>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const Field& f, const std::vector<Vector>& cols) {
  return from_rows(f, cols).transpose();
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  std::vector<Vector> rs;
  for (const auto& r : rows) {
    Vector v;
    for (long long x : r) v.push_back(f.from_int(x));
    rs.push_back(std::move(v));
  }
  return from_rows(f, rs);
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix +");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix -");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix *");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix * vector");
  Vector out = zero_vector(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

Echelon rref(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r.cols() && row < r.rows(); ++c) {
    std::size_t piv = row;
    while (piv < r.rows() && r(piv, c).is_zero()) ++piv;
    if (piv == r.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(piv, j), r(row, j));
    }
    const Scalar inv = r(row, c).inv();
    for (std::size_t j = c; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, c).is_zero()) continue;
      const Scalar f = r(i, c);
      for (std::size_t j = c; j < r.cols(); ++j) {
        if (!r(row, j).is_zero()) r(i, j) -= f * r(row, j);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix invert(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "invert needs a square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  const Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Scalar determinant(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "determinant needs a square matrix");
  Matrix r = m;
  const std::size_t n = m.rows();
  Scalar det = m.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && r(piv, c).is_zero()) ++piv;
    if (piv == n) return m.field().zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(r(piv, j), r(c, j));
      det = -det;
    }
    det *= r(c, c);
    const Scalar inv = r(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (r(i, c).is_zero()) continue;
      const Scalar f = r(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) r(i, j) -= f * r(c, j);
    }
  }
  return det;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::vector<Vector> span_basis(const Field& f, std::size_t n, const std::vector<Vector>& vs) {
  if (vs.empty()) return {};
  Matrix m(f, n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
  std::vector<Vector> out;
  for (auto p : rref(m).pivots) out.push_back(vs[p]);
  return out;
}

bool in_span(const Field& f, std::size_t n, const std::vector<Vector>& vs, const Vector& v) {
  if (vs.empty()) return is_zero(v);
  Matrix m(f, n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
  return solve(m, v).has_value();
}

std::vector<Vector> intersect(const Field& f, std::size_t n, const std::vector<Vector>& a,
                              const std::vector<Vector>& b) {
  const auto ba = span_basis(f, n, a);
  const auto bb = span_basis(f, n, b);
  if (ba.empty() || bb.empty()) return {};
  // Solve sum s_i a_i - sum t_j b_j = 0 and map the s-part back.
  Matrix m(f, n, ba.size() + bb.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ba.size(); ++j) m(i, j) = ba[j][i];
    for (std::size_t j = 0; j < bb.size(); ++j) m(i, ba.size() + j) = -bb[j][i];
  }
  std::vector<Vector> out;
  for (const auto& k : kernel_basis(m)) {
    Vector v = zero_vector(f, n);
    for (std::size_t j = 0; j < ba.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) v[i] += k[j] * ba[j][i];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> complete_with_units(const Field& f, std::size_t n, const std::vector<Vector>& vs) {
  std::vector<Vector> current = vs;
  std::vector<Vector> added;
  for (std::size_t i = 0; i < n && current.size() < n; ++i) {
    Vector e = unit_vector(f, n, i);
    if (!in_span(f, n, current, e)) {
      current.push_back(e);
      added.push_back(e);
    }
  }
  return added;
}

BasisChange::BasisChange(Matrix m) : matrix(std::move(m)) {
  if (!matrix.square()) throw Error(ErrorCode::DimensionMismatch, "basis change must be square");
  if (determinant(matrix).is_zero()) throw Error(ErrorCode::Singular, "basis change is singular");
}

BasisChange BasisChange::identity(const Field& f, std::size_t n) {
  return BasisChange(Matrix::identity(f, n));
}

BasisChange BasisChange::inverse() const { return BasisChange(invert(matrix)); }

BasisChange BasisChange::compose(const BasisChange& first, const BasisChange& second) {
  return BasisChange(first.matrix * second.matrix);
}

Congruence diagonalize_congruence(const Matrix& s) {
  if (!s.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "diagonalize_congruence");
  if (s.field().characteristic() == 2) throw Error(ErrorCode::UnsupportedField, "characteristic 2");
  const Field& f = s.field();
  const std::size_t n = s.rows();
  Matrix a = s;
  Matrix p = Matrix::identity(f, n);
  // col_j += c * col_i on P, and the matching congruence on A.
  auto add = [&](std::size_t j, std::size_t i, const Scalar& c) {
    for (std::size_t r = 0; r < n; ++r) p(r, j) += c * p(r, i);
    for (std::size_t r = 0; r < n; ++r) a(r, j) += c * a(r, i);
    for (std::size_t r = 0; r < n; ++r) a(j, r) += c * a(i, r);
  };
  auto swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(p(r, i), p(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(i, r), a(j, r));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a(j, j).is_zero()) ++j;
      if (j < n) {
        swap(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j).is_zero()) ++j;
        if (j == n) continue;
        // a(j, j) = 0 here, so the new a(k, k) is exactly 1.
        add(k, j, (f.from_int(2) * a(k, j)).inv());
      }
    }
    const Scalar inv = a(k, k).inv();
    for (std::size_t j = k + 1; j < n; ++j) {
      if (!a(k, j).is_zero()) add(j, k, -(a(k, j) * inv));
    }
  }
  return {BasisChange(std::move(p)), std::move(a)};
}

}  // namespace nil7
