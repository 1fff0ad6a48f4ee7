#include "nil7/cohomology.hpp"

#include <sstream>

namespace nil7 {

std::size_t BettiVector::total() const {
  std::size_t s = 0;
  for (auto x : b) s += x;
  return s;
}

long long BettiVector::euler() const {
  long long s = 0;
  for (std::size_t k = 0; k < b.size(); ++k) s += (k % 2 ? -1 : 1) * static_cast<long long>(b[k]);
  return s;
}

bool BettiVector::poincare_dual() const {
  for (std::size_t k = 0; k < b.size(); ++k)
    if (b[k] != b[b.size() - 1 - k]) return false;
  return true;
}

std::string to_string(const BettiVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.b.size(); ++k) os << (k ? ", " : "") << v.b[k];
  os << ")";
  return os.str();
}

Matrix differential_matrix(const Presentation& p, int k) {
  const Field& f = p.field;
  const auto src = monomials(p.n, k);
  const std::size_t rows = k + 1 <= p.n ? monomials(p.n, k + 1).size() : 0;
  Matrix m(f, rows, src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    if (rows == 0) break;
    const Vector c = differential(p, KForm::monomial(f, p.n, src[j], f.one())).coefficient_vector();
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = c[i];
  }
  return m;
}

BettiVector betti(const Presentation& p) {
  if (!check_flatness(p)) throw Error(ErrorCode::NotFlat, "d^2 != 0");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(p.n) + 1, 0);
  for (int k = 0; k < p.n; ++k) ranks[static_cast<std::size_t>(k)] = rank(differential_matrix(p, k));
  BettiVector out;
  for (int k = 0; k <= p.n; ++k) {
    const std::size_t dim = monomials(p.n, k).size();
    const std::size_t in = k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0;
    out.b.push_back(dim - ranks[static_cast<std::size_t>(k)] - in);
  }
  return out;
}

std::vector<Table2Row> table2_rows() {
  const Field q = Field::rationals();
  struct Raw {
    const char* label;
    std::vector<std::pair<int, std::string>> dx;
    std::array<std::size_t, 3> b;
    std::size_t sum;
  };
  const std::vector<Raw> raw{
      {"L_3 ⊕ A_4", {{7, "x1x2"}}, {6, 16, 25}, 71},
      {"L_{5,1} ⊕ A_2", {{7, "x1x2+x3x4"}}, {6, 14, 19}, 61},
      {"L_{7,1}", {{7, "x1x2+x3x4+x5x6"}}, {6, 14, 14}, 56},
      {"L_{5,2} ⊕ A_2", {{6, "x1x2"}, {7, "x1x3"}}, {5, 13, 21}, 59},
      {"L_3 ⊕ L_3 ⊕ A_1", {{6, "x1x2"}, {7, "x3x4"}}, {5, 12, 18}, 54},
      {"L_{6,1} ⊕ A_1", {{6, "x1x2"}, {7, "x1x3+x2x4"}}, {5, 12, 18}, 54},
      {"L_{7,2}", {{6, "x1x2"}, {7, "x1x3+x4x5"}}, {5, 10, 16}, 48},
      {"L_{7,3}", {{6, "x1x2+x3x4"}, {7, "x1x3+x2x5"}}, {5, 9, 15}, 45},
      {"L_{6,2} ⊕ A_1", {{6, "x1x3-x2x4"}, {7, "x1x4+x2x3"}}, {5, 12, 18}, 54},
      {"L_{7,4}", {{5, "x1x2"}, {6, "x1x3"}, {7, "x1x4"}}, {4, 12, 18}, 52},
      {"L_{6,4} ⊕ A_1", {{5, "x1x2"}, {6, "x1x3"}, {7, "x2x3"}}, {4, 11, 20}, 52},
      {"L_{7,5}", {{5, "x1x2"}, {6, "x1x3"}, {7, "x1x4+x2x3"}}, {4, 11, 17}, 49},
      {"L_{7,6}", {{5, "x1x2"}, {6, "x3x4"}, {7, "x1x3"}}, {4, 11, 16}, 48},
      {"L_{7,7}", {{5, "x1x2"}, {6, "x3x4"}, {7, "x1x4+x2x3"}}, {4, 11, 14}, 46},
      {"L_{7,8}", {{5, "x1x4+x2x3"}, {6, "-x1x3+x2x4"}, {7, "x1x2"}}, {4, 11, 16}, 48},
      {"L_{7,9}", {{5, "x1x4+x2x3"}, {6, "-x1x3+x2x4"}, {7, "x1x2+x3x4"}}, {4, 11, 14}, 46},
  };
  std::vector<Table2Row> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out.push_back({static_cast<int>(i + 1), raw[i].label, Presentation::from_strings(q, 7, raw[i].dx), raw[i].b,
                   raw[i].sum});
  }
  return out;
}

std::vector<Table2Check> verify_table2() {
  std::vector<Table2Check> out;
  for (auto& r : table2_rows()) {
    BettiVector b = betti(r.model);
    const bool pass = b.b[1] == r.b123[0] && b.b[2] == r.b123[1] && b.b[3] == r.b123[2];
    out.push_back({std::move(r), std::move(b), pass});
  }
  return out;
}

}  // namespace nil7
