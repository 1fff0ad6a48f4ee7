#include "nil7/exterior.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace nil7 {

bool MonoLess::operator()(Mono a, Mono b) const {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  const int t = std::countr_zero(a ^ b);
  return (a >> t) & 1u;
}

Mono mono(std::initializer_list<int> indices) {
  Mono m = 0;
  for (int i : indices) m |= Mono{1} << i;
  return m;
}

std::vector<int> mono_indices(Mono m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

std::vector<Mono> monomials(int n, int k) {
  std::vector<Mono> out;
  for (Mono m = 0; m < (Mono{1} << n); ++m) {
    if (std::popcount(m) == k) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), MonoLess{});
  return out;
}

KForm::KForm(Field f, int n, int k) : field_(f), n_(n), k_(k) {
  if (n < 0 || n > 31 || k < 0) throw Error(ErrorCode::DimensionMismatch, "bad form shape");
}

KForm KForm::generator(const Field& f, int n, int i) { return monomial(f, n, Mono{1} << i, f.one()); }

KForm KForm::monomial(const Field& f, int n, Mono m, const Scalar& c) {
  KForm out(f, n, std::popcount(m));
  out.add_term(m, c);
  return out;
}

KForm KForm::linear(const Field& f, const Vector& coords) {
  KForm out(f, static_cast<int>(coords.size()), 1);
  for (std::size_t i = 0; i < coords.size(); ++i) out.add_term(Mono{1} << i, coords[i]);
  return out;
}

Scalar KForm::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void KForm::add_term(Mono m, const Scalar& c) {
  if (std::popcount(m) != k_ || (n_ < 32 && (m >> n_) != 0)) {
    throw Error(ErrorCode::DegreeMismatch, "monomial outside the form's degree or ambient");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

static void require_compatible(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::AmbientMismatch, "forms on different spaces");
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "forms over different fields");
}

KForm& KForm::operator+=(const KForm& o) {
  require_compatible(*this, o);
  if (k_ != o.k_) throw Error(ErrorCode::DegreeMismatch, "adding forms of different degree");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& o) { return *this += -o; }

KForm& KForm::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

KForm KForm::operator-() const {
  KForm out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const KForm& a, const KForm& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.k_ == b.k_ && a.terms_ == b.terms_;
}

Vector KForm::coords() const {
  if (k_ != 1) throw Error(ErrorCode::DegreeMismatch, "coords() needs a 1-form");
  Vector v = zero_vector(field_, static_cast<std::size_t>(n_));
  for (const auto& [m, c] : terms_) v[static_cast<std::size_t>(std::countr_zero(m))] = c;
  return v;
}

Vector KForm::coefficient_vector() const {
  Vector v;
  for (Mono m : monomials(n_, k_)) v.push_back(coeff(m));
  return v;
}

KForm KForm::from_coefficient_vector(const Field& f, int n, int k, const Vector& v) {
  KForm out(f, n, k);
  const auto ms = monomials(n, k);
  if (ms.size() != v.size()) throw Error(ErrorCode::WrongLength, "coefficient vector length");
  for (std::size_t i = 0; i < ms.size(); ++i) out.add_term(ms[i], v[i]);
  return out;
}

KForm wedge(const KForm& a, const KForm& b) {
  require_compatible(a, b);
  KForm out(a.field(), a.dim(), a.degree() + b.degree());
  if (a.degree() + b.degree() > a.dim()) return out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      int swaps = 0;
      for (Mono rest = mb; rest; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        swaps += std::popcount(ma >> (j + 1));
      }
      Scalar c = ca * cb;
      out.add_term(ma | mb, swaps % 2 ? -c : c);
    }
  }
  return out;
}

KForm substitute(const KForm& a, const Matrix& m) {
  if (m.rows() != static_cast<std::size_t>(a.dim()) || !m.square()) {
    throw Error(ErrorCode::DimensionMismatch, "substitution matrix");
  }
  const Field& f = m.field();
  if (a.degree() == 2) {
    // Coefficient of y_p^y_q is the 2x2 minor of columns i, j in rows p, q.
    const auto n = static_cast<std::size_t>(a.dim());
    std::vector<Scalar> acc(n * n, f.zero());
    for (const auto& [mo, c] : a.terms()) {
      const auto idx = mono_indices(mo);
      const auto i = static_cast<std::size_t>(idx[0]), j = static_cast<std::size_t>(idx[1]);
      const Scalar cc = c.field() == f ? c : f.lift(c);
      for (std::size_t p = 0; p < n; ++p) {
        if (m(p, i).is_zero() && m(p, j).is_zero()) continue;
        for (std::size_t q = p + 1; q < n; ++q) {
          const Scalar minor = m(p, i) * m(q, j) - m(q, i) * m(p, j);
          if (!minor.is_zero()) acc[p * n + q] += cc * minor;
        }
      }
    }
    KForm out(f, a.dim(), 2);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (!acc[p * n + q].is_zero()) out.add_term(mono({static_cast<int>(p), static_cast<int>(q)}), acc[p * n + q]);
    return out;
  }
  std::vector<KForm> images;
  for (int i = 0; i < a.dim(); ++i) images.push_back(KForm::linear(f, m.col(static_cast<std::size_t>(i))));
  KForm out(f, a.dim(), a.degree());
  for (const auto& [mo, c] : a.terms()) {
    KForm prod = KForm::monomial(f, a.dim(), 0, f.one());
    for (int i : mono_indices(mo)) prod = wedge(prod, images[static_cast<std::size_t>(i)]);
    prod *= c.field() == f ? c : f.lift(c);
    out += prod;
  }
  return out;
}

Scalar top_component(const KForm& a) {
  if (a.degree() != a.dim()) throw Error(ErrorCode::DegreeMismatch, "top_component needs degree n");
  return a.coeff((a.dim() == 32 ? ~Mono{0} : (Mono{1} << a.dim()) - 1));
}

Matrix bivector_matrix(const KForm& phi) {
  if (phi.degree() != 2) throw Error(ErrorCode::DegreeMismatch, "not a bivector");
  const auto n = static_cast<std::size_t>(phi.dim());
  Matrix c(phi.field(), n, n);
  for (const auto& [m, x] : phi.terms()) {
    const auto idx = mono_indices(m);
    c(static_cast<std::size_t>(idx[0]), static_cast<std::size_t>(idx[1])) = x;
    c(static_cast<std::size_t>(idx[1]), static_cast<std::size_t>(idx[0])) = -x;
  }
  return c;
}

KForm bivector_from_matrix(const Matrix& c) {
  KForm out(c.field(), static_cast<int>(c.rows()), 2);
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = i + 1; j < c.cols(); ++j)
      out.add_term(mono({static_cast<int>(i), static_cast<int>(j)}), c(i, j));
  return out;
}

std::size_t bivector_rank(const KForm& phi) { return rank(bivector_matrix(phi)); }

std::vector<Vector> support(const KForm& phi) {
  const Matrix c = bivector_matrix(phi);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < c.cols(); ++j) cols.push_back(c.col(j));
  return span_basis(phi.field(), c.rows(), cols);
}

Darboux darboux_basis(const KForm& phi) {
  const Matrix c = bivector_matrix(phi);
  const Field& f = phi.field();
  const std::size_t n = c.rows();
  auto form = [&](const Vector& u, const Vector& v) {
    Scalar s = f.zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!v[j].is_zero() && !c(i, j).is_zero()) s += u[i] * c(i, j) * v[j];
    }
    return s;
  };
  std::vector<Vector> rest;
  for (std::size_t i = 0; i < n; ++i) rest.push_back(unit_vector(f, n, i));
  std::vector<Vector> rows;
  int r = 0;
  for (;;) {
    std::size_t a = rest.size(), b = rest.size();
    for (std::size_t i = 0; i < rest.size() && a == rest.size(); ++i)
      for (std::size_t j = 0; j < rest.size(); ++j)
        if (!form(rest[i], rest[j]).is_zero()) {
          a = i;
          b = j;
          break;
        }
    if (a == rest.size()) break;
    Vector q1 = rest[a];
    Vector q2 = rest[b];
    const Scalar inv = form(q1, q2).inv();
    for (auto& x : q2) x *= inv;
    std::vector<Vector> next;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (i == a || i == b) continue;
      Vector v = rest[i];
      const Scalar s2 = form(v, q2), s1 = form(v, q1);
      for (std::size_t t = 0; t < n; ++t) v[t] = v[t] - s2 * q1[t] + s1 * q2[t];
      next.push_back(std::move(v));
    }
    rows.push_back(std::move(q1));
    rows.push_back(std::move(q2));
    rest = std::move(next);
    ++r;
  }
  for (auto& v : rest) rows.push_back(std::move(v));
  const Matrix q = Matrix::from_rows(f, rows);
  return {BasisChange(invert(q)), r};
}

std::pair<Vector, Vector> factor_rank2(const KForm& phi) {
  const std::size_t rk = bivector_rank(phi);
  if (rk == 0) throw Error(ErrorCode::ZeroBivector, "cannot factor the zero bivector");
  if (rk != 2) throw Error(ErrorCode::DegreeMismatch, "bivector of rank " + std::to_string(rk) + " is not decomposable");
  const Matrix c = bivector_matrix(phi);
  Vector z;
  for (std::size_t j = 0; j < c.cols(); ++j) {
    z = c.col(j);
    if (!is_zero(z)) break;
  }
  std::size_t i = 0;
  while (z[i].is_zero()) ++i;
  const Scalar inv = z[i].inv();
  Vector v = zero_vector(phi.field(), c.rows());
  for (std::size_t r = 0; r < c.rows(); ++r) v[r] = -(c(r, i) * inv);
  return {z, v};
}

// ---------------------------------------------------------------------------
// Text

std::string to_string(const KForm& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    std::string mono_str;
    for (int i : mono_indices(m)) {
      if (!mono_str.empty()) mono_str += "^";
      mono_str += "x" + std::to_string(i + 1);
    }
    bool negative = false;
    Scalar mag = c;
    if (!c.field().is_extension() && c.field().rational_based() && c.rational() < 0) {
      negative = true;
      mag = -c;
    }
    std::string coef;
    if (c.field().is_extension() && !c.im().is_zero()) {
      coef = "(" + mag.to_string() + ")";
    } else if (!mag.is_one() || mono_str.empty()) {
      coef = mag.to_string();
    }
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coef;
    if (!coef.empty() && !mono_str.empty()) out += " ";
    out += mono_str;
    first = false;
  }
  return out;
}

namespace {

class FormParser {
 public:
  FormParser(const Field& f, int n, int k, std::string_view s) : f_(f), n_(n), k_(k), s_(s) {}

  KForm run() {
    KForm out(f_, n_, k_);
    skip();
    if (pos_ == s_.size()) fail("empty form");
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      parse_term(out, negative);
      first = false;
      skip();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in \"" +
                                           std::string(s_) + "\"");
  }
  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
    return d;
  }

  void parse_term(KForm& out, bool negative) {
    mpq_class coef = 1;
    bool has_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits());
      mpz_class den = 1;
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        std::string d = digits();
        if (d.empty()) fail("expected denominator");
        den = mpz_class(d);
        if (den == 0) fail("zero denominator");
      }
      coef = mpq_class(num, den);
      coef.canonicalize();
      has_coef = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
      }
    }
    std::vector<int> idx;
    while (peek() == 'x') {
      ++pos_;
      std::string d = digits();
      if (d.empty()) fail("expected generator index");
      const int i = std::stoi(d);
      if (i < 1 || i > n_) fail("generator index out of range");
      idx.push_back(i - 1);
      skip();
      if (peek() == '^' || peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'x') fail("expected generator");
      }
    }
    if (!has_coef && idx.empty()) fail("expected a term");
    if (static_cast<int>(idx.size()) != k_) fail("term of wrong degree");
    // Sort indices, tracking the permutation sign; repeats give zero.
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        if (idx[i] == idx[j]) return;
        if (idx[i] > idx[j]) sign = -sign;
      }
    Mono m = 0;
    for (int i : idx) m |= Mono{1} << i;
    if (negative) sign = -sign;
    out.add_term(m, f_.from_rational(mpq_class(sign * coef)));
  }

  const Field& f_;
  int n_, k_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

KForm parse_form(const Field& f, int n, int k, std::string_view text) {
  const std::string_view trimmed = text;
  if (trimmed.find_first_not_of(" \t") != std::string_view::npos) {
    auto b = trimmed.find_first_not_of(" \t");
    auto e = trimmed.find_last_not_of(" \t");
    if (trimmed.substr(b, e - b + 1) == "0") return KForm(f, n, k);
  }
  return FormParser(f, n, k, text).run();
}

}  // namespace nil7
