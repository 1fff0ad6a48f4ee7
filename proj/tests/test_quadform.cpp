#include <gtest/gtest.h>

#include <random>

#include "nil7/quadform.hpp"
#include "oracles.hpp"

using namespace nil7;

namespace {

const Field Q = Field::rationals();

Scalar q(long n, long d = 1) { return Q.from_rational(mpq_class(n, d)); }

Matrix diag3(const Field& f, long x, long y, long z) {
  return Matrix::from_ints(f, {{x, 0, 0}, {0, y, 0}, {0, 0, z}});
}

bool squarefree(long n) {
  if (n == 0) return false;
  n = std::labs(n);
  for (long d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  int n = 0;
  while (n == 0) n = num(rng);
  mpq_class r(n, den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Quadform, NormalizeExamples) {
  const NormalizedConic n1 = normalize_conic(diag3(Q, 1, 1, -1));
  EXPECT_EQ(n1.nf.rank, 3);
  EXPECT_EQ(n1.nf.a, q(-1));
  EXPECT_EQ(n1.nf.b, q(1));

  const NormalizedConic n2 = normalize_conic(diag3(Q, 1, -5, 0));
  EXPECT_EQ(n2.nf.rank, 2);
  EXPECT_EQ(n2.nf.a, q(5));
  EXPECT_TRUE(n2.nf.b.is_zero());

  // XY - Z^2 contains a hyperbolic plane.
  const Matrix xy = Matrix::from_rows(Q, {{q(0), q(1, 2), q(0)}, {q(1, 2), q(0), q(0)}, {q(0), q(0), q(-1)}});
  const NormalizedConic n3 = normalize_conic(xy);
  EXPECT_EQ(n3.nf.rank, 3);
  EXPECT_TRUE(is_isotropic_ternary(n3.nf));

  EXPECT_THROW(normalize_conic(Matrix(Q, 3, 3)), Error);
}

TEST(Quadform, NormalizeIsACongruence) {
  std::mt19937_64 rng(30);
  std::uniform_int_distribution<int> c(-4, 4);
  for (const Field& f : {Q, Field::prime(3), Field::prime(7), Field::reals()}) {
    for (int t = 0; t < 80; ++t) {
      Matrix s(f, 3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) s(i, j) = s(j, i) = f.from_int(c(rng));
      if (s.is_zero()) continue;
      const NormalizedConic n = normalize_conic(s);
      Matrix d(f, 3, 3);
      d(0, 0) = f.one();
      d(1, 1) = -n.nf.a;
      d(2, 2) = -n.nf.b;
      EXPECT_EQ(n.basis.matrix.transpose() * s * n.basis.matrix, n.alpha * d);
      EXPECT_EQ(static_cast<std::size_t>(n.nf.rank), rank(s));
      if (!n.nf.a.is_zero()) {
        EXPECT_EQ(square_class(n.nf.a.recast(f.arithmetic())).representative.recast(f), n.nf.a);
      }
    }
  }
}

TEST(Quadform, Legendre) {
  EXPECT_EQ(legendre_symbol(1, 3), 1);
  EXPECT_EQ(legendre_symbol(2, 7), 1);
  EXPECT_EQ(legendre_symbol(2, 3), -1);
  EXPECT_EQ(legendre_symbol(-1, 5), 1);
  EXPECT_EQ(legendre_symbol(-1, 7), -1);
  EXPECT_THROW(legendre_symbol(9, 3), Error);
}

TEST(Quadform, HilbertExamples) {
  EXPECT_EQ(hilbert_symbol(-1, -1, kInfinity), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, 2), -1);
  EXPECT_EQ(hilbert_symbol(3, 5, 3), -1);
  EXPECT_EQ(hilbert_symbol(2, 3, 3), -1);
  EXPECT_EQ(hilbert_symbol(2, 5, 2), -1);
  EXPECT_EQ(hilbert_symbol(2, 7, 2), 1);
  EXPECT_THROW(hilbert_symbol(1, 1, 4), Error);
  EXPECT_THROW(hilbert_symbol(0, 1, 3), Error);
}

TEST(Quadform, HilbertMatchesLocalSolubility) {
  // (a, b)_p = 1 iff X^2 - aY^2 - bZ^2 has a nontrivial p-adic zero.
  for (long a = -15; a <= 15; ++a)
    for (long b = -15; b <= 15; ++b) {
      if (!squarefree(a) || !squarefree(b)) continue;
      EXPECT_EQ(hilbert_symbol(a, b, 2) == 1, oracle::primitive_solution_mod(a, b, 2, 16)) << a << "," << b;
      for (long p : {3L, 5L, 7L, 11L, 13L})
        EXPECT_EQ(hilbert_symbol(a, b, p) == 1, oracle::primitive_solution_mod(a, b, p, p * p))
            << a << "," << b << " at " << p;
    }
}

TEST(Quadform, HilbertProperties) {
  std::mt19937_64 rng(31);
  const std::vector<Place> places{kInfinity, 2, 3, 5, 7, 11, 13};
  for (int t = 0; t < 400; ++t) {
    const mpq_class a = random_rational(rng), b = random_rational(rng), a2 = random_rational(rng);
    const mpq_class c = random_rational(rng);
    const Place v = places[static_cast<std::size_t>(t) % places.size()];
    EXPECT_EQ(hilbert_symbol(a, b, v), hilbert_symbol(b, a, v));
    EXPECT_EQ(hilbert_symbol(a, c * c, v), 1);
    EXPECT_EQ(hilbert_symbol(a, -a, v), 1);
    if (a != 1) {
      EXPECT_EQ(hilbert_symbol(a, 1 - a, v), 1);
      EXPECT_EQ(hilbert_symbol(a, b, v), hilbert_symbol(a, mpq_class((1 - a) * b), v));
    }
    EXPECT_EQ(hilbert_symbol(a * a2, b, v), hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v));
    EXPECT_EQ(hilbert_symbol(a, b, v), hilbert_symbol(a, mpq_class(-a * b), v));
  }
}

TEST(Quadform, ProductFormula) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 300; ++t) {
    const mpq_class a = random_rational(rng), b = random_rational(rng);
    int prod = hilbert_symbol(a, b, kInfinity);
    for (Place p : relevant_primes(a, b)) prod *= hilbert_symbol(a, b, p);
    EXPECT_EQ(prod, 1) << a << "," << b;
  }
}

TEST(Quadform, IsotropyExamples) {
  EXPECT_TRUE(is_isotropic_ternary(normalize_conic(diag3(Q, 1, 1, -1)).nf));
  EXPECT_FALSE(is_isotropic_ternary(normalize_conic(diag3(Q, 1, 1, 1)).nf));
  EXPECT_FALSE(is_isotropic_ternary(normalize_conic(diag3(Q, 1, -3, -5)).nf));
  EXPECT_FALSE(is_isotropic_ternary(normalize_conic(diag3(Field::reals(), 1, 1, 1)).nf));
  EXPECT_TRUE(is_isotropic_ternary(normalize_conic(diag3(Field::reals(), 1, 1, -3)).nf));
  EXPECT_TRUE(is_isotropic_ternary(normalize_conic(diag3(Field::prime(3), 1, 1, 1)).nf));
  EXPECT_TRUE(is_isotropic_ternary(normalize_conic(diag3(Field::alg_closed(), 1, 1, 1)).nf));
  EXPECT_THROW(is_isotropic_ternary(normalize_conic(diag3(Q, 1, 1, 0)).nf), Error);
}

TEST(Quadform, IsotropyMatchesSearchOracle) {
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) {
      if (!squarefree(a) || !squarefree(b)) continue;
      const auto expected = oracle::isotropic_by_search(a, b);
      ASSERT_TRUE(expected.has_value()) << a << "," << b;
      const ConicNormalForm nf{q(a), q(b), 3};
      EXPECT_EQ(is_isotropic_ternary(nf), *expected) << a << "," << b;
    }
}

TEST(Quadform, QuaternionClasses) {
  EXPECT_EQ(quaternion_class(q(-1), q(-1)).ramified, (std::vector<Place>{2, kInfinity}));
  EXPECT_TRUE(quaternion_class(q(1), q(7)).split());
  EXPECT_EQ(quaternion_class(q(-1), q(-4)).ramified, (std::vector<Place>{2, kInfinity}));
  EXPECT_TRUE(quaternion_iso(quaternion_class(q(-1), q(-1)), quaternion_class(q(-1), q(-4))));
  EXPECT_FALSE(quaternion_iso(quaternion_class(q(-1), q(-1)), quaternion_class(q(1), q(-1))));
  EXPECT_EQ(to_string(quaternion_class(q(-1), q(-3))), "ramified at {3, inf}");
  EXPECT_TRUE(quaternion_class(Field::prime(5).from_int(2), Field::prime(5).from_int(2)).split());
  EXPECT_FALSE(quaternion_class(Field::reals().from_int(-2), Field::reals().from_int(-3)).split());
  EXPECT_THROW(quaternion_class(q(0), q(1)), Error);
  EXPECT_THROW(quaternion_iso(quaternion_class(q(1), q(1)), quaternion_class(Field::reals().one(), Field::reals().one())), Error);
}

TEST(Quadform, QuaternionClassRewrites) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 200; ++t) {
    const Scalar a = Q.from_rational(random_rational(rng)), b = Q.from_rational(random_rational(rng));
    const Scalar l = Q.from_rational(random_rational(rng)), m = Q.from_rational(random_rational(rng));
    const QuaternionClass c = quaternion_class(a, b);
    EXPECT_EQ(c, quaternion_class(b, a));
    EXPECT_EQ(c, quaternion_class(a * l * l, b * m * m));
    EXPECT_EQ(c, quaternion_class(a, -a * b));
    EXPECT_EQ(c.split(), is_isotropic_ternary(ConicNormalForm{a, b, 3}));
  }
}

TEST(Quadform, QuaternionArithmetic) {
  const Field f7 = Field::prime(7);
  const Scalar a = f7.from_int(3), b = f7.from_int(5);
  auto quat = [&](long x0, long x1, long x2, long x3) {
    return Quaternion{a, b, {f7.from_int(x0), f7.from_int(x1), f7.from_int(x2), f7.from_int(x3)}};
  };
  const Quaternion x1 = quat(0, 1, 0, 0), x2 = quat(0, 0, 1, 0);
  EXPECT_EQ(quaternion_multiply(x1, x2).xi, quat(0, 0, 0, 1).xi);
  EXPECT_EQ(quaternion_multiply(x2, x1).xi, quat(0, 0, 0, -1).xi);
  EXPECT_EQ(quaternion_multiply(x1, x1).xi, quat(3, 0, 0, 0).xi);
  EXPECT_EQ(quaternion_norm(quat(1, 1, 0, 0)), f7.one() - a);
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<int> c(0, 6);
  for (int t = 0; t < 300; ++t) {
    const Quaternion p = quat(c(rng), c(rng), c(rng), c(rng)), r = quat(c(rng), c(rng), c(rng), c(rng));
    const Quaternion s = quat(c(rng), c(rng), c(rng), c(rng));
    EXPECT_EQ(quaternion_norm(quaternion_multiply(p, r)), quaternion_norm(p) * quaternion_norm(r));
    EXPECT_EQ(quaternion_multiply(quaternion_multiply(p, r), s).xi, quaternion_multiply(p, quaternion_multiply(r, s)).xi);
  }
  Quaternion other = x1;
  other.a = f7.from_int(2);
  EXPECT_THROW(quaternion_multiply(other, x2), Error);
}

TEST(Quadform, PointCounts) {
  const Field f3 = Field::prime(3), f5 = Field::prime(5);
  EXPECT_EQ(conic_point_count(normalize_conic(diag3(f3, 1, 1, -1)).nf), 4);
  EXPECT_EQ(conic_point_count(normalize_conic(diag3(f5, 1, 2, 3)).nf), 6);
  for (std::int64_t p : {3, 5, 7, 11}) {
    const Field f = Field::prime(p);
    for (long x = 1; x < p; ++x)
      for (long y = 1; y < p; ++y) EXPECT_EQ(conic_point_count(normalize_conic(diag3(f, 1, x, y)).nf), p + 1);
  }
}

TEST(Quadform, IsotropicVectors) {
  std::mt19937_64 rng(35);
  std::uniform_int_distribution<int> c(-6, 6);
  int found = 0, anisotropic = 0;
  for (const Field& f : {Q, Field::prime(5), Field::prime(3)}) {
    for (int t = 0; t < 150; ++t) {
      Matrix s(f, 3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) s(i, j) = s(j, i) = f.from_int(c(rng));
      if (s.is_zero()) continue;
      const auto v = find_isotropic_vector(s);
      if (!v) {
        ++anisotropic;
        EXPECT_EQ(f, Q);
        EXPECT_FALSE(is_isotropic_ternary(normalize_conic(s).nf));
        continue;
      }
      ++found;
      EXPECT_FALSE(is_zero(*v));
      const Vector sv = s * *v;
      Scalar val = f.zero();
      for (std::size_t i = 0; i < 3; ++i) val += (*v)[i] * sv[i];
      EXPECT_TRUE(val.is_zero());
    }
  }
  EXPECT_GT(found, 100);
  EXPECT_GT(anisotropic, 0);
}
