#include <gtest/gtest.h>

#include <random>
#include <set>

#include "nil7/field.hpp"

using namespace nil7;

namespace {

Scalar q(long n, long d = 1) { return Field::rationals().from_rational(mpq_class(n, d)); }

}  // namespace

TEST(Field, RationalArithmetic) {
  EXPECT_EQ(q(2, 3) + q(1, 6), q(5, 6));
  EXPECT_EQ(q(2, 4), q(1, 2));
  EXPECT_EQ(q(3, -6), q(-1, 2));
  EXPECT_EQ((q(7, 3) / q(7, 3)), q(1));
  EXPECT_THROW(q(0).inv(), Error);
}

TEST(Field, PrimeFieldArithmetic) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ(f5.from_int(3) * f5.from_int(4), f5.from_int(2));
  EXPECT_EQ(f5.from_int(-1), f5.from_int(4));
  EXPECT_EQ(f5.from_rational(mpq_class(1, 2)), f5.from_int(3));
  EXPECT_THROW(f5.from_rational(mpq_class(1, 5)), Error);
  EXPECT_THROW(Field::prime(9), Error);
  EXPECT_THROW(Field::prime(2), Error);
}

TEST(Field, MixedFieldsRejected) {
  EXPECT_THROW(q(1) + Field::prime(5).one(), Error);
  try {
    (void)(q(1) * Field::prime(7).one());
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
}

TEST(Field, ExhaustiveAxiomsSmallPrimes) {
  for (std::int64_t p : {3, 5, 7}) {
    const Field f = Field::prime(p);
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b) {
        const Scalar x = f.from_int(a), y = f.from_int(b);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x + y) - y, x);
        if (b != 0) {
          EXPECT_EQ((x / y) * y, x);
        }
        for (std::int64_t c = 0; c < p; ++c) {
          const Scalar z = f.from_int(c);
          EXPECT_EQ(x * (y + z), x * y + x * z);
          EXPECT_EQ((x * y) * z, x * (y * z));
        }
      }
  }
}

TEST(Field, ExtensionArithmetic) {
  const Field k = Field::extension(Field::rationals(), q(2));
  const Scalar s = k.sqrt_param();
  EXPECT_EQ((k.one() + s) * (k.one() - s), k.from_int(-1));
  EXPECT_EQ(s * s, k.from_int(2));
  const Scalar x = k.from_int(3) + k.from_int(5) * s;
  EXPECT_EQ(galois_conjugate(x), k.from_int(3) - k.from_int(5) * s);
  EXPECT_EQ(galois_conjugate(k.from_int(3)), k.from_int(3));
  EXPECT_EQ(x * x.inv(), k.one());
  EXPECT_EQ(norm(x), q(9 - 50));
  EXPECT_EQ(Field::extension(Field::rationals(), q(8)), Field::extension(Field::rationals(), q(8)));
  EXPECT_THROW(Field::extension(Field::rationals(), q(4)), Error);
  EXPECT_THROW(Field::extension(Field::reals(), Field::reals().from_int(-1)), Error);
  EXPECT_THROW(galois_conjugate(q(1)), Error);
}

TEST(Field, RandomExtensionAxioms) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-9, 9);
  for (const Field& k : {Field::extension(Field::rationals(), q(-3)),
                         Field::extension(Field::prime(7), Field::prime(7).from_int(3))}) {
    auto rnd = [&] {
      return k.from_int(c(rng)) + k.from_rational(mpq_class(c(rng), 1 + (c(rng) + 9) % 4)) * k.sqrt_param();
    };
    for (int t = 0; t < 200; ++t) {
      const Scalar x = rnd(), y = rnd(), z = rnd();
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(galois_conjugate(x * y), galois_conjugate(x) * galois_conjugate(y));
      EXPECT_EQ(galois_conjugate(x + y), galois_conjugate(x) + galois_conjugate(y));
      EXPECT_EQ(galois_conjugate(galois_conjugate(x)), x);
      if (!y.is_zero()) {
        EXPECT_EQ((x / y) * y, x);
      }
      if (!x.is_zero()) {
        const Scalar sq = x * x;
        auto r = try_sqrt(sq);
        ASSERT_TRUE(r.has_value());
        EXPECT_EQ(*r * *r, sq);
      }
    }
  }
}

TEST(Field, IsSquare) {
  const Field f7 = Field::prime(7);
  EXPECT_TRUE(is_square(f7.from_int(2)));
  EXPECT_FALSE(is_square(f7.from_int(3)));
  EXPECT_TRUE(is_square(q(4, 9)));
  EXPECT_FALSE(is_square(q(2)));
  EXPECT_FALSE(is_square(Field::reals().from_int(-1)));
  EXPECT_TRUE(is_square(Field::reals().from_int(2)));
  EXPECT_TRUE(is_square(Field::alg_closed().from_int(-5)));
  EXPECT_THROW(is_square(q(0)), Error);
}

TEST(Field, SquareClassRepresentatives) {
  EXPECT_EQ(square_class(q(8)).representative, q(2));
  EXPECT_EQ(square_class(q(-4, 9)).representative, q(-1));
  EXPECT_EQ(square_class(q(2, 3)).representative, q(6));
  EXPECT_EQ(square_class(q(-18, 50)).representative, q(-1));
  EXPECT_EQ(square_class(Field::prime(3).from_int(2)).representative, Field::prime(3).from_int(2));
  EXPECT_EQ(square_class(Field::prime(7).from_int(6)).representative, Field::prime(7).from_int(3));
  EXPECT_EQ(square_class(Field::reals().from_int(-7)).representative, Field::reals().from_int(-1));
  EXPECT_EQ(square_class(Field::alg_closed().from_int(-7)).representative, Field::alg_closed().one());
  EXPECT_THROW(square_class(q(0)), Error);
}

TEST(Field, SquareClassLargeFactors) {
  // Products of primes beyond the trial-division bound.
  const mpz_class p1("1000003"), p2("1000033");
  EXPECT_EQ(arith::squarefree_part(p1 * p1 * 6, 20000), 6);
  EXPECT_EQ(arith::squarefree_part(p1 * p2 * 5, 20000), p1 * p2 * 5);
  EXPECT_THROW(arith::squarefree_part(p1 * p1 * p2, 20000), Error);
}

TEST(Field, SquareClassConstantOnSquareMultiples) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(1, 60);
  for (int t = 0; t < 300; ++t) {
    const Scalar x = q(c(rng) * (t % 2 ? -1 : 1), c(rng));
    const Scalar y = q(c(rng), c(rng));
    EXPECT_EQ(square_class(x * y * y), square_class(x));
    EXPECT_EQ(is_square(x * y * y), is_square(x));
    EXPECT_EQ(square_class(x) == square_class(y), is_square(x / y));
  }
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const Field f = Field::prime(p);
    std::set<std::int64_t> classes;
    for (std::int64_t a = 1; a < p; ++a) classes.insert(square_class(f.from_int(a)).representative.residue());
    EXPECT_EQ(classes.size(), 2u);
  }
}

TEST(Field, SquareRoots) {
  EXPECT_EQ(sqrt_in_field(q(9, 4)), q(3, 2));
  const Field f7 = Field::prime(7);
  const Scalar r = sqrt_in_field(f7.from_int(2));
  EXPECT_EQ(r * r, f7.from_int(2));
  EXPECT_EQ(r, f7.from_int(3));
  try {
    sqrt_in_field(q(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotASquare);
  }
  try {
    sqrt_in_field(Field::reals().from_int(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedField);
  }
  for (std::int64_t p : {5, 13, 17, 41, 97}) {
    const Field f = Field::prime(p);
    for (std::int64_t a = 1; a < p; ++a) {
      const Scalar x = f.from_int(a);
      if (is_square(x)) {
        EXPECT_EQ(sqrt_in_field(x) * sqrt_in_field(x), x);
      }
    }
  }
  const Field k = Field::extension(Field::rationals(), q(5));
  EXPECT_EQ(sqrt_in_field(k.from_int(5)), k.sqrt_param());
  EXPECT_FALSE(try_sqrt(k.sqrt_param()).has_value());
}

TEST(Field, Text) {
  EXPECT_EQ(q(-3, 4).to_string(), "-3/4");
  const Field k = Field::extension(Field::rationals(), q(2));
  EXPECT_EQ(k.name(), "Q(sqrt(2))");
  EXPECT_EQ((k.from_int(1) - k.sqrt_param()).to_string(), "1-sqrt(2)");
}
