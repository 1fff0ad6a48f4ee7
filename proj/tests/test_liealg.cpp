#include <gtest/gtest.h>

#include <random>

#include "nil7/liealg.hpp"

using namespace nil7;

namespace {

// Jacobi identity by summing the cyclic triple brackets on basis vectors.
bool jacobi(const StructureConstants& sc) {
  const int n = sc.dim();
  const Field& f = sc.field();
  auto e = [&](int i) { return unit_vector(f, static_cast<std::size_t>(n), static_cast<std::size_t>(i)); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vector s = sc.bracket(e(i), sc.bracket(e(j), e(k)));
        const Vector t = sc.bracket(e(j), sc.bracket(e(k), e(i)));
        const Vector u = sc.bracket(e(k), sc.bracket(e(i), e(j)));
        for (std::size_t c = 0; c < s.size(); ++c) s[c] += t[c] + u[c];
        if (!is_zero(s)) return false;
      }
  return true;
}

// Sparse strictly "upward" brackets: often but not always Jacobi.
StructureConstants random_sc(const Field& f, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-1, 1);
  std::bernoulli_distribution keep(0.25);
  StructureConstants sc(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (keep(rng)) sc.set(i, j, k, f.from_int(c(rng)));
  return sc;
}

Presentation pres(const std::vector<std::pair<int, std::string>>& dx, const Field& f = Field::rationals()) {
  return Presentation::from_strings(f, 7, dx);
}

}  // namespace

TEST(Liealg, DualizeSign) {
  const Field q = Field::rationals();
  StructureConstants sc(q, 7);
  sc.set(0, 1, 6, q.one());
  const Presentation p = dualize(sc);
  EXPECT_EQ(p, pres({{7, "-x1^x2"}}));
  EXPECT_EQ(dualize(StructureConstants(q, 7)), Presentation(q, 7));
}

TEST(Liealg, DualizeRoundTrip) {
  std::mt19937_64 rng(20);
  for (int t = 0; t < 50; ++t) {
    const StructureConstants sc = random_sc(Field::rationals(), 6, rng);
    const Presentation p = dualize(sc);
    EXPECT_EQ(dualize(undualize(p)), p);
  }
}

TEST(Liealg, FlatnessExamples) {
  EXPECT_FALSE(check_flatness(pres({{6, "x1^x2"}, {7, "x3^x6"}})));
  EXPECT_TRUE(check_flatness(pres({{7, "x1^x2"}})));
  EXPECT_TRUE(check_flatness(pres({{6, "x1^x2"}, {7, "x1^x6"}})));
}

TEST(Liealg, FlatnessEqualsJacobi) {
  std::mt19937_64 rng(21);
  int flat = 0, total = 0;
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    for (int t = 0; t < 500; ++t) {
      const int n = 5 + t % 3;
      const StructureConstants sc = random_sc(f, n, rng);
      const bool j = jacobi(sc);
      EXPECT_EQ(check_flatness(dualize(sc)), j);
      flat += j;
      ++total;
    }
  }
  // Both outcomes must actually occur for the comparison to mean anything.
  EXPECT_GT(flat, 0);
  EXPECT_LT(flat, total);
}

TEST(Liealg, LowerCentralSeries) {
  const Field q = Field::rationals();
  EXPECT_EQ(lower_central_series(StructureConstants(q, 7)), (std::vector<std::size_t>{7}));
  StructureConstants h(q, 7);
  h.set(0, 1, 6, q.one());
  EXPECT_EQ(lower_central_series(h), (std::vector<std::size_t>{6, 1}));
  StructureConstants bad(q, 7);
  bad.set(0, 1, 1, q.one());
  try {
    lower_central_series(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNilpotent);
  }
}

TEST(Liealg, FiltrationExamples) {
  EXPECT_EQ(characteristic_filtration(pres({{7, "x1^x2"}})).f, (std::vector<std::size_t>{6, 1}));
  EXPECT_EQ(characteristic_filtration(pres({})).f, (std::vector<std::size_t>{7}));
  EXPECT_EQ(characteristic_filtration(pres({{6, "x1^x2"}, {7, "x1^x6"}})).f,
            (std::vector<std::size_t>{5, 1, 1}));
  // Generators out of order: the grading is discovered, not assumed.
  EXPECT_EQ(characteristic_filtration(pres({{1, "x3^x4 + x5^x6"}, {2, "x3^x5"}})).f,
            (std::vector<std::size_t>{5, 2}));
  EXPECT_EQ(characteristic_filtration(pres({{1, "x2^x3 + x4^x5"}, {2, "x3^x4"}})).f,
            (std::vector<std::size_t>{5, 1, 1}));
  try {
    characteristic_filtration(pres({{1, "x1^x2"}, {2, "x1^x3"}, {3, "x1^x2"}}));
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::NotMinimal || e.code() == ErrorCode::NotFlat);
  }
}

TEST(Liealg, NonNilpotentRejected) {
  // dx1 = x1^x2 is flat (d(x1^x2) = x1^x2^x2 = 0) but never reaches W_0.
  const Presentation p = pres({{1, "x1^x2"}});
  EXPECT_TRUE(check_flatness(p));
  try {
    characteristic_filtration(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotMinimal);
  }
}

TEST(Liealg, FiltrationMatchesLowerCentralSeries) {
  std::mt19937_64 rng(22);
  int checked = 0;
  for (int t = 0; t < 300 && checked < 60; ++t) {
    const StructureConstants sc = random_sc(Field::rationals(), 7, rng);
    if (!jacobi(sc)) continue;
    EXPECT_EQ(characteristic_filtration(dualize(sc)).f, lower_central_series(sc));
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(Liealg, BasisChangeInvariance) {
  for (int t = 0; t < 60; ++t) {
    const int sig = t % 3;
    const Field f = t % 2 ? Field::rationals() : Field::prime(5);
    const Presentation p = random_presentation(6 - sig, 1 + sig, static_cast<std::uint64_t>(t), f);
    EXPECT_TRUE(check_flatness(p));
    const auto fv = characteristic_filtration(p).f;
    EXPECT_EQ(fv, (std::vector<std::size_t>{static_cast<std::size_t>(6 - sig), static_cast<std::size_t>(1 + sig)}));
    const BasisChange b = random_basis_change(f, 7, 500 + static_cast<std::uint64_t>(t));
    const Presentation moved = apply_basis_change(p, b);
    EXPECT_TRUE(check_flatness(moved));
    EXPECT_EQ(characteristic_filtration(moved).f, fv);
    EXPECT_EQ(apply_basis_change(moved, b.inverse()), p);
    EXPECT_EQ(apply_basis_change(p, BasisChange::identity(f, 7)), p);
  }
}

TEST(Liealg, CompositionOfBasisChanges) {
  const Field q = Field::rationals();
  const Presentation p = random_presentation(4, 3, 99);
  const BasisChange a = random_basis_change(q, 7, 1), b = random_basis_change(q, 7, 2);
  EXPECT_EQ(apply_basis_change(apply_basis_change(p, a), b), apply_basis_change(p, BasisChange::compose(a, b)));
}

TEST(Liealg, DescentSubstitution) {
  // Over Q(sqrt 3): x1 = y1 + s y2, x2 = y3 + s y4, x3 = y1 - s y2, x4 = y3 - s y4,
  // x6 = y6 + s y7, x7 = y6 - s y7 turns dx6 = x1x2, dx7 = x3x4 into a rational model.
  const Field q = Field::rationals();
  const Field k = Field::extension(q, q.from_int(3));
  const Scalar s = k.sqrt_param();
  Matrix e(k, 7, 7);  // x_i = sum_j y_j e(j, i)
  e(0, 0) = k.one(); e(1, 0) = s;
  e(2, 1) = k.one(); e(3, 1) = s;
  e(0, 2) = k.one(); e(1, 2) = -s;
  e(2, 3) = k.one(); e(3, 3) = -s;
  e(4, 4) = k.one();
  e(5, 5) = k.one(); e(6, 5) = s;
  e(5, 6) = k.one(); e(6, 6) = -s;
  const Presentation split = Presentation::from_strings(k, 7, {{6, "x1^x2"}, {7, "x3^x4"}});
  const Presentation y = apply_basis_change(split, BasisChange(invert(e)));
  const Presentation expect = Presentation::from_strings(k, 7, {{6, "x1^x3 + 3 x2^x4"}, {7, "x1^x4 + x2^x3"}});
  EXPECT_EQ(y, expect);
  EXPECT_EQ(apply_basis_change(y, BasisChange(e)), split);
}

TEST(Liealg, RandomPresentationSignatures) {
  EXPECT_THROW(random_presentation(3, 4, 1), Error);
  EXPECT_EQ(random_presentation(5, 2, 3), random_presentation(5, 2, 3));
}
