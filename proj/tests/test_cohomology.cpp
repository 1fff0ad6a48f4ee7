#include <gtest/gtest.h>

#include "nil7/classify.hpp"
#include "nil7/cohomology.hpp"
#include "oracles.hpp"

using namespace nil7;

TEST(Cohomology, AbelianIsBinomial) {
  const BettiVector b = betti(Presentation(Field::rationals(), 7));
  EXPECT_EQ(b.b, (std::vector<std::size_t>{1, 7, 21, 35, 35, 21, 7, 1}));
}

TEST(Cohomology, TableRowsMatch) {
  for (const auto& c : verify_table2()) {
    EXPECT_TRUE(c.pass) << c.expected.label << " got " << to_string(c.computed);
    EXPECT_TRUE(c.computed.poincare_dual());
    EXPECT_EQ(c.computed.euler(), 0);
    EXPECT_EQ(c.computed.b[0], 1u);
  }
}

TEST(Cohomology, PrintedSumIsTotalMinusB3) {
  // The printed sums leave out one middle degree: 2(b0+b1+b2) + b3.
  for (const auto& c : verify_table2()) {
    const auto& b = c.computed.b;
    EXPECT_EQ(c.expected.printed_sum, 2 * (b[0] + b[1] + b[2]) + b[3]) << c.expected.label;
    EXPECT_EQ(c.computed.total(), 2 * (b[0] + b[1] + b[2] + b[3]));
  }
}

TEST(Cohomology, AgreesWithBracketOracle) {
  for (const auto& r : table2_rows())
    EXPECT_EQ(betti(r.model).b, oracle::betti_from_brackets(undualize(r.model))) << r.label;
  for (std::uint64_t s = 0; s < 30; ++s) {
    const int f1 = 1 + static_cast<int>(s % 3);
    const Presentation p = random_presentation(7 - f1, f1, 500 + s, Field::prime(7));
    EXPECT_EQ(betti(p).b, oracle::betti_from_brackets(undualize(p)));
  }
}

TEST(Cohomology, FirstBettiIsClosedPart) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const int f1 = 1 + static_cast<int>(s % 3);
    const Presentation p = random_presentation(7 - f1, f1, s, Field::rationals());
    const BettiVector b = betti(p);
    EXPECT_EQ(b.b[1], static_cast<std::size_t>(7 - f1));
    EXPECT_TRUE(b.poincare_dual());
    EXPECT_EQ(b.euler(), 0);
  }
}

TEST(Cohomology, InvariantUnderBasisChange) {
  std::uint64_t seed = 7;
  for (const auto& r : table2_rows()) {
    const BettiVector want = betti(r.model);
    for (int t = 0; t < 5; ++t)
      EXPECT_EQ(betti(apply_basis_change(r.model, random_basis_change(r.model.field, 7, seed++))), want);
  }
}

TEST(Cohomology, RationalAndModularAgree) {
  const Field f = Field::prime(101);
  for (const auto& r : table2_rows()) {
    Presentation m(f, 7);
    for (int k = 0; k < 7; ++k)
      m.d[static_cast<std::size_t>(k)] = r.model.d[static_cast<std::size_t>(k)].map(f, [&](const Scalar& x) {
        return f.from_int(x.rational().get_num().get_si()) / f.from_int(x.rational().get_den().get_si());
      });
    EXPECT_EQ(betti(m), betti(r.model)) << r.label;
  }
}

TEST(Cohomology, NotFlatRejected) {
  const Presentation p = Presentation::from_strings(Field::rationals(), 4, {{4, "x1x2"}, {1, "x3x4"}});
  EXPECT_THROW(betti(p), Error);
}
