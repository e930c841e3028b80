#include <gtest/gtest.h>

#include "chevchow/invariant_rings.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace chevchow;
using testing_support::simply_connected;

namespace {

std::vector<oracle::Mat> oracle_generators(const RootDatum& rd) {
  std::vector<oracle::Mat> out;
  for (const IntMatrix& g : weyl_generators(rd)) {
    oracle::Mat m(g.rows(), std::vector<long long>(g.cols()));
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) m[i][j] = static_cast<long long>(g(i, j));
    out.push_back(m);
  }
  return out;
}

struct Case {
  const char* type;
  std::vector<std::vector<long long>> cartan;
};

const std::vector<Case>& cases() {
  static const std::vector<Case> c{{"A1", {{2}}},
                                   {"A2", {{2, -1}, {-1, 2}}},
                                   {"B2", {{2, -1}, {-2, 2}}},
                                   {"G2", {{2, -1}, {-3, 2}}}};
  return c;
}

}  // namespace

TEST(Oracle, CoinvariantsOfA1ByHand) {
  // Q[x] / (x^2) under x -> -x.
  EXPECT_EQ(oracle::coinvariant_dims({{{-1}}}, 1, 3), (std::vector<std::size_t>{1, 1, 0, 0}));
  EXPECT_EQ(oracle::invariant_dims({{{-1}}}, 1, 4), (std::vector<std::size_t>{1, 0, 1, 0, 1}));
  EXPECT_EQ(oracle::poincare_product({2, 3}), (std::vector<std::size_t>{1, 2, 2, 1}));
}

TEST(Coinvariants, DimensionsMatchOracles) {
  for (const Case& c : cases()) {
    RootDatum rd = simply_connected(c.cartan);
    TruncatedQuotient q = coinvariant_quotient(rd);
    std::vector<std::size_t> expected = oracle::poincare_product(oracle::weyl_degrees(c.type));
    std::vector<std::size_t> dims = q.dims();
    std::vector<std::size_t> brute = oracle::coinvariant_dims(oracle_generators(rd), rd.rank, dims.size() - 1);
    expected.resize(dims.size(), 0);
    EXPECT_EQ(dims, expected) << c.type;
    EXPECT_EQ(dims, brute) << c.type;
    EXPECT_EQ(BigInt(q.total_dimension()), validate_root_datum(rd).weyl_order()) << c.type;
    EXPECT_TRUE(q.vanishes_at_top());
  }
}

TEST(Invariants, SliceDimensionsMatchReynolds) {
  for (const Case& c : cases()) {
    RootDatum rd = simply_connected(c.cartan);
    auto brute = oracle::invariant_dims(oracle_generators(rd), rd.rank, 6);
    for (std::size_t d = 0; d <= 6; ++d) {
      auto slice = invariant_slice(weyl_generators(rd), rd.rank, d);
      EXPECT_EQ(slice.size(), brute[d]) << c.type << " degree " << d;
      for (const Poly& f : slice)
        for (const IntMatrix& g : weyl_generators(rd)) EXPECT_EQ(substitute(f, g), f);
    }
  }
}

TEST(Invariants, GeneratorsHaveInvariantDegrees) {
  RootDatum rd = simply_connected({{2, -1}, {-1, 2}});
  GradedAmbient full = GradedAmbient::full(2);
  auto gens = invariant_ideal_generators(full, weyl_group(rd).elements, 4);
  std::vector<int> degrees;
  for (const auto& g : gens) degrees.push_back(g.degree());
  EXPECT_EQ(degrees, (std::vector<int>{2, 3}));
}

TEST(Quotient, SignInvariantsModSquare) {
  GradedAmbient amb = GradedAmbient::invariants({IntMatrix{{-1}}}, 1);
  Poly t2 = Poly::monomial({2});
  TruncatedQuotient q = truncated_quotient(amb, {t2}, 4);
  EXPECT_EQ(q.dims(), (std::vector<std::size_t>{1, 0, 0, 0, 0}));
  EXPECT_EQ(amb.slice(3).size(), 0u);
  EXPECT_EQ(amb.slice(4).size(), 1u);
}

TEST(Quotient, FullPolynomialRingModLinearForm) {
  GradedAmbient amb = GradedAmbient::full(2);
  TruncatedQuotient q = truncated_quotient(amb, {Poly::linear({1, 1})}, 3);
  EXPECT_EQ(q.dims(), (std::vector<std::size_t>{1, 1, 1, 1}));
  Poly f = Poly::variable(2, 0) * Poly::variable(2, 0);
  Poly g = Poly::variable(2, 1) * Poly::variable(2, 1);
  EXPECT_EQ(q.reduce(f, 2), q.reduce(g, 2));
  EXPECT_EQ(q.normal_form(f - g, 2), Poly(2));
}

TEST(Quotient, RestrictionToSubtorus) {
  Poly f = Poly::variable(2, 0) * Poly::variable(2, 1);
  Poly r = restrict_symmetric(IntMatrix{{1, 1}}, f);
  EXPECT_EQ(r, Poly::monomial({2}));
}

TEST(Limits, DegreeBudgetAndGroupCap) {
  EXPECT_THROW(sym_basis(2, 70), DegreeTooLarge);
  Limits small;
  small.group_cap = 3;
  RootDatum rd = simply_connected({{2, -1}, {-1, 2}});
  EXPECT_THROW(invariant_slice(weyl_generators(rd), 2, 2, small), GroupTooLarge);
  EXPECT_THROW(coinvariant_quotient(rd, std::nullopt, small), GroupTooLarge);
}

TEST(Polynomial, Basics) {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly f = x * x + x * y * Rational(2);
  EXPECT_EQ(f.to_string(), "x1^2 + 2*x1*x2");
  EXPECT_EQ(divide_by_linear(f, {1, 0}), x + y * Rational(2));
  EXPECT_THROW(divide_by_linear(f + y * y, {1, 0}), InvalidArgument);
  EXPECT_EQ(monomials(2, 2).size(), 3u);
}
