#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "chevchow/errors.hpp"
#include "chevchow/lattice.hpp"
#include "../support/oracles.hpp"

using namespace chevchow;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

oracle::Mat to_mat(const IntMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<long long>(m(i, j));
  return out;
}

bool same_group(const FGAbelianGroup& a, const oracle::AbelianGroup& b) {
  return a.free_rank() == b.free_rank && a.torsion() == b.torsion;
}

}  // namespace

TEST(FGAbelianGroup, CanonicalForm) {
  EXPECT_EQ(FGAbelianGroup::from_cyclic_orders(0, {2, 3}).to_string(), "Z/6");
  EXPECT_EQ(FGAbelianGroup::from_cyclic_orders(0, {0, 2}).to_string(), "Z + Z/2");
  EXPECT_EQ(FGAbelianGroup::from_cyclic_orders(0, {4, 6}).to_string(), "Z/2 + Z/12");
  EXPECT_EQ(FGAbelianGroup::from_cyclic_orders(2, {1, 1}).to_string(), "Z^2");
  EXPECT_TRUE(FGAbelianGroup::from_cyclic_orders(0, {1, -1}).is_trivial());
  EXPECT_EQ(FGAbelianGroup::trivial().to_string(), "0");
}

TEST(FGAbelianGroup, DirectSumMatchesCyclicOrders) {
  auto a = FGAbelianGroup::from_cyclic_orders(1, {2});
  auto b = FGAbelianGroup::from_cyclic_orders(0, {3, 4});
  EXPECT_EQ(a.direct_sum(b), FGAbelianGroup::from_cyclic_orders(1, {2, 3, 4}));
}

TEST(SmithForm, RoundTripOnRandomMatrices) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, r, c, 9);
    SmithForm s = smith_normal_form(m);
    ASSERT_EQ(s.U * m * s.V, s.S);
    EXPECT_EQ(abs(determinant(s.U)), 1);
    EXPECT_EQ(abs(determinant(s.V)), 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(s.S(i, j), 0);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) EXPECT_EQ(s.S(i + 1, i + 1) % s.S(i, i), 0);
  }
}

TEST(Cokernel, AgreesWithDeterminantalDivisors) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, r, c, 6);
    EXPECT_TRUE(same_group(cokernel_of_matrix(m), oracle::cokernel_by_minors(to_mat(m)))) << m;
  }
}

TEST(Cokernel, InvariantUnderGeneratorPermutation) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 3, 8);
    std::vector<std::size_t> rows{0, 1, 2, 3}, cols{0, 1, 2};
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    IntMatrix p(4, 3);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 3; ++j) p(i, j) = m(rows[i], cols[j]);
    EXPECT_EQ(cokernel_of_matrix(m), cokernel_of_matrix(p));
  }
}

TEST(Cokernel, Examples) {
  EXPECT_EQ(cokernel_of_matrix(IntMatrix{{2}}).to_string(), "Z/2");
  EXPECT_EQ(cokernel_of_matrix(IntMatrix{{2, -1}, {-1, 2}}).to_string(), "Z/3");
  EXPECT_EQ(cokernel_of_matrix(IntMatrix(2, 0)).to_string(), "Z^2");
}

TEST(Kernel, IsExactAndSaturated) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(rng, 2, 4, 5);
    IntMatrix k = integer_kernel(m);
    EXPECT_EQ(k.rows() + rank(m), 4u);
    if (k.rows()) {
      EXPECT_TRUE((m * k.transpose()).is_zero());
      EXPECT_EQ(saturate(k), k);
    }
  }
}

TEST(Kernel, TorsionDomainRejected) {
  GroupHom f{Presentation{1, IntMatrix{{2}}}, Presentation::free(1), IntMatrix{{0}}};
  EXPECT_THROW(kernel_lattice(f), TorsionDomain);
}

TEST(GroupHom, IllFormedDetected) {
  GroupHom f{Presentation{1, IntMatrix{{2}}}, Presentation{1, IntMatrix{{3}}}, IntMatrix{{1}}};
  EXPECT_THROW(f.check_well_defined(), IllFormedHom);
  GroupHom g{Presentation{1, IntMatrix{{6}}}, Presentation{1, IntMatrix{{3}}}, IntMatrix{{1}}};
  EXPECT_NO_THROW(g.check_well_defined());
  EXPECT_EQ(cokernel_presentation(g).to_string(), "0");
}

TEST(Lattices, IntersectionAndMembership) {
  IntMatrix a{{2, 0}, {0, 1}};
  IntMatrix b{{1, 0}, {0, 3}};
  IntMatrix c = intersect_lattices(a, b);
  EXPECT_EQ(c, (IntMatrix{{2, 0}, {0, 3}}));
  EXPECT_TRUE(in_row_lattice(a, IntVector{4, 7}));
  EXPECT_FALSE(in_row_lattice(a, IntVector{1, 0}));
  auto x = solve_integer(IntMatrix{{2, 0}, {0, 3}}, IntVector{4, 9});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (IntVector{2, 3}));
  EXPECT_FALSE(solve_integer(IntMatrix{{2}}, IntVector{1}));
}

TEST(GroupEnumeration, OrdersAndCap) {
  IntMatrix rot{{0, -1}, {1, -1}};  // order 3
  IntMatrix flip{{0, 1}, {1, 0}};
  EXPECT_EQ(enumerate_group({rot, flip}, 2).size(), 6u);
  EXPECT_EQ(oracle::group_order({to_mat(rot), to_mat(flip)}), 6u);
  EXPECT_THROW(enumerate_group({rot, flip}, 2, 4), GroupTooLarge);
  EXPECT_THROW(enumerate_group({IntMatrix{{2}}}, 1), InvalidArgument);
  EXPECT_EQ(fixed_sublattice({flip}, 2), (IntMatrix{{1, 1}}));
}
