#include <gtest/gtest.h>

#include "chevchow/root_datum.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace chevchow;
using testing_support::simply_connected;

namespace {

RootDatum sl2() { return simply_connected({{2}}); }
RootDatum pgl2() { return {1, {{1}}, {{2}}, 0}; }
RootDatum gl2() { return {2, {{1, -1}}, {{1, -1}}, 0}; }
RootDatum pgl3() { return {2, {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}}, 0}; }
RootDatum a2() { return simply_connected({{2, -1}, {-1, 2}}); }
RootDatum b2() { return simply_connected({{2, -1}, {-2, 2}}); }
RootDatum g2() { return simply_connected({{2, -1}, {-3, 2}}); }
RootDatum a3() { return simply_connected({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}); }

std::vector<oracle::Mat> reflections(const RootDatum& rd) {
  std::vector<oracle::Mat> out;
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
    std::vector<long long> r, c;
    for (const auto& x : rd.simple_roots[i]) r.push_back(static_cast<long long>(x));
    for (const auto& x : rd.simple_coroots[i]) c.push_back(static_cast<long long>(x));
    out.push_back(oracle::reflection(r, c));
  }
  return out;
}

oracle::AbelianGroup pic_oracle(const RootDatum& rd) {
  oracle::Mat m;
  for (const auto& c : rd.simple_coroots) {
    std::vector<long long> row;
    for (const auto& x : c) row.push_back(static_cast<long long>(x));
    m.push_back(row);
  }
  return oracle::cokernel_by_minors(m);
}

}  // namespace

TEST(RootDatum, Classification) {
  EXPECT_EQ(validate_root_datum(a2()).name(), "A2");
  EXPECT_EQ(validate_root_datum(b2()).name(), "B2");
  EXPECT_EQ(validate_root_datum(g2()).name(), "G2");
  EXPECT_EQ(validate_root_datum(gl2()).name(), "A1 + T1");
  EXPECT_EQ(validate_root_datum(RootDatum{2, {}, {}, 0}).name(), "T2");
  RootDatum two_a1 = simply_connected({{2, 0}, {0, 2}});
  EXPECT_EQ(validate_root_datum(two_a1).name(), "A1 + A1");
}

TEST(RootDatum, InvalidCartanRejected) {
  EXPECT_THROW(validate_root_datum(RootDatum{1, {{1}}, {{1}}, 0}), InvalidCartan);
  EXPECT_THROW(validate_root_datum(simply_connected({{2, 1}, {-1, 2}})), InvalidCartan);
  EXPECT_THROW(validate_root_datum(simply_connected({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})), InvalidCartan);
  EXPECT_THROW(validate_root_datum(RootDatum{2, {{1, 0}}, {}, 0}), InvalidCartan);
}

TEST(RootDatum, PositiveRootCounts) {
  EXPECT_EQ(root_system(a2()).positive.size(), 3u);
  EXPECT_EQ(root_system(b2()).positive.size(), 4u);
  EXPECT_EQ(root_system(g2()).positive.size(), 6u);
  EXPECT_EQ(root_system(a3()).positive.size(), 6u);
  EXPECT_EQ(validate_root_datum(a3()).positive_root_count(), 6u);
}

TEST(RootDatum, RootOrderIsCanonical) {
  RootSystem rs = root_system(a2());
  EXPECT_EQ(rs.positive[0].vector, (IntVector{2, -1}));
  EXPECT_EQ(rs.positive[1].vector, (IntVector{-1, 2}));
  EXPECT_EQ(rs.positive[2].vector, (IntVector{1, 1}));
  EXPECT_EQ(rs.signed_root(2, -1), (IntVector{-1, -1}));
  EXPECT_EQ(rs.all_roots().size(), 6u);
}

TEST(WeylGroup, OrderMatchesClosure) {
  for (const RootDatum& rd : {sl2(), gl2(), pgl3(), a2(), b2(), g2(), a3()}) {
    WeylGroup w = weyl_group(rd);
    EXPECT_EQ(w.size(), oracle::group_order(reflections(rd)));
    EXPECT_EQ(BigInt(w.size()), validate_root_datum(rd).weyl_order());
    EXPECT_EQ(w.lengths[w.longest()], root_system(rd).positive.size());
  }
}

TEST(WeylGroup, WordsAndMultiplication) {
  WeylGroup w = weyl_group(a2());
  EXPECT_EQ(w.word_string(0), "e");
  EXPECT_EQ(w.word_string(w.longest()), "s1 s2 s1");
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b < w.size(); ++b)
      EXPECT_EQ(w.elements[w.multiply(a, b)], w.elements[a] * w.elements[b]);
  EXPECT_THROW(weyl_group(a3(), 10), GroupTooLarge);
}

TEST(FlagPicard, ClassicalTable) {
  EXPECT_TRUE(flag_pic_map(sl2()).pic_gaff.is_trivial());
  EXPECT_TRUE(flag_pic_map(gl2()).pic_gaff.is_trivial());
  EXPECT_TRUE(flag_pic_map(b2()).pic_gaff.is_trivial());
  EXPECT_EQ(flag_pic_map(pgl2()).pic_gaff.to_string(), "Z/2");
  EXPECT_EQ(flag_pic_map(pgl3()).pic_gaff.to_string(), "Z/3");
}

TEST(FlagPicard, MatchesMinorOracle) {
  for (const RootDatum& rd : {sl2(), gl2(), pgl2(), pgl3(), a2(), b2(), g2(), a3()}) {
    FGAbelianGroup p = flag_pic_map(rd).pic_gaff;
    oracle::AbelianGroup o = pic_oracle(rd);
    EXPECT_EQ(p.free_rank(), o.free_rank);
    EXPECT_EQ(p.torsion(), o.torsion);
  }
}

TEST(FactorialCover, Examples) {
  EXPECT_TRUE(factorial_cover(sl2()).unchanged);
  FactorialCover p = factorial_cover(pgl2());
  EXPECT_FALSE(p.unchanged);
  EXPECT_EQ(p.index, 2);
  EXPECT_TRUE(flag_pic_map(p.datum).pic_gaff.is_trivial());
  FactorialCover g = factorial_cover(gl2());
  EXPECT_EQ(g.index, 2);
  EXPECT_TRUE(flag_pic_map(g.datum).pic_gaff.is_trivial());
  FactorialCover c3 = factorial_cover(pgl3());
  EXPECT_EQ(c3.index, 3);
  EXPECT_EQ(validate_root_datum(c3.datum).name(), "A2");
  EXPECT_TRUE(factorial_cover(c3.datum).unchanged);
}

TEST(CharactersOfGroup, KillsCoroots) {
  IntMatrix x = characters_of_group(gl2());
  ASSERT_EQ(x.rows(), 1u);
  EXPECT_EQ(x.row(0), (IntVector{1, 1}));
  EXPECT_EQ(characters_of_group(a2()).rows(), 0u);
  EXPECT_EQ(characters_of_group(RootDatum{2, {}, {}, 0}), IntMatrix::identity(2));
}

TEST(Borel, WitnessForConjugates) {
  RootDatum rd = a2();
  WeylGroup w = weyl_group(rd);
  RootSystem rs = root_system(rd);
  std::vector<IntVector> neg;
  for (std::size_t i = 0; i < rs.positive.size(); ++i) neg.push_back(rs.signed_root(i, -1));
  auto wit = borel_witness(rd, w, neg, true);
  ASSERT_TRUE(wit);
  EXPECT_EQ(*wit, w.longest());
  EXPECT_FALSE(borel_witness(rd, w, {rs.positive[0].vector}, true));
  EXPECT_FALSE(contains_borel(rd, neg, false));
}
