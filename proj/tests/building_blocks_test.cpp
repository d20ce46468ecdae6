#include "g2sum/building_blocks.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace g2sum;

namespace {

const std::filesystem::path kData = G2SUM_TEST_DATA_DIR;

}  // namespace

TEST(NonSymplectic, Examples) {
  const BuildingBlock b = from_nonsymplectic({10, 8, 0, {}});
  EXPECT_EQ(b.b2_bar, 15);
  EXPECT_EQ(b.b3_bar, 8);
  EXPECT_EQ(b.d, 4);
  EXPECT_EQ(b.r, 10);
  EXPECT_EQ(b.l_bound, 8);
  EXPECT_EQ(b.label(), "ns:10/8/0");

  const BuildingBlock big = from_nonsymplectic({18, 0, 0, {}});
  EXPECT_EQ(big.b2_bar, 39);
  EXPECT_EQ(big.b3_bar, 8);
  EXPECT_EQ(big.d, 20);

  const BuildingBlock small = from_nonsymplectic({1, 1, 1, {}});
  EXPECT_EQ(small.b2_bar, 4);
  EXPECT_EQ(small.b3_bar, 40);
  EXPECT_EQ(small.d, 2);
}

TEST(NonSymplectic, FreeInvolutionRejected) {
  EXPECT_THROW(from_nonsymplectic({10, 10, 0, {}}), std::invalid_argument);
}

TEST(NonSymplectic, DIsAlwaysEven) {
  for (const auto& t : load_nikulin(kData / "nikulin.csv").triples) {
    if (t.r == 10 && t.a == 10 && t.delta == 0) continue;
    EXPECT_EQ(from_nonsymplectic(t).d % 2, 0) << t.r << "," << t.a << "," << t.delta;
  }
}

TEST(Fano, Examples) {
  const BuildingBlock p3 = from_fano({"P3", 1, 0, 64, {}});
  EXPECT_EQ(p3.b2_bar, 2);
  EXPECT_EQ(p3.b3_bar, 66);
  EXPECT_EQ(p3.d, 0);
  EXPECT_EQ(p3.r, 1);
  EXPECT_EQ(p3.label(), "fano:P3");
  EXPECT_EQ(from_fano({"Q", 1, 0, 54, {}}).b3_bar, 56);
  for (const auto& f : load_fano(kData / "fano.csv").families) EXPECT_EQ(from_fano(f).d, 0);
}

TEST(Quartic, Block) {
  const BuildingBlock q = quartic_blowup_block();
  EXPECT_EQ(q.b2_bar, 4);
  EXPECT_EQ(q.b3_bar, 24);
  EXPECT_EQ(q.d, 3);
  EXPECT_EQ(q.r, 1);
  EXPECT_EQ(q.d % 2, 1);
  EXPECT_EQ(q.label(), "seq:quartic-4h");
}

TEST(BlowupSequence, D) {
  EXPECT_EQ(blowup_sequence_d(4, 1), 3);
  EXPECT_EQ(blowup_sequence_d(1, 1), 0);
  EXPECT_EQ(blowup_sequence_d(5, 2), 3);
  EXPECT_THROW(blowup_sequence_d(2, 3), std::invalid_argument);
  EXPECT_THROW(blowup_sequence_d(2, 0), std::invalid_argument);
}

TEST(OpenPart, Examples) {
  const OpenBetti p3 = open_part_betti(from_fano({"P3", 1, 0, 64, {}}));
  EXPECT_EQ(p3.b2, 1);
  EXPECT_EQ(p3.b3, 87);
  const OpenBetti ns = open_part_betti(from_nonsymplectic({10, 8, 0, {}}));
  EXPECT_EQ(ns.b2, 14);
  EXPECT_EQ(ns.b3, 20);
  const OpenBetti q = open_part_betti(quartic_blowup_block());
  EXPECT_EQ(q.b2, 3);
  EXPECT_EQ(q.b3, 46);
}

TEST(Euler, EveryTripleButTheFreeOne) {
  for (const auto& t : load_nikulin(kData / "nikulin.csv").triples) {
    if (t.r == 10 && t.a == 10 && t.delta == 0) continue;
    EXPECT_TRUE(euler_crosscheck(t)) << t.r << "," << t.a << "," << t.delta;
  }
}
