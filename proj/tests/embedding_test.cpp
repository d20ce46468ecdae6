#include "g2sum/embedding.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <numeric>
#include <random>

using namespace g2sum;

namespace {

const std::filesystem::path kData = G2SUM_TEST_DATA_DIR;

LatticeSummary ns_summary(int r, int a) { return {r, a, Signature{1, r - 1}}; }

std::vector<BuildingBlock> all_blocks() {
  std::vector<BuildingBlock> out;
  for (const auto& f : load_fano(kData / "fano.csv").families) out.push_back(from_fano(f));
  for (const auto& t : load_nikulin(kData / "nikulin.csv").triples) {
    if (t.r == 10 && t.a == 10 && t.delta == 0) continue;
    out.push_back(from_nonsymplectic(t));
  }
  out.push_back(quartic_blowup_block());
  return out;
}

}  // namespace

TEST(Nikulin, RankOneIntoTargetIsUnique) {
  const auto v = nikulin_sufficient({1, 0}, 1, 1, {2, 18}, 20);
  EXPECT_EQ(v.status, EmbeddingStatus::SufficientUnique);
  EXPECT_EQ(v.rule, "numeric");
}

TEST(Nikulin, BoundaryIsInconclusive) {
  EXPECT_EQ(nikulin_sufficient({1, 9}, 10, 10, {2, 18}, 20).status, EmbeddingStatus::Inconclusive);
  EXPECT_EQ(nikulin_sufficient({1, 8}, 9, 9, {2, 18}, 20).status, EmbeddingStatus::Sufficient);
}

TEST(Nikulin, SignatureGate) {
  EXPECT_EQ(nikulin_sufficient({3, 0}, 3, 0, {2, 18}, 20).status, EmbeddingStatus::Inconclusive);
  EXPECT_EQ(nikulin_sufficient({0, 3}, 3, 0, {2, 18}, 20).status, EmbeddingStatus::SufficientUnique);
}

TEST(Nikulin, SmallPolarizationsIntoK3) {
  const IntLattice k3 = standard_lattice(StandardLattice::K3);
  for (int r = 1; r <= 9; ++r) {
    EXPECT_EQ(nikulin_sufficient({1, r - 1}, r, r, signature(k3), 22).status, EmbeddingStatus::SufficientUnique)
        << r;
  }
}

TEST(Nikulin, RejectsBadInput) {
  EXPECT_THROW(nikulin_sufficient({0, 0}, 0, 0, {2, 18}, 20), std::invalid_argument);
  EXPECT_THROW(nikulin_sufficient({1, 1}, 2, 3, {2, 18}, 20), std::invalid_argument);
}

TEST(Nikulin, Monotone) {
  for (int rank = 1; rank <= 20; ++rank) {
    for (int l = 0; l <= rank; ++l) {
      const bool here = nikulin_sufficient({1, rank - 1}, rank, l, {2, 18}, 20).sufficient();
      if (!here) continue;
      if (l > 0) EXPECT_TRUE(nikulin_sufficient({1, rank - 1}, rank, l - 1, {2, 18}, 20).sufficient());
      if (rank > 1) {
        EXPECT_TRUE(nikulin_sufficient({1, rank - 2}, rank - 1, std::min(l, rank - 1), {2, 18}, 20).sufficient());
      }
    }
  }
}

TEST(Embeds, TwoNonSymplectic) {
  const LatticeSummary ok[] = {ns_summary(5, 3), ns_summary(6, 4)};
  EXPECT_TRUE(embeds_in_2e8_2h(ok).sufficient());
  const LatticeSummary free_twice[] = {ns_summary(10, 10), ns_summary(10, 10)};
  EXPECT_FALSE(embeds_in_2e8_2h(free_twice).sufficient());
}

TEST(Embeds, TwoFano) {
  const LatticeSummary ok[] = {{4, 4, {1, 3}}, {5, 5, {1, 4}}};
  EXPECT_TRUE(embeds_in_2e8_2h(ok).sufficient());
  const LatticeSummary too_big[] = {{5, 5, {1, 4}}, {5, 5, {1, 4}}};
  EXPECT_FALSE(embeds_in_2e8_2h(too_big).sufficient());
}

TEST(Embeds, OrientationFlag) {
  // signature (2, r-2) sums fit either gate, so no disagreement
  const LatticeSummary two[] = {ns_summary(2, 0), ns_summary(2, 0)};
  EXPECT_FALSE(embeds_in_2e8_2h(two).printed_orientation_disagrees);
  const LatticeSummary wide[] = {ns_summary(6, 0), ns_summary(6, 0)};
  EXPECT_TRUE(embeds_in_2e8_2h(wide).printed_orientation_disagrees);
}

TEST(Matching, LargeRankRule) {
  const FanoFamily v = load_fano(kData / "fano.csv").with_b2(1).front();
  const auto cert = matching_condition(from_nonsymplectic({18, 0, 0, {}}), from_fano(v));
  EXPECT_EQ(cert.condition, MatchCondition::CondA);
  EXPECT_EQ(cert.cond_a.rule, "large-rank");
}

// The example table lists COND_B only here; (10,8,0) is its own mirror
// partner, so the mirror rule also certifies (a).
TEST(Matching, SelfMirrorTenEightZeroGetsBoth) {
  const BuildingBlock b = from_nonsymplectic({10, 8, 0, {}});
  const auto cert = matching_condition(b, b);
  EXPECT_TRUE(cert.cond_b);
  EXPECT_EQ(cert.condition, MatchCondition::Both);
  EXPECT_EQ(cert.cond_a.rule, "mirror-pair");
  // without special rules only the rank bound is left
  EXPECT_EQ(matching_condition(b, b, {}).condition, MatchCondition::CondB);
}

TEST(Matching, LargeRankPairFails) {
  const BuildingBlock b = from_nonsymplectic({18, 0, 0, {}});
  EXPECT_EQ(matching_condition(b, b).condition, MatchCondition::None);
}

TEST(Matching, FreeInvolutionRejected) {
  BuildingBlock fake = from_nonsymplectic({10, 8, 0, {}});
  fake.triple = NikulinTriple{10, 10, 0, {}};
  EXPECT_THROW(matching_condition(fake, quartic_blowup_block()), std::invalid_argument);
}

TEST(Matching, Symmetric) {
  const auto blocks = all_blocks();
  for (std::size_t i = 0; i < blocks.size(); i += 3) {
    for (std::size_t j = 0; j < blocks.size(); j += 2) {
      EXPECT_EQ(matching_condition(blocks[i], blocks[j]).condition,
                matching_condition(blocks[j], blocks[i]).condition)
          << blocks[i].label() << " " << blocks[j].label();
    }
  }
}

TEST(Matching, AllMirrorPairsHaveA) {
  for (const auto& [s, t] : mirror_pairs(load_nikulin(kData / "nikulin.csv"))) {
    EXPECT_TRUE(matching_condition(from_nonsymplectic(s), from_nonsymplectic(t)).has_a());
  }
}

TEST(Isotropic, Examples) {
  const auto h = find_isotropic_primitive(standard_lattice(StandardLattice::Hyperbolic), 1);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, (IntegerVector(2) << 1, 0).finished());

  const auto pm = find_isotropic_primitive(direct_sum(rank_one(2), rank_one(-2)), 1);
  ASSERT_TRUE(pm.has_value());
  EXPECT_EQ(*pm, (IntegerVector(2) << 1, 1).finished());

  const IntLattice irrational = direct_sum(rank_one(2), rank_one(-4));
  for (int bound = 1; bound <= 8; ++bound) EXPECT_FALSE(find_isotropic_primitive(irrational, bound).has_value());
}

TEST(Isotropic, Errors) {
  EXPECT_THROW(find_isotropic_primitive(standard_lattice(StandardLattice::E8Neg), 2), std::domain_error);
  EXPECT_THROW(find_isotropic_primitive(standard_lattice(StandardLattice::Hyperbolic), 0), std::invalid_argument);
}

TEST(Isotropic, WitnessesVerify) {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> entry(-4, 4);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    IntegerMatrix g(n, n);
    for (int i = 0; i < n; ++i) {
      g(i, i) = 2 * entry(rng);
      for (int j = i + 1; j < n; ++j) g(i, j) = g(j, i) = entry(rng);
    }
    if (bareiss_determinant(g) == 0) continue;
    const IntLattice l(g);
    const Signature s = signature(l);
    if (s.t_plus == 0 || s.t_minus == 0) continue;
    const auto v = find_isotropic_primitive(l, 3);
    if (!v) continue;
    ++found;
    EXPECT_EQ(Integer(v->dot(g * *v)), 0);
    Integer gcd(0);
    for (Eigen::Index i = 0; i < v->size(); ++i) gcd = boost::multiprecision::gcd(gcd, Integer(abs((*v)(i))));
    EXPECT_EQ(gcd, 1);
  }
  EXPECT_GT(found, 20);
}

TEST(Isotropic, LargeEntriesUseExactPath) {
  // <2k> + <-2k> with k huge still has (1,1)
  const Integer k = Integer(1) << 70;
  const auto v = find_isotropic_primitive(direct_sum(rank_one(2 * k), rank_one(-2 * k)), 1);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, (IntegerVector(2) << 1, 1).finished());
}
