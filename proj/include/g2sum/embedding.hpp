#pragma once

#include "g2sum/building_blocks.hpp"
#include "g2sum/lattice.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace g2sum {

enum class EmbeddingStatus { Sufficient, SufficientUnique, Inconclusive };

struct EmbeddingVerdict {
  EmbeddingStatus status = EmbeddingStatus::Inconclusive;
  std::string rule;  // "numeric", or the id of the special rule that fired
  /// Set when swapping the signature gate to the orientation (t+ <= 18,
  /// t- <= 2) would change the outcome.
  bool printed_orientation_disagrees = false;

  bool sufficient() const { return status != EmbeddingStatus::Inconclusive; }
};

/// Rank, discriminant length (or an upper bound for it) and signature of a
/// lattice that is only known through its invariants.
struct LatticeSummary {
  int rank = 0;
  int l = 0;
  Signature sig;
};

/// Sufficient criterion for a primitive embedding N -> E, E even unimodular:
/// t+ <= l+, t- <= l-, l(N) + rk N < rk E; unique when l(N) + rk N < rk E - 2.
/// Never proves non-existence.
EmbeddingVerdict nikulin_sufficient(Signature sig_n, int rank_n, int l_n, Signature sig_e, int rank_e);

/// Applies nikulin_sufficient to the direct sum of the given lattices inside
/// 2(-E8) + 2H: ranks, lengths and signatures add.
EmbeddingVerdict embeds_in_2e8_2h(std::span<const LatticeSummary> parts);

/// Polarizing lattice of a block: signature (1, r - 1), l <= l_bound.
LatticeSummary summary_of(const BuildingBlock& b);

enum class MatchCondition { None, CondA, CondB, Both };

struct MatchCertificate {
  MatchCondition condition = MatchCondition::None;
  EmbeddingVerdict cond_a;  // the verdict behind condition (a)
  bool cond_b = false;      // max rank <= 10

  bool has_a() const { return condition == MatchCondition::CondA || condition == MatchCondition::Both; }
  bool has_b() const { return condition == MatchCondition::CondB || condition == MatchCondition::Both; }
};

/// A known embedding of L1 + L2 into 2(-E8) + 2H that the numeric criterion
/// cannot see.
struct SpecialRule {
  std::string id;
  std::function<bool(const BuildingBlock&, const BuildingBlock&)> applies;  // called both ways round
};

/// mirror pairs (r,a,d)/(20-r,a,d) and L(18,0,0), L(17,1,1) against rank one.
const std::vector<SpecialRule>& default_special_rules();

/// Throws std::invalid_argument when a block is the (10,10,0) type.
MatchCertificate matching_condition(const BuildingBlock& b1, const BuildingBlock& b2,
                                    const std::vector<SpecialRule>& rules = default_special_rules());

/// First nonzero primitive isotropic vector with all |coordinates| <= bound,
/// in lexicographic order with every coordinate running from +bound down to
/// -bound. std::nullopt when the box holds none. Throws std::domain_error
/// for definite lattices.
std::optional<IntegerVector> find_isotropic_primitive(const IntLattice& lattice, int bound);

}  // namespace g2sum
