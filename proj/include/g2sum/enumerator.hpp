#pragma once

#include "g2sum/building_blocks.hpp"
#include "g2sum/catalog.hpp"
#include "g2sum/embedding.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace g2sum {

enum class Mode { EmbA, EmbB, EmbC, Mirror, Seq, LargeRank, Generic };

std::string_view mode_name(Mode m);  // "EMB_A", ...
std::optional<Mode> parse_mode_name(std::string_view name);

struct GlueResult {
  int b2 = 0;
  int b3 = 0;
  /// false when b2(W1) - d1 + b2(W2) - d2 > 22, where the b3 formula is not
  /// established.
  bool verified = true;
};

/// b2(M) = n + d1 + d2, b3(M) = b3(W1) + b3(W2) + b2(M) - 2n + 23. The
/// caller vouches for the orthogonality hypothesis.
GlueResult glue_betti(const BuildingBlock& b1, const BuildingBlock& b2, int n);

/// One glued 7-manifold.
struct G2Record {
  int b2 = 0;
  int b3 = 0;
  Mode mode = Mode::Generic;
  int n = 0;
  MatchCertificate certificate;
  std::string block1;
  std::string block2;
  bool simply_connected = true;
  bool uses_supplementary_family = false;

  bool self_pair() const { return block1 == block2; }
};

/// Closed forms per clause, used to cross-check glue_betti.
std::pair<int, int> closed_form_emb_a(const FanoFamily& v1, const FanoFamily& v2);
std::pair<int, int> closed_form_emb_b(const FanoFamily& v1, const NikulinTriple& t2);
std::pair<int, int> closed_form_emb_c(const NikulinTriple& t1, const NikulinTriple& t2);
std::pair<int, int> closed_form_mirror(const NikulinTriple& t);
std::pair<int, int> closed_form_seq(const FanoFamily& v2);
std::pair<int, int> closed_form_seq(const NikulinTriple& t2);
std::pair<int, int> closed_form_large_rank(const NikulinTriple& big, const FanoFamily& v2);
std::pair<int, int> closed_form_large_rank(const NikulinTriple& big, const NikulinTriple& t2);
std::pair<int, int> closed_form_large_rank_seq(const NikulinTriple& big);

/// All unordered admissible pairs (self-pairs included) under the three
/// embedding clauses: Fano x Fano with r1 + r2 < 10, Fano x NS with
/// 2 r1 + r2 + a2 < 20, NS x NS with r1 + r2 + a1 + a2 < 20.
/// Throws std::logic_error if a closed form disagrees with glue_betti.
std::vector<G2Record> enumerate_emb(const FanoCatalog& fano, const NikulinCatalog& nikulin);
std::vector<G2Record> enumerate_mirror(const NikulinCatalog& nikulin);
/// Quartic blow-up block against Fano V with b2(V) < 9 or NS with r + a < 18.
std::vector<G2Record> enumerate_seq(const FanoCatalog& fano, const NikulinCatalog& nikulin);
/// L(18,0,0) and L(17,1,1) against the rank-one partners.
std::vector<G2Record> enumerate_large_rank(const FanoCatalog& fano, const NikulinCatalog& nikulin);
std::vector<G2Record> enumerate_all(const FanoCatalog& fano, const NikulinCatalog& nikulin);

std::vector<G2Record> filter_modes(const std::vector<G2Record>& records, std::initializer_list<Mode> modes);

/// Sorted, deduplicated (b2, b3).
std::set<std::pair<int, int>> distinct_betti(const std::vector<G2Record>& records);

struct PairCounts {
  std::size_t unordered = 0;
  std::size_t ordered = 0;
  std::size_t self_pairs = 0;
};

struct PairCountReport {
  PairCounts all_families;
  PairCounts original_families;  // supplementary Fano families left out
};

PairCountReport count_pairs(const std::vector<G2Record>& records);

struct JoyceComparison {
  std::size_t overlap = 0;
  std::size_t new_count = 0;
  std::size_t mod4_violations = 0;  // distinct pairs with b2 + b3 != 3 mod 4
};

/// Empty when no Joyce catalog is loaded.
std::optional<JoyceComparison> compare_joyce(const std::vector<G2Record>& records, const JoyceCatalog* joyce);

struct TableRow {
  int b2 = 0;
  std::vector<int> b3;  // sorted
};

/// Groups distinct (b2, b3) by b2, ascending.
std::vector<TableRow> betti_table(const std::vector<G2Record>& records);

/// The table of clauses (b) and (c): one row per even b2 from 2 to 18.
std::vector<TableRow> table1(const std::vector<G2Record>& emb_records);

}  // namespace g2sum
