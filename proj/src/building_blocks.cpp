#include "g2sum/building_blocks.hpp"

#include <stdexcept>

namespace g2sum {

namespace {

bool is_free_involution(const NikulinTriple& t) { return t.r == 10 && t.a == 10 && t.delta == 0; }

std::string triple_id(const NikulinTriple& t) {
  // slash-separated so labels stay single CSV cells
  return std::to_string(t.r) + "/" + std::to_string(t.a) + "/" + std::to_string(t.delta);
}

}  // namespace

std::string BuildingBlock::label() const {
  switch (kind) {
    case BlockKind::Fano:
      return "fano:" + id;
    case BlockKind::NonSymplectic:
      return "ns:" + id;
    case BlockKind::BlowupSequence:
      return "seq:" + id;
  }
  return id;
}

BuildingBlock from_nonsymplectic(const NikulinTriple& t) {
  if (is_free_involution(t)) throw std::invalid_argument("(10,10,0) gives no simply-connected block");
  BuildingBlock b;
  b.kind = BlockKind::NonSymplectic;
  b.id = triple_id(t);
  b.triple = t;
  b.b2_bar = 3 + 2 * t.r - t.a;
  b.b3_bar = 2 * (22 - t.r - t.a);
  b.d = 2 + t.r - t.a;
  b.r = t.r;
  b.l_bound = t.a;
  return b;
}

BuildingBlock from_fano(const FanoFamily& f) {
  BuildingBlock b;
  b.kind = BlockKind::Fano;
  b.id = f.id;
  b.b2_bar = f.b2 + 1;
  b.b3_bar = f.b3 + f.minus_k3 + 2;
  b.d = 0;
  b.r = f.b2;
  b.l_bound = f.b2;
  return b;
}

BuildingBlock quartic_blowup_block() {
  BuildingBlock b;
  b.kind = BlockKind::BlowupSequence;
  b.id = "quartic-4h";
  b.b2_bar = 4;
  b.b3_bar = 4 * 6;  // each genus-3 centre adds 2g = 6
  b.d = blowup_sequence_d(4, 1);
  b.r = 1;
  b.l_bound = 1;
  return b;
}

int blowup_sequence_d(int m, int rank_of_span) {
  if (rank_of_span < 1 || rank_of_span > m) throw std::invalid_argument("need 1 <= rank_of_span <= m");
  return m - rank_of_span;
}

OpenBetti open_part_betti(const BuildingBlock& b) {
  const int b2 = b.b2_bar - 1;
  return {b2, b.b3_bar + 22 - b2 + b.d};
}

bool euler_crosscheck(const NikulinTriple& t) {
  if (is_free_involution(t)) throw std::invalid_argument("(10,10,0) has empty fixed locus");
  const FixedLocus locus = fixed_locus(t);
  int curves = 0;
  int euler_sum = 0;  // sum of e(c_i) over fixed curves
  if (locus.kind == FixedLocus::Kind::TwoEllipticCurves) {
    curves = 2;
    euler_sum = 0;
  } else {
    curves = locus.rational_curves + 1;
    euler_sum = (2 - 2 * locus.genus) + 2 * locus.rational_curves;
  }
  const int h11 = t.r + 1 + 2 * curves;
  const int euler = 24 + 3 * euler_sum;
  if (euler % 2 != 0) return false;
  const int h12 = 1 + h11 - euler / 2;
  return h11 == 3 + 2 * t.r - t.a && h12 == 22 - t.r - t.a;
}

}  // namespace g2sum
