#pragma once

#include "g2sum/catalog.hpp"

#include <optional>
#include <string>

namespace g2sum {

enum class BlockKind { Fano, NonSymplectic, BlowupSequence };

/// A threefold with anticanonical K3 divisor, reduced to the numbers the
/// gluing formulas need.
struct BuildingBlock {
  BlockKind kind = BlockKind::Fano;
  std::string id;                       // Fano id, "r/a/delta", or sequence name
  std::optional<NikulinTriple> triple;  // set for NonSymplectic
  int b2_bar = 0;                       // b^2 of the compact threefold
  int b3_bar = 0;                       // b^3 of the compact threefold
  int d = 0;                            // dim ker of H^2(W) -> H^2(D)
  int r = 0;                            // rank of the polarizing lattice
  int l_bound = 0;                      // upper bound for l(L)
  bool simply_connected = true;

  /// "fano:1-17", "ns:18/0/0", "seq:quartic-4h".
  std::string label() const;
};

struct OpenBetti {
  int b2 = 0;
  int b3 = 0;
};

/// Throws std::invalid_argument for (10,10,0).
BuildingBlock from_nonsymplectic(const NikulinTriple& t);
BuildingBlock from_fano(const FanoFamily& f);

/// P^3 blown up along four hyperplane sections of a quartic K3.
BuildingBlock quartic_blowup_block();

/// d for m successive curve blow-ups whose classes span a sublattice of the
/// given rank in Pic(S).
int blowup_sequence_d(int m, int rank_of_span);

OpenBetti open_part_betti(const BuildingBlock& b);

/// Recomputes h^{1,1} and h^{1,2} of the non-symplectic block from the fixed
/// locus and Euler numbers, and compares with the closed forms.
bool euler_crosscheck(const NikulinTriple& t);

}  // namespace g2sum
