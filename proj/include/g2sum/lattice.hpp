#pragma once

#include "g2sum/linalg.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace g2sum {

/// A non-degenerate integral lattice, stored as its dense Gram matrix.
///
/// Construction enforces rank >= 1, symmetry and det != 0. Evenness is
/// recorded, not required; the discriminant and delta routines require it.
class IntLattice {
 public:
  explicit IntLattice(IntegerMatrix gram);

  const IntegerMatrix& gram() const { return gram_; }
  Eigen::Index rank() const { return gram_.rows(); }
  bool is_even() const { return even_; }
  const Integer& det() const { return det_; }

  friend bool operator==(const IntLattice& a, const IntLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntegerMatrix gram_;
  Integer det_;
  bool even_ = true;
};

struct Signature {
  int t_plus = 0;
  int t_minus = 0;

  int rank() const { return t_plus + t_minus; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct DiscriminantInfo {
  std::vector<Integer> invariant_factors;  // factors equal to 1 dropped
  Integer order{1};
  int length = 0;  // l(N), minimum number of generators
  bool two_elementary = true;
  std::optional<int> delta;  // empty unless 2-elementary
};

enum class StandardLattice { E8Neg, Hyperbolic, K3, TwoE8TwoH, L18_0_0, L17_1_1 };

IntLattice standard_lattice(StandardLattice which);

/// The rank-one lattice <k>; k must be even and nonzero.
IntLattice rank_one(const Integer& k);

/// Parses E8_NEG, H, K3, TWO_E8_TWO_H, L_18_0_0, L_17_1_1 or RANK1(k).
IntLattice standard_lattice(std::string_view name);

IntLattice direct_sum(const IntLattice& a, const IntLattice& b);
IntLattice rescale(const IntLattice& a, const Integer& k);

/// Exact Sylvester signature via rational congruence diagonalization.
Signature signature(const IntLattice& a);
Signature signature(const IntegerMatrix& gram);

Integer determinant(const IntLattice& a);

SmithDecomposition<Integer> smith_normal_form(const IntLattice& a);

DiscriminantInfo discriminant(const IntLattice& a);

/// delta of a 2-elementary even lattice: 0 if t^2 is integral for every dual
/// vector t, else 1. Throws std::domain_error when not 2-elementary.
int delta(const IntLattice& a);

}  // namespace g2sum
