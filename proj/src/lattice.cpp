#include "g2sum/lattice.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace g2sum {

IntLattice::IntLattice(IntegerMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() == 0) throw std::invalid_argument("lattice of rank 0");
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Gram matrix is not square");
  if (gram_ != gram_.transpose()) throw std::invalid_argument("Gram matrix is not symmetric");
  det_ = bareiss_determinant(gram_);
  if (det_ == 0) throw std::invalid_argument("Gram matrix is degenerate");
  for (Eigen::Index i = 0; i < gram_.rows(); ++i) {
    if (gram_(i, i) % 2 != 0) {
      even_ = false;
      break;
    }
  }
}

namespace {

IntegerMatrix e8_negative_gram() {
  // Negated Cartan matrix of E8: chain 0-1-2-3-4-5-6 with node 7 on node 4.
  IntegerMatrix g = IntegerMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) g(i, i) = -2;
  auto link = [&g](int i, int j) {
    g(i, j) = 1;
    g(j, i) = 1;
  };
  for (int i = 0; i < 6; ++i) link(i, i + 1);
  link(4, 7);
  return g;
}

IntegerMatrix hyperbolic_gram() {
  IntegerMatrix g(2, 2);
  g << 0, 1, 1, 0;
  return g;
}

IntegerMatrix block_sum(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix out = IntegerMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

IntLattice sum_of(std::initializer_list<IntLattice> parts) {
  auto it = parts.begin();
  IntegerMatrix g = it->gram();
  for (++it; it != parts.end(); ++it) g = block_sum(g, it->gram());
  return IntLattice(std::move(g));
}

}  // namespace

IntLattice standard_lattice(StandardLattice which) {
  const IntLattice e8(e8_negative_gram());
  const IntLattice h(hyperbolic_gram());
  switch (which) {
    case StandardLattice::E8Neg:
      return e8;
    case StandardLattice::Hyperbolic:
      return h;
    case StandardLattice::K3:
      return sum_of({e8, e8, h, h, h});
    case StandardLattice::TwoE8TwoH:
      return sum_of({e8, e8, h, h});
    case StandardLattice::L18_0_0:
      return sum_of({e8, e8, h});
    case StandardLattice::L17_1_1:
      return sum_of({e8, e8, rank_one(2)});
  }
  throw std::invalid_argument("unknown standard lattice");
}

IntLattice rank_one(const Integer& k) {
  if (k == 0 || k % 2 != 0) throw std::invalid_argument("RANK1(k) needs k even and nonzero");
  IntegerMatrix g(1, 1);
  g(0, 0) = k;
  return IntLattice(std::move(g));
}

IntLattice standard_lattice(std::string_view name) {
  if (name == "E8_NEG") return standard_lattice(StandardLattice::E8Neg);
  if (name == "H") return standard_lattice(StandardLattice::Hyperbolic);
  if (name == "K3") return standard_lattice(StandardLattice::K3);
  if (name == "TWO_E8_TWO_H") return standard_lattice(StandardLattice::TwoE8TwoH);
  if (name == "L_18_0_0") return standard_lattice(StandardLattice::L18_0_0);
  if (name == "L_17_1_1") return standard_lattice(StandardLattice::L17_1_1);
  constexpr std::string_view prefix = "RANK1(";
  if (name.starts_with(prefix) && name.ends_with(")")) {
    const std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    long long k = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && end == digits.data() + digits.size()) return rank_one(Integer(k));
  }
  throw std::invalid_argument("unknown standard lattice: " + std::string(name));
}

IntLattice direct_sum(const IntLattice& a, const IntLattice& b) {
  return IntLattice(block_sum(a.gram(), b.gram()));
}

IntLattice rescale(const IntLattice& a, const Integer& k) {
  if (k == 0) throw std::invalid_argument("rescale by zero");
  return IntLattice(IntegerMatrix(a.gram() * k));
}

Signature signature(const IntegerMatrix& gram) {
  const RationalVector pivots = congruence_pivots(gram);
  Signature s;
  for (Eigen::Index i = 0; i < pivots.size(); ++i) {
    if (pivots(i) > 0) {
      ++s.t_plus;
    } else {
      ++s.t_minus;
    }
  }
  return s;
}

Signature signature(const IntLattice& a) { return signature(a.gram()); }

Integer determinant(const IntLattice& a) { return a.det(); }

SmithDecomposition<Integer> smith_normal_form(const IntLattice& a) {
  return g2sum::smith_normal_form(a.gram());
}

namespace {

// Columns of V scaled by 1/s_i generate N*/N for each invariant factor s_i > 1.
std::vector<RationalVector> dual_generators(const SmithDecomposition<Integer>& snf) {
  std::vector<RationalVector> gens;
  for (Eigen::Index i = 0; i < snf.S.rows(); ++i) {
    const Integer& s = snf.S(i, i);
    if (s == 1) continue;
    RationalVector t = snf.V.col(i).cast<Rational>();
    t /= Rational(s);
    gens.push_back(std::move(t));
  }
  return gens;
}

bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

int delta_from(const IntLattice& a, const SmithDecomposition<Integer>& snf) {
  const std::vector<RationalVector> gens = dual_generators(snf);
  const RationalMatrix g = a.gram().cast<Rational>();
  const std::size_t l = gens.size();
  if (l >= 8 * sizeof(unsigned long)) throw std::domain_error("discriminant group too large");
  for (unsigned long mask = 1; mask < (1UL << l); ++mask) {
    RationalVector t = RationalVector::Zero(a.rank());
    for (std::size_t i = 0; i < l; ++i) {
      if (mask & (1UL << i)) t += gens[i];
    }
    const Rational square = t.dot(g * t);
    if (!is_integral(square)) return 1;
  }
  return 0;
}

}  // namespace

DiscriminantInfo discriminant(const IntLattice& a) {
  if (!a.is_even()) throw std::invalid_argument("discriminant form needs an even lattice");
  const auto snf = smith_normal_form(a);
  DiscriminantInfo info;
  for (Eigen::Index i = 0; i < snf.S.rows(); ++i) {
    const Integer& s = snf.S(i, i);
    if (s == 1) continue;
    info.invariant_factors.push_back(s);
    info.order *= s;
    if (s != 2) info.two_elementary = false;
  }
  info.length = static_cast<int>(info.invariant_factors.size());
  if (info.two_elementary) info.delta = delta_from(a, snf);
  return info;
}

int delta(const IntLattice& a) {
  const DiscriminantInfo info = discriminant(a);
  if (!info.delta) throw std::domain_error("delta is only defined for 2-elementary lattices");
  return *info.delta;
}

}  // namespace g2sum
