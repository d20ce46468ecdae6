#include "g2sum/embedding.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace g2sum {

EmbeddingVerdict nikulin_sufficient(Signature sig_n, int rank_n, int l_n, Signature sig_e, int rank_e) {
  if (rank_n < 1) throw std::invalid_argument("embedded lattice needs rank >= 1");
  if (l_n < 0 || l_n > rank_n) throw std::invalid_argument("l(N) must satisfy 0 <= l(N) <= rk N");
  EmbeddingVerdict v;
  v.rule = "numeric";
  const bool fits = sig_n.t_plus <= sig_e.t_plus && sig_n.t_minus <= sig_e.t_minus;
  if (fits && l_n + rank_n < rank_e) {
    v.status = l_n + rank_n < rank_e - 2 ? EmbeddingStatus::SufficientUnique : EmbeddingStatus::Sufficient;
  }
  return v;
}

namespace {

struct Target {
  Signature sig;
  int rank;
};

const Target& two_e8_two_h() {
  static const Target t = [] {
    const IntLattice e = standard_lattice(StandardLattice::TwoE8TwoH);
    return Target{signature(e), static_cast<int>(e.rank())};
  }();
  return t;
}

}  // namespace

EmbeddingVerdict embeds_in_2e8_2h(std::span<const LatticeSummary> parts) {
  LatticeSummary total;
  for (const auto& p : parts) {
    if (p.l < 0 || p.l > p.rank) throw std::invalid_argument("summand with l > rank");
    total.rank += p.rank;
    total.l += p.l;
    total.sig.t_plus += p.sig.t_plus;
    total.sig.t_minus += p.sig.t_minus;
  }
  const Target& e = two_e8_two_h();
  EmbeddingVerdict v = nikulin_sufficient(total.sig, total.rank, total.l, e.sig, e.rank);
  const Signature flipped{e.sig.t_minus, e.sig.t_plus};
  const EmbeddingVerdict printed = nikulin_sufficient(total.sig, total.rank, total.l, flipped, e.rank);
  v.printed_orientation_disagrees = printed.sufficient() != v.sufficient();
  return v;
}

LatticeSummary summary_of(const BuildingBlock& b) { return {b.r, b.l_bound, Signature{1, b.r - 1}}; }

namespace {

bool is_triple(const BuildingBlock& b, int r, int a, int delta) {
  return b.triple && b.triple->r == r && b.triple->a == a && b.triple->delta == delta;
}

bool mirror_rule(const BuildingBlock& x, const BuildingBlock& y) {
  if (!x.triple || !y.triple) return false;
  const NikulinTriple& s = *x.triple;
  const NikulinTriple& t = *y.triple;
  if (s.r + s.a == 22 || (s.r == 14 && s.a == 6 && s.delta == 0)) return false;
  return t.r == 20 - s.r && t.a == s.a && t.delta == s.delta;
}

bool large_rank_rule(const BuildingBlock& x, const BuildingBlock& y) {
  return (is_triple(x, 18, 0, 0) || is_triple(x, 17, 1, 1)) && y.r == 1;
}

}  // namespace

const std::vector<SpecialRule>& default_special_rules() {
  static const std::vector<SpecialRule> rules{
      {"mirror-pair", mirror_rule},
      {"large-rank", large_rank_rule},
  };
  return rules;
}

MatchCertificate matching_condition(const BuildingBlock& b1, const BuildingBlock& b2,
                                    const std::vector<SpecialRule>& rules) {
  if (is_triple(b1, 10, 10, 0) || is_triple(b2, 10, 10, 0)) {
    throw std::invalid_argument("(10,10,0) blocks are excluded from matching");
  }
  MatchCertificate cert;
  const LatticeSummary parts[] = {summary_of(b1), summary_of(b2)};
  cert.cond_a = embeds_in_2e8_2h(parts);
  if (!cert.cond_a.sufficient()) {
    for (const auto& rule : rules) {
      if (rule.applies(b1, b2) || rule.applies(b2, b1)) {
        cert.cond_a.status = EmbeddingStatus::Sufficient;
        cert.cond_a.rule = rule.id;
        break;
      }
    }
  }
  cert.cond_b = std::max(b1.r, b2.r) <= 10;
  const bool a = cert.cond_a.sufficient();
  cert.condition = a && cert.cond_b ? MatchCondition::Both
                   : a              ? MatchCondition::CondA
                   : cert.cond_b    ? MatchCondition::CondB
                                    : MatchCondition::None;
  return cert;
}

namespace {

template <typename Scalar, typename Gram>
std::optional<IntegerVector> box_search(const Gram& gram, int bound) {
  const Eigen::Index n = gram.rows();
  std::vector<int> v(static_cast<std::size_t>(n), bound);
  while (true) {
    int g = 0;
    for (int c : v) g = std::gcd(g, c);
    if (g == 1) {
      Scalar q(0);
      for (Eigen::Index i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        Scalar row(0);
        for (Eigen::Index j = 0; j < n; ++j) row += gram(i, j) * Scalar(v[j]);
        q += Scalar(v[i]) * row;
      }
      if (q == 0) {
        IntegerVector out(n);
        for (Eigen::Index i = 0; i < n; ++i) out(i) = v[i];
        return out;
      }
    }
    // odometer, last coordinate fastest
    Eigen::Index k = n - 1;
    while (k >= 0 && v[k] == -bound) {
      v[k] = bound;
      --k;
    }
    if (k < 0) return std::nullopt;
    --v[k];
  }
}

}  // namespace

std::optional<IntegerVector> find_isotropic_primitive(const IntLattice& lattice, int bound) {
  if (bound < 1) throw std::invalid_argument("search bound must be positive");
  const Signature sig = signature(lattice);
  if (sig.t_plus == 0 || sig.t_minus == 0) throw std::domain_error("definite lattice has no isotropic vectors");

  const IntegerMatrix& gram = lattice.gram();
  const Eigen::Index n = gram.rows();
  Integer largest(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) largest = std::max(largest, Integer(abs(gram(i, j))));
  }
  const Integer worst = largest * n * n * bound * bound;
  if (worst < (Integer(1) << 62)) {
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> small(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) small(i, j) = gram(i, j).convert_to<std::int64_t>();
    }
    return box_search<std::int64_t>(small, bound);
  }
  return box_search<Integer>(gram, bound);
}

}  // namespace g2sum
