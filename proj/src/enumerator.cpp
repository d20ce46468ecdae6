#include "g2sum/enumerator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace g2sum {

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::EmbA: return "EMB_A";
    case Mode::EmbB: return "EMB_B";
    case Mode::EmbC: return "EMB_C";
    case Mode::Mirror: return "MIRROR";
    case Mode::Seq: return "SEQ";
    case Mode::LargeRank: return "LARGE_RANK";
    case Mode::Generic: return "GENERIC";
  }
  return "?";
}

std::optional<Mode> parse_mode_name(std::string_view name) {
  for (Mode m : {Mode::EmbA, Mode::EmbB, Mode::EmbC, Mode::Mirror, Mode::Seq, Mode::LargeRank, Mode::Generic}) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

GlueResult glue_betti(const BuildingBlock& b1, const BuildingBlock& b2, int n) {
  if (n < 0) throw std::invalid_argument("n = dim X must be non-negative");
  GlueResult g;
  g.b2 = n + b1.d + b2.d;
  g.b3 = b1.b3_bar + b2.b3_bar + g.b2 - 2 * n + 23;
  const OpenBetti w1 = open_part_betti(b1);
  const OpenBetti w2 = open_part_betti(b2);
  g.verified = w1.b2 - b1.d + w2.b2 - b2.d <= 22;
  return g;
}

std::pair<int, int> closed_form_emb_a(const FanoFamily& v1, const FanoFamily& v2) {
  return {0, v1.b3 + v1.minus_k3 + v2.b3 + v2.minus_k3 + 27};
}

std::pair<int, int> closed_form_emb_b(const FanoFamily& v1, const NikulinTriple& t2) {
  return {2 + t2.r - t2.a, v1.b3 + v1.minus_k3 - t2.r - 3 * t2.a + 71};
}

std::pair<int, int> closed_form_emb_c(const NikulinTriple& t1, const NikulinTriple& t2) {
  return {4 + t1.r + t2.r - t1.a - t2.a, 115 - t1.r - t2.r - 3 * t1.a - 3 * t2.a};
}

std::pair<int, int> closed_form_mirror(const NikulinTriple& t) { return {24 - 2 * t.a, 95 - 6 * t.a}; }

std::pair<int, int> closed_form_seq(const FanoFamily& v2) { return {3, v2.b3 + v2.minus_k3 + 52}; }

std::pair<int, int> closed_form_seq(const NikulinTriple& t2) { return {5 + t2.r - t2.a, 96 - t2.r - 3 * t2.a}; }

std::pair<int, int> closed_form_large_rank(const NikulinTriple& big, const FanoFamily& v2) {
  return {2 + big.r - big.a, v2.b3 + v2.minus_k3 - big.r - 3 * big.a + 71};
}

std::pair<int, int> closed_form_large_rank(const NikulinTriple& big, const NikulinTriple& t2) {
  if (t2.r != 1 || t2.a != 1 || t2.delta != 1) throw std::invalid_argument("large-rank partner must be L(1,1,1)");
  return {4 + big.r - big.a, 111 - big.r - 3 * big.a};
}

std::pair<int, int> closed_form_large_rank_seq(const NikulinTriple& big) {
  return {5 + big.r - big.a, 96 - big.r - 3 * big.a};
}

namespace {

bool is_free(const NikulinTriple& t) { return t.r == 10 && t.a == 10 && t.delta == 0; }

std::vector<NikulinTriple> usable_triples(const NikulinCatalog& nikulin) {
  std::vector<NikulinTriple> out;
  std::copy_if(nikulin.triples.begin(), nikulin.triples.end(), std::back_inserter(out),
               [](const NikulinTriple& t) { return !is_free(t); });
  return out;
}

G2Record make_record(Mode mode, const BuildingBlock& x, const BuildingBlock& y, std::pair<int, int> closed,
                     bool supplementary = false) {
  const GlueResult g = glue_betti(x, y, 0);
  const std::string where = std::string(mode_name(mode)) + " " + x.label() + " x " + y.label();
  if (g.b2 != closed.first || g.b3 != closed.second) {
    throw std::logic_error("closed form disagrees with glued Betti numbers for " + where);
  }
  if (!g.verified) throw std::logic_error("rank condition fails for " + where);
  G2Record rec;
  rec.b2 = g.b2;
  rec.b3 = g.b3;
  rec.mode = mode;
  rec.n = 0;
  rec.certificate = matching_condition(x, y);
  if (rec.certificate.condition == MatchCondition::None) throw std::logic_error("no matching condition for " + where);
  rec.block1 = x.label();
  rec.block2 = y.label();
  rec.simply_connected = x.simply_connected && y.simply_connected;
  rec.uses_supplementary_family = supplementary;
  return rec;
}

void sort_records(std::vector<G2Record>& records) {
  std::sort(records.begin(), records.end(), [](const G2Record& p, const G2Record& q) {
    return std::tie(p.mode, p.b2, p.b3, p.block1, p.block2) < std::tie(q.mode, q.b2, q.b3, q.block1, q.block2);
  });
}

}  // namespace

std::vector<G2Record> enumerate_emb(const FanoCatalog& fano, const NikulinCatalog& nikulin) {
  const auto& fams = fano.families;
  const auto triples = usable_triples(nikulin);
  std::vector<G2Record> out;

  for (std::size_t i = 0; i < fams.size(); ++i) {
    for (std::size_t j = i; j < fams.size(); ++j) {
      const auto& v1 = fams[i];
      const auto& v2 = fams[j];
      if (v1.b2 + v2.b2 >= 10) continue;
      out.push_back(make_record(Mode::EmbA, from_fano(v1), from_fano(v2), closed_form_emb_a(v1, v2),
                                v1.supplementary() || v2.supplementary()));
    }
  }
  for (const auto& v : fams) {
    for (const auto& t : triples) {
      if (2 * v.b2 + t.r + t.a >= 20) continue;
      out.push_back(make_record(Mode::EmbB, from_fano(v), from_nonsymplectic(t), closed_form_emb_b(v, t),
                                v.supplementary()));
    }
  }
  for (std::size_t i = 0; i < triples.size(); ++i) {
    for (std::size_t j = i; j < triples.size(); ++j) {
      const auto& s = triples[i];
      const auto& t = triples[j];
      if (s.r + t.r + s.a + t.a >= 20) continue;
      out.push_back(make_record(Mode::EmbC, from_nonsymplectic(s), from_nonsymplectic(t), closed_form_emb_c(s, t)));
    }
  }
  sort_records(out);
  return out;
}

std::vector<G2Record> enumerate_mirror(const NikulinCatalog& nikulin) {
  std::vector<G2Record> out;
  for (const auto& [s, t] : mirror_pairs(nikulin)) {
    G2Record rec = make_record(Mode::Mirror, from_nonsymplectic(s), from_nonsymplectic(t), closed_form_mirror(s));
    if (rec.b3 != 3 * rec.b2 + 23) throw std::logic_error("mirror record off the line b3 = 3 b2 + 23");
    out.push_back(std::move(rec));
  }
  sort_records(out);
  return out;
}

std::vector<G2Record> enumerate_seq(const FanoCatalog& fano, const NikulinCatalog& nikulin) {
  const BuildingBlock quartic = quartic_blowup_block();
  std::vector<G2Record> out;
  for (const auto& v : fano.families) {
    if (v.b2 >= 9) continue;
    out.push_back(make_record(Mode::Seq, quartic, from_fano(v), closed_form_seq(v), v.supplementary()));
  }
  for (const auto& t : usable_triples(nikulin)) {
    if (t.r + t.a >= 18) continue;
    out.push_back(make_record(Mode::Seq, quartic, from_nonsymplectic(t), closed_form_seq(t)));
  }
  for (const auto& rec : out) {
    if (rec.b2 % 2 != 1 || rec.b3 % 2 != 0) throw std::logic_error("SEQ record with wrong parity");
  }
  sort_records(out);
  return out;
}

std::vector<G2Record> enumerate_large_rank(const FanoCatalog& fano, const NikulinCatalog& nikulin) {
  std::vector<G2Record> out;
  const BuildingBlock quartic = quartic_blowup_block();
  for (const auto& big : nikulin.triples) {
    const bool large = (big.r == 18 && big.a == 0 && big.delta == 0) || (big.r == 17 && big.a == 1 && big.delta == 1);
    if (!large) continue;
    const BuildingBlock wb = from_nonsymplectic(big);
    for (const auto& v : fano.with_b2(1)) {
      out.push_back(
          make_record(Mode::LargeRank, wb, from_fano(v), closed_form_large_rank(big, v), v.supplementary()));
    }
    if (nikulin.contains(1, 1, 1)) {
      const NikulinTriple small{1, 1, 1, {}};
      out.push_back(make_record(Mode::LargeRank, wb, from_nonsymplectic(small), closed_form_large_rank(big, small)));
    }
    out.push_back(make_record(Mode::LargeRank, wb, quartic, closed_form_large_rank_seq(big)));
  }
  sort_records(out);
  return out;
}

std::vector<G2Record> enumerate_all(const FanoCatalog& fano, const NikulinCatalog& nikulin) {
  std::vector<G2Record> out = enumerate_emb(fano, nikulin);
  for (auto&& part : {enumerate_mirror(nikulin), enumerate_seq(fano, nikulin), enumerate_large_rank(fano, nikulin)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  sort_records(out);
  return out;
}

std::vector<G2Record> filter_modes(const std::vector<G2Record>& records, std::initializer_list<Mode> modes) {
  std::vector<G2Record> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out), [&](const G2Record& r) {
    return std::find(modes.begin(), modes.end(), r.mode) != modes.end();
  });
  return out;
}

std::set<std::pair<int, int>> distinct_betti(const std::vector<G2Record>& records) {
  std::set<std::pair<int, int>> out;
  for (const auto& r : records) out.emplace(r.b2, r.b3);
  return out;
}

PairCountReport count_pairs(const std::vector<G2Record>& records) {
  PairCountReport report;
  auto add = [](PairCounts& c, const G2Record& r) {
    ++c.unordered;
    if (r.self_pair()) ++c.self_pairs;
    c.ordered = 2 * c.unordered - c.self_pairs;
  };
  for (const auto& r : records) {
    add(report.all_families, r);
    if (!r.uses_supplementary_family) add(report.original_families, r);
  }
  return report;
}

std::optional<JoyceComparison> compare_joyce(const std::vector<G2Record>& records, const JoyceCatalog* joyce) {
  if (joyce == nullptr) return std::nullopt;
  JoyceComparison c;
  for (const auto& p : distinct_betti(records)) {
    if (joyce->pairs.contains(p)) {
      ++c.overlap;
    } else {
      ++c.new_count;
    }
    if ((p.first + p.second) % 4 != 3) ++c.mod4_violations;
  }
  return c;
}

std::vector<TableRow> betti_table(const std::vector<G2Record>& records) {
  std::map<int, std::vector<int>> rows;
  for (const auto& [b2, b3] : distinct_betti(records)) rows[b2].push_back(b3);
  std::vector<TableRow> out;
  for (auto& [b2, b3] : rows) out.push_back({b2, std::move(b3)});
  return out;
}

std::vector<TableRow> table1(const std::vector<G2Record>& emb_records) {
  const auto grouped = betti_table(filter_modes(emb_records, {Mode::EmbB, Mode::EmbC}));
  std::vector<TableRow> out;
  for (int b2 = 2; b2 <= 18; b2 += 2) {
    const auto it = std::find_if(grouped.begin(), grouped.end(), [b2](const TableRow& r) { return r.b2 == b2; });
    out.push_back(it == grouped.end() ? TableRow{b2, {}} : *it);
  }
  return out;
}

}  // namespace g2sum
