#include "g2sum/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

namespace g2sum {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogIoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw CatalogIoError("cannot read " + path.string());
  return buf.str();
}

struct CsvRow {
  std::size_t line;
  std::vector<std::string> fields;
};

struct CsvTable {
  std::string pragma;  // first-line pragma without '#', or empty
  std::vector<CsvRow> rows;
};

// The last header column swallows any extra commas (free-text provenance).
CsvTable parse_csv(const std::string& text, std::string_view header) {
  const std::size_t columns = static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) + 1;
  CsvTable table;
  bool saw_header = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = trim(raw);
    if (line == 1 && s.starts_with("\xEF\xBB\xBF")) s = trim(s.substr(3));
    if (s.empty()) continue;
    if (s.front() == '#') {
      if (line == 1) table.pragma = std::string(trim(s.substr(1)));
      continue;
    }
    if (!saw_header) {
      if (s != header) throw CatalogError(line, "expected header '" + std::string(header) + "'");
      saw_header = true;
      continue;
    }
    CsvRow row{line, {}};
    std::size_t start = 0;
    while (row.fields.size() + 1 < columns) {
      const auto comma = s.find(',', start);
      if (comma == std::string_view::npos) break;
      row.fields.emplace_back(trim(s.substr(start, comma - start)));
      start = comma + 1;
    }
    row.fields.emplace_back(trim(s.substr(start)));
    if (row.fields.size() != columns) {
      throw CatalogError(line, "expected " + std::to_string(columns) + " fields, got " +
                                   std::to_string(row.fields.size()));
    }
    table.rows.push_back(std::move(row));
  }
  if (!saw_header) throw CatalogError(0, "missing header '" + std::string(header) + "'");
  return table;
}

int parse_int(const CsvRow& row, std::size_t column, std::string_view name) {
  const std::string& f = row.fields[column];
  int value = 0;
  const auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
  if (f.empty() || ec != std::errc{} || end != f.data() + f.size()) {
    throw CatalogError(row.line, "field '" + std::string(name) + "' is not an integer: '" + f + "'");
  }
  return value;
}

template <typename Fn>
void with_line(std::size_t line, Fn&& fn) {
  try {
    fn();
  } catch (const CatalogError& e) {
    if (e.line() != 0) throw;
    throw CatalogError(line, e.what());
  }
}

}  // namespace

void validate_triple(const NikulinTriple& t) {
  if (t.r < 1 || t.r > 20) throw CatalogError(0, "rule 1<=r<=20 violated");
  if (t.a < 0 || t.a > 11) throw CatalogError(0, "rule 0<=a<=11 violated");
  if (t.delta != 0 && t.delta != 1) throw CatalogError(0, "rule delta in {0,1} violated");
  if (t.r - t.a < 0) throw CatalogError(0, "rule r-a>=0 violated");
  if ((t.r - t.a) % 2 != 0) throw CatalogError(0, "rule r-a even violated");
}

void validate_family(const FanoFamily& f) {
  if (f.id.empty()) throw CatalogError(0, "rule id non-empty violated");
  if (f.b2 < 1) throw CatalogError(0, "rule b2>=1 violated");
  if (f.b3 < 0 || f.b3 % 2 != 0) throw CatalogError(0, "rule b3 even and >=0 violated");
  if (f.minus_k3 <= 0 || f.minus_k3 % 2 != 0) throw CatalogError(0, "rule -K^3 even and positive violated");
}

bool NikulinCatalog::contains(int r, int a, int delta) const {
  return std::binary_search(triples.begin(), triples.end(), NikulinTriple{r, a, delta, {}});
}

std::vector<FanoFamily> FanoCatalog::with_b2(int b2) const {
  std::vector<FanoFamily> out;
  std::copy_if(families.begin(), families.end(), std::back_inserter(out),
               [b2](const FanoFamily& f) { return f.b2 == b2; });
  return out;
}

NikulinCatalog parse_nikulin(const std::string& text) {
  const CsvTable table = parse_csv(text, "r,a,delta,source");
  NikulinCatalog cat;
  cat.complete = table.pragma == "complete";
  for (const auto& row : table.rows) {
    NikulinTriple t{parse_int(row, 0, "r"), parse_int(row, 1, "a"), parse_int(row, 2, "delta"), row.fields[3]};
    with_line(row.line, [&] { validate_triple(t); });
    if (std::find(cat.triples.begin(), cat.triples.end(), t) != cat.triples.end()) {
      throw CatalogError(row.line, "duplicate triple");
    }
    cat.triples.push_back(std::move(t));
  }
  std::sort(cat.triples.begin(), cat.triples.end());
  if (cat.complete && cat.triples.size() != kNikulinTripleCount) {
    throw CatalogError(0, "#complete catalog must list " + std::to_string(kNikulinTripleCount) + " triples, found " +
                              std::to_string(cat.triples.size()));
  }
  return cat;
}

FanoCatalog parse_fano(const std::string& text) {
  const CsvTable table = parse_csv(text, "id,b2,b3,minus_k3,source");
  FanoCatalog cat;
  cat.complete = table.pragma == "complete";
  cat.complete_rank1 = cat.complete || table.pragma == "complete-rank-1";
  std::map<std::string, std::size_t> seen;
  for (const auto& row : table.rows) {
    FanoFamily f{row.fields[0], parse_int(row, 1, "b2"), parse_int(row, 2, "b3"), parse_int(row, 3, "minus_k3"),
                 row.fields[4]};
    with_line(row.line, [&] { validate_family(f); });
    if (!seen.emplace(f.id, row.line).second) throw CatalogError(row.line, "duplicate family id '" + f.id + "'");
    cat.families.push_back(std::move(f));
  }
  if (cat.complete_rank1) {
    const auto n = static_cast<std::size_t>(
        std::count_if(cat.families.begin(), cat.families.end(), [](const FanoFamily& f) { return f.b2 == 1; }));
    if (n != kFanoRankOneCount) {
      throw CatalogError(0, "#" + table.pragma + " catalog must list " + std::to_string(kFanoRankOneCount) +
                                " families with b2=1, found " + std::to_string(n));
    }
  }
  return cat;
}

JoyceCatalog parse_joyce(const std::string& text) {
  const CsvTable table = parse_csv(text, "b2,b3");
  JoyceCatalog cat;
  cat.complete = table.pragma == "complete";
  for (const auto& row : table.rows) {
    const int b2 = parse_int(row, 0, "b2");
    const int b3 = parse_int(row, 1, "b3");
    if (b2 < 0 || b3 < 0) throw CatalogError(row.line, "rule b2,b3>=0 violated");
    if (!cat.pairs.emplace(b2, b3).second) throw CatalogError(row.line, "duplicate pair");
  }
  if (cat.complete && cat.pairs.size() != kJoycePairCount) {
    throw CatalogError(0, "#complete catalog must list " + std::to_string(kJoycePairCount) + " pairs, found " +
                              std::to_string(cat.pairs.size()));
  }
  return cat;
}

NikulinCatalog load_nikulin(const std::filesystem::path& path) { return parse_nikulin(read_file(path)); }
FanoCatalog load_fano(const std::filesystem::path& path) { return parse_fano(read_file(path)); }
JoyceCatalog load_joyce(const std::filesystem::path& path) { return parse_joyce(read_file(path)); }

FixedLocus fixed_locus(const NikulinTriple& t) {
  if (t.r == 10 && t.a == 10 && t.delta == 0) return {FixedLocus::Kind::Empty};
  if (t.r == 10 && t.a == 8 && t.delta == 0) return {FixedLocus::Kind::TwoEllipticCurves};
  return {FixedLocus::Kind::Generic, (22 - t.r - t.a) / 2, (t.r - t.a) / 2};
}

std::optional<NikulinTriple> mirror_partner(const NikulinTriple& t, const NikulinCatalog& catalog) {
  if (t.r + t.a == 22) return std::nullopt;
  if (t.r == 14 && t.a == 6 && t.delta == 0) return std::nullopt;
  // (10,10,0) has a fixed-point-free involution and yields no block
  if (t.r == 10 && t.a == 10 && t.delta == 0) return std::nullopt;
  const auto it = std::lower_bound(catalog.triples.begin(), catalog.triples.end(),
                                   NikulinTriple{20 - t.r, t.a, t.delta, {}});
  if (it == catalog.triples.end() || *it != NikulinTriple{20 - t.r, t.a, t.delta, {}}) return std::nullopt;
  return *it;
}

std::vector<std::pair<NikulinTriple, NikulinTriple>> mirror_pairs(const NikulinCatalog& catalog) {
  std::vector<std::pair<NikulinTriple, NikulinTriple>> out;
  for (const auto& t : catalog.triples) {
    const auto partner = mirror_partner(t, catalog);
    if (partner && t <= *partner) out.emplace_back(t, *partner);
  }
  return out;
}

}  // namespace g2sum
