#include "g2sum/report.hpp"

#include "g2sum/building_blocks.hpp"
#include "g2sum/catalog.hpp"
#include "g2sum/enumerator.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace g2sum {

namespace {

using nlohmann::json;

struct Catalogs {
  NikulinCatalog nikulin;
  FanoCatalog fano;
  std::optional<JoyceCatalog> joyce;

  const JoyceCatalog* joyce_ptr() const { return joyce ? &*joyce : nullptr; }
  bool complete() const { return nikulin.complete && fano.complete; }
};

Catalogs load(const ReportRequest& req) {
  Catalogs c{load_nikulin(req.nikulin), load_fano(req.fano), std::nullopt};
  if (req.joyce) c.joyce = load_joyce(*req.joyce);
  return c;
}

void banner(const Catalogs& c, std::ostream& err) {
  err << "catalog completeness: nikulin=" << (c.nikulin.complete ? "complete" : "partial") << " ("
      << c.nikulin.triples.size() << " triples), fano="
      << (c.fano.complete ? "complete" : c.fano.complete_rank1 ? "complete-rank-1" : "partial") << " ("
      << c.fano.families.size() << " families), joyce="
      << (!c.joyce ? "absent" : c.joyce->complete ? "complete" : "partial") << "\n";
  if (!c.complete()) err << "  skipped: catalog-complete checks (table1, b2=0 list, global totals)\n";
  if (!c.fano.complete_rank1) err << "  skipped: large-rank record count (needs the 17 rank-1 Fano families)\n";
  if (!c.joyce) err << "  skipped: Joyce comparison (overlap / new counts)\n";
}

std::string_view condition_name(MatchCondition c) {
  switch (c) {
    case MatchCondition::None: return "NONE";
    case MatchCondition::CondA: return "A";
    case MatchCondition::CondB: return "B";
    case MatchCondition::Both: return "BOTH";
  }
  return "?";
}

std::vector<G2Record> select(const Catalogs& c, const std::string& mode) {
  if (mode == "emb") return enumerate_emb(c.fano, c.nikulin);
  if (mode == "emb-a") return filter_modes(enumerate_emb(c.fano, c.nikulin), {Mode::EmbA});
  if (mode == "emb-b") return filter_modes(enumerate_emb(c.fano, c.nikulin), {Mode::EmbB});
  if (mode == "emb-c") return filter_modes(enumerate_emb(c.fano, c.nikulin), {Mode::EmbC});
  if (mode == "mirror") return enumerate_mirror(c.nikulin);
  if (mode == "seq") return enumerate_seq(c.fano, c.nikulin);
  if (mode == "large-rank") return enumerate_large_rank(c.fano, c.nikulin);
  if (mode == "all") return enumerate_all(c.fano, c.nikulin);
  throw std::invalid_argument("unknown enumeration mode '" + mode + "'");
}

std::string join(const std::vector<int>& values, char sep) {
  std::ostringstream s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s << sep;
    s << values[i];
  }
  return s.str();
}

void write_records(const std::vector<G2Record>& records, Format format, std::ostream& out) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& r : records) {
      arr.push_back({{"mode", mode_name(r.mode)},
                     {"block1", r.block1},
                     {"block2", r.block2},
                     {"b2", r.b2},
                     {"b3", r.b3},
                     {"n", r.n},
                     {"condition", condition_name(r.certificate.condition)},
                     {"rule", r.certificate.cond_a.rule}});
    }
    out << arr.dump(2) << "\n";
    return;
  }
  if (format == Format::Csv) {
    out << "mode,block1,block2,b2,b3,n,condition,rule\n";
    for (const auto& r : records) {
      out << mode_name(r.mode) << ',' << r.block1 << ',' << r.block2 << ',' << r.b2 << ',' << r.b3 << ',' << r.n
          << ',' << condition_name(r.certificate.condition) << ',' << r.certificate.cond_a.rule << "\n";
    }
    return;
  }
  out << std::left << std::setw(11) << "mode" << std::setw(16) << "block1" << std::setw(16) << "block2"
      << std::right << std::setw(4) << "b2" << std::setw(5) << "b3" << "  condition\n";
  for (const auto& r : records) {
    out << std::left << std::setw(11) << mode_name(r.mode) << std::setw(16) << r.block1 << std::setw(16) << r.block2
        << std::right << std::setw(4) << r.b2 << std::setw(5) << r.b3 << "  "
        << condition_name(r.certificate.condition) << " (" << r.certificate.cond_a.rule << ")\n";
  }
}

void write_pairs(const std::set<std::pair<int, int>>& pairs, Format format, std::ostream& out) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& [b2, b3] : pairs) arr.push_back({{"b2", b2}, {"b3", b3}});
    out << arr.dump(2) << "\n";
    return;
  }
  if (format == Format::Csv) out << "b2,b3\n";
  for (const auto& [b2, b3] : pairs) {
    if (format == Format::Csv) {
      out << b2 << ',' << b3 << "\n";
    } else {
      out << "(" << b2 << ", " << b3 << ")\n";
    }
  }
}

void write_table(const std::vector<TableRow>& rows, Format format, std::ostream& out) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"b2", r.b2}, {"count", r.b3.size()}, {"b3", r.b3}});
    out << arr.dump(2) << "\n";
    return;
  }
  if (format == Format::Csv) {
    out << "b2,count,b3\n";
    for (const auto& r : rows) out << r.b2 << ',' << r.b3.size() << ',' << join(r.b3, ';') << "\n";
    return;
  }
  out << " b2 | pairs | values of b3\n";
  for (const auto& r : rows) {
    out << std::setw(3) << r.b2 << " | " << std::setw(5) << r.b3.size() << " | " << join(r.b3, ' ') << "\n";
  }
}

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

void write_checks(const std::vector<Check>& checks, Format format, std::ostream& out) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"check", c.name}, {"status", c.ok ? "ok" : "FAIL"}, {"detail", c.detail}});
    out << arr.dump(2) << "\n";
    return;
  }
  if (format == Format::Csv) out << "check,status,detail\n";
  for (const auto& c : checks) {
    if (format == Format::Csv) {
      out << c.name << ',' << (c.ok ? "ok" : "FAIL") << ',' << std::quoted(c.detail, '"', '"') << "\n";
    } else {
      out << (c.ok ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
    }
  }
}

std::vector<Check> validate_checks(const Catalogs& c) {
  std::vector<Check> checks;
  checks.push_back({"nikulin", true,
                    std::to_string(c.nikulin.triples.size()) + " triples" + (c.nikulin.complete ? " (complete)" : "")});
  checks.push_back({"fano", true,
                    std::to_string(c.fano.families.size()) + " families, " +
                        std::to_string(c.fano.with_b2(1).size()) + " with b2=1" +
                        (c.fano.complete ? " (complete)" : c.fano.complete_rank1 ? " (complete-rank-1)" : "")});
  if (c.joyce) {
    std::size_t mod4 = 0;
    for (const auto& [b2, b3] : c.joyce->pairs) mod4 += (b2 + b3) % 4 == 3;
    checks.push_back({"joyce", true,
                      std::to_string(c.joyce->pairs.size()) + " pairs, " + std::to_string(mod4) +
                          " with b2+b3 = 3 mod 4"});
  }
  std::size_t bad_locus = 0;
  for (const auto& t : c.nikulin.triples) {
    const FixedLocus f = fixed_locus(t);
    if (f.kind == FixedLocus::Kind::Generic && (f.genus < 0 || f.rational_curves < 0)) ++bad_locus;
  }
  checks.push_back({"fixed-locus", bad_locus == 0, std::to_string(bad_locus) + " triples with negative g or k"});
  checks.push_back({"mirror-pairs", true, std::to_string(mirror_pairs(c.nikulin).size()) + " unordered pairs"});
  return checks;
}

std::vector<Check> crosscheck_checks(const Catalogs& c) {
  std::vector<Check> checks;
  std::size_t euler_ok = 0;
  std::size_t euler_total = 0;
  for (const auto& t : c.nikulin.triples) {
    if (t.r == 10 && t.a == 10 && t.delta == 0) continue;
    ++euler_total;
    euler_ok += euler_crosscheck(t);
  }
  checks.push_back({"euler", euler_ok == euler_total,
                    std::to_string(euler_ok) + "/" + std::to_string(euler_total) + " triples agree with closed forms"});

  std::vector<G2Record> all;
  try {
    all = enumerate_all(c.fano, c.nikulin);
    checks.push_back({"closed-vs-composed", true, std::to_string(all.size()) + " admissible pairs agree"});
  } catch (const std::logic_error& e) {
    checks.push_back({"closed-vs-composed", false, e.what()});
    return checks;
  }

  std::size_t flagged = 0;
  for (const auto& r : all) flagged += r.certificate.cond_a.printed_orientation_disagrees;
  checks.push_back({"orientation", true,
                    std::to_string(flagged) + " pairs whose verdict flips under the gate t+<=18, t-<=2"});

  const auto emb = filter_modes(all, {Mode::EmbA, Mode::EmbB, Mode::EmbC});
  const PairCountReport counts = count_pairs(emb);
  checks.push_back({"emb-pairs", true,
                    "unordered " + std::to_string(counts.all_families.unordered) + ", ordered " +
                        std::to_string(counts.all_families.ordered) + "; without supplementary families: unordered " +
                        std::to_string(counts.original_families.unordered) + ", ordered " +
                        std::to_string(counts.original_families.ordered)});
  checks.push_back({"emb-distinct", true, std::to_string(distinct_betti(emb).size()) + " distinct (b2,b3)"});
  if (const auto cmp = compare_joyce(emb, c.joyce_ptr())) {
    checks.push_back({"emb-vs-joyce", true,
                      "overlap " + std::to_string(cmp->overlap) + ", new " + std::to_string(cmp->new_count)});
  } else {
    checks.push_back({"emb-vs-joyce", true, "NOT_AVAILABLE (no joyce catalog)"});
  }
  return checks;
}

int run_loaded(const ReportRequest& req, const Catalogs& c, std::ostream& out) {
  switch (req.command) {
    case Command::Validate: {
      const auto checks = validate_checks(c);
      write_checks(checks, req.format, out);
      for (const auto& ch : checks) {
        if (!ch.ok) return kExitValidation;
      }
      return kExitOk;
    }
    case Command::Enumerate:
      write_records(select(c, req.mode), req.format, out);
      return kExitOk;
    case Command::BettiList:
      write_pairs(distinct_betti(select(c, req.mode)), req.format, out);
      return kExitOk;
    case Command::Table1:
      write_table(table1(enumerate_emb(c.fano, c.nikulin)), req.format, out);
      return kExitOk;
    case Command::Crosscheck: {
      const auto checks = crosscheck_checks(c);
      write_checks(checks, req.format, out);
      for (const auto& ch : checks) {
        if (!ch.ok) return kExitValidation;
      }
      return kExitOk;
    }
  }
  return kExitValidation;
}

}  // namespace

const std::vector<std::string>& enumeration_modes() {
  static const std::vector<std::string> modes{"emb", "emb-a", "emb-b", "emb-c", "mirror", "seq", "large-rank", "all"};
  return modes;
}

int run(const ReportRequest& request, std::ostream& out, std::ostream& err) {
  Catalogs catalogs;
  try {
    catalogs = load(request);
  } catch (const CatalogIoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const CatalogError& e) {
    err << "invalid catalog: " << e.what() << "\n";
    return kExitValidation;
  }
  banner(catalogs, err);
  try {
    return run_loaded(request, catalogs, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace g2sum
