// g2sum: catalog validation and twisted-connected-sum Betti enumeration.

#include "g2sum/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of twisted connected sums from K3 building blocks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string nikulin;
  std::string fano;
  std::string joyce;
  std::string format = "text";

  const char* data_dir = std::getenv("G2SUM_DATA_DIR");
  if (data_dir != nullptr && *data_dir != '\0') {
    const fs::path dir(data_dir);
    nikulin = (dir / "nikulin.csv").string();
    fano = (dir / "fano.csv").string();
    if (fs::exists(dir / "joyce.csv")) joyce = (dir / "joyce.csv").string();
  }

  app.add_option("--nikulin", nikulin, "non-symplectic involution triples (r,a,delta,source)");
  app.add_option("--fano", fano, "Fano threefold families (id,b2,b3,minus_k3,source)");
  app.add_option("--joyce", joyce, "Joyce (b2,b3) pairs for comparison");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();

  std::string mode;
  auto* validate = app.add_subcommand("validate", "check catalog invariants");
  auto* enumerate = app.add_subcommand("enumerate", "list every admissible pair in a mode");
  enumerate->add_option("mode", mode)->required()->check(CLI::IsMember(g2sum::enumeration_modes()));
  auto* table1 = app.add_subcommand("table1", "b3 values for each even b2 from the embedding clauses");
  auto* betti = app.add_subcommand("betti-list", "distinct (b2,b3) in a mode");
  betti->add_option("mode", mode)->required()->check(CLI::IsMember(g2sum::enumeration_modes()));
  auto* crosscheck = app.add_subcommand("crosscheck", "formula identities and global totals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage errors share the validation exit code
    const int rc = app.exit(e, std::cerr, std::cerr);
    return rc == 0 ? 0 : g2sum::kExitValidation;
  }

  if (nikulin.empty() || fano.empty()) {
    std::cerr << "error: --nikulin and --fano are required (or set G2SUM_DATA_DIR)\n";
    return g2sum::kExitIo;
  }

  g2sum::ReportRequest req;
  if (*validate) req.command = g2sum::Command::Validate;
  if (*enumerate) req.command = g2sum::Command::Enumerate;
  if (*table1) req.command = g2sum::Command::Table1;
  if (*betti) req.command = g2sum::Command::BettiList;
  if (*crosscheck) req.command = g2sum::Command::Crosscheck;
  req.mode = mode;
  req.nikulin = nikulin;
  req.fano = fano;
  if (!joyce.empty()) req.joyce = joyce;
  static const std::map<std::string, g2sum::Format> formats{
      {"csv", g2sum::Format::Csv}, {"json", g2sum::Format::Json}, {"text", g2sum::Format::Text}};
  req.format = formats.at(format);

  return g2sum::run(req, std::cout, std::cerr);
}
