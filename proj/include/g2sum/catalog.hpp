#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace g2sum {

/// Malformed or invariant-violating catalog content. `line` is 1-based, 0
/// when the problem concerns the whole file.
class CatalogError : public std::runtime_error {
 public:
  CatalogError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The file could not be opened or read.
class CatalogIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Isomorphism class (r, a, delta) of the invariant lattice of a
/// non-symplectic involution.
struct NikulinTriple {
  int r = 0;
  int a = 0;
  int delta = 0;
  std::string source;

  auto key() const { return std::tuple(r, a, delta); }
  friend bool operator==(const NikulinTriple& x, const NikulinTriple& y) { return x.key() == y.key(); }
  friend auto operator<=>(const NikulinTriple& x, const NikulinTriple& y) { return x.key() <=> y.key(); }
};

/// Throws CatalogError (line 0) naming the first violated rule.
void validate_triple(const NikulinTriple& t);

struct FanoFamily {
  std::string id;
  int b2 = 0;
  int b3 = 0;
  int minus_k3 = 0;
  std::string source;

  /// Families added after the original classification carry a source
  /// beginning with "supplement:".
  bool supplementary() const { return source.starts_with("supplement:"); }
};

void validate_family(const FanoFamily& f);

struct NikulinCatalog {
  std::vector<NikulinTriple> triples;  // sorted by (r, a, delta)
  bool complete = false;

  bool contains(int r, int a, int delta) const;
};

struct FanoCatalog {
  std::vector<FanoFamily> families;  // file order
  bool complete_rank1 = false;
  bool complete = false;

  std::vector<FanoFamily> with_b2(int b2) const;
};

struct JoyceCatalog {
  std::set<std::pair<int, int>> pairs;
  bool complete = false;
};

inline constexpr std::size_t kNikulinTripleCount = 75;
inline constexpr std::size_t kFanoRankOneCount = 17;
inline constexpr std::size_t kJoycePairCount = 252;

NikulinCatalog load_nikulin(const std::filesystem::path& path);
FanoCatalog load_fano(const std::filesystem::path& path);
JoyceCatalog load_joyce(const std::filesystem::path& path);

NikulinCatalog parse_nikulin(const std::string& text);
FanoCatalog parse_fano(const std::string& text);
JoyceCatalog parse_joyce(const std::string& text);

struct FixedLocus {
  enum class Kind { Empty, TwoEllipticCurves, Generic };
  Kind kind = Kind::Generic;
  int genus = 0;           // Generic only
  int rational_curves = 0;  // Generic only
};

FixedLocus fixed_locus(const NikulinTriple& t);

/// (20 - r, a, delta) when the mirror exclusions pass and the partner is in
/// the catalog.
std::optional<NikulinTriple> mirror_partner(const NikulinTriple& t, const NikulinCatalog& catalog);

/// Unordered mirror pairs {t, partner}, each listed once with t <= partner.
std::vector<std::pair<NikulinTriple, NikulinTriple>> mirror_pairs(const NikulinCatalog& catalog);

}  // namespace g2sum
