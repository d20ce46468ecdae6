#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace g2sum {

enum class Command { Validate, Enumerate, Table1, BettiList, Crosscheck };
enum class Format { Csv, Json, Text };

/// One CLI invocation.
struct ReportRequest {
  Command command = Command::Validate;
  std::string mode;  // Enumerate / BettiList: see enumeration_modes()
  std::filesystem::path nikulin;
  std::filesystem::path fano;
  std::optional<std::filesystem::path> joyce;
  Format format = Format::Text;
};

/// emb, emb-a, emb-b, emb-c, mirror, seq, large-rank, all.
const std::vector<std::string>& enumeration_modes();

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

/// Data goes to `out`, diagnostics and the completeness banner to `err`.
int run(const ReportRequest& request, std::ostream& out, std::ostream& err);

}  // namespace g2sum
