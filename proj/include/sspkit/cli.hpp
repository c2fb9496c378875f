#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sspkit/classifier.hpp"
#include "sspkit/report.hpp"

namespace ssp {

enum class Command { Registry, Classify, Table, Symbols, Cell, Conj, Verify, Degree };
enum class Format { Json, Tsv };

struct RunConfig {
  Command command = Command::Registry;
  /// Type name, e.g. "B", "B6", "I2(8)".
  std::string type;
  /// Cartan subscript (p for I2).
  std::optional<unsigned> rank;
  unsigned max_n = 12;
  unsigned max_rank = 100;
  unsigned long budget = 10'000'000;
  std::optional<Format> format;
  std::optional<std::string> output;
  std::string suite = "all";
  bool prime = false;
  /// symbols: shift-reduced enumeration instead of the 0-not-in-Y one.
  bool full = false;
  /// conj: enumerate W(E7) as well.
  bool exhaustive = false;
  /// degree: partition for the type-A q-hook formula.
  std::vector<unsigned> partition;
  /// Test hook, see set_embedded_corruption.
  bool corrupt_embedded = false;
};

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Executes one command. The report goes to `out` (or the output file),
/// diagnostics to `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (without the program name) and runs. Unknown flags and bad
/// values return kExitUsage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes `content` to `path` through a temporary file and rename.
void atomic_write(const std::string& path, const std::string& content);

nlohmann::json classify_json(const WeylType& t);
std::string table_tsv(unsigned max_rank);

}  // namespace ssp
