#pragma once

#include "lagsob/json_io.hpp"
#include "lagsob/poly.hpp"
#include "lagsob/sobolev.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lagsob::cli {

enum class Command { Construct, Operator, Awr, Verify, ReproduceExample };
enum class Format { Json, Text };

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Verify;
  SobolevSpec spec;
  Poly S = Poly::constant(1);
  std::size_t N = 10;
  std::string output;  // empty: the output stream passed to run()
  Format format = Format::Json;
  std::size_t threads = 1;
};

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  std::string residual;  // "0" when the check holds
  bool pass = false;
};

struct Report {
  std::vector<Check> checks;
  /// phase name -> duration in microseconds
  std::vector<std::pair<std::string, long long>> timings;

  bool passed() const;
  void add(std::string name, std::string expected, std::string actual, std::string residual, bool pass);
  Json to_json() const;
};

std::optional<Command> parse_command(const std::string& name);

/// Full pipeline report for `config` (orthogonality, eigen, degree and
/// order checks up to config.N).
Report verify(const RunConfig& config);

/// Golden comparison for the worked alpha = 3, m = 3 instance.
Report reproduce_example(std::size_t threads = 1);

/// Executes a parsed configuration. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv-level entry point used by the lagsob executable.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lagsob::cli
