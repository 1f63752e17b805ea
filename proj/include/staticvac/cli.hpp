#pragma once

// Command-line front end. Parsing and execution live in the library so the
// tool's behavior is testable in-process; tools/staticvac.cpp only forwards.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace staticvac::cli {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr const char* kOutputDirEnv = "STATICVAC_OUTPUT_DIR";

enum class Subcommand { Models, Figure1, Classify, VirtualMass, Verify, Shoot, Hawking };
enum class Format { Csv, Json };

std::string_view to_string(Subcommand sub);

struct CommandConfig {
  Subcommand subcommand = Subcommand::Models;
  int n = 3;
  std::optional<std::string> kind;  // hawking: model kind
  std::optional<double> mass;
  std::optional<int> genus;
  std::vector<double> kappas;
  std::vector<double> masses;  // shoot: mass grid
  std::size_t points = 200;    // figure1: masses; hawking: levels
  double step = 0.0;           // shoot: 0 picks min(1e-4, 1e-3 r0)
  double t_max = 10.0;         // hawking: levels span (u_min, u_min + t_max)
  std::optional<double> tol;   // classify / virtual-mass
  Format format = Format::Csv;
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> csv_dir;         // verify
  std::optional<std::filesystem::path> trajectory_dir;  // shoot
};

nlohmann::json to_json(const CommandConfig& cfg);

// Exit status: 0 success, 1 invariant breach, 2 invalid arguments or parameters.
int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and runs the subcommand.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace staticvac::cli
