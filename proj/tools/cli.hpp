#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace fbal::cli {

inline constexpr const char* kReportSchema = "fbal.report/1";

enum ExitCode { kVerified = 0, kFalsified = 1, kInputError = 2 };

struct RunConfig {
  std::string command;  // "check" or "sweep"
  std::string what;     // check: hom, ext, tor, gen, cogen, fb, duality, symmetry, extyon, isoext
  std::uint32_t prime = 101;
  std::size_t k = 1;
  std::size_t k_max = 3;
  std::uint64_t seed = 0;
  std::string corpus;  // "truncpoly:3", "a_n:2", "points:2"
  std::string spec;    // path to an fbal.quiver/1 file with modules
  std::string module = "full";
  std::string target;  // empty: the indecomposables (or the modules of a spec)
  std::string out;
};

struct Outcome {
  int code = kVerified;
  nlohmann::json report;
};

/// Splits "a,b,[1,2]" on top-level commas.
std::vector<std::string> split_names(const std::string& s);

Outcome cmd_check(const RunConfig& c);
Outcome cmd_sweep(const RunConfig& c);

/// Parses argv-style arguments (without the program name), runs the command
/// and writes the JSON report to `out` (or the --out file). Diagnostics for
/// usage errors go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fbal::cli
