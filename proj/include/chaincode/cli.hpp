#pragma once

// Command-line front end: configuration, report construction and output.
// Report builders return JSON documents so tests and the acceptance runner can
// inspect exactly what the tool prints.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chaincode/defining_sets.hpp"

namespace chaincode::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitNoTheorem = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { table, json, csv };

struct RunConfig {
  std::optional<SetKind> set;
  std::uint32_t p = 0, m = 0, k = 2;
  std::uint64_t nprime = 0;
  int threads = 0;
  Format format = Format::table;
  std::string output;
  bool timing = false;
};

// Rejects invalid combinations before any computation. needs_set: the command
// builds a code.
void validate(const RunConfig& c, bool needs_set);

// Threads from CHAINCODE_THREADS, 0 (runtime default) when unset.
int default_threads();

struct Report {
  Json body;
  int status = kExitOk;
};

Json parameter_echo(const RunConfig& c);

Report weights_report(const RunConfig& c);
Report optimal_report(const RunConfig& c);
Report dual_report(const RunConfig& c);
Report minimal_report(const RunConfig& c);
Report gauss_report(const RunConfig& c);
Report action_report(const RunConfig& c, std::uint64_t trials, std::uint64_t seed);

struct MatrixCell {
  SetKind set;
  std::uint32_t p, m, k;
  std::uint64_t nprime = 0;
};
// The fixed desk-scale matrix.
std::vector<MatrixCell> desk_matrix();
Report matrix_report(int threads, bool timing, double cell_timeout_s);

// Plain-text rendering of any report; CSV is defined for weights reports.
std::string render_table(const Json& body);
std::string render_csv(const Json& body);

// Entry point used by the binary; returns the exit status.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace chaincode::cli
