#pragma once

// Batch driver behind the `indh` executable. Every subcommand produces one
// JSON report; exit status 0 = all checks passed, 2 = a mathematical check
// failed (the report carries the invariant name, a witness and a command
// that reproduces it), 1 = bad input (the report carries the diagnostic).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "indh/io.hpp"

namespace indh::cli {

inline const std::vector<std::string> kCommands = {
    "validate-group", "dual",  "induce", "schur-audit", "transform",
    "norms",          "rank",  "invert", "weil-check"};

struct RunConfig {
  std::string command;
  std::string group;     // "builtin:NAME", "cayley:[[...]]" or a group JSON path
  std::string subgroup;  // see named_subgroup; empty: from the group file, else "whole"
  std::vector<std::string> sigma;  // labels or positions; empty: all of Σ
  std::string tau;
  std::string irreps;    // dual JSON path; empty: catalog
  std::string measure;   // measure JSON path
  std::string function;  // density (transform/norms/invert) or function (weil-check)
  std::string method = "both";  // invert: direct | gram | both
  std::vector<double> p = {1.0, 2.0, -1.0};  // -1 stands for ∞
  std::size_t random = 0;       // random inputs instead of files
  std::size_t algebra_dim = 1;  // algebra size of random inputs
  double tol_structural = 1e-10;
  double tol_decision = 1e-8;
  std::uint64_t seed = 0;
  std::string output;  // empty: stdout
  int verbosity = 0;
};

/// Reads a RunConfig JSON object. Unknown fields raise ParseError.
RunConfig config_from_json(const io::Document& doc);

struct RunResult {
  int exit_code = 0;
  io::Json report;
};

/// Runs one command without touching the output path.
RunResult execute(const RunConfig& config, std::ostream& log);

/// execute() plus the report write (atomic when an output path is set).
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

/// min(hardware threads, INDH_THREADS) with a floor of 1.
std::size_t worker_count();

}  // namespace indh::cli
