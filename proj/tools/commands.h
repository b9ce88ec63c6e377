#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cobound/norm.h"
#include "cobound/serialize.h"

namespace cobound::cli {

enum ExitCode {
  kOk = 0,
  kVerificationFailed = 1,
  kNotMeanZero = 2,
  kParse = 3,
  kBoundViolated = 4,
  kDomain = 5,
};

struct RunConfig {
  std::string command;
  std::string input;  // empty: none given
  std::string out;    // empty: standard output
  NormKind norm = NormKind::kL2;
  int dim = 2;
  std::uint64_t seed = 0;
  std::optional<int> depth;
  std::optional<int> k_max;
  long q_max = 1000;
  std::string eps = "1/10";
  double tolerance = kIrrationalTolerance;
  int trials = 100;
  int max_n = 8;
  int n_min = 1;
  int n_max = 6;
  int samples = 64;
};

// Each command fills `doc` and returns the exit code it earned. Library
// errors propagate to the caller, which maps them onto exit codes.
int CmdSolve(const RunConfig& config, Json& doc);
int CmdVerify(const RunConfig& config, Json& doc);
int CmdOracle(const RunConfig& config, Json& doc);
int CmdCounterexample(const RunConfig& config, Json& doc);

Json ReadDocument(const std::string& path);

}  // namespace cobound::cli
