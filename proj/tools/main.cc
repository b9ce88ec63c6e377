#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cobound/errors.h"
#include "commands.h"

namespace {

using cobound::cli::RunConfig;

void AddCommon(CLI::App* sub, RunConfig& config, std::string& norm) {
  sub->add_option("--norm", norm, "l1, l2 or linf")
      ->check(CLI::IsMember({"l1", "l2", "linf"}));
  sub->add_option("--out", config.out, "write the document here");
  sub->add_option("--tolerance", config.tolerance,
                  "absolute tolerance for irrational thresholds");
}

int Emit(const RunConfig& config, const cobound::Json& doc) {
  const std::string text = cobound::DumpDocument(doc);
  if (config.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(config.out, std::ios::binary);
  os << text;
  if (!os) {
    std::cerr << "error: cannot write " << config.out << "\n";
    return cobound::cli::kParse;
  }
  return 0;
}

int Run(const RunConfig& config) {
  using namespace cobound::cli;
  cobound::Json doc;
  int code = kOk;
  try {
    if (config.command == "solve") {
      code = CmdSolve(config, doc);
    } else if (config.command == "verify") {
      code = CmdVerify(config, doc);
    } else if (config.command == "oracle") {
      code = CmdOracle(config, doc);
    } else {
      code = CmdCounterexample(config, doc);
    }
  } catch (const cobound::NotMeanZero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotMeanZero;
  } catch (const cobound::RowNotMeanZero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotMeanZero;
  } catch (const cobound::BoundViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBoundViolated;
  } catch (const cobound::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const cobound::InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const cobound::EmptyInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const cobound::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  const int written = Emit(config, doc);
  return written != 0 ? written : code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coboundary solver, verifier and rearrangement oracles"};
  app.require_subcommand(1);
  RunConfig config;
  std::string norm = "l2";
  std::string seed = "0";

  auto* solve = app.add_subcommand("solve", "solve an instance document");
  AddCommon(solve, config, norm);
  solve->add_option("input", config.input, "instance document")->required();
  solve->add_option("--depth", config.depth,
                    "cantor: use every level 0..K instead of the proof schedule");
  solve->add_option("--eps", config.eps, "diophantine: eps as p/q");
  solve->add_option("--qmax", config.q_max, "diophantine: largest q tried");

  auto* verify = app.add_subcommand("verify", "verify a solution document");
  AddCommon(verify, config, norm);
  verify->add_option("input", config.input, "solution document")->required();
  verify->add_option("--kmax", config.k_max,
                     "Browder sweep length (default 4n)");

  auto* oracle = app.add_subcommand(
      "oracle", "exact Steinitz / selection optimum, or a seeded search");
  AddCommon(oracle, config, norm);
  oracle->add_option("input", config.input, "vectors or sets document");
  oracle->add_option("--seed", seed, "search seed (64-bit)");
  oracle->add_option("--dim", config.dim, "search dimension");
  oracle->add_option("--trials", config.trials, "search trials");
  oracle->add_option("--max-n", config.max_n, "largest family in the search");

  auto* counter = app.add_subcommand(
      "counterexample", "simplex half-sum table for d = 2^n");
  AddCommon(counter, config, norm);
  counter->add_option("--seed", seed, "sampling seed (64-bit)");
  counter->add_option("--nmin", config.n_min, "first n");
  counter->add_option("--nmax", config.n_max, "last n");
  counter->add_option("--samples", config.samples,
                      "random multisets per sampled row");

  try {
    app.parse(argc, argv);
    config.norm = cobound::ParseNormKind(norm);
    config.seed = std::stoull(seed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cobound::cli::kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: bad option value: " << e.what() << "\n";
    return cobound::cli::kParse;
  }
  config.command = app.get_subcommands().front()->get_name();
  return Run(config);
}
