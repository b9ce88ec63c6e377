#include <cmath>
#include <iostream>
#include <string>
#include <utility>

#include "cobound/counterexample.h"
#include "cobound/errors.h"
#include "cobound/oracle_search.h"
#include "cobound/selection.h"
#include "cobound/steinitz.h"
#include "commands.h"

namespace cobound::cli {

namespace {

int SteinitzDoc(const std::vector<RationalVector>& vs, NormKind kind,
                Json& doc) {
  const OracleResult opt = SteinitzOracle(vs, kind);
  const RearrangementResult cons = SteinitzRearrange(vs, kind);
  const Magnitude cons_prefix = MaxPrefixNorm(vs, cons.permutation, kind);
  const Magnitude m = MaxNorm(vs, kind);
  const Rational d(static_cast<long>(vs.front().dim()));
  const bool ok = opt.optimal_bound <= cons_prefix && Within(cons_prefix, d, m);
  doc["kind"] = "steinitz-oracle";
  doc["norm"] = NormName(kind);
  doc["n"] = vs.size();
  doc["optimal_bound"] = EncodeMagnitude(opt.optimal_bound);
  doc["witness"] = EncodeIndices(opt.witness);
  doc["constructive_bound"] = EncodeMagnitude(cons_prefix);
  doc["constructive_permutation"] = EncodeIndices(cons.permutation);
  doc["max_norm"] = EncodeMagnitude(m);
  doc["d_times_max_norm"] = EncodeMagnitude(m.scaled(d));
  doc["ok"] = ok;
  return ok ? kOk : kVerificationFailed;
}

int SelectionDoc(const VectorSets& sets, NormKind kind, Json& doc) {
  const SelectionOracleResult opt = SelectionOracle(sets.sets, kind);
  const SelectionResult bg = BgSelect(sets.sets, kind);
  Magnitude m;
  for (const auto& s : sets.sets) m = std::max(m, MaxNorm(s, kind));
  const Rational two_d(2 * static_cast<long>(sets.sets.front().front().dim()));
  const bool ok = opt.optimal_bound <= bg.achieved_bound &&
                  Within(bg.achieved_bound, two_d, m);
  doc["kind"] = "selection-oracle";
  doc["norm"] = NormName(kind);
  doc["optimal_bound"] = EncodeMagnitude(opt.optimal_bound);
  doc["witness"] = EncodeIndices(opt.witness);
  doc["constructive_bound"] = EncodeMagnitude(bg.achieved_bound);
  doc["constructive_choice"] = EncodeIndices(bg.choice);
  doc["max_norm"] = EncodeMagnitude(m);
  doc["two_d_times_max_norm"] = EncodeMagnitude(m.scaled(two_d));
  doc["ok"] = ok;
  return ok ? kOk : kVerificationFailed;
}

int SearchDoc(const RunConfig& config, Json& doc) {
  SearchConfig sc;
  sc.seed = config.seed;
  sc.dim = config.dim;
  sc.trials = config.trials;
  sc.max_n = config.max_n;
  sc.kind = config.norm;
  const SearchReport report = OracleSearch(sc);
  Json running = Json::array();
  for (const auto& r : report.running_max_sq) {
    running.push_back(FormatDecimal(std::sqrt(r.to_double())));
  }
  const SearchRecord& best = report.best;
  // Planar Euclidean families never exceed √5/2 (ratio² ≤ 5/4).
  const bool envelope = !(sc.dim == 2 && sc.kind == NormKind::kL2) ||
                        best.ratio_sq <= Rational(5, 4);
  doc["kind"] = "oracle-search";
  doc["norm"] = NormName(sc.kind);
  doc["seed"] = std::to_string(sc.seed);
  doc["dim"] = sc.dim;
  doc["trials"] = sc.trials;
  doc["max_n"] = sc.max_n;
  doc["running_max_approx"] = std::move(running);
  Json b;
  b["trial"] = best.trial + 1;
  b["family"] = best.family;
  b["vectors"] = EncodeVectors(best.vectors);
  b["optimal_bound"] = EncodeMagnitude(best.optimum);
  b["max_norm"] = EncodeMagnitude(best.max_norm);
  b["ratio_squared"] = EncodeRational(best.ratio_sq);
  b["ratio_approx"] = FormatDecimal(std::sqrt(best.ratio_sq.to_double()));
  doc["best"] = std::move(b);
  doc["within_envelope"] = envelope;
  doc["ok"] = envelope;
  return envelope ? kOk : kVerificationFailed;
}

}  // namespace

int CmdOracle(const RunConfig& config, Json& doc) {
  if (config.input.empty()) return SearchDoc(config, doc);
  const Instance inst = DecodeInstance(ReadDocument(config.input));
  if (const auto* vs = std::get_if<std::vector<RationalVector>>(&inst.data)) {
    return SteinitzDoc(*vs, config.norm, doc);
  }
  if (const auto* sets = std::get_if<VectorSets>(&inst.data)) {
    return SelectionDoc(*sets, config.norm, doc);
  }
  throw ParseError("oracle accepts \"vectors\" or \"sets\" documents");
}

int CmdCounterexample(const RunConfig& config, Json& doc) {
  if (config.n_min < 1 || config.n_max < config.n_min ||
      config.n_max > kMaxSimplexExponent) {
    throw DimensionTooLarge("counterexample: need 1 <= nmin <= nmax <= " +
                            std::to_string(kMaxSimplexExponent));
  }
  Json rows = Json::array();
  bool ok = true;
  bool monotone = true;
  double previous = 0;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    const SimplexReport r = SimplexCounterexample(n, config.seed + n, config.samples);
    const Rational expected(r.d - 1, r.d);
    const double root = std::sqrt(r.d / 8.0);
    if (n > config.n_min && !(root > previous)) monotone = false;
    previous = root;
    Json row;
    row["n"] = n;
    row["d"] = r.d;
    row["vertex_norm_sq"] = EncodeRational(r.vertex_norm_sq);
    row["expected_norm_sq"] = EncodeRational(expected);
    row["norm_sq_matches"] = r.vertex_norm_sq == expected;
    row["sums_to_zero"] = r.sums_to_zero;
    row["method"] = r.exhaustive ? "exhaustive" : "sampled";
    row["samples"] = r.samples;
    row["min_half_sum_sq"] = EncodeRational(r.minimum.norm_sq);
    row["min_half_sum_sq_approx"] = FormatDecimal(r.minimum.norm_sq.to_double());
    row["witness_counts"] = r.minimum.counts;
    row["threshold_d_over_8"] = EncodeRational(r.threshold);
    row["sqrt_d_over_8_approx"] = FormatDecimal(root);
    row["above_threshold"] = r.above_threshold;
    ok = ok && r.above_threshold && r.sums_to_zero &&
         r.vertex_norm_sq == expected;
    rows.push_back(std::move(row));
  }
  doc["kind"] = "simplex-counterexample";
  doc["seed"] = std::to_string(config.seed);
  doc["samples"] = config.samples;
  doc["rows"] = std::move(rows);
  doc["sqrt_d_over_8_increasing"] = monotone;
  doc["ok"] = ok && monotone;
  return ok && monotone ? kOk : kVerificationFailed;
}

}  // namespace cobound::cli
