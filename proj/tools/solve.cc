#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "cobound/cantor.h"
#include "cobound/coboundary.h"
#include "cobound/diophantine.h"
#include "cobound/errors.h"
#include "cobound/selection.h"
#include "commands.h"

namespace cobound::cli {

namespace {

std::string Approx(double x) { return FormatDecimal(x); }

int SolveDiscreteDoc(const RunConfig& config, const Instance& inst,
                     const DiscreteFunction& f, Json& doc) {
  const DiscreteSolution sol = SolveDiscrete(f, config.norm);
  const Magnitude residual =
      DiscreteResidual(f, sol.g, sol.sigma, config.norm);
  doc["kind"] = "discrete-solution";
  doc["norm"] = NormName(config.norm);
  doc["f"] = EncodeInstance(inst);
  doc["sigma"] = EncodeIndices(sol.sigma);
  doc["g"] = EncodeVectors(sol.g.values);
  doc["certified_bound"] = EncodeMagnitude(sol.certified_bound);
  doc["f_norm"] = EncodeMagnitude(f.SupNorm(config.norm));
  doc["bound_factor"] = EncodeRational(Rational(static_cast<long>(f.dim())));
  doc["residual"] = EncodeMagnitude(residual);
  doc["verified"] = residual.is_zero();
  return residual.is_zero() ? kOk : kVerificationFailed;
}

int SolveStepDoc(const RunConfig& config, const Instance& inst,
                 const StepFunction& f, Json& doc) {
  const StepSolution sol = SolveEqualIntervals(f, config.norm);
  const Magnitude residual = VerifySolution(f, sol.g, sol.T, config.norm);
  doc["kind"] = "step-solution";
  doc["norm"] = NormName(config.norm);
  doc["f"] = EncodeInstance(inst);
  doc["T"] = EncodeExchange(sol.T);
  doc["g"] = EncodeStep(sol.g);
  doc["certified_bound"] = EncodeMagnitude(sol.certified_bound);
  doc["f_norm"] = EncodeMagnitude(f.SupNorm(config.norm));
  doc["bound_factor"] = EncodeRational(Rational(static_cast<long>(f.dim())));
  doc["residual"] = EncodeMagnitude(residual);
  doc["verified"] = residual.is_zero();
  return residual.is_zero() ? kOk : kVerificationFailed;
}

Json EncodeAudit(const TowerAudit& a) {
  Json j;
  j["single_cycles"] = a.single_cycles;
  j["refines"] = a.refines;
  j["level_bounds"] = a.level_bounds;
  j["level_constant"] = a.level_constant;
  j["level_coboundary"] = a.level_coboundary;
  j["telescopes"] = a.telescopes;
  j["residual"] = EncodeMagnitude(a.residual);
  j["f_norm"] = EncodeMagnitude(a.f_norm);
  j["g_norm"] = EncodeMagnitude(a.g_norm);
  j["start_cell_norm"] = EncodeMagnitude(a.start_cell_norm);
  j["a_approx"] = Approx(a.a);
  j["c_v_approx"] = Approx(a.c_v);
  j["global_bound"] = a.global_bound;
  j["start_cell_bound"] = a.start_cell_bound;
  return j;
}

int SolveCantorDoc(const RunConfig& config, const Instance& inst,
                   const CantorStep& f, Json& doc) {
  std::vector<int> schedule;
  if (config.depth) {
    if (*config.depth < 0 || *config.depth > f.depth) {
      throw InvalidArgument("--depth must lie in 0.." +
                            std::to_string(f.depth));
    }
    schedule.resize(*config.depth + 1);
    std::iota(schedule.begin(), schedule.end(), 0);
  } else {
    schedule = ProofSchedule(f, config.norm);
  }
  const TowerSolution tower = BuildTower(f, schedule, config.norm);
  const TowerAudit audit = AuditTower(f, tower, config.norm, config.tolerance);
  const EmbeddedTower e = TowerToIntervalExchange(tower, f);
  const Magnitude embedded = VerifySolution(e.f, e.g, e.T, config.norm);

  doc["kind"] = "tower-solution";
  doc["norm"] = NormName(config.norm);
  doc["f"] = EncodeInstance(inst);
  doc["schedule"] = schedule;
  Json levels = Json::array();
  for (const TowerLevel& level : tower.levels) {
    Json l;
    l["depth"] = level.depth;
    l["cycle"] = EncodeIndices(level.cycle);
    l["h"] = EncodeVectors(level.h);
    l["g"] = EncodeVectors(level.g);
    l["h_norm"] = EncodeMagnitude(level.h_norm);
    l["g_norm"] = EncodeMagnitude(level.g_norm);
    levels.push_back(std::move(l));
  }
  doc["levels"] = std::move(levels);
  doc["successor"] = EncodeIndices(tower.successor);
  doc["g"] = EncodeCantor(tower.g);
  doc["start_branch"] = tower.start_branch + 1;
  doc["audit"] = EncodeAudit(audit);
  doc["embedded_residual"] = EncodeMagnitude(embedded);
  const bool ok = audit.conditions() && audit.residual.is_zero() &&
                  embedded.is_zero() && audit.global_bound &&
                  audit.start_cell_bound;
  doc["verified"] = ok;
  if (!ok) std::cerr << "tower: residual or audit check failed\n";
  return ok ? kOk : kVerificationFailed;
}

int SolveMatrixDoc(const RunConfig& config, const Instance& inst,
                   const MatrixRows& rows, Json& doc) {
  const VectorMatrix m = VectorMatrix::FromRows(rows.rows, config.norm);
  const PermutationFamily family = KwapienPermutations(m);
  const Magnitude recomputed = FamilyDeviation(m, family.perms);
  const double constant = KwapienConstant(m.dim());
  const Magnitude max_norm = m.MaxEntryNorm();
  const bool ok = recomputed == family.achieved_bound &&
                  WithinApprox(recomputed, constant, max_norm,
                               config.tolerance);
  doc["kind"] = "kwapien-solution";
  doc["norm"] = NormName(config.norm);
  doc["matrix"] = EncodeInstance(inst);
  Json perms = Json::array();
  for (const auto& p : family.perms) perms.push_back(EncodeIndices(p));
  doc["perms"] = std::move(perms);
  doc["achieved_bound"] = EncodeMagnitude(family.achieved_bound);
  doc["max_entry_norm"] = EncodeMagnitude(max_norm);
  doc["constant_approx"] = Approx(constant);
  doc["limit_approx"] = Approx(constant * max_norm.approx());
  doc["verified"] = ok;
  return ok ? kOk : kVerificationFailed;
}

int SolveDiophantineDoc(const RunConfig& config, const Instance& inst,
                        const DiophantineInstance& d, Json& doc) {
  const Rational eps = Rational::Parse(config.eps);
  const DiophantineResult r = DiophantineSigned(d.x, d.v, eps, config.q_max);
  Rational sup(0);
  for (const auto& w : r.w.entries()) sup = std::max(sup, w.abs());
  const Rational limit = eps / Rational(r.q);
  const Rational inner = Dot(r.w, d.v);
  const bool ok = sup < limit && inner.sign() > 0;
  doc["kind"] = "diophantine-solution";
  doc["instance"] = EncodeInstance(inst);
  doc["eps"] = EncodeRational(eps);
  doc["q_max"] = config.q_max;
  doc["q"] = r.q;
  Json p = Json::array();
  for (const auto& x : r.p) p.push_back(EncodeRational(x));
  doc["p"] = std::move(p);
  doc["w"] = EncodeVector(r.w);
  doc["w_sup"] = EncodeRational(sup);
  doc["eps_over_q"] = EncodeRational(limit);
  doc["inner_product"] = EncodeRational(inner);
  doc["verified"] = ok;
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

Json ReadDocument(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ParseDocument(ss.str());
}

int CmdSolve(const RunConfig& config, Json& doc) {
  const Instance inst = DecodeInstance(ReadDocument(config.input));
  if (const auto* f = std::get_if<DiscreteFunction>(&inst.data)) {
    return SolveDiscreteDoc(config, inst, *f, doc);
  }
  if (const auto* f = std::get_if<StepFunction>(&inst.data)) {
    return SolveStepDoc(config, inst, *f, doc);
  }
  if (const auto* f = std::get_if<CantorStep>(&inst.data)) {
    return SolveCantorDoc(config, inst, *f, doc);
  }
  if (const auto* m = std::get_if<MatrixRows>(&inst.data)) {
    return SolveMatrixDoc(config, inst, *m, doc);
  }
  if (const auto* d = std::get_if<DiophantineInstance>(&inst.data)) {
    return SolveDiophantineDoc(config, inst, *d, doc);
  }
  throw ParseError("solve does not accept instances of kind \"" + inst.kind +
                   "\"");
}

}  // namespace cobound::cli
