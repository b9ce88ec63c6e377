#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "cobound/cantor.h"
#include "cobound/coboundary.h"
#include "cobound/errors.h"
#include "cobound/selection.h"
#include "commands.h"

namespace cobound::cli {

namespace {

const Json& At(const Json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw ParseError(std::string("solution lacks \"") + name + "\"");
  }
  return *it;
}

bool IsPermutation(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  for (int i : p) {
    if (i < 0 || static_cast<std::size_t>(i) >= p.size() || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

// Browder sweep over X = [0,1) against 2‖g‖.
Json Browder(const StepFunction& f, const IntervalExchange& T,
             const Magnitude& g_norm, int k_max, NormKind kind, bool& ok) {
  const std::vector<Interval> whole{{Rational(0), Rational(1)}};
  const std::vector<Magnitude> sweep = BrowderSweep(f, T, whole, k_max, kind);
  Json approx = Json::array();
  bool monotone = true;
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    approx.push_back(FormatDecimal(sweep[k].approx()));
    if (k > 0 && sweep[k] < sweep[k - 1]) monotone = false;
  }
  const bool within = Within(sweep.back(), Rational(2), g_norm);
  ok = ok && within && monotone;
  Json j;
  j["k_max"] = k_max;
  j["sweep_approx"] = std::move(approx);
  j["max"] = EncodeMagnitude(sweep.back());
  j["limit"] = EncodeMagnitude(g_norm.scaled(Rational(2)));
  j["monotone"] = monotone;
  j["within_limit"] = within;
  return j;
}

int VerifyDiscrete(const RunConfig& config, const Json& sol, NormKind kind,
                   Json& doc) {
  const Instance inst = DecodeInstance(At(sol, "f"));
  const auto* f = std::get_if<DiscreteFunction>(&inst.data);
  if (!f) throw ParseError("discrete solution needs a discrete f");
  const std::vector<int> sigma = DecodeIndices(At(sol, "sigma"));
  DiscreteFunction g{DecodeVectors(At(sol, "g"))};
  if (sigma.size() != f->size() || g.size() != f->size()) {
    throw ParseError("sigma, g and f differ in length");
  }
  Json checks;
  const bool cycle = IsSingleCycle(sigma);
  checks["single_cycle"] = cycle;
  bool ok = cycle;
  const Magnitude g_norm = g.SupNorm(kind);
  const bool bound =
      Within(g_norm, Rational(static_cast<long>(f->dim())), f->SupNorm(kind));
  checks["g_within_d_f"] = bound;
  ok = ok && bound;
  if (cycle) {
    const Magnitude residual = DiscreteResidual(*f, g, sigma, kind);
    checks["residual_zero"] = residual.is_zero();
    doc["residual"] = EncodeMagnitude(residual);
    ok = ok && residual.is_zero();
    const int k_max = config.k_max.value_or(4 * static_cast<int>(f->size()));
    doc["browder"] = Browder(StepFunction::EqualIntervals(f->values),
                             IntervalExchange::FromCellPermutation(sigma),
                             g_norm, k_max, kind, ok);
  }
  doc["checks"] = std::move(checks);
  doc["ok"] = ok;
  return ok ? kOk : kVerificationFailed;
}

int VerifyStep(const RunConfig& config, const Json& sol, NormKind kind,
               Json& doc) {
  const Instance inst = DecodeInstance(At(sol, "f"));
  const auto* f = std::get_if<StepFunction>(&inst.data);
  if (!f) throw ParseError("step solution needs a step f");
  const IntervalExchange T = DecodeExchange(At(sol, "T"));
  const StepFunction g = DecodeStep(At(sol, "g"));
  const Magnitude residual = VerifySolution(*f, g, T, kind);
  const Magnitude g_norm = g.SupNorm(kind);
  Json checks;
  checks["residual_zero"] = residual.is_zero();
  const bool bound =
      Within(g_norm, Rational(static_cast<long>(f->dim())), f->SupNorm(kind));
  checks["g_within_d_f"] = bound;
  bool ok = residual.is_zero() && bound;
  doc["residual"] = EncodeMagnitude(residual);
  const int k_max = config.k_max.value_or(4 * static_cast<int>(f->size()));
  doc["browder"] = Browder(*f, T, g_norm, k_max, kind, ok);
  doc["checks"] = std::move(checks);
  doc["ok"] = ok;
  return ok ? kOk : kVerificationFailed;
}

int VerifyTower(const RunConfig& config, const Json& sol, NormKind kind,
                Json& doc) {
  const Instance inst = DecodeInstance(At(sol, "f"));
  const auto* f = std::get_if<CantorStep>(&inst.data);
  if (!f) throw ParseError("tower solution needs a cantor f");
  TowerSolution tower;
  for (const auto& s : At(sol, "schedule")) {
    if (!s.is_number_integer()) throw ParseError("schedule entries are integers");
    tower.schedule.push_back(s.get<int>());
  }
  for (const auto& l : At(sol, "levels")) {
    TowerLevel level;
    const Json& depth = At(l, "depth");
    if (!depth.is_number_integer()) throw ParseError("level depth is an integer");
    level.depth = depth.get<int>();
    if (level.depth < 0 || level.depth > f->depth) {
      throw ParseError("level depth outside the function's depth");
    }
    level.cycle = DecodeIndices(At(l, "cycle"));
    level.h = DecodeVectors(At(l, "h"));
    level.g = DecodeVectors(At(l, "g"));
    tower.levels.push_back(std::move(level));
  }
  tower.successor = DecodeIndices(At(sol, "successor"));
  tower.g = DecodeCantor(At(sol, "g"));
  const Json& start = At(sol, "start_branch");
  if (!start.is_number_integer() || start.get<int>() < 1 ||
      start.get<int>() > f->q) {
    throw ParseError("start_branch must lie in 1..q");
  }
  tower.start_branch = start.get<int>() - 1;

  const TowerAudit a = AuditTower(*f, tower, kind, config.tolerance);
  Json checks;
  checks["single_cycles"] = a.single_cycles;
  checks["refines"] = a.refines;
  checks["level_bounds"] = a.level_bounds;
  checks["level_constant"] = a.level_constant;
  checks["level_coboundary"] = a.level_coboundary;
  checks["telescopes"] = a.telescopes;
  checks["residual_zero"] = a.residual.is_zero();
  checks["global_bound"] = a.global_bound;
  checks["start_cell_bound"] = a.start_cell_bound;
  bool ok = a.conditions() && a.residual.is_zero() && a.global_bound &&
            a.start_cell_bound;
  doc["residual"] = EncodeMagnitude(a.residual);
  if (ok) {
    const EmbeddedTower e = TowerToIntervalExchange(tower, *f);
    const Magnitude embedded = VerifySolution(e.f, e.g, e.T, kind);
    checks["embedded_residual_zero"] = embedded.is_zero();
    ok = embedded.is_zero();
    const int k_max =
        config.k_max.value_or(4 * static_cast<int>(f->cells()));
    doc["browder"] = Browder(e.f, e.T, e.g.SupNorm(kind), k_max, kind, ok);
  }
  doc["checks"] = std::move(checks);
  doc["ok"] = ok;
  return ok ? kOk : kVerificationFailed;
}

int VerifyKwapien(const RunConfig& config, const Json& sol, NormKind kind,
                  Json& doc) {
  const Instance inst = DecodeInstance(At(sol, "matrix"));
  const auto* rows = std::get_if<MatrixRows>(&inst.data);
  if (!rows) throw ParseError("kwapien solution needs a matrix");
  const VectorMatrix m = VectorMatrix::FromRows(rows->rows, kind);
  std::vector<std::vector<int>> perms;
  for (const auto& p : At(sol, "perms")) perms.push_back(DecodeIndices(p));
  bool shape = static_cast<int>(perms.size()) == m.rows();
  for (const auto& p : perms) {
    shape = shape && static_cast<int>(p.size()) == m.cols() && IsPermutation(p);
  }
  Json checks;
  checks["permutations"] = shape;
  bool ok = shape;
  if (shape) {
    const Magnitude dev = FamilyDeviation(m, perms);
    const bool within = WithinApprox(dev, KwapienConstant(m.dim()),
                                     m.MaxEntryNorm(), config.tolerance);
    checks["within_constant"] = within;
    doc["deviation"] = EncodeMagnitude(dev);
    ok = within;
  }
  doc["checks"] = std::move(checks);
  doc["ok"] = ok;
  return ok ? kOk : kVerificationFailed;
}

int VerifyDiophantine(const Json& sol, Json& doc) {
  const Instance inst = DecodeInstance(At(sol, "instance"));
  const auto* d = std::get_if<DiophantineInstance>(&inst.data);
  if (!d) throw ParseError("diophantine solution needs a diophantine instance");
  const Rational eps = DecodeRational(At(sol, "eps"));
  const Json& qj = At(sol, "q");
  if (!qj.is_number_integer() || qj.get<long>() < 1) {
    throw ParseError("q must be a positive integer");
  }
  const Rational q(qj.get<long>());
  std::vector<Rational> p;
  for (const auto& e : At(sol, "p")) p.push_back(DecodeRational(e));
  if (p.size() != d->x.size() || d->v.dim() != d->x.size()) {
    throw ParseError("p, x and v differ in length");
  }
  std::vector<Rational> w(p.size());
  bool integral = true;
  Rational sup(0);
  for (std::size_t l = 0; l < p.size(); ++l) {
    integral = integral && p[l].is_integer();
    w[l] = p[l] / q - d->x[l];
    sup = std::max(sup, w[l].abs());
  }
  const Rational inner = Dot(RationalVector(w), d->v);
  Json checks;
  checks["p_integral"] = integral;
  checks["w_small"] = sup < eps / q;
  checks["inner_positive"] = inner.sign() > 0;
  const bool ok = integral && sup < eps / q && inner.sign() > 0;
  doc["checks"] = std::move(checks);
  doc["ok"] = ok;
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int CmdVerify(const RunConfig& config, Json& doc) {
  const Json sol = ReadDocument(config.input);
  const Json& kind_field = At(sol, "kind");
  if (!kind_field.is_string()) throw ParseError("\"kind\" must be a string");
  const std::string kind = kind_field.get<std::string>();
  NormKind norm = config.norm;
  if (auto it = sol.find("norm"); it != sol.end()) {
    if (!it->is_string()) throw ParseError("\"norm\" must be a string");
    norm = ParseNormKind(it->get<std::string>());
  }
  doc["kind"] = "verification";
  doc["of"] = kind;
  doc["norm"] = NormName(norm);
  int code;
  if (kind == "discrete-solution") {
    code = VerifyDiscrete(config, sol, norm, doc);
  } else if (kind == "step-solution") {
    code = VerifyStep(config, sol, norm, doc);
  } else if (kind == "tower-solution") {
    code = VerifyTower(config, sol, norm, doc);
  } else if (kind == "kwapien-solution") {
    code = VerifyKwapien(config, sol, norm, doc);
  } else if (kind == "diophantine-solution") {
    code = VerifyDiophantine(sol, doc);
  } else {
    throw ParseError("cannot verify documents of kind \"" + kind + "\"");
  }
  if (code != kOk) std::cerr << "verification failed\n";
  return code;
}

}  // namespace cobound::cli
