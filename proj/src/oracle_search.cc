#include "cobound/oracle_search.h"

#include <algorithm>
#include <string>
#include <utility>

#include "cobound/errors.h"
#include "cobound/steinitz.h"

namespace cobound {

std::vector<RationalVector> RandomZeroSumFamily(std::mt19937_64& rng, int n,
                                                int dim) {
  if (n < 1 || dim < 1) throw InvalidArgument("random family: n, dim >= 1");
  std::vector<RationalVector> vs;
  vs.reserve(n);
  RationalVector total = RationalVector::Zero(dim);
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<Rational> e(dim);
    for (auto& x : e) x = Rational(static_cast<long>(rng() % 33) - 16, 16);
    vs.emplace_back(std::move(e));
    total += vs.back();
  }
  vs.push_back(-total);
  return vs;
}

std::vector<RationalVector> ZigZagFamily(int P, const Rational& t) {
  if (P < 1) throw InvalidArgument("zig-zag: P >= 1");
  const Rational den = Rational(1) + t * t;
  const Rational c = (Rational(1) - t * t) / den;
  const Rational h = Rational(2) * t / den;
  std::vector<RationalVector> vs;
  vs.push_back(RationalVector{Rational(0), Rational(2 * P) * h});
  for (int i = 0; i < P; ++i) vs.push_back(RationalVector{c, -h});
  for (int i = 0; i < P; ++i) vs.push_back(RationalVector{-c, -h});
  return vs;
}

SearchReport OracleSearch(const SearchConfig& config) {
  if (config.max_n < 2 || config.max_n > kMaxOracleSize) {
    throw InvalidArgument("oracle search: max_n must lie in 2.." +
                          std::to_string(kMaxOracleSize));
  }
  if (config.trials < 1) throw InvalidArgument("oracle search: trials >= 1");
  std::mt19937_64 rng(config.seed);
  const bool planar = config.dim == 2 && config.kind == NormKind::kL2;
  const int max_p = (config.max_n - 1) / 2;

  SearchReport report;
  bool have_best = false;
  for (int trial = 0; trial < config.trials; ++trial) {
    SearchRecord rec;
    rec.trial = trial;
    if (planar && max_p >= 3 && trial % 4 == 3) {
      const int P = 3 + static_cast<int>(rng() % (std::min(max_p, 5) - 2));
      const long jitter = 56 + static_cast<long>(rng() % 9);  // 56..64
      rec.family = "zigzag";
      rec.vectors = ZigZagFamily(P, Rational(jitter, 256L * P));
    } else {
      const int n = 2 + static_cast<int>(rng() % (config.max_n - 1));
      rec.family = "generic";
      rec.vectors = RandomZeroSumFamily(rng, n, config.dim);
    }
    rec.max_norm = MaxNorm(rec.vectors, config.kind);
    if (rec.max_norm.is_zero()) {
      rec.ratio_sq = Rational(0);
    } else {
      rec.optimum = SteinitzOracle(rec.vectors, config.kind).optimal_bound;
      rec.ratio_sq = rec.optimum.squared() / rec.max_norm.squared();
    }
    if (!have_best || rec.ratio_sq > report.best.ratio_sq) {
      report.best = std::move(rec);
      have_best = true;
    }
    report.running_max_sq.push_back(report.best.ratio_sq);
  }
  return report;
}

}  // namespace cobound
