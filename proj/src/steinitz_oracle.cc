#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cobound/errors.h"
#include "cobound/steinitz.h"

namespace cobound {

namespace {

void CheckOracleInput(std::span<const RationalVector> vectors) {
  const std::size_t d = CommonDimension(vectors);
  if (vectors.size() > static_cast<std::size_t>(kMaxOracleSize)) {
    throw TooLarge("steinitz oracle: n = " + std::to_string(vectors.size()) +
                   " exceeds " + std::to_string(kMaxOracleSize));
  }
  const RationalVector total = Sum(vectors, d);
  if (!total.is_zero()) {
    std::ostringstream os;
    os << "steinitz oracle: family sums to " << total << ", not 0";
    throw NotMeanZero(os.str());
  }
}

// Depth-first search over orders in lexicographic order. A branch is cut
// when its running maximum exceeds `ceiling` or reaches the best complete
// order found so far in this subtree, so the first optimum found is the
// lexicographically least one.
class BranchAndBound {
 public:
  BranchAndBound(std::span<const RationalVector> vectors, NormKind kind,
                 Magnitude ceiling)
      : vectors_(vectors),
        kind_(kind),
        ceiling_(std::move(ceiling)),
        used_(vectors.size(), false) {}

  // Searches all orders starting with `first`.
  std::optional<OracleResult> Run(int first) {
    RationalVector prefix = vectors_[first];
    Magnitude running = Norm(prefix, kind_);
    if (running > ceiling_) return std::nullopt;
    used_[first] = true;
    path_.push_back(first);
    Search(prefix, running);
    return best_;
  }

 private:
  void Search(const RationalVector& prefix, const Magnitude& running) {
    const std::size_t n = vectors_.size();
    if (path_.size() == n) {
      best_ = OracleResult{running, path_};
      return;
    }
    std::vector<int> tried;
    for (std::size_t j = 0; j < n; ++j) {
      if (used_[j]) continue;
      // Equal vectors give identical subtrees; keep the lowest index.
      const bool duplicate = std::any_of(
          tried.begin(), tried.end(),
          [&](int t) { return vectors_[t] == vectors_[j]; });
      if (duplicate) continue;
      tried.push_back(static_cast<int>(j));
      RationalVector next = prefix + vectors_[j];
      Magnitude m = std::max(running, Norm(next, kind_));
      if (m > ceiling_) continue;
      if (best_ && m >= best_->optimal_bound) continue;
      used_[j] = true;
      path_.push_back(static_cast<int>(j));
      Search(next, m);
      path_.pop_back();
      used_[j] = false;
    }
  }

  std::span<const RationalVector> vectors_;
  NormKind kind_;
  Magnitude ceiling_;
  std::vector<bool> used_;
  std::vector<int> path_;
  std::optional<OracleResult> best_;
};

}  // namespace

OracleResult SteinitzOracle(std::span<const RationalVector> vectors,
                            NormKind kind) {
  CheckOracleInput(vectors);
  const int n = static_cast<int>(vectors.size());
  // Any feasible order bounds the optimum from above.
  const Magnitude ceiling = SteinitzRearrange(vectors, kind).achieved_bound;

  std::vector<int> firsts;
  for (int i = 0; i < n; ++i) {
    bool duplicate = false;
    for (int f : firsts) duplicate |= (vectors[f] == vectors[i]);
    if (!duplicate) firsts.push_back(i);
  }
  std::vector<std::optional<OracleResult>> partial(firsts.size());
  const int tasks = static_cast<int>(firsts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < tasks; ++t) {
    BranchAndBound search(vectors, kind, ceiling);
    partial[t] = search.Run(firsts[t]);
  }

  std::optional<OracleResult> best;
  for (auto& p : partial) {
    if (p && (!best || p->optimal_bound < best->optimal_bound)) {
      best = std::move(p);
    }
  }
  if (!best) {
    throw BoundViolated("steinitz oracle: no order within the constructive "
                        "ceiling");
  }
  return *std::move(best);
}

OracleResult SteinitzOracleReference(std::span<const RationalVector> vectors,
                                     NormKind kind) {
  CheckOracleInput(vectors);
  std::vector<int> perm(vectors.size());
  std::iota(perm.begin(), perm.end(), 0);
  OracleResult best{MaxPrefixNorm(vectors, perm, kind), perm};
  while (std::next_permutation(perm.begin(), perm.end())) {
    Magnitude m = MaxPrefixNorm(vectors, perm, kind);
    if (m < best.optimal_bound) best = OracleResult{std::move(m), perm};
  }
  return best;
}

}  // namespace cobound
