#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobound/errors.h"
#include "cobound/selection.h"

namespace cobound {

namespace {

void CheckSpace(std::span<const std::vector<RationalVector>> sets) {
  if (sets.empty()) throw EmptyInput("selection oracle: no sets");
  std::int64_t space = 1;
  for (const auto& s : sets) {
    if (s.empty()) throw EmptyInput("selection oracle: empty set");
    space *= static_cast<std::int64_t>(s.size());
    if (space > kMaxSelectionSpace) {
      throw TooLarge("selection oracle: more than " +
                     std::to_string(kMaxSelectionSpace) + " selections");
    }
  }
}

// Lexicographic depth-first search cut at the best complete selection of
// this subtree (ties keep the earlier one).
class SelectionSearch {
 public:
  SelectionSearch(std::span<const std::vector<RationalVector>> sets,
                  NormKind kind)
      : sets_(sets), kind_(kind), path_(sets.size(), 0) {}

  std::optional<SelectionOracleResult> Run(int first) {
    path_[0] = first;
    const RationalVector& c = sets_[0][first];
    Search(1, c, Norm(c, kind_));
    return best_;
  }

 private:
  void Search(std::size_t i, const RationalVector& prefix,
              const Magnitude& running) {
    if (best_ && running >= best_->optimal_bound) return;
    if (i == sets_.size()) {
      best_ = SelectionOracleResult{running, path_};
      return;
    }
    for (std::size_t j = 0; j < sets_[i].size(); ++j) {
      RationalVector next = prefix + sets_[i][j];
      Magnitude m = std::max(running, Norm(next, kind_));
      path_[i] = static_cast<int>(j);
      Search(i + 1, next, m);
    }
  }

  std::span<const std::vector<RationalVector>> sets_;
  NormKind kind_;
  std::vector<int> path_;
  std::optional<SelectionOracleResult> best_;
};

}  // namespace

SelectionOracleResult SelectionOracle(
    std::span<const std::vector<RationalVector>> sets, NormKind kind) {
  CheckSpace(sets);
  const int tasks = static_cast<int>(sets[0].size());
  std::vector<std::optional<SelectionOracleResult>> partial(tasks);
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < tasks; ++t) {
    SelectionSearch search(sets, kind);
    partial[t] = search.Run(t);
  }
  std::optional<SelectionOracleResult> best;
  for (auto& p : partial) {
    if (p && (!best || p->optimal_bound < best->optimal_bound)) {
      best = std::move(p);
    }
  }
  return *std::move(best);
}

SelectionOracleResult SelectionOracleReference(
    std::span<const std::vector<RationalVector>> sets, NormKind kind) {
  CheckSpace(sets);
  std::vector<int> choice(sets.size(), 0);
  std::optional<SelectionOracleResult> best;
  for (;;) {
    Magnitude m = SelectionPrefixBound(sets, choice, kind);
    if (!best || m < best->optimal_bound) {
      best = SelectionOracleResult{std::move(m), choice};
    }
    // Odometer increment, last set fastest.
    std::size_t i = sets.size();
    while (i > 0) {
      --i;
      if (++choice[i] < static_cast<int>(sets[i].size())) break;
      choice[i] = 0;
      if (i == 0) return *std::move(best);
    }
  }
}

}  // namespace cobound
