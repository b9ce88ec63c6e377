#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "cobound/errors.h"
#include "cobound/exact_linalg.h"
#include "cobound/selection.h"

namespace cobound {

namespace {

std::size_t CheckSets(std::span<const std::vector<RationalVector>> sets) {
  if (sets.empty()) throw EmptyInput("selection: no sets");
  std::size_t d = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) {
      throw EmptyInput("selection: set " + std::to_string(i + 1) +
                       " is empty");
    }
    const std::size_t di = CommonDimension(sets[i]);
    if (i == 0) d = di;
    if (di != d) throw InvalidArgument("selection: sets of mixed dimension");
  }
  return d;
}

// Depth-first search for a selection whose prefixes stay within `bound`.
// Children are visited by increasing prefix norm, lowest index on ties.
class BoundedSelection {
 public:
  BoundedSelection(std::span<const std::vector<RationalVector>> sets,
                   NormKind kind, Magnitude bound)
      : sets_(sets), kind_(kind), bound_(std::move(bound)) {}

  bool Find(std::vector<int>& choice) {
    choice.assign(sets_.size(), 0);
    return Search(0, RationalVector::Zero(sets_.front().front().dim()),
                  choice);
  }

 private:
  bool Search(std::size_t i, const RationalVector& prefix,
              std::vector<int>& choice) {
    if (i == sets_.size()) return true;
    const auto& set = sets_[i];
    std::vector<std::pair<Magnitude, int>> order;
    order.reserve(set.size());
    for (std::size_t j = 0; j < set.size(); ++j) {
      Magnitude m = Norm(prefix + set[j], kind_);
      if (m <= bound_) order.emplace_back(std::move(m), static_cast<int>(j));
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) {
                       return a.first < b.first;
                     });
    for (const auto& [m, j] : order) {
      choice[i] = j;
      if (Search(i + 1, prefix + set[j], choice)) return true;
    }
    return false;
  }

  std::span<const std::vector<RationalVector>> sets_;
  NormKind kind_;
  Magnitude bound_;
};

}  // namespace

Magnitude SelectionPrefixBound(std::span<const std::vector<RationalVector>> sets,
                               std::span<const int> choice, NormKind kind) {
  RationalVector prefix = RationalVector::Zero(sets.front().front().dim());
  Magnitude worst;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    prefix += sets[i][choice[i]];
    Magnitude m = Norm(prefix, kind);
    if (m > worst) worst = std::move(m);
  }
  return worst;
}

SelectionResult BgSelect(std::span<const std::vector<RationalVector>> sets,
                         NormKind kind) {
  const std::size_t d = CheckSets(sets);
  const RationalVector origin = RationalVector::Zero(d);
  Magnitude max_norm;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!ConvexCombination(sets[i], origin)) {
      throw ConvexHullViolation("selection: 0 is not in the convex hull of "
                                "set " + std::to_string(i + 1));
    }
    max_norm = std::max(max_norm, MaxNorm(sets[i], kind));
  }
  const Magnitude bound = max_norm.scaled(Rational(2 * static_cast<long>(d)));

  std::vector<int> choice(sets.size());
  RationalVector prefix = origin;
  bool greedy_ok = true;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    int best = 0;
    Magnitude best_norm = Norm(prefix + sets[i][0], kind);
    for (std::size_t j = 1; j < sets[i].size(); ++j) {
      Magnitude m = Norm(prefix + sets[i][j], kind);
      if (m < best_norm) {
        best_norm = std::move(m);
        best = static_cast<int>(j);
      }
    }
    choice[i] = best;
    prefix += sets[i][best];
    if (best_norm > bound) greedy_ok = false;
  }
  if (!greedy_ok) {
    BoundedSelection search(sets, kind, bound);
    if (!search.Find(choice)) {
      throw BoundViolated("selection: no choice within 2d*M = " +
                          FormatDecimal(bound.approx()));
    }
  }

  SelectionResult result;
  result.choice = choice;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    result.chosen.push_back(sets[i][choice[i]]);
  }
  result.achieved_bound = SelectionPrefixBound(sets, choice, kind);
  if (result.achieved_bound > bound) {
    throw BoundViolated("selection: prefix norm " +
                        FormatDecimal(result.achieved_bound.approx()) +
                        " exceeds 2d*M = " + FormatDecimal(bound.approx()));
  }
  return result;
}

}  // namespace cobound
