#include "cobound/steinitz.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "cobound/errors.h"
#include "cobound/exact_linalg.h"

namespace cobound {

namespace {

// Moves the feasible weights `lambda` (indexed like `active`) to a vertex of
// {λ ∈ [0,1]^B : Σλ = const, Σλ_i x_i = const} by repeatedly following a
// null-space direction of free columns until a weight reaches a bound. Any
// d+2 free columns are dependent, so each move only looks at the first d+2.
void PushToVertex(std::span<const RationalVector> vectors,
                  std::span<const int> active, std::vector<Rational>& lambda) {
  const std::size_t d = vectors.front().dim();
  for (;;) {
    std::vector<int> free;  // positions into `active`
    for (std::size_t j = 0; j < active.size() && free.size() < d + 2; ++j) {
      if (lambda[j].sign() > 0 && lambda[j] < Rational(1)) {
        free.push_back(static_cast<int>(j));
      }
    }
    if (free.empty()) return;
    const int cols = static_cast<int>(free.size());
    RationalMatrix a(d + 1, std::vector<Rational>(cols));
    for (int c = 0; c < cols; ++c) {
      const RationalVector& x = vectors[active[free[c]]];
      a[0][c] = Rational(1);
      for (std::size_t r = 0; r < d; ++r) a[r + 1][c] = x[r];
    }
    std::optional<std::vector<Rational>> z = NullVector(a, cols);
    if (!z) return;
    std::optional<Rational> step;
    for (int c = 0; c < cols; ++c) {
      const Rational& zc = (*z)[c];
      const Rational& l = lambda[free[c]];
      std::optional<Rational> limit;
      if (zc.sign() > 0) limit = (Rational(1) - l) / zc;
      if (zc.sign() < 0) limit = l / (-zc);
      if (limit && (!step || *limit < *step)) step = std::move(limit);
    }
    for (int c = 0; c < cols; ++c) lambda[free[c]] += *step * (*z)[c];
  }
}

// Exhaustive fallback: the order with the smallest anchored deviation.
std::vector<int> ExhaustiveAnchored(std::span<const RationalVector> vectors,
                                    NormKind kind) {
  const int n = static_cast<int>(vectors.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  Magnitude best_dev = AnchoredDeviation(vectors, perm, kind);
  while (std::next_permutation(perm.begin(), perm.end())) {
    Magnitude dev = AnchoredDeviation(vectors, perm, kind);
    if (dev < best_dev) {
      best_dev = std::move(dev);
      best = perm;
    }
  }
  return best;
}

}  // namespace

Magnitude AnchoredDeviation(std::span<const RationalVector> vectors,
                            std::span<const int> perm, NormKind kind) {
  const std::size_t n = vectors.size();
  const std::size_t d = vectors.front().dim();
  RationalVector total = RationalVector::Zero(d);
  for (const auto& v : vectors) total += v;
  RationalVector prefix = RationalVector::Zero(d);
  Magnitude worst;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix += vectors[perm[k - 1]];
    const Rational weight(static_cast<long>(k) - static_cast<long>(d),
                          static_cast<long>(n));
    Magnitude dev = Norm(prefix - total * weight, kind);
    if (dev > worst) worst = std::move(dev);
  }
  return worst;
}

Magnitude MaxPrefixNorm(std::span<const RationalVector> vectors,
                        std::span<const int> perm, NormKind kind) {
  RationalVector prefix = RationalVector::Zero(vectors.front().dim());
  Magnitude worst;
  for (int idx : perm) {
    prefix += vectors[idx];
    Magnitude m = Norm(prefix, kind);
    if (m > worst) worst = std::move(m);
  }
  return worst;
}

RearrangementResult SteinitzRearrange(std::span<const RationalVector> vectors,
                                      NormKind kind) {
  const std::size_t d = CommonDimension(vectors);
  const int n = static_cast<int>(vectors.size());
  const RationalVector total = Sum(vectors, d);
  const Magnitude max_norm = MaxNorm(vectors, kind);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const int di = static_cast<int>(d);

  if (!max_norm.is_zero() && n > di) {
    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 0);
    std::vector<Rational> lambda(n, Rational(n - di, n));
    bool degenerate = false;
    for (int k = n; k > di; --k) {
      const int target = k - 1 - di;
      if (target == 0) {
        std::fill(lambda.begin(), lambda.end(), Rational(0));
      } else {
        const Rational shrink(target, k - di);
        for (auto& l : lambda) l *= shrink;
        PushToVertex(vectors, active, lambda);
      }
      // Highest index first, so ties keep the input order.
      auto zero = std::find_if(lambda.rbegin(), lambda.rend(),
                               [](const Rational& l) { return l.is_zero(); });
      if (zero == lambda.rend()) {
        degenerate = true;
        break;
      }
      const auto pos = lambda.rend() - zero - 1;
      perm[k - 1] = active[pos];
      active.erase(active.begin() + pos);
      lambda.erase(lambda.begin() + pos);
    }
    if (degenerate) {
      if (n > kMaxOracleSize) {
        throw BoundViolated("steinitz: no zero weight at a vertex (n = " +
                            std::to_string(n) + ")");
      }
      perm = ExhaustiveAnchored(vectors, kind);
    } else {
      for (int i = 0; i < di; ++i) perm[i] = active[i];
    }
  }

  RearrangementResult result{perm, AnchoredDeviation(vectors, perm, kind),
                             total};
  if (!Within(result.achieved_bound, Rational(di), max_norm)) {
    throw BoundViolated("steinitz: anchored deviation " +
                        FormatDecimal(result.achieved_bound.approx()) +
                        " exceeds d*M = " +
                        FormatDecimal(max_norm.approx() * di));
  }
  return result;
}

}  // namespace cobound
