#include "cobound/counterexample.h"

#include <optional>
#include <random>
#include <string>
#include <utility>

#include "cobound/errors.h"

namespace cobound {

namespace {

constexpr int kMaxKernelDim = 16;

void CheckKernelDim(int d) {
  if (d < 2 || d % 2 != 0 || d > kMaxKernelDim) {
    throw DimensionTooLarge("half-sum enumeration needs even d in 2.." +
                            std::to_string(kMaxKernelDim) + ", got " +
                            std::to_string(d));
  }
}

// ‖Σ c_k x_k‖² = Σ_k (c_k − s/d)² with s = Σ c_k = d/2, i.e. a quarter of
// Σ (2c_k − 1)². The kernels work on that integer.
struct Walker {
  int d;
  std::vector<int> counts;
  std::optional<std::pair<long, std::vector<int>>> best;
  bool prune = true;

  void Walk(int k, int left, long acc) {
    if (prune && best && acc > best->first) return;
    if (k == d - 1) {
      counts[k] = left;
      const long total = acc + (2L * left - 1) * (2L * left - 1);
      if (!best || total < best->first) best.emplace(total, counts);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[k] = c;
      Walk(k + 1, left - c, acc + (2L * c - 1) * (2L * c - 1));
    }
  }
};

HalfSum FromQuadruple(long quadruple, std::vector<int> counts) {
  return HalfSum{std::move(counts), Rational(quadruple, 4)};
}

}  // namespace

std::vector<RationalVector> SimplexVertices(int n) {
  if (n < 1 || n > kMaxSimplexExponent) {
    throw DimensionTooLarge("simplex: n = " + std::to_string(n) +
                            " outside 1.." +
                            std::to_string(kMaxSimplexExponent));
  }
  const int d = 1 << n;
  const Rational off(-1, d);
  std::vector<RationalVector> vertices;
  vertices.reserve(d);
  for (int k = 0; k < d; ++k) {
    std::vector<Rational> e(d, off);
    e[k] += Rational(1);
    vertices.emplace_back(std::move(e));
  }
  return vertices;
}

Rational HalfSumNormSq(const std::vector<RationalVector>& vertices,
                       const std::vector<int>& counts) {
  RationalVector y = RationalVector::Zero(vertices.front().dim());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    for (int c = 0; c < counts[k]; ++c) y += vertices[k];
  }
  return Dot(y, y);
}

HalfSum MinHalfSumExhaustive(int d) {
  CheckKernelDim(d);
  const int half = d / 2;
  std::vector<std::pair<int, int>> prefixes;
  for (int a = 0; a <= half; ++a) {
    for (int b = 0; a + b <= half; ++b) prefixes.emplace_back(a, b);
  }
  const int tasks = static_cast<int>(prefixes.size());
  std::vector<std::optional<std::pair<long, std::vector<int>>>> partial(tasks);
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < tasks; ++t) {
    const auto [a, b] = prefixes[t];
    Walker w{d, std::vector<int>(d, 0), std::nullopt};
    w.counts[0] = a;
    w.counts[1] = b;
    const long acc = (2L * a - 1) * (2L * a - 1) + (2L * b - 1) * (2L * b - 1);
    if (d == 2) {
      if (a + b == half) w.best.emplace(acc, w.counts);
    } else {
      w.Walk(2, half - a - b, acc);
    }
    partial[t] = std::move(w.best);
  }
  // Tasks are in lexicographic order, so the first minimum wins.
  std::optional<std::pair<long, std::vector<int>>> best;
  for (auto& p : partial) {
    if (p && (!best || p->first < best->first)) best = std::move(p);
  }
  return FromQuadruple(best->first, std::move(best->second));
}

HalfSum MinHalfSumExhaustiveReference(int d) {
  CheckKernelDim(d);
  Walker w{d, std::vector<int>(d, 0), std::nullopt, /*prune=*/false};
  w.Walk(0, d / 2, 0);
  return FromQuadruple(w.best->first, std::move(w.best->second));
}

SimplexReport SimplexCounterexample(int n, std::uint64_t seed, int samples) {
  SimplexReport r;
  r.n = n;
  r.vertices = SimplexVertices(n);
  r.d = 1 << n;
  const int d = r.d;

  const Rational expected(d - 1, d);
  r.vertex_norm_sq = Dot(r.vertices.front(), r.vertices.front());
  for (const auto& x : r.vertices) {
    if (Dot(x, x) != expected) {
      throw BoundViolated("simplex: vertex norm^2 differs from (d-1)/d");
    }
  }
  r.sums_to_zero = Sum(r.vertices, d).is_zero();
  if (!r.sums_to_zero) throw BoundViolated("simplex: vertices do not sum to 0");

  const int half = d / 2;
  if (d <= kMaxExhaustiveSimplexDim) {
    r.exhaustive = true;
    r.minimum = MinHalfSumExhaustive(d);
  } else {
    std::vector<int> distinct(d, 0);
    for (int k = 0; k < half; ++k) distinct[k] = 1;
    r.minimum = HalfSum{distinct, HalfSumNormSq(r.vertices, distinct)};
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
      std::vector<int> counts(d, 0);
      for (int j = 0; j < half; ++j) ++counts[rng() % d];
      Rational v = HalfSumNormSq(r.vertices, counts);
      if (v < r.minimum.norm_sq) r.minimum = HalfSum{counts, v};
    }
    r.samples = samples;
  }
  // The exhaustive kernel works on the closed form; recheck its witness.
  if (HalfSumNormSq(r.vertices, r.minimum.counts) != r.minimum.norm_sq) {
    throw BoundViolated("simplex: witness norm mismatch");
  }
  r.threshold = Rational(d, 8);
  r.above_threshold = r.minimum.norm_sq >= r.threshold;
  return r;
}

}  // namespace cobound
