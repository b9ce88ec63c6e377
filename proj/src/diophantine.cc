#include "cobound/diophantine.h"

#include <string>

#include "cobound/errors.h"

namespace cobound {

namespace {

Rational Candidate(const Rational& qx, int side) {
  if (side > 0) return qx.floor() + Rational(1);
  if (side < 0) return qx.ceil() - Rational(1);
  return (qx + Rational(1, 2)).floor();
}

}  // namespace

DiophantineResult DiophantineSigned(std::span<const Rational> x,
                                    const RationalVector& v,
                                    const Rational& eps, long q_max) {
  if (x.empty()) throw InvalidArgument("diophantine: empty target");
  if (v.dim() != x.size()) {
    throw InvalidArgument("diophantine: v has dimension " +
                          std::to_string(v.dim()) + ", x has " +
                          std::to_string(x.size()));
  }
  if (v.is_zero()) throw InvalidArgument("diophantine: v = 0");
  if (eps.sign() <= 0) throw InvalidArgument("diophantine: eps <= 0");
  if (q_max < 1) throw InvalidArgument("diophantine: q_max < 1");

  const std::size_t n = x.size();
  for (long q = 1; q <= q_max; ++q) {
    const Rational rq(q);
    const Rational limit = eps / rq;
    std::vector<Rational> p(n);
    std::vector<Rational> w(n);
    bool small = true;
    for (std::size_t l = 0; l < n && small; ++l) {
      p[l] = Candidate(rq * x[l], v[l].sign());
      w[l] = p[l] / rq - x[l];
      small = w[l].abs() < limit;
    }
    if (!small) continue;
    RationalVector wv(std::move(w));
    if (Dot(wv, v).sign() > 0) return {q, std::move(p), std::move(wv)};
  }
  throw SearchExhausted("diophantine: no q <= " + std::to_string(q_max) +
                        " satisfies both inequalities");
}

}  // namespace cobound
