#pragma once

#include <span>
#include <vector>

#include "cobound/rational.h"
#include "cobound/vector.h"

namespace cobound {

struct DiophantineResult {
  long q = 0;
  std::vector<Rational> p;  // integers
  RationalVector w;         // w_l = p_l/q − x_l
};

// Smallest q ≤ q_max with integers p such that ‖w‖∞ < eps/q and (w,v) > 0.
// For each q the candidate p_l is the nearest integer to q·x_l on the side
// given by sign(v_l) (strictly above for v_l > 0, strictly below for
// v_l < 0, rounded half up for v_l = 0). Both inequalities are checked
// exactly. Throws InvalidArgument (v = 0, eps ≤ 0, q_max < 1, dimension
// mismatch) and SearchExhausted.
DiophantineResult DiophantineSigned(std::span<const Rational> x,
                                    const RationalVector& v,
                                    const Rational& eps, long q_max);

}  // namespace cobound
