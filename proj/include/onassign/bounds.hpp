#pragma once

#include "onassign/errors.hpp"
#include "onassign/rational.hpp"

namespace onassign {

struct BoundCheckResult {
  int m = 0;
  int k = 0;
  Rational p = Rational(0);
  Rational lhs = Rational(0);
  Rational rhs = Rational(0);
  bool holds = false;
  bool equality = false;
};

/// (1/m) sum_{t=1}^m prod_{i=1}^{t-1} (1 - k/(m-t+i))_+, exactly. Equals
/// 1/(k+1) whenever m >= k+1 and 1/m otherwise; always at least 1/(k+1).
Rational falling_sum(int m, int k);
BoundCheckResult check_falling(int m, int k);

/// (1/m) sum_{t=1}^m (1 - k/m)^{t-1}, exactly; equals (1/k)(1-(1-k/m)^m) and
/// is at least (1-e^-k)/k up to 1e-12 in doubles.
Rational iid_geometric_bound(int m, int k);
BoundCheckResult check_iid_geometric(int m, int k);

/// E_{tau ~ Bin(m, p)} [(1/m) sum_{t=tau+1}^m prod_{i=tau+1}^{t-1} (1-k/i)_+]
/// by full enumeration of tau with exact binomial weights.
Rational secretary_window_value(int m, int k, const Rational& p);
/// Same check at p = p_k (rational approximation, error <= 2^-48), against
/// alpha_k - 1e-9.
BoundCheckResult check_secretary_window(int m, int k);

/// sum_{t=1}^m C(m-t, k) == C(m, k+1), exactly; requires m >= k+1 >= 2.
bool hockey_stick_check(int m, int k);

/// Rational approximations of the irrational schedule constants, absolute
/// error at most 2^-48 (well under the 1e-12 the exact paths budget for).
Rational p_k_rational(int k);
Rational alpha_k_rational(int k);

}  // namespace onassign
