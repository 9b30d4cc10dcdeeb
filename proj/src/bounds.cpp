#include "onassign/bounds.hpp"

#include <cmath>

namespace onassign {

namespace {

void require_positive(int m, int k) {
  if (m < 1 || k < 1) throw InvalidParameterError("parameters must be positive");
}

Rational dyadic_round(long double v) {
  // round(v * 2^48) / 2^48; the scaled value stays below 2^53, so it is
  // exactly representable.
  const long double scale = 281474976710656.0L;  // 2^48
  mpz_class num(static_cast<long>(std::llroundl(v * scale)));
  Rational r(num, mpz_class(1) << 48);
  r.canonicalize();
  return r;
}

}  // namespace

Rational falling_sum(int m, int k) {
  require_positive(m, k);
  Rational sum(0);
  for (int t = 1; t <= m; ++t) {
    Rational prod(1);
    for (int i = 1; i <= t - 1; ++i) {
      Rational factor = rat_pos(Rational(1) - Rational(k, m - t + i));
      if (factor == 0) {
        prod = 0;
        break;
      }
      prod *= factor;
    }
    sum += prod;
  }
  return sum / m;
}

BoundCheckResult check_falling(int m, int k) {
  BoundCheckResult r;
  r.m = m;
  r.k = k;
  r.lhs = falling_sum(m, k);
  r.rhs = Rational(1, k + 1);
  r.holds = r.lhs >= r.rhs;
  // regime identities: exact 1/(k+1) once m >= k+1, exact 1/m below
  r.equality = (m >= k + 1) ? (r.lhs == r.rhs) : (r.lhs == Rational(1, m));
  return r;
}

Rational iid_geometric_bound(int m, int k) {
  require_positive(m, k);
  if (k > m) throw InvalidParameterError("k must be at most m");
  Rational q = Rational(1) - Rational(k, m);
  Rational sum(0);
  Rational power(1);
  for (int t = 1; t <= m; ++t) {
    sum += power;
    power *= q;
  }
  return sum / m;
}

BoundCheckResult check_iid_geometric(int m, int k) {
  BoundCheckResult r;
  r.m = m;
  r.k = k;
  r.lhs = iid_geometric_bound(m, k);
  Rational q = Rational(1) - Rational(k, m);
  r.rhs = (Rational(1) - rat_pow(q, static_cast<unsigned long>(m))) / k;
  r.equality = r.lhs == r.rhs;
  double target = (1.0 - std::exp(-static_cast<double>(k))) / k;
  r.holds = r.equality && rat_to_double(r.lhs) >= target - 1e-12;
  return r;
}

Rational secretary_window_value(int m, int k, const Rational& p) {
  require_positive(m, k);
  if (p < 0 || p > 1) throw InvalidParameterError("p outside [0, 1]");
  // G(tau) = sum_{t=tau+1}^m prod_{i=tau+1}^{t-1} (1-k/i)_+ via the suffix
  // recurrence G(m) = 0, G(tau) = 1 + (1-k/(tau+1))_+ G(tau+1).
  std::vector<Rational> window(static_cast<std::size_t>(m) + 1, Rational(0));
  for (int tau = m - 1; tau >= 0; --tau) {
    Rational factor = rat_pos(Rational(1) - Rational(k, tau + 1));
    window[static_cast<std::size_t>(tau)] = 1 + factor * window[static_cast<std::size_t>(tau) + 1];
  }
  Rational q = Rational(1) - p;
  Rational expectation(0);
  for (int tau = 0; tau <= m; ++tau) {
    Rational pmf = Rational(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(tau))) *
                   rat_pow(p, static_cast<unsigned long>(tau)) *
                   rat_pow(q, static_cast<unsigned long>(m - tau));
    expectation += pmf * window[static_cast<std::size_t>(tau)];
  }
  return expectation / m;
}

BoundCheckResult check_secretary_window(int m, int k) {
  BoundCheckResult r;
  r.m = m;
  r.k = k;
  r.p = p_k_rational(k);
  r.lhs = secretary_window_value(m, k, r.p);
  r.rhs = alpha_k_rational(k);
  // tolerance absorbs both dyadic approximations
  r.holds = r.lhs >= r.rhs - rat_from_string("1/1000000000");
  r.equality = r.lhs == r.rhs;
  return r;
}

bool hockey_stick_check(int m, int k) {
  if (k + 1 < 2 || m < k + 1) throw InvalidParameterError("need m >= k+1 >= 2");
  mpz_class sum(0);
  for (int t = 1; t <= m; ++t)
    sum += binomial(static_cast<unsigned long>(m - t), static_cast<unsigned long>(k));
  return sum == binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k + 1));
}

Rational p_k_rational(int k) {
  if (k < 1) throw InvalidParameterError("k must be positive");
  if (k == 1) return dyadic_round(std::exp(-1.0L));
  if (k == 2) return Rational(1, 2);
  long double kk = static_cast<long double>(k);
  return dyadic_round(std::pow(kk, -1.0L / (kk - 1.0L)));
}

Rational alpha_k_rational(int k) {
  if (k < 1) throw InvalidParameterError("k must be positive");
  if (k == 1) return dyadic_round(std::exp(-1.0L));
  if (k == 2) return Rational(1, 4);
  long double kk = static_cast<long double>(k);
  return dyadic_round(std::pow(kk, -kk / (kk - 1.0L)));
}

}  // namespace onassign
