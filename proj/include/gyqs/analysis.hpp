#ifndef GYQS_ANALYSIS_HPP
#define GYQS_ANALYSIS_HPP

// Closed-form leading-term analysis: E[cost] ~ (a / H(t)) n ln n, where a is
// the linear coefficient of the expected partitioning toll and H(t) the
// discrete entropy of the sampling parameter.

#include <gyqs/params.hpp>
#include <gyqs/rational.hpp>

#include <array>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace gyqs {

/// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
inline Rational harmonic(long long n) {
  if (n < 0) throw std::invalid_argument("harmonic: n must be >= 0");
  Rational h;
  for (long long i = 1; i <= n; ++i) h += Rational(1, i);
  return h;
}

inline Rational discrete_entropy(const PivotParams::Triple& t) {
  require_valid_triple(t);
  const long long k = sample_size(t);
  const Rational hk1 = harmonic(k + 1);
  Rational h;
  for (int l = 0; l < 3; ++l) h += Rational(t[l] + 1, k + 1) * (hk1 - harmonic(t[l] + 1));
  return h;
}

/// Linear coefficient a of the expected partitioning toll a n + O(1).
inline Rational cost_coefficient(const PivotParams::Triple& t, CostMeasure m) {
  require_valid_triple(t);
  const long long k = sample_size(t);
  const long long t1 = t[0], t2 = t[1], t3 = t[2];
  const long long k12 = (k + 1) * (k + 2);
  switch (m) {
    case CostMeasure::comparisons:
      return Rational(1) + Rational(t2 + 1, k + 1) + Rational((2 * t1 + t2 + 3) * (t3 + 1), k12);
    case CostMeasure::swaps:
      return Rational(t1 + 1, k + 1) + Rational((t1 + t2 + 2) * (t3 + 1), k12);
    case CostMeasure::bytecodes:
      return Rational(10) + Rational(13 * (t1 + 1), k + 1) + Rational(5 * (t2 + 1), k + 1) +
             Rational(11 * (t1 + t2 + 2) * (t3 + 1), k12) +
             Rational((t1 + 1) * (t1 + t2 + 3), k12);
  }
  return {};
}

/// Coefficient of n ln n in the expected total cost.
inline Rational leading_term(const PivotParams::Triple& t, CostMeasure m) {
  return cost_coefficient(t, m) / discrete_entropy(t);
}

struct CostCoefficients {
  PivotParams::Triple t;
  Rational a_comparisons, a_swaps, a_bytecodes;
  Rational entropy;
  Rational ratio_comparisons, ratio_swaps, ratio_bytecodes;

  const Rational& coefficient(CostMeasure m) const {
    return m == CostMeasure::comparisons ? a_comparisons
           : m == CostMeasure::swaps     ? a_swaps
                                         : a_bytecodes;
  }
  const Rational& ratio(CostMeasure m) const {
    return m == CostMeasure::comparisons ? ratio_comparisons
           : m == CostMeasure::swaps     ? ratio_swaps
                                         : ratio_bytecodes;
  }
};

inline CostCoefficients coefficients(const PivotParams::Triple& t) {
  CostCoefficients c;
  c.t = t;
  c.entropy = discrete_entropy(t);
  c.a_comparisons = cost_coefficient(t, CostMeasure::comparisons);
  c.a_swaps = cost_coefficient(t, CostMeasure::swaps);
  c.a_bytecodes = cost_coefficient(t, CostMeasure::bytecodes);
  c.ratio_comparisons = c.a_comparisons / c.entropy;
  c.ratio_swaps = c.a_swaps / c.entropy;
  c.ratio_bytecodes = c.a_bytecodes / c.entropy;
  return c;
}

/// Limiting relative pivot ranks; components are non-negative and sum to 1.
struct Tau {
  double t1, t2, t3;

  static Tau make(double a, double b, double c) {
    if (a < 0 || b < 0 || c < 0 || std::abs(a + b + c - 1.0) > 1e-12)
      throw std::invalid_argument("Tau must lie in the closed simplex");
    return {a, b, c};
  }
  std::array<double, 3> as_array() const { return {t1, t2, t3}; }
};

/// -sum tau_l ln tau_l with 0 ln 0 = 0.
inline double continuous_entropy(const Tau& tau) {
  double h = 0.0;
  for (double x : tau.as_array())
    if (x > 0) h -= x * std::log(x);
  return h;
}

/// Limit of the toll coefficient as k -> infinity with t/k -> tau.
inline double continuous_coefficient(const Tau& tau, CostMeasure m) {
  const double a = tau.t1, b = tau.t2, c = tau.t3;
  switch (m) {
    case CostMeasure::comparisons: return 1 + b + (2 * a + b) * c;
    case CostMeasure::swaps: return a + (a + b) * c;
    case CostMeasure::bytecodes: return 10 + 13 * a + 5 * b + (a + b) * (a + 11 * c);
  }
  return 0;
}

/// a*(tau) / H*(tau). Where the entropy vanishes (simplex vertices) the
/// ratio is +inf unless the coefficient vanishes too, in which case the
/// limit 0 is returned.
inline double continuous_ratio(const Tau& tau, CostMeasure m) {
  const double a = continuous_coefficient(tau, m);
  const double h = continuous_entropy(tau);
  if (h <= 0.0) return a <= 0.0 ? 0.0 : INFINITY;
  return a / h;
}

/// d-dimensional Beta function for positive integer parameters:
/// prod (alpha_i - 1)! / (sum alpha_i - 1)!.
inline Rational beta(std::span<const long long> alpha) {
  if (alpha.empty()) throw std::invalid_argument("beta: no parameters");
  Rational num(1);
  long long sum = 0;
  for (long long a : alpha) {
    if (a < 1) throw std::invalid_argument("beta: parameters must be positive integers");
    num *= factorial(a - 1);
    sum += a;
  }
  return num / factorial(sum - 1);
}

inline Rational beta(long long a1, long long a2) {
  const std::array<long long, 2> a{a1, a2};
  return beta(std::span<const long long>(a));
}

/// -int_0^1 x^(a1-1) (1-x)^(a2-1) ln x dx = B(a1,a2) (H_{a1+a2-1} - H_{a1-1}).
inline Rational beta_ln(long long a1, long long a2) {
  if (a1 < 1 || a2 < 1) throw std::invalid_argument("beta_ln: parameters must be positive integers");
  return beta(a1, a2) * (harmonic(a1 + a2 - 1) - harmonic(a1 - 1));
}

/// Shape function of the expected-cost recurrence,
/// w(z) = sum_l (k - t_l) binom(k, t_l) z^t_l (1-z)^(k - t_l - 1).
inline double shape_function(const PivotParams::Triple& t, double z) {
  const long long k = sample_size(t);
  double w = 0.0;
  for (int l = 0; l < 3; ++l)
    w += static_cast<double>(k - t[l]) * binomial(k, t[l]).to_double() * std::pow(z, t[l]) *
         std::pow(1 - z, static_cast<double>(k - t[l] - 1));
  return w;
}

struct CmtResult {
  Rational h;       ///< 1 - int_0^1 z w(z) dz
  Rational h_tilde; ///< -int_0^1 z ln(z) w(z) dz
};

/// Continuous Master Theorem quantities for the shape function, in closed form.
inline CmtResult cmt_check(const PivotParams::Triple& t) {
  require_valid_triple(t);
  const long long k = sample_size(t);
  CmtResult r{Rational(1), Rational(0)};
  for (int l = 0; l < 3; ++l) {
    const Rational weight = Rational(k - t[l]) * binomial(k, t[l]);
    r.h -= weight * beta(t[l] + 2, k - t[l]);
    r.h_tilde += weight * beta_ln(t[l] + 2, k - t[l]);
  }
  return r;
}

/// All t in N^3 with t1+t2+t3 = k-2, in lexicographic order.
inline std::vector<PivotParams::Triple> triples_for_sample_size(int k) {
  if (k < 2) throw std::invalid_argument("sample size must be >= 2");
  std::vector<PivotParams::Triple> out;
  for (int a = 0; a <= k - 2; ++a)
    for (int b = 0; a + b <= k - 2; ++b) out.push_back({a, b, k - 2 - a - b});
  return out;
}

}  // namespace gyqs

#endif  // GYQS_ANALYSIS_HPP
