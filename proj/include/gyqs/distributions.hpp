#ifndef GYQS_DISTRIBUTIONS_HPP
#define GYQS_DISTRIBUTIONS_HPP

// Random spacings, partition sizes and their exact moments.
//
// The spacings D = (P, Q-P, 1-Q) induced by the two pivot order statistics of
// k i.i.d. uniforms are Dirichlet(t+1); conditional on D the partition sizes
// are Multinomial(n-k, D).

#include <gyqs/params.hpp>
#include <gyqs/rational.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace gyqs {

struct Spacings {
  std::array<double, 3> d{};
  double sum() const { return d[0] + d[1] + d[2]; }
};

/// Draws k uniforms, sorts them and returns the spacings at the pivot ranks
/// t1+1 and t1+t2+2.
template <typename Rng>
Spacings sample_spacings(const PivotParams::Triple& t, Rng& rng) {
  require_valid_triple(t);
  const int k = sample_size(t);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(k));
  for (double& x : v) x = unif(rng);
  std::sort(v.begin(), v.end());
  const double p = v[static_cast<std::size_t>(t[0])];
  const double q = v[static_cast<std::size_t>(t[0] + t[1] + 1)];
  return Spacings{{p, q - p, 1.0 - q}};
}

/// E[X_1^m_1 ... X_d^m_d] for X ~ Dirichlet(alpha), integer parameters.
inline Rational dirichlet_mixed_moment(std::span<const long long> alpha, std::span<const long long> m) {
  if (alpha.size() != m.size()) throw std::invalid_argument("dirichlet_mixed_moment: size mismatch");
  Rational num(1);
  long long a_sum = 0, m_sum = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 1 || m[i] < 0) throw std::invalid_argument("dirichlet_mixed_moment: bad parameter");
    num *= rising_factorial(Rational(alpha[i]), m[i]);
    a_sum += alpha[i];
    m_sum += m[i];
  }
  return num / rising_factorial(Rational(a_sum), m_sum);
}

/// E[(X_1)_m1 ... (X_d)_md] (falling factorials) for X ~ Multinomial(n, p).
inline double multinomial_factorial_moment(long long n, std::span<const double> p,
                                           std::span<const long long> m) {
  if (p.size() != m.size()) throw std::invalid_argument("multinomial_factorial_moment: size mismatch");
  double psum = 0.0;
  for (double x : p) psum += x;
  if (std::abs(psum - 1.0) > 1e-9) throw std::invalid_argument("multinomial_factorial_moment: p must sum to 1");
  long long total = 0;
  double r = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (m[i] < 0) throw std::invalid_argument("multinomial_factorial_moment: negative order");
    r *= std::pow(p[i], static_cast<double>(m[i]));
    total += m[i];
  }
  for (long long i = 0; i < total; ++i) r *= static_cast<double>(n - i);
  return r;
}

/// I = (small, medium, large) ordinary counts for a size-n step: spacings
/// first, then n-k independent categorical trials.
template <typename Rng>
std::array<long long, 3> sample_partition_sizes(long long n, const PivotParams::Triple& t, Rng& rng) {
  const long long k = sample_size(t);
  if (n < k) throw std::invalid_argument("sample_partition_sizes: n must be at least k");
  const Spacings s = sample_spacings(t, rng);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::array<long long, 3> sizes{};
  for (long long i = 0; i < n - k; ++i) {
    const double u = unif(rng);
    sizes[u < s.d[0] ? 0 : (u < s.d[0] + s.d[1] ? 1 : 2)]++;
  }
  return sizes;
}

/// P(I = i) by counting samples: binom(i1+t1,t1) binom(i2+t2,t2) binom(i3+t3,t3) / binom(n,k).
inline Rational partition_size_law(long long n, const std::array<long long, 3>& i,
                                   const PivotParams::Triple& t) {
  const long long k = sample_size(t);
  if (i[0] < 0 || i[1] < 0 || i[2] < 0 || i[0] + i[1] + i[2] != n - k) return Rational(0);
  return binomial(i[0] + t[0], t[0]) * binomial(i[1] + t[1], t[1]) * binomial(i[2] + t[2], t[2]) /
         binomial(n, k);
}

/// Marginal P(I_l = i) = binom(N,i) (t_l+1)^(rising i) (k-t_l)^(rising N-i) / (k+1)^(rising N)
/// with N = n-k ordinary elements.
inline Rational partition_size_marginal(long long N, int l, long long i, const PivotParams::Triple& t) {
  const long long k = sample_size(t);
  if (i < 0 || i > N) return Rational(0);
  return binomial(N, i) * rising_factorial(Rational(t[l] + 1), i) *
         rising_factorial(Rational(k - t[l]), N - i) / rising_factorial(Rational(k + 1), N);
}

}  // namespace gyqs

#endif  // GYQS_DISTRIBUTIONS_HPP
