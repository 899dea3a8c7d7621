#ifndef GYQS_COST_MODEL_HPP
#define GYQS_COST_MODEL_HPP

// Tolls of a single partitioning step, both as exact functions of the
// observed StepStats and as exact expectations over random permutations.

#include <gyqs/params.hpp>
#include <gyqs/rational.hpp>
#include <gyqs/sort.hpp>

#include <cstdint>
#include <stdexcept>

namespace gyqs {

/// Cost of one partitioning step as a function of its observables.
inline std::int64_t toll_from_stats(const StepStats& s, CostMeasure m) {
  switch (m) {
    case CostMeasure::comparisons:
      return s.ordinary() + s.sizes[1] + s.large_at_k + s.small_at_g + 2 * s.delta;
    case CostMeasure::swaps:
      return s.sizes[0] + s.large_at_k;
    case CostMeasure::bytecodes:
      return bytecode_toll(s);
  }
  return 0;
}

/// Expected values of the random quantities the tolls are built from, for
/// the first partitioning step on a random permutation of size n.
struct ExpectationPrimitives {
  std::array<Rational, 3> sizes;  ///< E[I_j]
  Rational overshoot;             ///< E[delta] = E[Bernoulli(I3/(n-k))]
  Rational small_in_g;            ///< E[Hyp(I3, I1, n-k)]      (s@G)
  Rational large_in_k;            ///< E[Hyp(I1+I2, I3, n-k)]   (l@K - delta)
  Rational small_in_k;            ///< E[Hyp(I1, I1+I2, n-k)]   (s@K)
};

/// Closed forms for the expectation primitives. For n = k there are no
/// ordinary elements and every primitive, including E[delta], is 0.
inline ExpectationPrimitives expectation_primitives(const PivotParams::Triple& t, long long n) {
  require_valid_triple(t);
  const long long k = sample_size(t);
  if (n < k) throw std::invalid_argument("expectation_primitives: n must be at least k");
  ExpectationPrimitives e;
  const long long N = n - k;
  if (N == 0) return e;
  const Rational k1(k + 1), k12((k + 1) * (k + 2));
  for (int j = 0; j < 3; ++j) e.sizes[j] = Rational(t[j] + 1) / k1 * Rational(N);
  e.overshoot = Rational(t[2] + 1) / k1;
  e.small_in_g = Rational((t[0] + 1) * (t[2] + 1)) / k12 * Rational(N - 1);
  e.large_in_k = Rational((t[0] + t[1] + 2) * (t[2] + 1)) / k12 * Rational(N - 1);
  // E[I1 (I1+I2)] / N, expanded with the Dirichlet-multinomial moments.
  e.small_in_k = Rational((t[0] + 1) * (t[0] + t[1] + 3)) / k12 * Rational(N - 1) +
                 Rational(t[0] + 1) / k1;
  return e;
}

/// Exact expected toll of the first partitioning step for size n > M.
inline Rational expected_toll(const PivotParams& params, long long n, CostMeasure m) {
  if (n <= params.cutoff())
    throw std::invalid_argument("expected_toll: n <= M, no partitioning step takes place");
  const ExpectationPrimitives e = expectation_primitives(params.t(), n);
  const Rational N(n - params.sample_size());
  switch (m) {
    case CostMeasure::comparisons:
      return N + e.sizes[1] + e.large_in_k + e.small_in_g + Rational(3) * e.overshoot;
    case CostMeasure::swaps:
      return e.sizes[0] + e.large_in_k + e.overshoot;
    case CostMeasure::bytecodes:
      return Rational(10 * n) + Rational(13) * e.sizes[0] + Rational(5) * e.sizes[1] +
             Rational(11) * e.large_in_k + e.small_in_k;
  }
  return {};
}

}  // namespace gyqs

#endif  // GYQS_COST_MODEL_HPP
