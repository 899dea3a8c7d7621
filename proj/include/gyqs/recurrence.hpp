#ifndef GYQS_RECURRENCE_HPP
#define GYQS_RECURRENCE_HPP

// Exact expected costs from the full-history recurrence
//   E[C_n] = E[T_n] + sum_j P(J = j) (E[C_j1] + E[C_j2] + E[C_j3]),  n > M,
// with zero base cases for partitioning-only counters, and an exhaustive
// enumeration oracle that runs the real sort over all n! inputs.

#include <gyqs/cost_model.hpp>
#include <gyqs/params.hpp>
#include <gyqs/rational.hpp>
#include <gyqs/sort.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gyqs {

/// P(J = j): probability that the three subproblems of a size-n step have
/// sizes j. Returns 0 for j outside the support.
inline Rational subproblem_prob(long long n, const std::array<long long, 3>& j,
                                const PivotParams::Triple& t) {
  const long long k = sample_size(t);
  if (n < k) throw std::invalid_argument("subproblem_prob: n must be at least k");
  if (j[0] + j[1] + j[2] != n - 2) return Rational(0);
  for (int l = 0; l < 3; ++l)
    if (j[l] < t[l]) return Rational(0);
  return binomial(j[0], t[0]) * binomial(j[1], t[1]) * binomial(j[2], t[2]) / binomial(n, k);
}

/// Marginal P(J_l = j) = binom(j, t_l) binom(n-1-j, k-1-t_l) / binom(n, k).
inline Rational subproblem_marginal(long long n, int l, long long j, const PivotParams::Triple& t) {
  const long long k = sample_size(t);
  return binomial(j, t[l]) * binomial(n - 1 - j, k - 1 - t[l]) / binomial(n, k);
}

struct RecurrenceTable {
  PivotParams params;
  Counter counter;
  std::vector<Rational> values;  ///< values[n] = E[C_n], n = 0..N_max

  const Rational& operator[](std::size_t n) const { return values.at(n); }
  std::size_t max_n() const { return values.size() - 1; }
};

/// Bottom-up table of E[C_n] for n = 0..n_max. Only partitioning-only
/// counters are accepted: with sorted sample prefixes carried into recursive
/// calls, the Insertionsort base costs depend on the call type and have no
/// closed form here.
inline RecurrenceTable expected_cost_table(long long n_max, const PivotParams& params, Counter counter) {
  if (!is_partitioning_only(counter))
    throw std::invalid_argument("expected_cost_table: counter includes Insertionsort costs, base case unknown");
  if (n_max < 0) throw std::invalid_argument("expected_cost_table: n_max must be >= 0");

  CostMeasure measure = CostMeasure::comparisons;
  if (counter == Counter::partition_swaps) measure = CostMeasure::swaps;
  if (counter == Counter::bytecode_model) measure = CostMeasure::bytecodes;

  const auto& t = params.t();
  const long long k = params.sample_size();
  RecurrenceTable table{params, counter, std::vector<Rational>(static_cast<std::size_t>(n_max) + 1)};
  for (long long n = params.cutoff() + 1; n <= n_max; ++n) {
    Rational sum;
    const Rational total = binomial(n, k);
    for (long long j = 0; j <= n - 2; ++j) {
      const Rational& cj = table.values[static_cast<std::size_t>(j)];
      if (cj.is_zero()) continue;
      mpz_class weight = 0;
      for (int l = 0; l < 3; ++l) weight += binomial_z(j, t[l]) * binomial_z(n - 1 - j, k - 1 - t[l]);
      sum += Rational(weight) * cj;
    }
    table.values[static_cast<std::size_t>(n)] = expected_toll(params, n, measure) + sum / total;
  }
  return table;
}

inline RecurrenceTable expected_cost_table(long long n_max, const PivotParams& params, CostMeasure m) {
  return expected_cost_table(n_max, params, partitioning_counter(m));
}

inline constexpr long long kMaxBruteForceSize = 9;

/// Exact mean of a ledger counter over all n! orderings of n distinct keys,
/// obtained by running the sort on every permutation.
inline Rational brute_force_expected(long long n, const PivotParams& params, Counter counter) {
  if (n < 0 || n > kMaxBruteForceSize)
    throw std::invalid_argument("brute_force_expected: n must be in [0, 9]");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  long long total = 0;
  long long count = 0;
  std::vector<int> work;
  do {
    work = perm;
    const CostLedger ledger = sort(std::span<int>(work), params, std::less<>{}, false);
    total += value_of(ledger, counter);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational(total, count);
}

inline Rational brute_force_expected(long long n, const PivotParams& params, CostMeasure m) {
  return brute_force_expected(n, params, partitioning_counter(m));
}

/// Exact mean of the first partitioning step's toll over all n! inputs.
inline Rational first_step_exhaustive_mean(long long n, const PivotParams& params, CostMeasure m) {
  if (n < params.sample_size() || n > kMaxBruteForceSize)
    throw std::invalid_argument("first_step_exhaustive_mean: n must be in [k, 9]");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  long long total = 0;
  long long count = 0;
  std::vector<int> work;
  do {
    work = perm;
    CostLedger ledger;
    partition_step(std::span<int>(work), 0, static_cast<index_t>(n) - 1, CallType::root, params, ledger);
    total += toll_from_stats(ledger.steps.front(), m);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational(total, count);
}

}  // namespace gyqs

#endif  // GYQS_RECURRENCE_HPP
