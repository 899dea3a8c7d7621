#ifndef GYQS_HARNESS_VERIFY_HPP
#define GYQS_HARNESS_VERIFY_HPP

// Self-check suites run by `verify`. Each suite is quick (seconds at most)
// and exercises one module's invariants end to end.

#include <gyqs/analysis.hpp>
#include <gyqs/cost_model.hpp>
#include <gyqs/distributions.hpp>
#include <gyqs/harness/simulate.hpp>
#include <gyqs/optimizer.hpp>
#include <gyqs/recurrence.hpp>
#include <gyqs/sort.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace gyqs::harness {

struct VerifyOptions {
  /// Negative control: adds one to every step's comparison toll.
  bool corrupt_toll = false;
};

struct SuiteResult {
  std::string name;
  bool passed;
  std::string detail;
};

namespace detail {

struct SuiteFailure {
  std::string what;
};

inline void check(bool ok, const std::string& what) {
  if (!ok) throw SuiteFailure{what};
}

inline std::vector<PivotParams::Triple> triples_up_to(int k_max) {
  std::vector<PivotParams::Triple> out;
  for (int k = 2; k <= k_max; ++k)
    for (const auto& t : triples_for_sample_size(k)) out.push_back(t);
  return out;
}

inline std::vector<int> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

/// Relative-order pattern of a range as a vector of ranks.
inline std::vector<int> pattern(const std::vector<int>& a, index_t lo, index_t hi) {
  std::vector<int> v(a.begin() + lo, a.begin() + hi + 1);
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int& x : v) x = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
  return v;
}

}  // namespace detail

inline std::vector<SuiteResult> run_verify(const VerifyOptions& opt = {}) {
  using detail::check;
  const auto toll = [&](const StepStats& s, CostMeasure m) {
    return toll_from_stats(s, m) + (opt.corrupt_toll && m == CostMeasure::comparisons ? 1 : 0);
  };

  std::vector<std::pair<std::string, std::function<void()>>> suites;

  suites.emplace_back("sort.correctness", [] {
    std::mt19937_64 rng(1);
    for (const auto& t : detail::triples_up_to(6))
      for (int extra : {0, 3}) {
        const PivotParams p(t, sample_size(t) - 1 + extra);
        for (std::size_t n : {0u, 1u, 2u, 5u, 17u, 64u, 300u}) {
          std::vector<std::vector<int>> inputs{detail::random_permutation(n, rng)};
          std::vector<int> asc(n), few(n);
          std::iota(asc.begin(), asc.end(), 0);
          for (std::size_t i = 0; i < n; ++i) few[i] = static_cast<int>(rng() % 3);
          inputs.push_back(asc);
          inputs.emplace_back(asc.rbegin(), asc.rend());
          inputs.push_back(few);
          inputs.emplace_back(n, 7);
          for (auto v : inputs) {
            auto expected = v;
            std::sort(expected.begin(), expected.end());
            sort(v, p);
            check(v == expected, "unsorted output for t=" + to_string(t) + " n=" + std::to_string(n));
          }
        }
      }
  });

  suites.emplace_back("cost_model.step_toll_identity", [&] {
    std::mt19937_64 rng(2);
    for (const auto& t : detail::triples_up_to(7))
      for (std::size_t n : {10u, 57u, 400u}) {
        auto v = detail::random_permutation(n, rng);
        const CostLedger l = sort(v, PivotParams::with_min_cutoff(t));
        for (const auto& s : l.steps) {
          check(is_consistent(s), "inconsistent step record");
          check(toll(s, CostMeasure::comparisons) == s.comparisons, "comparison toll mismatch at t=" + to_string(t));
          check(toll(s, CostMeasure::swaps) == s.swaps, "swap toll mismatch at t=" + to_string(t));
        }
      }
  });

  suites.emplace_back("sort.counter_conservation", [] {
    std::mt19937_64 rng(3);
    for (const auto& t : detail::triples_up_to(6)) {
      auto v = detail::random_permutation(500, rng);
      const CostLedger l = sort(v, PivotParams::with_min_cutoff(t));
      check(l.comparisons == l.partition_comparisons + l.sample_sort_comparisons + l.insertion_sort_comparisons,
            "comparison counters do not add up");
      check(l.swaps == l.partition_swaps + l.placement_swaps, "swap counters do not add up");
      std::int64_t c = 0, b = 0;
      for (const auto& s : l.steps) c += s.comparisons, b += bytecode_toll(s);
      check(c == l.partition_comparisons && b == l.bytecode_model, "step records disagree with ledger");
    }
  });

  suites.emplace_back("sort.sample_placement", [] {
    std::mt19937_64 rng(4);
    for (const auto& t : detail::triples_up_to(7))
      for (int rep = 0; rep < 20; ++rep) {
        const PivotParams p = PivotParams::with_min_cutoff(t);
        const std::size_t n = static_cast<std::size_t>(p.sample_size()) + rng() % 40;
        auto v = detail::random_permutation(n, rng);
        CostLedger l;
        const StepOutcome o = partition_step(std::span<int>(v), 0, static_cast<index_t>(n) - 1, CallType::root, p, l);
        const int P = v[o.p_pos], Q = v[o.q_pos];
        check(P < Q, "pivots out of order");
        for (index_t i = 0; i < static_cast<index_t>(n); ++i) {
          if (i < o.p_pos) check(v[i] < P, "left segment holds a non-small element");
          else if (i > o.p_pos && i < o.q_pos) check(v[i] > P && v[i] < Q, "middle segment misclassified");
          else if (i > o.q_pos) check(v[i] > Q, "right segment holds a non-large element");
        }
        const auto& [left, middle, right] = o.children;
        check(std::is_sorted(v.begin() + left.lo, v.begin() + left.lo + t[0]), "left prefix not sorted");
        check(std::is_sorted(v.begin() + middle.lo, v.begin() + middle.lo + t[1]), "middle prefix not sorted");
        check(std::is_sorted(v.begin() + right.hi + 1 - t[2], v.begin() + right.hi + 1), "right suffix not sorted");
      }
  });

  suites.emplace_back("sort.randomness_preservation", [] {
    for (const PivotParams::Triple t : {PivotParams::Triple{1, 0, 0}, {0, 1, 1}, {0, 0, 2}}) {
      const PivotParams p = PivotParams::with_min_cutoff(t);
      const int n = 7;
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 1);
      // (child, size) -> pattern -> count
      std::map<std::pair<int, index_t>, std::map<std::vector<int>, long>> seen;
      do {
        auto v = perm;
        CostLedger l;
        const StepOutcome o = partition_step(std::span<int>(v), 0, n - 1, CallType::root, p, l);
        for (int c = 0; c < 3; ++c) {
          const Subproblem& sp = o.children[c];
          seen[{c, sp.size()}][detail::pattern(v, sp.lo, sp.hi)]++;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      for (const auto& [key, counts] : seen) {
        const index_t size = key.second;
        if (size <= 0) continue;
        const index_t sorted_part = std::min<index_t>(t[key.first], size);
        long expected_patterns = 1;
        for (index_t i = sorted_part + 1; i <= size; ++i) expected_patterns *= i;
        check(static_cast<long>(counts.size()) == expected_patterns, "missing subarray orderings");
        const long first = counts.begin()->second;
        for (const auto& [pat, cnt] : counts) check(cnt == first, "non-uniform subarray orderings");
      }
    }
  });

  suites.emplace_back("cost_model.first_step_expectations", [&] {
    for (const auto& t : detail::triples_up_to(4))
      for (long long n = sample_size(t); n <= 7; ++n) {
        const PivotParams p(t, sample_size(t) - 1);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::array<std::int64_t, 3> total{};
        long long count = 0;
        do {
          auto v = perm;
          CostLedger l;
          partition_step(std::span<int>(v), 0, static_cast<index_t>(n) - 1, CallType::root, p, l);
          for (int m = 0; m < 3; ++m) total[m] += toll(l.steps.front(), all_measures[m]);
          ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (int m = 0; m < 3; ++m)
          check(Rational(total[m], count) == expected_toll(p, n, all_measures[m]),
                "first-step mean differs for t=" + to_string(t) + " n=" + std::to_string(n));
      }
  });

  suites.emplace_back("recurrence.oracle_equivalence", [] {
    for (const auto& t : detail::triples_up_to(3))
      for (int extra : {0, 1}) {
        const PivotParams p(t, sample_size(t) - 1 + extra);
        for (CostMeasure m : {CostMeasure::comparisons, CostMeasure::swaps}) {
          const RecurrenceTable table = expected_cost_table(7, p, m);
          for (long long n = 0; n <= 7; ++n)
            check(table[static_cast<std::size_t>(n)] == brute_force_expected(n, p, m),
                  "recurrence differs from enumeration at t=" + to_string(t) + " n=" + std::to_string(n));
        }
      }
  });

  suites.emplace_back("recurrence.subproblem_law", [] {
    for (const auto& t : detail::triples_up_to(5))
      for (long long n = sample_size(t); n <= 12; ++n) {
        Rational total;
        std::array<std::vector<Rational>, 3> marg;
        for (auto& m : marg) m.assign(static_cast<std::size_t>(n), Rational());
        for (long long a = 0; a <= n - 2; ++a)
          for (long long b = 0; a + b <= n - 2; ++b) {
            const Rational pr = subproblem_prob(n, {a, b, n - 2 - a - b}, t);
            total += pr;
            marg[0][a] += pr, marg[1][b] += pr, marg[2][n - 2 - a - b] += pr;
          }
        check(total == Rational(1), "subproblem law does not sum to 1");
        for (int l = 0; l < 3; ++l)
          for (long long j = 0; j <= n - 2; ++j)
            check(marg[l][j] == subproblem_marginal(n, l, j, t), "marginal disagrees with joint law");
      }
  });

  suites.emplace_back("analysis.coefficients", [] {
    check(discrete_entropy({0, 0, 0}) == Rational(5, 6), "H(0,0,0) != 5/6");
    check(discrete_entropy({1, 1, 1}) == Rational(19, 20), "H(1,1,1) != 19/20");
    check(leading_term({0, 0, 0}, CostMeasure::comparisons) == Rational(19, 10), "classic comparisons != 1.9");
    check(leading_term({0, 0, 0}, CostMeasure::swaps) == Rational(3, 5), "classic swaps != 0.6");
    // Reference values with the tolerance of their last printed digit.
    const struct { PivotParams::Triple t; CostMeasure m; double v, tol; } table2[] = {
        {{1, 1, 1}, CostMeasure::comparisons, 1.7043, 5e-5}, {{0, 3, 0}, CostMeasure::swaps, 0.3926, 5e-5},
        {{0, 1, 2}, CostMeasure::bytecodes, 18.791, 5e-4}, {{1, 1, 1}, CostMeasure::bytecodes, 19.298, 5e-4}};
    for (const auto& c : table2)
      check(std::abs(leading_term(c.t, c.m).to_double() - c.v) <= c.tol,
            "reference coefficient mismatch at " + to_string(c.t));
  });

  suites.emplace_back("analysis.master_theorem_identities", [] {
    for (const auto& t : detail::triples_up_to(12)) {
      const CmtResult r = cmt_check(t);
      check(r.h.is_zero(), "H != 0 for t=" + to_string(t));
      check(r.h_tilde == discrete_entropy(t), "H-tilde != H(t) for t=" + to_string(t));
    }
  });

  suites.emplace_back("optimizer.discrete", [] {
    check(discrete_optimum(5, CostMeasure::comparisons).front().t == PivotParams::Triple{1, 1, 1}, "k=5 comparisons");
    check(discrete_optimum(5, CostMeasure::swaps).front().t == PivotParams::Triple{0, 3, 0}, "k=5 swaps");
    check(discrete_optimum(5, CostMeasure::bytecodes).front().t == PivotParams::Triple{0, 1, 2}, "k=5 bytecodes");
    check(discrete_optimum(8, CostMeasure::comparisons).front().t == PivotParams::Triple{3, 1, 2}, "k=8 comparisons");
    for (const auto& c : relative_table({2, 2, 2}))
      if (c.t == PivotParams::Triple{3, 1, 2})
        check(std::abs(c.ratio_pct + 1.08) < 0.005, "k=8 delta at (3,1,2)");
    for (int k = 2; k <= 12; ++k) {
      const std::string at = " at k=" + std::to_string(k);
      check(min_coefficient_triple(k, CostMeasure::comparisons) == PivotParams::Triple{k - 2, 0, 0}, "a_C minimizer" + at);
      check(min_coefficient_triple(k, CostMeasure::swaps) == PivotParams::Triple{0, k - 2, 0}, "a_S minimizer" + at);
      check(min_coefficient_triple(k, CostMeasure::bytecodes) == PivotParams::Triple{0, 0, k - 2}, "a_BC minimizer" + at);
    }
  });

  suites.emplace_back("optimizer.continuous", [] {
    const ContinuousOptimum c = continuous_optimum(CostMeasure::comparisons);
    check(std::abs(c.argument.t1 - 0.428846) < 1e-3 && std::abs(c.argument.t2 - 0.268774) < 1e-3 &&
              std::abs(c.value - 1.4931) < 5e-4,
          "comparisons optimum");
    const ContinuousOptimum b = continuous_optimum(CostMeasure::bytecodes);
    check(std::abs(b.argument.t1 - 0.206772) < 1e-3 && std::abs(b.argument.t2 - 0.348562) < 1e-3 &&
              std::abs(b.value - 16.3833) < 5e-4,
          "bytecodes optimum");
    const ContinuousOptimum s = continuous_optimum(CostMeasure::swaps);
    check(s.boundary && s.value < 1e-4, "swaps optimum");
  });

  suites.emplace_back("distributions.partition_size_law", [] {
    for (const auto& t : detail::triples_up_to(5))
      for (long long n = sample_size(t); n <= 11; ++n) {
        const long long N = n - sample_size(t);
        Rational total;
        std::vector<Rational> marg(static_cast<std::size_t>(N) + 1);
        for (long long a = 0; a <= N; ++a)
          for (long long b = 0; a + b <= N; ++b) {
            const Rational pr = partition_size_law(n, {a, b, N - a - b}, t);
            total += pr;
            marg[a] += pr;
          }
        check(total == Rational(1), "partition size law does not sum to 1");
        for (long long i = 0; i <= N; ++i)
          check(marg[i] == partition_size_marginal(N, 0, i, t), "partition size marginal mismatch");
      }
  });

  suites.emplace_back("distributions.dirichlet_moments", [] {
    const PivotParams::Triple t{1, 0, 2};
    const std::array<long long, 3> alpha{2, 1, 3};
    std::mt19937_64 rng(9);
    const int samples = 200000;
    for (const std::array<long long, 3> m : {std::array<long long, 3>{1, 0, 0}, {1, 1, 0}, {0, 0, 2}, {1, 1, 1}}) {
      double sum = 0, sum2 = 0;
      std::mt19937_64 local(rng());
      for (int i = 0; i < samples; ++i) {
        const Spacings s = sample_spacings(t, local);
        const double x = std::pow(s.d[0], m[0]) * std::pow(s.d[1], m[1]) * std::pow(s.d[2], m[2]);
        sum += x, sum2 += x * x;
      }
      const double mean = sum / samples;
      const double se = std::sqrt((sum2 / samples - mean * mean) / samples);
      const double exact = dirichlet_mixed_moment(alpha, m).to_double();
      check(std::abs(mean - exact) <= 4 * se, "Dirichlet moment outside 4 standard errors");
    }
  });

  suites.emplace_back("harness.determinism", [] {
    ExperimentConfig cfg;
    cfg.sizes = {200, 1000};
    cfg.trials = 3;
    const std::string a = simulation_csv(simulate(cfg));
    cfg.parallelism = 2;
    check(a == simulation_csv(simulate(cfg)), "result depends on parallelism");
  });

  std::vector<SuiteResult> results;
  for (auto& [name, body] : suites) {
    try {
      body();
      results.push_back({name, true, ""});
    } catch (const detail::SuiteFailure& f) {
      results.push_back({name, false, f.what});
    } catch (const std::exception& e) {
      results.push_back({name, false, std::string("exception: ") + e.what()});
    }
  }
  return results;
}

inline bool all_passed(const std::vector<SuiteResult>& r) {
  return std::all_of(r.begin(), r.end(), [](const SuiteResult& s) { return s.passed; });
}

inline std::string verify_report(const std::vector<SuiteResult>& r) {
  std::ostringstream o;
  int passed = 0;
  for (const auto& s : r) {
    o << (s.passed ? "PASS " : "FAIL ") << s.name;
    if (!s.passed) o << " -- " << s.detail;
    o << '\n';
    passed += s.passed;
  }
  o << passed << "/" << r.size() << " suites passed\n";
  return o.str();
}

}  // namespace gyqs::harness

#endif  // GYQS_HARNESS_VERIFY_HPP
