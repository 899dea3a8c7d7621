#ifndef GYQS_HARNESS_SIMULATE_HPP
#define GYQS_HARNESS_SIMULATE_HPP

// Seeded Monte Carlo runs of the instrumented sort on random permutations.

#include <gyqs/analysis.hpp>
#include <gyqs/harness/format.hpp>
#include <gyqs/params.hpp>
#include <gyqs/sort.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gyqs::harness {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the trial with global index `trial`; independent of thread count.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed ^ trial);
}

struct ExperimentConfig {
  PivotParams::Triple t{1, 1, 1};
  std::optional<int> cutoff;  ///< defaults to k-1
  std::vector<long long> sizes{1000, 10000, 100000};
  long long trials = 100;
  std::uint64_t seed = 42;
  std::vector<CostMeasure> measures{all_measures.begin(), all_measures.end()};
  int parallelism = 1;

  PivotParams params() const {
    return PivotParams(t, cutoff.value_or(sample_size(t) - 1));
  }

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const {
    params();
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (sizes.empty()) throw std::invalid_argument("at least one size is required");
    for (long long n : sizes)
      if (n < 1) throw std::invalid_argument("sizes must be >= 1");
    if (measures.empty()) throw std::invalid_argument("at least one measure is required");
    if (parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
  }
};

/// Ledger value reported for a measure: all comparisons, all swaps, and the
/// Bytecode model (defined per partitioning step).
inline std::int64_t observed(const CostLedger& l, CostMeasure m) {
  switch (m) {
    case CostMeasure::comparisons: return l.comparisons;
    case CostMeasure::swaps: return l.swaps;
    case CostMeasure::bytecodes: return l.bytecode_model;
  }
  return 0;
}

/// Sorts one uniformly random permutation of 1..n and returns its ledger.
inline CostLedger run_trial(long long n, const PivotParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int32_t> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 1);
  std::shuffle(a.begin(), a.end(), rng);
  CostLedger ledger = sort(std::span<std::int32_t>(a), params, std::less<>{}, false);
  if (!std::is_sorted(a.begin(), a.end())) throw std::logic_error("run_trial: output not sorted");
  return ledger;
}

struct MeasureSummary {
  CostMeasure measure;
  double mean;       ///< trial mean of the counter
  double predicted;  ///< (a/H) n ln n
  double gap;        ///< mean / predicted - 1
  double normalized; ///< mean / (n ln n)
};

struct SimulationRow {
  long long n;
  long long trials;
  std::vector<MeasureSummary> measures;
};

namespace detail {

// Totals are integers, so the result does not depend on how trials are split.
inline std::array<std::int64_t, 3> total_costs(long long n, const ExperimentConfig& cfg,
                                               std::uint64_t first_trial) {
  const PivotParams params = cfg.params();
  const int workers = static_cast<int>(std::min<long long>(cfg.parallelism, cfg.trials));
  std::vector<std::array<std::int64_t, 3>> partial(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    for (long long i = w; i < cfg.trials; i += workers) {
      const CostLedger l = run_trial(n, params, trial_seed(cfg.seed, first_trial + static_cast<std::uint64_t>(i)));
      for (int m = 0; m < 3; ++m) partial[w][m] += observed(l, all_measures[m]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::array<std::int64_t, 3> sum{};
  for (const auto& p : partial)
    for (int m = 0; m < 3; ++m) sum[m] += p[m];
  return sum;
}

}  // namespace detail

inline std::vector<SimulationRow> simulate(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<SimulationRow> rows;
  std::uint64_t first_trial = 0;
  for (long long n : cfg.sizes) {
    const auto totals = detail::total_costs(n, cfg, first_trial);
    first_trial += static_cast<std::uint64_t>(cfg.trials);
    SimulationRow row{n, cfg.trials, {}};
    const double nlnn = static_cast<double>(n) * std::log(static_cast<double>(n));
    for (CostMeasure m : cfg.measures) {
      const double mean = static_cast<double>(totals[static_cast<int>(m)]) / static_cast<double>(cfg.trials);
      const double predicted = leading_term(cfg.t, m).to_double() * nlnn;
      const double gap = predicted > 0 ? mean / predicted - 1.0 : NAN;
      row.measures.push_back({m, mean, predicted, gap, nlnn > 0 ? mean / nlnn : NAN});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string simulation_csv(const std::vector<SimulationRow>& rows) {
  CsvWriter w;
  if (rows.empty()) return {};
  std::vector<std::string> header{"n", "trials"};
  for (const auto& s : rows.front().measures) {
    const std::string name(to_string(s.measure));
    for (const char* suffix : {"_mean", "_predicted", "_gap", "_per_nlnn"}) header.push_back(name + suffix);
  }
  w.row(header);
  for (const auto& r : rows) {
    std::vector<std::string> f{std::to_string(r.n), std::to_string(r.trials)};
    for (const auto& s : r.measures)
      for (double v : {s.mean, s.predicted, s.gap, s.normalized}) f.push_back(fmt6(v));
    w.row(f);
  }
  return w.str();
}

}  // namespace gyqs::harness

#endif  // GYQS_HARNESS_SIMULATE_HPP
