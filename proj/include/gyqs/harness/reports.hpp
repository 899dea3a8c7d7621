#ifndef GYQS_HARNESS_REPORTS_HPP
#define GYQS_HARNESS_REPORTS_HPP

// CSV renderings of the analytical results.

#include <gyqs/analysis.hpp>
#include <gyqs/harness/format.hpp>
#include <gyqs/optimizer.hpp>
#include <gyqs/recurrence.hpp>

#include <string>
#include <vector>

namespace gyqs::harness {

/// quantity,exact,decimal for H, the three coefficients and their ratios.
inline std::string analyze_csv(const PivotParams& params) {
  const CostCoefficients c = coefficients(params.t());
  CsvWriter w;
  w.row("quantity", "exact", "decimal");
  auto put = [&](const char* name, const Rational& v) { w.row(name, v.str(), fmt6(v.to_double())); };
  put("entropy", c.entropy);
  for (CostMeasure m : all_measures) put(("a_" + std::string(to_string(m))).c_str(), c.coefficient(m));
  for (CostMeasure m : all_measures) put(("ratio_" + std::string(to_string(m))).c_str(), c.ratio(m));
  return w.str();
}

/// Leading-term coefficients a/H for all t with sample size k as a
/// (k-1) x (k-1) grid: rows t1, columns t2, t3 implied; cells outside the
/// simplex are left empty.
inline std::string table_csv(int k, CostMeasure m) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  CsvWriter w;
  std::vector<std::string> header{"t1\\t2"};
  for (int t2 = 0; t2 <= k - 2; ++t2) header.push_back(std::to_string(t2));
  w.row(header);
  for (int t1 = 0; t1 <= k - 2; ++t1) {
    std::vector<std::string> f{std::to_string(t1)};
    for (int t2 = 0; t2 <= k - 2; ++t2)
      f.push_back(t1 + t2 <= k - 2 ? fmt6(leading_term({t1, t2, k - 2 - t1 - t2}, m).to_double()) : "");
    w.row(f);
  }
  return w.str();
}

inline std::string recurrence_csv(const PivotParams& params, long long n_max, CostMeasure m) {
  const RecurrenceTable table = expected_cost_table(n_max, params, m);
  CsvWriter w;
  w.row("n", "expected_exact", "expected_decimal");
  for (std::size_t n = 0; n <= table.max_n(); ++n)
    w.row(n, table[n].str(), fmt6(table[n].to_double()));
  return w.str();
}

inline std::string discrete_optimum_csv(int k, CostMeasure m) {
  CsvWriter w;
  w.row("rank", "t1", "t2", "t3", "leading_exact", "leading_decimal");
  int rank = 1;
  for (const auto& c : discrete_optimum(k, m))
    w.row(rank++, c.t[0], c.t[1], c.t[2], c.value.str(), fmt6(c.value.to_double()));
  return w.str();
}

inline std::string continuous_optimum_csv(const std::vector<CostMeasure>& measures) {
  CsvWriter w;
  w.row("measure", "tau1", "tau2", "tau3", "value", "boundary");
  for (CostMeasure m : measures) {
    const ContinuousOptimum o = continuous_optimum(m);
    w.row(to_string(m), fmt6(o.argument.t1), fmt6(o.argument.t2), fmt6(o.argument.t3), fmt6(o.value),
          o.boundary ? "true" : "false");
  }
  return w.str();
}

}  // namespace gyqs::harness

#endif  // GYQS_HARNESS_REPORTS_HPP
