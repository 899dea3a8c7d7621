// Sort a random permutation with tertiles-of-five pivots and compare the
// measured costs with the leading-term predictions.

#include <gyqs/analysis.hpp>
#include <gyqs/sort.hpp>

#include <cmath>
#include <iostream>
#include <numeric>
#include <random>
#include <vector>

int main() {
  const gyqs::PivotParams params({1, 1, 1}, 4);
  const long n = 200000;

  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 0);
  std::mt19937_64 rng(2024);
  std::shuffle(a.begin(), a.end(), rng);

  const gyqs::CostLedger ledger = gyqs::sort(a, params, std::less<>{}, false);
  const double nlnn = n * std::log(static_cast<double>(n));

  std::cout << "sorted: " << std::boolalpha << std::is_sorted(a.begin(), a.end()) << "\n";
  std::cout << "comparisons / (n ln n) = " << ledger.comparisons / nlnn << "  (leading term "
            << gyqs::leading_term(params.t(), gyqs::CostMeasure::comparisons).to_double() << ")\n";
  std::cout << "swaps       / (n ln n) = " << ledger.swaps / nlnn << "  (leading term "
            << gyqs::leading_term(params.t(), gyqs::CostMeasure::swaps).to_double() << ")\n";
  std::cout << "H(t) = " << gyqs::discrete_entropy(params.t()).str() << "\n";
}
