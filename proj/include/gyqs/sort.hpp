#ifndef GYQS_SORT_HPP
#define GYQS_SORT_HPP

// Generalized Yaroslavskiy Quicksort: dual-pivot partitioning with pivots
// taken as fixed order statistics of a sample, instrumented so that every
// key comparison and swap is counted.
//
// Index convention: all ranges are inclusive [lo, hi] over a std::span, with
// signed indices so that degenerate results such as lo-1 are representable.

#include <gyqs/params.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gyqs {

using index_t = std::ptrdiff_t;

/// Observables of one partitioning step.
struct StepStats {
  std::int64_t n_step = 0;       ///< subarray length including the sample
  std::int64_t sample_size = 0;  ///< k; 0 for a bare partition() call
  std::array<std::int64_t, 3> sizes{};  ///< I = (small, medium, large) ordinary counts
  std::int64_t large_at_k = 0;   ///< large elements in pointer k's range (includes the overshoot element)
  std::int64_t small_at_g = 0;   ///< small elements in pointer g's range
  std::int64_t small_at_k = 0;   ///< small elements in pointer k's range
  int delta = 0;                 ///< 1 iff k and g met on a large element
  std::int64_t comparisons = 0;  ///< key comparisons executed by the partitioning loop
  std::int64_t swaps = 0;        ///< swaps executed by the partitioning loop

  std::int64_t ordinary() const { return n_step - sample_size; }

  friend bool operator==(const StepStats&, const StepStats&) = default;
};

/// Internal consistency of a StepStats record.
inline bool is_consistent(const StepStats& s) {
  return s.sizes[0] >= 0 && s.sizes[1] >= 0 && s.sizes[2] >= 0 &&
         s.sizes[0] + s.sizes[1] + s.sizes[2] == s.ordinary() && (s.delta == 0 || s.delta == 1) &&
         s.large_at_k <= s.sizes[2] + s.delta && s.large_at_k >= s.delta &&
         s.small_at_g <= s.sizes[0] && s.small_at_k + s.small_at_g == s.sizes[0];
}

/// Per-step contribution to the Bytecode cost model:
/// 10 n + 13 I1 + 5 I2 + 11 (l@K - delta) + s@K, constant term fixed to 0.
inline std::int64_t bytecode_toll(const StepStats& s) {
  return 10 * s.n_step + 13 * s.sizes[0] + 5 * s.sizes[1] + 11 * (s.large_at_k - s.delta) +
         s.small_at_k;
}

/// Accumulated costs of one sort call.
struct CostLedger {
  std::int64_t comparisons = 0;            ///< all key comparisons
  std::int64_t swaps = 0;                  ///< all swaps (partitioning + pivot placement)
  std::int64_t partition_comparisons = 0;  ///< comparisons inside partitioning loops only
  std::int64_t partition_swaps = 0;        ///< swaps inside partitioning loops only
  std::int64_t bytecode_model = 0;         ///< sum of bytecode_toll over all steps
  std::int64_t sample_sort_comparisons = 0;
  std::int64_t insertion_sort_comparisons = 0;
  std::int64_t placement_swaps = 0;  ///< swaps moving pivots and the t2 sampled-out block
  std::int64_t writes = 0;           ///< array writes by Insertionsort and sample sorting
  std::int64_t partitioning_steps = 0;
  std::vector<StepStats> steps;  ///< filled only when record_steps is set
  bool record_steps = true;

  void add_step(const StepStats& s) {
    comparisons += s.comparisons;
    swaps += s.swaps;
    partition_comparisons += s.comparisons;
    partition_swaps += s.swaps;
    bytecode_model += bytecode_toll(s);
    ++partitioning_steps;
    if (record_steps) steps.push_back(s);
  }
};

/// Selector for one ledger counter.
enum class Counter {
  comparisons,
  swaps,
  partition_comparisons,
  partition_swaps,
  bytecode_model,
};

inline std::int64_t value_of(const CostLedger& l, Counter c) {
  switch (c) {
    case Counter::comparisons: return l.comparisons;
    case Counter::swaps: return l.swaps;
    case Counter::partition_comparisons: return l.partition_comparisons;
    case Counter::partition_swaps: return l.partition_swaps;
    case Counter::bytecode_model: return l.bytecode_model;
  }
  return 0;
}

/// Counters fed exclusively by partitioning steps.
inline bool is_partitioning_only(Counter c) {
  return c == Counter::partition_comparisons || c == Counter::partition_swaps ||
         c == Counter::bytecode_model;
}

/// The partitioning-only counter whose per-step increment is the toll of `m`.
inline Counter partitioning_counter(CostMeasure m) {
  switch (m) {
    case CostMeasure::comparisons: return Counter::partition_comparisons;
    case CostMeasure::swaps: return Counter::partition_swaps;
    case CostMeasure::bytecodes: return Counter::bytecode_model;
  }
  return Counter::partition_comparisons;
}

enum class Direction { left, right };

struct InsertionCounts {
  std::int64_t comparisons = 0;
  std::int64_t writes = 0;
};

template <typename T>
struct PartitionResult {
  index_t ip;
  index_t iq;
  StepStats stats;
};

/// Yaroslavskiy's partitioning of a[lo..hi] around p < q.
///
/// On return a[lo..ip] < p, p <= a[ip+1..iq-1] <= q and a[iq..hi] >= q.
/// p and q are passed by value and must not be elements of the range.
/// An empty range (hi < lo) yields (lo-1, lo) and zeroed counts.
template <typename T, typename Compare = std::less<>>
PartitionResult<T> partition(std::span<T> a, index_t lo, index_t hi, const T& p, const T& q,
                             Compare comp = {}) {
  StepStats st;
  st.n_step = hi >= lo ? hi - lo + 1 : 0;
  auto less = [&](const T& x, const T& y) {
    ++st.comparisons;
    return comp(x, y);
  };
  auto swap_at = [&](index_t i, index_t j) {
    ++st.swaps;
    using std::swap;
    swap(a[i], a[j]);
  };

  index_t l = lo, g = hi, k = l;
  while (k <= g) {
    if (less(a[k], p)) {  // a[k] < p
      ++st.small_at_k;
      swap_at(k, l);
      ++l;
    } else if (!less(a[k], q)) {  // a[k] >= q
      ++st.large_at_k;
      bool g_above_q;
      while ((g_above_q = less(q, a[g])) && k < g) --g;  // a[g] > q && k < g
      if (g_above_q) {
        // g stopped on k itself: the pointers met on a large element, which
        // k has now scanned while g is about to step over it.
        st.delta = 1;
      }
      if (!less(a[g], p)) {  // a[g] >= p
        swap_at(k, g);
      } else {
        ++st.small_at_g;
        swap_at(k, g);
        swap_at(k, l);
        ++l;
      }
      --g;
    }
    ++k;
  }
  --l;
  ++g;
  st.sizes = {l - lo + 1, g - l - 1, hi - g + 1};
  return {l, g, st};
}

/// Insertionsort of a[lo..hi] that assumes the s leftmost (Direction::left)
/// or s rightmost (Direction::right) elements are already sorted and skips
/// the corresponding outer-loop iterations.
template <typename T, typename Compare = std::less<>>
InsertionCounts insertion_sort(std::span<T> a, index_t lo, index_t hi, index_t s, Direction dir,
                               Compare comp = {}) {
  if (hi < lo) throw std::invalid_argument("insertion_sort: empty range");
  if (s < 1 || s > hi - lo + 1) throw std::invalid_argument("insertion_sort: presorted length out of range");
  InsertionCounts c;
  if (dir == Direction::left) {
    for (index_t i = lo + s; i <= hi; ++i) {
      index_t j = i - 1;
      T v = std::move(a[i]);
      while (j >= lo && (++c.comparisons, comp(v, a[j]))) {
        a[j + 1] = std::move(a[j]);
        ++c.writes;
        --j;
      }
      a[j + 1] = std::move(v);
      ++c.writes;
    }
  } else {
    for (index_t i = hi - s; i >= lo; --i) {
      index_t j = i + 1;
      T v = std::move(a[i]);
      while (j <= hi && (++c.comparisons, comp(a[j], v))) {
        a[j - 1] = std::move(a[j]);
        ++c.writes;
        ++j;
      }
      a[j - 1] = std::move(v);
      ++c.writes;
    }
  }
  return c;
}

/// Sorts the k sample cells of a[lo..hi]: the t1+t2+1 leftmost and the
/// t3+1 rightmost positions, treated as one contiguous virtual array. The
/// ordinary cells in between are not touched.
template <typename T, typename Compare = std::less<>>
InsertionCounts sort_sample(std::span<T> a, index_t lo, index_t hi, index_t s, Direction dir,
                            const PivotParams& params, Compare comp = {}) {
  const index_t k = params.sample_size();
  const index_t lead = params.t1() + params.t2() + 1;  // cells in the left part
  const index_t n = hi - lo + 1;
  if (n < k) throw std::invalid_argument("sort_sample: subarray shorter than the sample");
  if (s < 1 || (dir == Direction::left && s > lead) ||
      (dir == Direction::right && s > params.t3() + 1))
    throw std::invalid_argument("sort_sample: presorted length out of range");

  const index_t gap = n - k;
  auto cell = [&](index_t i) -> T& { return i < lo + lead ? a[i] : a[i + gap]; };

  InsertionCounts c;
  if (dir == Direction::left) {
    c = insertion_sort(a, lo, lo + lead - 1, s, Direction::left, comp);
    for (index_t i = lo + lead; i <= lo + k - 1; ++i) {
      index_t j = i - 1;
      T v = std::move(cell(i));
      while (j >= lo && (++c.comparisons, comp(v, cell(j)))) {
        cell(j + 1) = std::move(cell(j));
        ++c.writes;
        --j;
      }
      cell(j + 1) = std::move(v);
      ++c.writes;
    }
  } else {
    c = insertion_sort(a, hi - params.t3(), hi, s, Direction::right, comp);
    for (index_t i = lo + lead - 1; i >= lo; --i) {
      index_t j = i + 1;
      T v = std::move(cell(i));
      while (j <= lo + k - 1 && (++c.comparisons, comp(cell(j), v))) {
        cell(j - 1) = std::move(cell(j));
        ++c.writes;
        ++j;
      }
      cell(j - 1) = std::move(v);
      ++c.writes;
    }
  }
  return c;
}

/// A subarray scheduled for a recursive call.
struct Subproblem {
  index_t lo;
  index_t hi;
  CallType type;
  index_t size() const { return hi - lo + 1; }
};

/// Result of one partitioning step (sample sort, partition, pivot placement).
struct StepOutcome {
  index_t p_pos;  ///< final position of the small pivot
  index_t q_pos;  ///< final position of the large pivot
  StepStats stats;
  std::array<Subproblem, 3> children;  ///< left, middle, right
};

namespace detail {

inline index_t presorted_length(const PivotParams& params, CallType type) {
  switch (type) {
    case CallType::root: return 1;
    case CallType::left: return std::max(params.t1(), 1);
    case CallType::middle: return std::max(params.t2(), 1);
    case CallType::right: return std::max(params.t3(), 1);
  }
  return 1;
}

inline Direction direction_for(CallType type) {
  return type == CallType::right ? Direction::right : Direction::left;
}

}  // namespace detail

/// One partitioning step on a[lo..hi], which must hold at least k elements:
/// sorts the sample, partitions the ordinary elements between the two sample
/// parts, and moves the pivots and the middle sampled-out block into place.
template <typename T, typename Compare = std::less<>>
StepOutcome partition_step(std::span<T> a, index_t lo, index_t hi, CallType type,
                           const PivotParams& params, CostLedger& ledger, Compare comp = {}) {
  const index_t t1 = params.t1(), t2 = params.t2(), t3 = params.t3();
  const InsertionCounts sc = sort_sample(a, lo, hi, detail::presorted_length(params, type),
                                         detail::direction_for(type), params, comp);
  ledger.sample_sort_comparisons += sc.comparisons;
  ledger.comparisons += sc.comparisons;
  ledger.writes += sc.writes;

  const T p = a[lo + t1];
  const T q = a[hi - t3];
  const index_t part_lo = lo + t1 + t2 + 1;
  const index_t part_hi = hi - t3 - 1;
  PartitionResult<T> pr = partition(a, part_lo, part_hi, p, q, comp);
  pr.stats.n_step = hi - lo + 1;
  pr.stats.sample_size = params.sample_size();
  ledger.add_step(pr.stats);

  using std::swap;
  // Downward order keeps overlapping blocks correct when I1 <= t2.
  for (index_t j = t2; j >= 0; --j) swap(a[lo + t1 + j], a[pr.ip - t2 + j]);
  swap(a[pr.iq], a[part_hi + 1]);
  ledger.placement_swaps += t2 + 2;
  ledger.swaps += t2 + 2;

  StepOutcome out;
  out.p_pos = pr.ip - t2;
  out.q_pos = pr.iq;
  out.stats = pr.stats;
  out.children = {Subproblem{lo, pr.ip - t2 - 1, CallType::left},
                  Subproblem{pr.ip - t2 + 1, pr.iq - 1, CallType::middle},
                  Subproblem{pr.iq + 1, hi, CallType::right}};
  return out;
}

/// Sorts `a` in place with Generalized Yaroslavskiy Quicksort and returns the
/// cost ledger. Keys are expected to be distinct; duplicates are still
/// sorted correctly but their costs fall outside the analysed model.
template <typename T, typename Compare = std::less<>>
CostLedger sort(std::span<T> a, const PivotParams& params, Compare comp = {},
                bool record_steps = true) {
  CostLedger ledger;
  ledger.record_steps = record_steps;
  if (a.size() < 2) return ledger;

  // Explicit stack in place of recursion; children are pushed in reverse so
  // that calls execute in the same depth-first order as the recursive form.
  std::vector<Subproblem> pending{{0, static_cast<index_t>(a.size()) - 1, CallType::root}};
  while (!pending.empty()) {
    const Subproblem sp = pending.back();
    pending.pop_back();
    if (sp.size() <= 0) continue;
    if (sp.hi - sp.lo < params.cutoff()) {
      const InsertionCounts ic =
          insertion_sort(a, sp.lo, sp.hi, std::min(detail::presorted_length(params, sp.type), sp.size()),
                         detail::direction_for(sp.type), comp);
      ledger.insertion_sort_comparisons += ic.comparisons;
      ledger.comparisons += ic.comparisons;
      ledger.writes += ic.writes;
      continue;
    }
    const StepOutcome out = partition_step(a, sp.lo, sp.hi, sp.type, params, ledger, comp);
    pending.push_back(out.children[2]);
    pending.push_back(out.children[1]);
    pending.push_back(out.children[0]);
  }
  return ledger;
}

template <typename T, typename Compare = std::less<>>
CostLedger sort(std::vector<T>& a, const PivotParams& params, Compare comp = {},
                bool record_steps = true) {
  return sort(std::span<T>(a), params, comp, record_steps);
}

}  // namespace gyqs

#endif  // GYQS_SORT_HPP
