#ifndef GYQS_PARAMS_HPP
#define GYQS_PARAMS_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gyqs {

/// Pivot sampling parameter t = (t1, t2, t3) together with the Insertionsort
/// cutoff M. The pivots are the (t1+1)-st and (t1+t2+2)-nd smallest of a
/// sample of k = t1+t2+t3+2 elements; subarrays of at most M elements go to
/// Insertionsort.
class PivotParams {
 public:
  using Triple = std::array<int, 3>;

  PivotParams(Triple t, int cutoff) : t_(t), cutoff_(cutoff) {
    for (int v : t_)
      if (v < 0) throw std::invalid_argument("sampling parameter components must be >= 0");
    if (cutoff_ < sample_size() - 1)
      throw std::invalid_argument("cutoff M = " + std::to_string(cutoff_) +
                                  " is below k-1 = " + std::to_string(sample_size() - 1));
  }

  /// Smallest admissible cutoff, M = k-1.
  static PivotParams with_min_cutoff(Triple t) {
    return PivotParams(t, t[0] + t[1] + t[2] + 1);
  }

  const Triple& t() const { return t_; }
  int t1() const { return t_[0]; }
  int t2() const { return t_[1]; }
  int t3() const { return t_[2]; }
  int sample_size() const { return t_[0] + t_[1] + t_[2] + 2; }
  int cutoff() const { return cutoff_; }

  friend bool operator==(const PivotParams&, const PivotParams&) = default;

 private:
  Triple t_;
  int cutoff_;
};

inline int sample_size(const PivotParams::Triple& t) { return t[0] + t[1] + t[2] + 2; }

inline void require_valid_triple(const PivotParams::Triple& t) {
  for (int v : t)
    if (v < 0) throw std::invalid_argument("sampling parameter components must be >= 0");
}

/// Which part of a parent's array a call works on; determines the presorted
/// prefix (left: t1, middle: t2) or suffix (right: t3) that sorting may skip.
enum class CallType { root, left, middle, right };

enum class CostMeasure { comparisons, swaps, bytecodes };

inline constexpr std::array<CostMeasure, 3> all_measures{
    CostMeasure::comparisons, CostMeasure::swaps, CostMeasure::bytecodes};

inline std::string_view to_string(CostMeasure m) {
  switch (m) {
    case CostMeasure::comparisons: return "comparisons";
    case CostMeasure::swaps: return "swaps";
    case CostMeasure::bytecodes: return "bytecodes";
  }
  return "?";
}

inline CostMeasure parse_measure(std::string_view s) {
  if (s == "comparisons") return CostMeasure::comparisons;
  if (s == "swaps") return CostMeasure::swaps;
  if (s == "bytecodes") return CostMeasure::bytecodes;
  throw std::invalid_argument("unknown cost measure '" + std::string(s) + "'");
}

inline std::string to_string(const PivotParams::Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

}  // namespace gyqs

#endif  // GYQS_PARAMS_HPP
