#ifndef GYQS_OPTIMIZER_HPP
#define GYQS_OPTIMIZER_HPP

#include <gyqs/analysis.hpp>
#include <gyqs/params.hpp>
#include <gyqs/rational.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gyqs {

struct DiscreteCandidate {
  PivotParams::Triple t;
  Rational value;  ///< leading-term coefficient a/H
};

/// Every t with k(t) = k ranked by leading-term coefficient, smallest first;
/// ties go to the lexicographically smaller t.
inline std::vector<DiscreteCandidate> discrete_optimum(int k, CostMeasure m) {
  std::vector<DiscreteCandidate> out;
  for (const auto& t : triples_for_sample_size(k)) out.push_back({t, leading_term(t, m)});
  std::stable_sort(out.begin(), out.end(), [](const DiscreteCandidate& a, const DiscreteCandidate& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.t < b.t;
  });
  return out;
}

/// Argument minimizing the partitioning coefficient a alone (no entropy).
inline PivotParams::Triple min_coefficient_triple(int k, CostMeasure m) {
  const auto ts = triples_for_sample_size(k);
  return *std::min_element(ts.begin(), ts.end(), [m](const auto& a, const auto& b) {
    return cost_coefficient(a, m) < cost_coefficient(b, m);
  });
}

struct RelativeCell {
  PivotParams::Triple t;
  double inverse_entropy_pct;  ///< (H(base)/H(t) - 1) * 100
  double coefficient_pct;      ///< (a(t)/a(base) - 1) * 100
  double ratio_pct;            ///< ((a/H)(t) / (a/H)(base) - 1) * 100
};

inline double percent_delta(const Rational& value, const Rational& base) {
  return ((value / base) - Rational(1)).to_double() * 100.0;
}

/// Deltas relative to `baseline` for all t with the same sample size.
inline std::vector<RelativeCell> relative_table(const PivotParams::Triple& baseline,
                                                CostMeasure m = CostMeasure::comparisons) {
  const int k = sample_size(baseline);
  const Rational base_inv_h = Rational(1) / discrete_entropy(baseline);
  const Rational base_a = cost_coefficient(baseline, m);
  const Rational base_ratio = base_a * base_inv_h;
  std::vector<RelativeCell> out;
  for (const auto& t : triples_for_sample_size(k)) {
    const Rational inv_h = Rational(1) / discrete_entropy(t);
    const Rational a = cost_coefficient(t, m);
    out.push_back({t, percent_delta(inv_h, base_inv_h), percent_delta(a, base_a),
                   percent_delta(a * inv_h, base_ratio)});
  }
  return out;
}

inline std::vector<RelativeCell> relative_table(int k, const PivotParams::Triple& baseline,
                                                CostMeasure m = CostMeasure::comparisons) {
  if (sample_size(baseline) != k) throw std::invalid_argument("relative_table: baseline does not have sample size k");
  return relative_table(baseline, m);
}

struct ContinuousOptimum {
  Tau argument;
  double value;
  CostMeasure measure;
  bool boundary;  ///< some coordinate below 1e-6
  int evaluations;
};

namespace detail {

using Point2 = std::array<double, 2>;  // (tau1, tau2); tau3 = 1 - tau1 - tau2

/// Euclidean projection of (x, y, 1-x-y) onto the closed probability simplex.
inline Point2 project_to_simplex(Point2 pt) {
  std::array<double, 3> v{pt[0], pt[1], 1.0 - pt[0] - pt[1]};
  std::array<double, 3> s = v;
  std::sort(s.begin(), s.end(), std::greater<>());
  double cum = 0.0, theta = 0.0;
  for (int i = 0; i < 3; ++i) {
    cum += s[i];
    const double cand = (cum - 1.0) / (i + 1);
    if (s[i] - cand > 0) theta = cand;
  }
  for (double& x : v) x = std::max(x - theta, 0.0);
  return {v[0], v[1]};
}

inline Tau to_tau(const Point2& p) {
  return Tau{p[0], p[1], std::max(0.0, 1.0 - p[0] - p[1])};
}

struct NelderMeadResult {
  Point2 best;
  double value;
  int evaluations;
};

template <typename F>
NelderMeadResult nelder_mead(F&& f, Point2 start, double step, double tolerance, int max_iter) {
  std::array<Point2, 3> x{start, {start[0] + step, start[1]}, {start[0], start[1] + step}};
  std::array<double, 3> fx{};
  int evals = 0;
  auto eval = [&](Point2& p) {
    p = project_to_simplex(p);
    ++evals;
    return f(to_tau(p));
  };
  for (int i = 0; i < 3; ++i) fx[i] = eval(x[i]);

  auto diameter = [&] {
    double d = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        d = std::max(d, std::hypot(x[i][0] - x[j][0], x[i][1] - x[j][1]));
    return d;
  };

  for (int iter = 0; iter < max_iter && diameter() >= tolerance; ++iter) {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fx[a] < fx[b]; });
    const int lo = idx[0], mid = idx[1], hi = idx[2];
    const Point2 c{(x[lo][0] + x[mid][0]) / 2, (x[lo][1] + x[mid][1]) / 2};
    auto along = [&](double coef) {
      return Point2{c[0] + coef * (x[hi][0] - c[0]), c[1] + coef * (x[hi][1] - c[1])};
    };

    Point2 r = along(-1.0);
    const double fr = eval(r);
    if (fr < fx[lo]) {
      Point2 e = along(-2.0);
      const double fe = eval(e);
      if (fe < fr) { x[hi] = e; fx[hi] = fe; } else { x[hi] = r; fx[hi] = fr; }
      continue;
    }
    if (fr < fx[mid]) { x[hi] = r; fx[hi] = fr; continue; }
    Point2 ct = fr < fx[hi] ? along(-0.5) : along(0.5);
    const double fc = eval(ct);
    if (fc < std::min(fr, fx[hi])) { x[hi] = ct; fx[hi] = fc; continue; }
    for (int i : {mid, hi}) {
      x[i] = {x[lo][0] + 0.5 * (x[i][0] - x[lo][0]), x[lo][1] + 0.5 * (x[i][1] - x[lo][1])};
      fx[i] = eval(x[i]);
    }
  }
  const int best = static_cast<int>(std::min_element(fx.begin(), fx.end()) - fx.begin());
  return {x[best], fx[best], evals};
}

}  // namespace detail

/// Minimizes a*(tau)/H*(tau) over the closed simplex with multi-start
/// Nelder-Mead (center and three points near the vertices), each run
/// restarted from its own result until it stops improving.
/// Tolerances below 1e-8 are raised to 1e-8.
inline ContinuousOptimum continuous_optimum(CostMeasure m, double tolerance = 1e-8) {
  tolerance = std::max(tolerance, 1e-8);
  auto objective = [m](const Tau& tau) { return continuous_ratio(tau, m); };
  const std::array<detail::Point2, 4> starts{{{1.0 / 3, 1.0 / 3}, {0.8, 0.1}, {0.1, 0.8}, {0.1, 0.1}}};

  detail::NelderMeadResult best{{0, 0}, std::numeric_limits<double>::infinity(), 0};
  int evaluations = 0;
  for (const auto& s : starts) {
    detail::NelderMeadResult r = detail::nelder_mead(objective, s, 0.1, tolerance, 20000);
    evaluations += r.evaluations;
    for (int restart = 0; restart < 8; ++restart) {
      detail::NelderMeadResult again = detail::nelder_mead(objective, r.best, 0.02, tolerance, 20000);
      evaluations += again.evaluations;
      const bool improved = again.value < r.value - 1e-15;
      if (again.value <= r.value) r = again;
      if (!improved) break;
    }
    if (r.value < best.value) best = r;
  }
  const Tau tau = detail::to_tau(best.best);
  const bool boundary = tau.t1 < 1e-6 || tau.t2 < 1e-6 || tau.t3 < 1e-6;
  return {tau, objective(tau), m, boundary, evaluations};
}

}  // namespace gyqs

#endif  // GYQS_OPTIMIZER_HPP
