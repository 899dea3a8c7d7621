#include <gyqs/distributions.hpp>

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

using namespace gyqs;

namespace {

struct MeanEstimate {
  double mean, se;
};

template <typename F>
MeanEstimate estimate(int samples, F&& draw) {
  double s = 0, s2 = 0;
  for (int i = 0; i < samples; ++i) {
    const double x = draw();
    s += x;
    s2 += x * x;
  }
  const double mean = s / samples;
  return {mean, std::sqrt(std::max(0.0, s2 / samples - mean * mean) / samples)};
}

}  // namespace

TEST(Spacings, SumToOneAndClassicShape) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Spacings s = sample_spacings({0, 0, 0}, rng);
    EXPECT_NEAR(s.sum(), 1.0, 1e-12);
    for (double d : s.d) EXPECT_GE(d, 0.0);
  }
  // k = 2: D = (V, W - V, 1 - W) for the sorted pair (V, W).
  std::mt19937_64 a(5), b(5);
  const Spacings s = sample_spacings({0, 0, 0}, a);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double x = u(b), y = u(b);
  if (x > y) std::swap(x, y);
  EXPECT_DOUBLE_EQ(s.d[0], x);
  EXPECT_DOUBLE_EQ(s.d[1], y - x);
  EXPECT_DOUBLE_EQ(s.d[2], 1 - y);
}

TEST(Spacings, FirstMomentTertilesOfFive) {
  std::mt19937_64 rng(2);
  const auto e = estimate(1000000, [&] { return sample_spacings({1, 1, 1}, rng).d[0]; });
  EXPECT_LE(std::abs(e.mean - 2.0 / 6), 3 * e.se);
}

TEST(DirichletMoment, Examples) {
  const std::array<long long, 3> ones{1, 1, 1}, twos{2, 2, 2};
  const std::array<long long, 3> m100{1, 0, 0}, m000{0, 0, 0}, m111{1, 1, 1};
  EXPECT_EQ(dirichlet_mixed_moment(ones, m100), Rational(1, 3));
  EXPECT_EQ(dirichlet_mixed_moment(ones, m000), Rational(1));
  EXPECT_EQ(dirichlet_mixed_moment(twos, m111), Rational(1, 42));
  const std::array<long long, 2> bad{0, 1}, m2{1, 1};
  EXPECT_THROW(dirichlet_mixed_moment(bad, m2), std::invalid_argument);
}

TEST(DirichletMoment, MonteCarloWithinFourSigma) {
  std::mt19937_64 rng(3);
  const struct {
    PivotParams::Triple t;
    std::array<long long, 3> m;
  } cases[] = {{{1, 1, 1}, {1, 1, 0}}, {{0, 2, 1}, {2, 0, 1}}, {{3, 0, 0}, {0, 1, 3}}};
  for (const auto& c : cases) {
    const std::array<long long, 3> alpha{c.t[0] + 1, c.t[1] + 1, c.t[2] + 1};
    const auto e = estimate(400000, [&] {
      const Spacings s = sample_spacings(c.t, rng);
      return std::pow(s.d[0], c.m[0]) * std::pow(s.d[1], c.m[1]) * std::pow(s.d[2], c.m[2]);
    });
    EXPECT_LE(std::abs(e.mean - dirichlet_mixed_moment(alpha, c.m).to_double()), 4 * e.se) << to_string(c.t);
  }
}

TEST(MultinomialMoment, Examples) {
  const std::array<double, 2> half{0.5, 0.5}, one{1.0, 0.0};
  const std::array<long long, 2> m11{1, 1}, m00{0, 0}, m20{2, 0};
  EXPECT_DOUBLE_EQ(multinomial_factorial_moment(2, half, m11), 0.5);
  EXPECT_DOUBLE_EQ(multinomial_factorial_moment(2, half, m00), 1.0);
  EXPECT_DOUBLE_EQ(multinomial_factorial_moment(3, one, m20), 6.0);
  const std::array<double, 2> bad{0.5, 0.6};
  EXPECT_THROW(multinomial_factorial_moment(2, bad, m11), std::invalid_argument);
}

TEST(MultinomialMoment, MonteCarloWithinFourSigma) {
  std::mt19937_64 rng(4);
  const std::array<double, 3> p{0.2, 0.5, 0.3};
  const std::array<long long, 3> m{1, 1, 2};
  const long long n = 12;
  std::discrete_distribution<int> cat(p.begin(), p.end());
  const auto e = estimate(400000, [&] {
    std::array<long long, 3> x{};
    for (long long i = 0; i < n; ++i) ++x[cat(rng)];
    return static_cast<double>(x[0] * x[1] * x[2] * (x[2] - 1));
  });
  EXPECT_LE(std::abs(e.mean - multinomial_factorial_moment(n, p, m)), 4 * e.se);
}

TEST(PartitionSizes, SampleShapes) {
  std::mt19937_64 rng(5);
  EXPECT_EQ(sample_partition_sizes(5, {1, 1, 1}, rng), (std::array<long long, 3>{0, 0, 0}));
  EXPECT_THROW(sample_partition_sizes(4, {1, 1, 1}, rng), std::invalid_argument);
  for (int i = 0; i < 100; ++i) {
    const auto s = sample_partition_sizes(40, {2, 0, 1}, rng);
    EXPECT_EQ(s[0] + s[1] + s[2], 35);
  }
}

TEST(PartitionSizes, MeansMatchExpectations) {
  std::mt19937_64 rng(6);
  const long long n = 100;
  const auto e1 = estimate(1000000, [&] { return static_cast<double>(sample_partition_sizes(n, {0, 0, 0}, rng)[0]); });
  EXPECT_LE(std::abs(e1.mean - 98.0 / 3), 3 * e1.se);

  const PivotParams::Triple t{1, 0, 2};
  const long long k = 5, N = 60 - k;
  const auto e2 = estimate(300000, [&] {
    const auto s = sample_partition_sizes(60, t, rng);
    return static_cast<double>(s[0] * s[2]) / N;
  });
  const double exact = static_cast<double>((N - 1) * (t[0] + 1) * (t[2] + 1)) / ((k + 1) * (k + 2));
  EXPECT_LE(std::abs(e2.mean - exact), 3 * e2.se);
}

TEST(PartitionSizeLaw, SumsToOne) {
  for (const PivotParams::Triple t : {PivotParams::Triple{0, 0, 0}, {1, 0, 0}, {2, 1, 3}})
    for (long long n = sample_size(t); n <= 14; ++n) {
      Rational total;
      const long long N = n - sample_size(t);
      for (long long a = 0; a <= N; ++a)
        for (long long b = 0; a + b <= N; ++b) total += partition_size_law(n, {a, b, N - a - b}, t);
      EXPECT_EQ(total, Rational(1));
    }
  EXPECT_TRUE(partition_size_law(10, {1, 1, 1}, {1, 0, 0}).is_zero());
}

// Sampled I against the combinatorial law: chi-square over all 36 cells.
TEST(PartitionSizeLaw, ChiSquareAgreement) {
  const PivotParams::Triple t{1, 0, 0};
  const long long n = 10, N = n - sample_size(t);
  std::mt19937_64 rng(7);
  const int samples = 1000000;
  std::map<std::pair<long long, long long>, long long> observed;
  for (int i = 0; i < samples; ++i) {
    const auto s = sample_partition_sizes(n, t, rng);
    ++observed[{s[0], s[1]}];
  }
  double chi2 = 0;
  int cells = 0;
  for (long long a = 0; a <= N; ++a)
    for (long long b = 0; a + b <= N; ++b) {
      const double expected = partition_size_law(n, {a, b, N - a - b}, t).to_double() * samples;
      const double o = static_cast<double>(observed[{a, b}]);
      chi2 += (o - expected) * (o - expected) / expected;
      ++cells;
    }
  const boost::math::chi_squared dist(cells - 1);
  const double p_value = boost::math::cdf(boost::math::complement(dist, chi2));
  EXPECT_GT(p_value, 0.001) << "chi2=" << chi2;
}

TEST(PartitionSizeMarginal, MatchesSamplingAtEightOrdinaryElements) {
  const PivotParams::Triple t{0, 1, 2};
  const long long N = 8, n = N + sample_size(t);
  std::mt19937_64 rng(8);
  const int samples = 400000;
  for (int l = 0; l < 3; ++l) {
    std::vector<long long> counts(N + 1);
    for (int i = 0; i < samples; ++i) ++counts[sample_partition_sizes(n, t, rng)[l]];
    Rational total;
    for (long long i = 0; i <= N; ++i) {
      const double p = partition_size_marginal(N, l, i, t).to_double();
      total += partition_size_marginal(N, l, i, t);
      const double se = std::sqrt(p * (1 - p) / samples);
      EXPECT_LE(std::abs(static_cast<double>(counts[i]) / samples - p), 4 * se + 1e-12) << l << " " << i;
    }
    EXPECT_EQ(total, Rational(1));
  }
}
