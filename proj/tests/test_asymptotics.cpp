#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "floorlat/asymptotics.hpp"
#include "floorlat/floor_sequences.hpp"
#include "floorlat/tolerances.hpp"

using namespace floorlat;
using std::numbers::egamma;
using std::numbers::ln2;
using std::numbers::pi;

TEST(Digamma, KnownValues) {
  EXPECT_NEAR(digamma(1.0), -egamma, 1e-14);
  EXPECT_NEAR(digamma(0.5), -egamma - 2 * ln2, 1e-14);
  EXPECT_NEAR(digamma(2.0), 1 - egamma, 1e-14);
  EXPECT_NEAR(digamma(1.0 / 3), -egamma - pi / (2 * std::sqrt(3.0)) - 1.5 * std::log(3.0), 1e-13);
  EXPECT_NEAR(digamma(100.0), 4.6001618527380874, 1e-13);
  EXPECT_THROW(digamma(0.0), PreconditionError);
}

TEST(Digamma, Recurrence) {
  for (double x = 0.05; x < 30; x += 0.37) EXPECT_NEAR(digamma(x + 1) - digamma(x), 1 / x, 1e-12) << x;
}

TEST(Slope, ClosedFormsShiftZero) {
  const double s3 = std::sqrt(3.0), l3 = std::log(3.0);
  const std::vector<std::tuple<int, int, double>> cases = {
      {1, 2, ln2},
      {2, 2, 1 - ln2},
      {1, 3, s3 * pi / 9},
      {2, 3, -s3 * pi / 18 + l3 / 2},
      {3, 3, -s3 * pi / 18 - l3 / 2 + 1},
      {1, 4, pi / 8 + ln2 / 4},
      {2, 4, pi / 8 - ln2 / 4},
      {3, 4, -pi / 8 + 3 * ln2 / 4},
      {4, 4, -pi / 8 - 3 * ln2 / 4 + 1},
  };
  for (auto [r, m, exact] : cases) {
    SlopeQuery q(0.0, r, m);
    EXPECT_NEAR(slope(q, SlopeMethod::quadrature).value, exact, 1e-12) << r << "," << m;
    EXPECT_NEAR(slope(q, SlopeMethod::series).value, exact, 1e-12) << r << "," << m;
  }
}

TEST(Slope, ClosedFormsShiftHalf) {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), l3 = std::log(3.0), l = std::log(3 + 2 * s2);
  const std::vector<std::tuple<int, int, double>> cases = {
      {1, 2, pi / 2 - 1},
      {2, 2, 2 - pi / 2},
      {1, 3, s3 * pi / 6 + l3 / 2 - 1},
      {2, 3, s3 / 6 * (pi - s3 * l3)},
      {3, 3, 2 - s3 * pi / 3},
      {1, 4, pi / 4 + s2 * l / 4 - 1},
      {2, 4, pi / 4 * (s2 - 1)},
      {3, 4, pi / 4 - s2 * l / 4},
      {4, 4, 2 - pi / 4 * (s2 + 1)},
  };
  for (auto [r, m, exact] : cases) {
    SlopeQuery q(Rational(1, 2), r, m);
    EXPECT_NEAR(slope(q, SlopeMethod::quadrature).value, exact, 1e-12) << r << "," << m;
    EXPECT_NEAR(slope(q, SlopeMethod::series).value, exact, 1e-12) << r << "," << m;
  }
}

TEST(Slope, PublishedSixDecimalTables) {
  const std::vector<double> shift0 = {1.000000, 0.693147, 0.604600, 0.565986, 0.306853,
                                      0.247006, 0.219412, 0.148394, 0.127161, 0.087441};
  const std::vector<double> shift_half = {1.000000, 0.570796, 0.456206, 0.408623, 0.429204,
                                          0.357594, 0.325323, 0.186201, 0.162173, 0.103881};
  const auto t0 = slope_table(Rational(0), 4);
  const auto th = slope_table(Rational(1, 2), 4);
  ASSERT_EQ(t0.size(), 10u);
  ASSERT_EQ(th.size(), 10u);
  for (std::size_t i = 0; i < t0.size(); ++i) {
    EXPECT_NEAR(t0[i].slope, shift0[i], tolerances::kSixDecimals) << t0[i].r << "," << t0[i].m;
    EXPECT_NEAR(th[i].slope, shift_half[i], tolerances::kSixDecimals) << th[i].r << "," << th[i].m;
  }
  EXPECT_EQ(t0[1].r, 1);
  EXPECT_EQ(t0[1].m, 2);
  EXPECT_NEAR(t0[5].slope, 0.2470062502950186, 1e-14);
}

TEST(Slope, MethodsAgreeAndRowsSumToOne) {
  for (int j = 0; j < 20; ++j) {
    const double alpha = j / 20.0;
    for (std::int64_t m = 1; m <= 8; ++m) {
      double total = 0;
      for (std::int64_t r = 1; r <= m; ++r) {
        SlopeQuery q(alpha, r, m);
        const double a = slope(q, SlopeMethod::series).value;
        const double b = slope(q, SlopeMethod::quadrature).value;
        EXPECT_NEAR(a, b, tolerances::kMethodAgreement) << alpha << " " << r << " " << m;
        EXPECT_GT(a, 0.0);
        total += b;
      }
      EXPECT_NEAR(total, 1.0, tolerances::kRowSum) << alpha << " " << m;
    }
  }
  EXPECT_EQ(slope(SlopeQuery(0.3, 1, 1)).value, 1.0);
}

TEST(Slope, QueryValidation) {
  EXPECT_THROW(SlopeQuery(1.0, 1, 2), PreconditionError);
  EXPECT_THROW(SlopeQuery(-0.1, 1, 2), PreconditionError);
  EXPECT_THROW(SlopeQuery(0.0, 0, 2), PreconditionError);
  EXPECT_THROW(SlopeQuery(0.0, 3, 2), PreconditionError);
  EXPECT_THROW(SlopeQuery(0.0, 1, 0), PreconditionError);
  EXPECT_THROW(slope_table(Rational(0), 0), PreconditionError);
}

TEST(Slope, ShiftNearOneStaysAccurate) {
  // r = 1 with alpha -> 1 has the largest correction term; keep both routes close.
  for (double alpha : {0.9, 0.99, 0.999}) {
    for (std::int64_t m = 2; m <= 5; ++m) {
      SlopeQuery q(alpha, 1, m);
      EXPECT_NEAR(slope(q, SlopeMethod::series).value, slope(q, SlopeMethod::quadrature).value, 1e-8);
    }
  }
}

TEST(ParityF, EndpointsAndMonotone) {
  EXPECT_NEAR(parity_f(0.0), 1 - ln2, 1e-14);
  EXPECT_NEAR(parity_f(1.0), ln2, 1e-14);
  EXPECT_NEAR(parity_f(0.5), 2 - pi / 2, 1e-14);
  double prev = parity_f(0.0);
  for (int i = 1; i <= 2000; ++i) {
    const double v = parity_f(i / 2000.0);
    ASSERT_GT(v, prev) << i;
    prev = v;
  }
  for (int i = 0; i <= 10; ++i) EXPECT_NEAR(parity_f(i / 10.0), parity_f_quadrature(i / 10.0), 1e-12);
  EXPECT_THROW(parity_f(1.5), PreconditionError);
}

TEST(ParityF, EqualsEvenClassSlope) {
  for (int i = 0; i < 10; ++i) {
    const double alpha = i / 10.0;
    EXPECT_NEAR(parity_f(alpha), slope(SlopeQuery(alpha, 2, 2)).value, 1e-12);
  }
}

TEST(Alpha0, BisectionBracket) {
  std::vector<Bracket> seen;
  const double a0 = find_alpha0(1e-11, [&](const Bracket& b) { seen.push_back(b); });
  EXPECT_GE(a0, 0.682379227335);
  EXPECT_LE(a0, 0.682379227345);
  ASSERT_FALSE(seen.empty());
  EXPECT_LE(seen.back().hi - seen.back().lo, 1e-11);
  EXPECT_LT(parity_f(seen.back().lo), 0.5);
  EXPECT_GT(parity_f(seen.back().hi), 0.5);
  for (std::size_t i = 1; i < seen.size(); ++i) {
    EXPECT_GE(seen[i].lo, seen[i - 1].lo);
    EXPECT_LE(seen[i].hi, seen[i - 1].hi);
  }
  EXPECT_THROW(find_alpha0(1e-15), PreconditionError);
  EXPECT_NEAR(find_alpha0(1e-6), 0.6823792, 2e-6);
}

TEST(Residual, FrozenSmallValue) {
  // n = 1, alpha = 1/2, r = m = 2: {1/(3/2)} - {1/(5/2)} = 2/3 - 2/5.
  EXPECT_NEAR(residual_B(SequenceSpec(1, Rational(1, 2)), {2, 2}), 4.0 / 15, 1e-15);
  EXPECT_EQ(partial_A(SequenceSpec(1, Rational(1, 2)), {2, 2}), Rational(2, 3) - Rational(2, 5));
  EXPECT_THROW(residual_B(SequenceSpec(10), {1, 2}), PreconditionError);
  EXPECT_THROW(residual_B(SequenceSpec(10, Rational(0), Rational(1, 2)), {2, 2}), PreconditionError);
}

TEST(Residual, SplitsTheFloorSum) {
  // count = (n - nu) * partial_A - B
  for (std::int64_t n : {1, 2, 5, 17, 64, 199, 1000, 4321}) {
    for (auto [alpha, nu] : std::vector<std::pair<Rational, Rational>>{
             {Rational(0), Rational(0)}, {Rational(1, 2), Rational(1, 2)}, {Rational(3, 4), Rational(1, 4)}}) {
      SequenceSpec spec(n, alpha, nu);
      if (!spec.admits_floor_sums()) continue;
      for (std::int64_t m = 2; m <= 4; ++m) {
        for (std::int64_t r = 2; r <= m; ++r) {
          const double main = (Rational(static_cast<long>(n)) - nu).to_double() * partial_A(spec, {r, m}).to_double();
          const double b = residual_B(spec, {r, m});
          EXPECT_NEAR(main - b, static_cast<double>(count_via_floor_sums(spec, {r, m})), 1e-7 * n);
        }
      }
    }
  }
}

TEST(Residual, GrowsLikeRootN) {
  for (int j = 0; j <= 50; ++j) {
    const auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0, j / 10.0)));
    for (auto [r, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
      const double b = residual_B(SequenceSpec(n, Rational(1, 2)), {r, m});
      EXPECT_LE(std::abs(b), tolerances::kResidual * std::sqrt(static_cast<double>(n))) << n;
    }
  }
}

TEST(Convergence, RatiosApproachSlope) {
  for (std::int64_t n : {10000, 100000}) {
    for (auto [alpha, nu] : std::vector<std::pair<Rational, Rational>>{
             {Rational(0), Rational(0)}, {Rational(1, 2), Rational(0)}, {Rational(1, 3), Rational(3, 4)}}) {
      SequenceSpec spec(n, alpha, nu);
      for (std::int64_t m = 2; m <= 4; ++m) {
        const auto counts = count_all_classes(spec, m);
        for (std::int64_t r = 1; r <= m; ++r) {
          const double ratio = static_cast<double>(counts[r - 1]) / n;
          EXPECT_NEAR(ratio, slope(SlopeQuery(alpha, r, m)).value, tolerances::kConvergence / std::sqrt(n));
        }
      }
    }
  }
}

TEST(Convergence, NamedSequenceLimits) {
  for (std::int64_t n : {10000, 100000, 1000000}) {
    const double band = tolerances::kSequenceLimit / std::sqrt(static_cast<double>(n));
    EXPECT_NEAR(static_cast<double>(f_seq(n)) / n, ln2, band);
    EXPECT_NEAR(static_cast<double>(c_seq(n)) / n, 1 - ln2, band);
    EXPECT_NEAR(static_cast<double>(r_seq(n)) / n, pi / 2 - 1, band);
  }
}

TEST(Slope, TruncatedSeriesCrossCheck) {
  // sum_{i<=N} 1/(r+im-alpha) - 1/(r+1+im-alpha); the omitted tail is below
  // sum_{i>N} 1/(im)^2 < 1/(m^2 N).
  constexpr std::int64_t kTerms = 1000000;
  for (double alpha : {0.0, 0.25, 0.5, 0.9}) {
    for (std::int64_t m = 2; m <= 4; ++m) {
      for (std::int64_t r = 1; r <= m; ++r) {
        double sum = 0;
        for (std::int64_t i = kTerms; i >= 0; --i) {
          const double base = static_cast<double>(r + i * m) - alpha;
          sum += 1.0 / (base * (base + 1.0));
        }
        const double tail = 1.0 / (static_cast<double>(m * m) * kTerms);
        EXPECT_NEAR(series_A(SlopeQuery(alpha, r, m)).value, sum, tail + 1e-13) << alpha << " " << r << " " << m;
      }
    }
  }
}
