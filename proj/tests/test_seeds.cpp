#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "susyq/error.hpp"
#include "susyq/seeds.hpp"

namespace {

using namespace susyq;

TEST(Seeds, MakeSeedParity) {
  const auto odd = make_seed(1.5, Parity::odd);
  EXPECT_EQ(odd.b1, 0.0);
  EXPECT_NE(odd.b2, 0.0);
  EXPECT_EQ(odd.parity(), Parity::odd);
  EXPECT_EQ(make_seed(0.5, Parity::even).parity(), Parity::even);
  EXPECT_FALSE(make_general_seed(0.2, 1.0, 0.5).parity().has_value());
  EXPECT_THROW(make_seed(NAN, Parity::odd), invalid_parameter);
  EXPECT_THROW(make_general_seed(0.2, 0.0, 0.0), invalid_parameter);
}

TEST(Seeds, TerminatingClosedForms) {
  const auto odd = make_seed(1.5, Parity::odd);  // x e^{-x^2/2}
  const auto even = make_seed(0.5, Parity::even);  // e^{-x^2/2}
  for (double x : {0.0, 0.3, 1.0, 2.0, 4.5}) {
    EXPECT_NEAR(seed_value(odd, x), x * std::exp(-0.5 * x * x), 1e-15);
    EXPECT_NEAR(seed_value(even, x), std::exp(-0.5 * x * x), 1e-15);
  }
  EXPECT_EQ(seed_value(odd, 0.0), 0.0);
  EXPECT_NEAR(seed_value(odd, 1.0), 0.6065306597126334, 1e-12);
  EXPECT_NEAR(seed_value(even, 2.0), 0.1353352832366127, 1e-12);
  EXPECT_EQ(seed_value(make_seed(-2.5, Parity::even), 0.0), 1.0);
  EXPECT_THROW(seed_value(odd, -1.0), domain_error);
}

TEST(Seeds, NegativeHalfIntegerEvenSeed) {
  // e = -5/2: e^{-x^2/2} 1F1(3/2, 1/2; x^2) = e^{x^2/2} (1 + 2x^2) by Kummer's transformation.
  const auto u = make_seed(-2.5, Parity::even);
  for (double x : {0.5, 1.0, 3.0, 7.0}) {
    const double exact = std::exp(0.5 * x * x) * (1.0 + 2.0 * x * x);
    EXPECT_NEAR(seed_value(u, x) / exact, 1.0, 1e-13) << x;
  }
}

TEST(Seeds, DerivativesOfClosedForm) {
  const auto odd = make_seed(1.5, Parity::odd);
  const auto d = seed_derivs(odd, 1.0, 2);
  const double g = std::exp(-0.5);
  EXPECT_NEAR(d[0], g, 1e-15);
  EXPECT_NEAR(d[1], 0.0, 1e-15);
  EXPECT_NEAR(d[2], -2.0 * g, 1e-14);

  const auto even = make_seed(0.5, Parity::even);
  EXPECT_NEAR(seed_derivs(even, 1.0, 1)[1], -g, 1e-15);
  EXPECT_THROW(seed_derivs(even, 0.0, 1), domain_error);
}

TEST(Seeds, OdeResidual) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> energy(-8.0, 8.0);
  for (int s = 0; s < 20; ++s) {
    const double e = energy(rng);
    const auto u = make_seed(e, s % 2 ? Parity::odd : Parity::even);
    for (int i = 1; i <= 200; ++i) {
      const double x = 10.0 * i / 200.0;
      const auto d = seed_derivs(u, x, 2);
      EXPECT_LE(std::abs(d[2] - (x * x - 2 * e) * d[0]), 1e-9 * std::max(1.0, std::abs(d[0])))
          << "e=" << e << " x=" << x;
    }
  }
}

TEST(Seeds, ThirdDerivativeMatchesFiniteDifference) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> energy(-6.0, 6.0);
  std::uniform_real_distribution<double> xs(0.2, 4.0);
  const double h = 1e-3;
  for (int i = 0; i < 60; ++i) {
    const double e = energy(rng);
    const auto u = make_seed(e, i % 2 ? Parity::odd : Parity::even);
    const double x = xs(rng);
    auto f2 = [&](double t) { return seed_derivs(u, t, 2)[2]; };
    // 5-point first derivative of u''
    const double fd = (f2(x - 2 * h) - 8 * f2(x - h) + 8 * f2(x + h) - f2(x + 2 * h)) / (12 * h);
    const double u3 = seed_derivs(u, x, 3)[3];
    EXPECT_LE(std::abs(u3 - fd), 1e-5 * std::max(1.0, std::abs(u3))) << e << " " << x;
  }
}

TEST(Seeds, OddSeedOverXIsEvenAndNonzeroAtOrigin) {
  // u(x)/x = e^{-x^2/2} 1F1(.., x^2) depends on x^2 only and tends to 1.
  const auto u = make_seed(-1.7, Parity::odd);
  for (double x : {1e-6, 1e-4, 1e-2}) {
    EXPECT_NEAR(seed_value(u, x) / x, 1.0, 10 * x * x + 1e-12);
  }
  const auto jet = scaled_jet(u, 0.0);
  EXPECT_EQ(jet.value, 0.0);
  EXPECT_EQ(jet.slope, 1.0);
}

TEST(Seeds, MixedSeedIsLinear) {
  const double e = 0.7;
  const auto mixed = make_general_seed(e, 2.0, -3.0);
  const auto even = make_seed(e, Parity::even);
  const auto odd = make_seed(e, Parity::odd);
  for (double x : {0.4, 1.3, 2.9}) {
    const auto dm = seed_derivs(mixed, x, 4);
    const auto de = seed_derivs(even, x, 4);
    const auto dodd = seed_derivs(odd, x, 4);
    for (int n = 0; n <= 4; ++n) {
      EXPECT_NEAR(dm[n], 2.0 * de[n] - 3.0 * dodd[n], 1e-12 * (1 + std::abs(dm[n])));
    }
  }
}

TEST(Seeds, ScaledRecurrenceMatchesUnscaled) {
  // u = e^{-x^2/2} f: compare Leibniz-expanded derivatives of f with seed_derivs.
  const auto u = make_seed(2.3, Parity::odd);
  const double x = 1.7;
  std::vector<double> f(6);
  scaled_derivs(scaled_jet(u, x), x, f);
  const auto d = seed_derivs(u, x, 5);
  // derivatives of g = e^{-x^2/2}: g^(n) = (-1)^n He_n(x) g
  auto he = [](int n, double t) {
    double p0 = 1, p1 = t;
    if (n == 0) return p0;
    for (int i = 1; i < n; ++i) {
      const double p2 = t * p1 - i * p0;
      p0 = p1;
      p1 = p2;
    }
    return p1;
  };
  const double g = std::exp(-0.5 * x * x);
  for (int n = 0; n <= 5; ++n) {
    double sum = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= n; ++i) {
      sum += binom * ((n - i) % 2 ? -1.0 : 1.0) * he(n - i, x) * g * f[i];
      binom = binom * (n - i) / (i + 1);
    }
    EXPECT_NEAR(sum, d[n], 1e-11 * (1 + std::abs(d[n]))) << n;
  }
}

}  // namespace
