#include "susyq/seeds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "susyq/error.hpp"
#include "seed_jet.hpp"

namespace susyq {

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::optional<Parity> SeedSolution::parity() const {
  if (b1 != 0.0 && b2 == 0.0) {
    return Parity::even;
  }
  if (b1 == 0.0 && b2 != 0.0) {
    return Parity::odd;
  }
  return std::nullopt;
}

SeedSolution make_seed(double epsilon, Parity parity) {
  if (!std::isfinite(epsilon)) {
    throw invalid_parameter("factorization energy must be finite");
  }
  return parity == Parity::even ? SeedSolution{epsilon, 1.0, 0.0}
                                : SeedSolution{epsilon, 0.0, 1.0};
}

SeedSolution make_general_seed(double epsilon, double b1, double b2) {
  if (!std::isfinite(epsilon) || !std::isfinite(b1) || !std::isfinite(b2)) {
    throw invalid_parameter("seed coefficients must be finite");
  }
  if (b1 == 0.0 && b2 == 0.0) {
    throw invalid_parameter("seed with b1 = b2 = 0 is identically zero");
  }
  return {epsilon, b1, b2};
}

ScaledJet scaled_jet(const SeedSolution& u, double x) {
  const auto j = detail::seed_jet<long double>(u, x);
  return {j.value, j.slope, u.epsilon};
}

namespace {

template <class T>
void fill_scaled(const ScaledJet& jet, double x, std::span<T> out) {
  std::vector<long double> d(out.size());
  detail::fill_derivs<long double>({jet.value, jet.slope, jet.energy}, x, d);
  std::copy(d.begin(), d.end(), out.begin());
}

}  // namespace

void scaled_derivs(const ScaledJet& jet, double x, std::span<double> out) {
  fill_scaled(jet, x, out);
}

void scaled_derivs(const ScaledJet& jet, double x, std::span<long double> out) {
  fill_scaled(jet, x, out);
}

double seed_value(const SeedSolution& u, double x) {
  if (x < 0.0) {
    throw domain_error("seed_value: x must be non-negative");
  }
  return std::exp(-0.5 * x * x) * static_cast<double>(scaled_jet(u, x).value);
}

std::vector<double> seed_derivs(const SeedSolution& u, double x, int max_order) {
  if (!(x > 0.0)) {
    throw domain_error("seed_derivs: x must be positive, got " + std::to_string(x));
  }
  if (max_order < 0) {
    throw invalid_parameter("seed_derivs: negative derivative order");
  }
  const ScaledJet jet = scaled_jet(u, x);
  const double gauss = std::exp(-0.5 * x * x);
  std::vector<double> d(static_cast<std::size_t>(max_order) + 1);
  d[0] = gauss * static_cast<double>(jet.value);
  if (max_order >= 1) {
    d[1] = gauss * static_cast<double>(jet.slope - x * jet.value);
  }
  // u^(n+2) = (x^2 - 2e) u^(n) + 2n x u^(n-1) + n(n-1) u^(n-2)
  const double shift = x * x - 2.0 * u.epsilon;
  for (int n = 0; n + 2 <= max_order; ++n) {
    double next = shift * d[n];
    if (n >= 1) {
      next += 2.0 * n * x * d[n - 1];
    }
    if (n >= 2) {
      next += static_cast<double>(n) * (n - 1) * d[n - 2];
    }
    d[n + 2] = next;
  }
  return d;
}

}  // namespace susyq
