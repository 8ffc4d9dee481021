#pragma once

// Seed solutions of the truncated-oscillator Schroedinger equation
//   -u''/2 + x^2 u / 2 = epsilon u
// at arbitrary real factorization energy.

#include <optional>
#include <span>
#include <vector>

namespace susyq {

enum class Parity : int { odd = -1, even = +1 };

inline int sign_of(Parity p) { return static_cast<int>(p); }
inline Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }
const char* to_string(Parity p);

/// u(x) = e^{-x^2/2} [b1 1F1((1-2e)/4, 1/2; x^2) + b2 x 1F1((3-2e)/4, 3/2; x^2)].
struct SeedSolution {
  double epsilon = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;

  /// Definite parity, or nullopt for a mixed combination.
  std::optional<Parity> parity() const;
};

SeedSolution make_seed(double epsilon, Parity parity);

/// Mixed-parity seeds are only accepted by the low-level evaluators.
SeedSolution make_general_seed(double epsilon, double b1, double b2);

double seed_value(const SeedSolution& u, double x);

/// u, u', ..., u^(max_order) at x > 0. The first derivative is taken from the
/// closed form, higher orders from the Schroedinger recurrence.
std::vector<double> seed_derivs(const SeedSolution& u, double x, int max_order);

/// Value and slope of the Gaussian-stripped function f(x) = e^{x^2/2} u(x),
/// together with the energy of the equation u solves.
struct ScaledJet {
  long double value;
  long double slope;
  double energy;
};

ScaledJet scaled_jet(const SeedSolution& u, double x);

/// Fills out[n] = f^(n)(x) for n < out.size() using
///   f^(n+2) = 2x f^(n+1) + (2n + 1 - 2E) f^(n),
/// the Hermite-form of the oscillator equation.
void scaled_derivs(const ScaledJet& jet, double x, std::span<double> out);
void scaled_derivs(const ScaledJet& jet, double x, std::span<long double> out);

}  // namespace susyq
