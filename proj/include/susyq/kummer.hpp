#pragma once

// Confluent hypergeometric function 1F1(a, b; z) (Kummer's M) for real
// parameters, tuned for the arguments seed solutions need (z = x^2, x <= 10).

namespace susyq::kummer {

struct KummerParams {
  double a;
  double b;
  double z;
};

/// Hard cap on the number of series terms.
inline constexpr int max_terms = 10000;

/// 1F1(a, b; z).
///
/// For z >= 0 the Maclaurin series is summed directly (Neumaier-compensated).
/// Negative arguments, and z > 30 when b - a is a non-positive integer, go
/// through Kummer's transformation e^z 1F1(b - a, b; -z) so that the summed
/// series never alternates with exponentially large terms.
///
/// Throws invalid_parameter when b is a non-positive integer and
/// non_convergence when the term cap is exceeded.
double m(const KummerParams& p);

/// n-th derivative with respect to z: (a)_n / (b)_n * 1F1(a + n, b + n; z).
double m_deriv(const KummerParams& p, int n);

/// True if v is 0, -1, -2, ...
bool is_nonpositive_integer(double v);

}  // namespace susyq::kummer
