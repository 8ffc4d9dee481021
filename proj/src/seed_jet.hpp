#pragma once

// Gaussian-stripped seed jets at any working precision.

#include <span>

#include "kummer_series.hpp"
#include "susyq/seeds.hpp"

namespace susyq::detail {

template <class T>
struct Jet {
  T value;
  T slope;
  T energy;
};

// f = e^{x^2/2} u and f'. The Kummer parameters are formed in T so that the
// value and the derivative recurrence see the same energy.
template <class T>
Jet<T> seed_jet(const SeedSolution& u, double x) {
  const T xt = x;
  const T z = xt * xt;
  const T eps = u.epsilon;
  T value = 0;
  T slope = 0;
  if (u.b1 != 0.0) {
    const T a = (T(1) - 2 * eps) / 4;
    const T b = T(1) / 2;
    const auto m = kummer::detail::m_pair(a, b, z);
    value += u.b1 * m.value;
    slope += u.b1 * 2 * xt * m.slope;
  }
  if (u.b2 != 0.0) {
    const T a = (T(3) - 2 * eps) / 4;
    const T b = T(3) / 2;
    const auto m = kummer::detail::m_pair(a, b, z);
    value += u.b2 * xt * m.value;
    slope += u.b2 * (m.value + 2 * z * m.slope);
  }
  return {value, slope, eps};
}

// out[n] = f^(n) from f^(n+2) = 2x f^(n+1) + (2n + 1 - 2E) f^(n).
template <class T>
void fill_derivs(const Jet<T>& jet, double x, std::span<T> out) {
  if (out.empty()) {
    return;
  }
  out[0] = jet.value;
  if (out.size() > 1) {
    out[1] = jet.slope;
  }
  const T two_x = 2 * T(x);
  for (std::size_t n = 0; n + 2 < out.size(); ++n) {
    out[n + 2] = two_x * out[n + 1] + (T(2 * n + 1) - 2 * jet.energy) * out[n];
  }
}

}  // namespace susyq::detail
