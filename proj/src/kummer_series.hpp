#pragma once

// Generic-precision Maclaurin summation of 1F1. Parameter validation is the
// caller's job.

#include <cmath>
#include <limits>
#include <string>

#include "susyq/error.hpp"
#include "susyq/kummer.hpp"

namespace susyq::kummer::detail {

// Neumaier's variant of Kahan summation; plain summation for types wider
// than long double, whose spare digits already absorb the rounding.
template <class T>
struct CompensatedSum {
  static constexpr bool compensate =
      std::numeric_limits<T>::digits <= std::numeric_limits<long double>::digits;
  T sum = 0;
  T carry = 0;

  void add(const T& v) {
    using std::abs;
    if constexpr (!compensate) {
      sum += v;
      return;
    }
    const T t = sum + v;
    if (abs(sum) >= abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  T value() const { return sum + carry; }
};

template <class T>
struct ValueSlope {
  T value;  // 1F1(a, b; z)
  T slope;  // d/dz
};

// Sums M = sum t_n with t_{n+1} = t_n (a+n) z / ((b+n)(n+1)), and
// M' = sum n t_n / z, or a/b at z = 0.
template <class T>
ValueSlope<T> maclaurin_pair(const T& a, const T& b, const T& z) {
  using std::abs;
  if (z == 0) {
    return {T(1), a / b};
  }
  const T tolerance = std::numeric_limits<T>::epsilon();
  CompensatedSum<T> m;
  CompensatedSum<T> dm;
  T term = 1;
  m.add(term);
  for (int n = 0; n < max_terms; ++n) {
    const T an = a + n;
    if (an == 0) {
      return {m.value(), dm.value() / z};  // terminating polynomial
    }
    const T bn = b + n;
    term = term * an * z / (bn * (n + 1));
    m.add(term);
    const T weighted = term * (n + 1);
    dm.add(weighted);
    if (term == 0) {
      return {m.value(), dm.value() / z};
    }
    // Terms can dip near zero while a + n changes sign, so only stop once
    // the remaining tail is monotonically shrinking.
    if (abs(term) <= tolerance * abs(m.value()) && abs(weighted) <= tolerance * abs(dm.value()) &&
        an + 1 > 0 && abs((an + 1) * z) < abs((bn + 1) * (n + 2))) {
      return {m.value(), dm.value() / z};
    }
  }
  throw non_convergence("1F1(" + std::to_string(static_cast<double>(a)) + ", " +
                        std::to_string(static_cast<double>(b)) + "; " +
                        std::to_string(static_cast<double>(z)) +
                        "): series did not converge within " + std::to_string(max_terms) +
                        " terms");
}

template <class T>
bool nonpositive_integer(const T& v) {
  using std::floor;
  return v <= 0 && floor(v) == v;
}

/// 1F1(a, b; z) and its z-derivative; negative z, and large z with b - a a
/// non-positive integer, go through Kummer's transformation.
template <class T>
ValueSlope<T> m_pair(const T& a, const T& b, const T& z) {
  using std::exp;
  if (z < 0 || (z > 30 && nonpositive_integer(T(b - a)))) {
    // M(a, b; z) = e^z M(b - a, b; -z)
    const ValueSlope<T> r = maclaurin_pair(T(b - a), b, T(-z));
    const T e = exp(z);
    return {e * r.value, e * (r.value - r.slope)};
  }
  return maclaurin_pair(a, b, z);
}

template <class T>
T m_generic(const T& a, const T& b, const T& z) {
  return m_pair(a, b, z).value;
}

}  // namespace susyq::kummer::detail
