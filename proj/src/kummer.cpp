#include "susyq/kummer.hpp"

#include <cmath>
#include <string>

#include "kummer_series.hpp"
#include "susyq/error.hpp"

namespace susyq::kummer {

namespace {

void check(const KummerParams& p) {
  if (is_nonpositive_integer(p.b)) {
    throw invalid_parameter("1F1: lower parameter b = " + std::to_string(p.b) +
                            " is a non-positive integer");
  }
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.z)) {
    throw invalid_parameter("1F1: non-finite argument");
  }
}

}  // namespace

bool is_nonpositive_integer(double v) { return v <= 0.0 && std::floor(v) == v; }

double m(const KummerParams& p) {
  check(p);
  // summed in long double so the double result carries the full target
  return static_cast<double>(detail::m_generic<long double>(p.a, p.b, p.z));
}

double m_deriv(const KummerParams& p, int n) {
  if (n < 0) {
    throw invalid_parameter("1F1 derivative order must be non-negative");
  }
  long double coeff = 1.0L;
  for (int i = 0; i < n; ++i) {
    if (is_nonpositive_integer(p.b + i)) {
      throw invalid_parameter("1F1 derivative: b + " + std::to_string(i) +
                              " is a non-positive integer");
    }
    coeff *= (static_cast<long double>(p.a) + i) / (static_cast<long double>(p.b) + i);
  }
  if (coeff == 0.0L) {
    return 0.0;
  }
  const KummerParams shifted{p.a + n, p.b + n, p.z};
  check(shifted);
  return static_cast<double>(coeff * detail::m_generic<long double>(shifted.a, shifted.b, p.z));
}

}  // namespace susyq::kummer
