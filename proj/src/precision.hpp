#pragma once

// Scalar types for the determinant kernels and the escalation driver.
// Seed columns become nearly parallel for large x and clustered energies, so a
// determinant can lose more digits than long double holds. Each attempt
// reports how many digits it lost; the driver retries with wider types.

#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <limits>
#include <optional>

namespace susyq::detail {

using quad = boost::multiprecision::float128;

template <unsigned Digits>
using mpfr = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits>,
                                           boost::multiprecision::et_off>;

template <class R>
struct Attempt {
  R value;
  double lost;  // decimal digits lost to cancellation, against the caller's scale
};

// body.template operator()<T>() -> Attempt<R>; the first type that still
// keeps `kept` digits wins. The widest attempt is returned as-is when every
// type overruns.
template <class R, class Body>
R with_escalation(double kept, Body&& body) {
  std::optional<R> out;
  auto step = [&]<class T>() {
    if (out) {
      return;
    }
    Attempt<R> a = body.template operator()<T>();
    if (a.lost <= std::numeric_limits<T>::digits10 - kept) {
      out = std::move(a.value);
    }
  };
  step.template operator()<long double>();
  step.template operator()<quad>();
  step.template operator()<mpfr<60>>();
  step.template operator()<mpfr<120>>();
  if (!out) {
    out = body.template operator()<mpfr<250>>().value;
  }
  return *out;
}

}  // namespace susyq::detail
