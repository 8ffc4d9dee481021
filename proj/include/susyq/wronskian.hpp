#pragma once

// Wronskians of seed sets and their analytic derivatives.
//
// Every seed carries the factor e^{-x^2/2}. Since W(g f_1, ..., g f_k) =
// g^k W(f_1, ..., f_k), determinants are formed from the Gaussian-stripped
// functions f_j = e^{x^2/2} u_j and the factor e^{-k x^2/2} is restored in log
// space. Determinants are returned as sign and log-magnitude so that the
// e^{+-k x^2} growth of individual entries never overflows.
//
// For large x and close energies the columns are nearly parallel and the
// determinant cancels to many digits; the evaluators switch to wider floating
// types (quad, then MPFR) when the loss estimate calls for it.

#include <cmath>
#include <span>
#include <vector>

#include "susyq/seeds.hpp"

namespace susyq {

struct LogDet {
  int sign = 0;  // 0 for an exactly singular matrix
  double log_abs = -INFINITY;

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

/// Square matrix whose row i holds the o_i-th derivatives of the columns.
struct DerivativeMatrix {
  std::vector<int> orders;     // strictly increasing
  std::vector<long double> entries; // row-major, orders.size()^2

  std::size_t size() const { return orders.size(); }
};

/// LU with partial pivoting after row and column equilibration (long double).
LogDet determinant(const DerivativeMatrix& m);

/// Accuracy request for adaptive evaluation: `digits` significant digits, or
/// an absolute error below e^{log_abs_floor}, whichever is looser.
struct Tolerance {
  double digits = 13.0;
  double log_abs_floor = -INFINITY;
};

/// Tolerance that only asks for a trustworthy sign.
inline constexpr Tolerance sign_only{1.0, -INFINITY};

/// Wronskian of the Gaussian-stripped seeds e^{x^2/2} u_j (empty set -> 1);
/// seed `skip` (0-based) is left out when non-negative. The working precision
/// is raised until `tol` is met.
LogDet scaled_wronskian(std::span<const SeedSolution> seeds, double x, int skip = -1,
                        Tolerance tol = {});

/// First and second derivatives of ln|W|.
struct LogDerivs {
  double first;
  double second;
};

/// (ln|W|)' and (ln|W|)'' of the Gaussian-stripped set, each to 13 digits
/// against max(1, |value|).
LogDerivs scaled_log_derivs(std::span<const SeedSolution> seeds, double x);

/// W_num / W_den * e^{extra_log} for two Gaussian-stripped Wronskians drawn
/// from one seed list (skip < 0 keeps every seed), to 13 digits against
/// max(1, |ratio|). Throws singularity_error when the denominator, with its
/// Gaussian factor, is below the floor.
double wronskian_ratio(std::span<const SeedSolution> seeds, int num_skip, int den_skip, double x,
                       double extra_log);

/// det[u_j^(o_i)(x)] for the plain seeds.
double det_orders(std::span<const SeedSolution> seeds, std::span<const int> orders, double x);

/// W(u_1, ..., u_k) including the Gaussian factor, in log form.
LogDet wronskian_log(std::span<const SeedSolution> seeds, double x);
double wronskian(std::span<const SeedSolution> seeds, double x);

/// Wronskian with the j-th seed (1-based) removed; 1 when k = 1.
double wronskian_minor(std::span<const SeedSolution> seeds, int j, double x);

/// (ln|W|)' and (ln|W|)''; throws singularity_error when |W| < 1e-300.
LogDerivs log_w_derivs(std::span<const SeedSolution> seeds, double x);
double log_w_second_deriv(std::span<const SeedSolution> seeds, double x);

/// Threshold below which W is treated as zero.
inline constexpr double wronskian_floor = 1e-300;

}  // namespace susyq
