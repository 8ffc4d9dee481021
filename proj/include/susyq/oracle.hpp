#pragma once

// Independent finite-difference check of partner spectra:
//   -1/2 psi'' + V psi = E psi on (x_min, x_max), psi = 0 at both ends,
// discretized with the 3-point stencil and solved by Sturm-sequence bisection.

#include <span>
#include <vector>

#include "susyq/grid.hpp"

namespace susyq::oracle {

/// Symmetric tridiagonal matrix.
struct Tridiag {
  std::vector<double> diag;
  std::vector<double> off;  // diag.size() - 1 entries
};

/// |V| above this on any grid point is reported as a singular potential.
inline constexpr double potential_ceiling = 1e12;
/// Absolute bracket width of each bisected eigenvalue.
inline constexpr double bisection_width = 1e-9;
inline constexpr int max_eigenvalues = 20;

/// diag_i = 1/h^2 + V(x_i), off = -1/(2h^2). Potential tabulation runs in parallel.
Tridiag discretize(const RealFunction& potential, const Grid& grid);

/// Number of eigenvalues strictly below sigma (negative LDL^T pivots of T - sigma).
int sturm_count(const Tridiag& t, double sigma);

/// The m smallest eigenvalues in ascending order; indices are bisected in parallel.
std::vector<double> eigenvalues_low(const Tridiag& t, int m);

/// Serial reference for eigenvalues_low().
std::vector<double> eigenvalues_low_serial(const Tridiag& t, int m);

/// max over the sample of |-f''/2 + (V - E) f| / max(1, |f|), with f'' from the
/// 5-point central stencil at step 1e-3.
double residual(const RealFunction& potential, const RealFunction& f, double energy,
                std::span<const double> sample);

inline constexpr double residual_step = 1e-3;

}  // namespace susyq::oracle
