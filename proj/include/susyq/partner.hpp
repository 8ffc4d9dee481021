#pragma once

// k-th order partner potentials of the truncated oscillator in the Crum
// representation, their isospectral eigenfunctions and the candidate
// added states built from Wronskian minors.

#include <vector>

#include "susyq/grid.hpp"
#include "susyq/seeds.hpp"

namespace susyq {

/// Eigenfunction families of the full-line oscillator restricted to x > 0:
/// odd  -> psi_n at E_n = 2n + 3/2 (the truncated-oscillator spectrum),
/// even -> chi_n at 2n + 1/2 (fails psi(0) = 0 on its own).
enum class Branch { odd, even };

const char* to_string(Branch b);

struct BaseState {
  Branch branch;
  int n;
  double energy;
  double norm_constant;  // C_n or B_n
};

BaseState make_base_state(Branch branch, int n);

/// Normalized on (0, inf).
double base_state_value(const BaseState& s, double x);

/// The base state written as a terminating seed, for Wronskian evaluation.
SeedSolution base_state_seed(const BaseState& s);

/// Physicists' Hermite polynomial H_m(x).
double hermite(int m, double x);

class PartnerPotential {
 public:
  /// Seeds must have strictly increasing factorization energies. An empty
  /// seed list gives the identity transformation.
  explicit PartnerPotential(std::vector<SeedSolution> seeds);

  const std::vector<SeedSolution>& seeds() const { return seeds_; }
  int order() const { return static_cast<int>(seeds_.size()); }

 private:
  std::vector<SeedSolution> seeds_;
};

/// V~(x) = x^2/2 - (ln W)''.
double partner_v(const PartnerPotential& p, double x);

/// Normalized image of a base state: W(u_1..u_k, f) / (W(u_1..u_k) prod_j sqrt(2|E - e_j|)).
/// The factor 2 per order converts the monic Crum operator to the intertwiner
/// Q with Q^+ Q = prod (H - e_j).
double transformed_eigenfunction(const PartnerPotential& p, const BaseState& s, double x);

/// Unnormalized candidate W(u_1..^u_j..u_k) / W(u_1..u_k), j 1-based.
double added_state(const PartnerPotential& p, int j, double x);

/// N > 0 with int_0^{x_max} (N f)^2 dx = 1 (Simpson on the grid span plus
/// the strip below x_min).
/// Throws non_normalizable if f is not finite on the grid or its tail
/// |f(x_max)| exceeds 1e-8 max|f|.
double normalize(const RealFunction& f, const Grid& grid);

}  // namespace susyq
