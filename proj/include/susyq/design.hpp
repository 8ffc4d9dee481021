#pragma once

// Spectral-design rules for k-th order partners of the truncated oscillator:
// interval classes, seed parity assignment, prediction of added levels and
// the numerical checks that back a plan (singularity scan, behaviour at 0).

#include <optional>
#include <string>
#include <vector>

#include "susyq/grid.hpp"
#include "susyq/partner.hpp"
#include "susyq/seeds.hpp"

namespace susyq::design {

enum class IntervalKind { A, B };

const char* to_string(IntervalKind k);

/// A: (-inf, 1/2) for index 0, (2i - 1/2, 2i + 1/2) for i >= 1.
/// B: (2i + 1/2, 2i + 3/2).
struct IntervalClass {
  IntervalKind kind;
  int index;

  double lower() const;
  double upper() const;
  bool operator==(const IntervalClass&) const = default;
};

/// Throws boundary_error when epsilon is 1/2, 3/2, 5/2, ...
IntervalClass classify_interval(double epsilon);

/// Class A: P(u_j) = (-1)^{k-j}; class B: P(u_j) = (-1)^{k-j+1}; j = 1..k.
std::vector<Parity> parity_assignment(int k, IntervalKind kind);

struct TransformationPlan {
  std::vector<double> epsilons;  // strictly increasing
  std::vector<Parity> parities;
  std::optional<IntervalClass> interval;  // set iff all energies share one open interval
  bool auto_parities = false;

  int order() const { return static_cast<int>(epsilons.size()); }
  std::vector<SeedSolution> seeds() const;
};

/// Sorts the (epsilon, parity) pairs by energy. Without parities they are
/// derived from the class of the common interval (class of the first
/// classifiable energy when the energies do not share one). Throws
/// invalid_parameter on duplicate or non-finite energies or a length mismatch.
TransformationPlan make_plan(std::vector<double> epsilons,
                             std::optional<std::vector<Parity>> parities = std::nullopt);

struct AddedLevel {
  int index;  // 1-based seed index j
  double epsilon;
  bool operator==(const AddedLevel&) const = default;
};

struct Violation {
  std::string rule;
  std::string message;
};

namespace rules {
inline constexpr const char* interval_mixed = "interval.mixed";
inline constexpr const char* interval_boundary = "interval.boundary";
inline constexpr const char* odd_above_e0 = "order.odd-above-E0";
inline constexpr const char* parity_mismatch = "parity.mismatch";
inline constexpr const char* wronskian_zero = "wronskian.zero";
inline constexpr const char* candidate_nonphysical = "candidate.nonphysical";
inline constexpr const char* candidate_nonnormalizable = "candidate.nonnormalizable";
}  // namespace rules

/// All rule identifiers in reporting order.
const std::vector<std::string>& rule_ids();

/// Levels e_j that become eigenvalues of the partner. With class-rule
/// parities: even k adds the even seeds in either class; odd k below 3/2 adds
/// the odd seeds in class A and the even seeds in class B; odd k above 3/2
/// adds nothing. With other parities the seeds whose removal raises the
/// vanishing order at 0 by at least one are predicted (see vanishing_gain).
std::vector<AddedLevel> predict_added(const TransformationPlan& plan);

/// Same as predict_added, also appending rule findings.
std::vector<AddedLevel> predict_added(const TransformationPlan& plan,
                                      std::vector<Violation>& findings);

/// Leading power of x in phi_j = minor_j / W near 0 for a generic seed set
/// with `evens` even and `odds` odd seeds, when a seed of parity `removed` is
/// deleted. phi_j vanishes at the origin iff the result is >= 1.
int vanishing_gain(int evens, int odds, Parity removed);

/// Per-candidate parity bookkeeping in the form of the P(W) / P(minor)
/// derivation for class-rule parities.
struct CandidateParity {
  int index;  // 1-based
  Parity seed;
  int wronskian;  // P(W(u_1..u_k))
  int minor;      // P(W(u_1..^u_j..u_k))
  int phi;        // P(minor / W)
  bool physical;
};

std::vector<CandidateParity> parity_algebra(int k, IntervalKind kind);

/// Zeros of W on the grid interior, located by sign changes of the
/// Gaussian-stripped Wronskian and refined by bisection to 1e-10.
std::vector<double> scan_singularities(const TransformationPlan& plan, const Grid& grid = {});
std::vector<double> scan_singularities(const std::vector<SeedSolution>& seeds, const Grid& grid = {});
std::vector<double> scan_singularities_serial(const std::vector<SeedSolution>& seeds,
                                              const Grid& grid = {});

inline constexpr double zero_tolerance = 1e-10;

struct BoundaryVerdict {
  bool physical;
  double decay_power;  // fitted p in |f| ~ x^p over the probes
};

/// Probes |f| at x = 1e-2, 1e-3, 1e-4. Physical iff |f| drops by at least a
/// factor 5 per decade at both steps.
BoundaryVerdict boundary_check(const RealFunction& f);

inline constexpr double decade_decay = 5.0;

struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;
  std::vector<AddedLevel> predicted_added;
  std::optional<Branch> isospectral_branch;
  std::vector<double> wronskian_zeros;

  bool passed(const std::string& rule) const;
};

/// Runs the interval, order and parity rules, the singularity scan, the
/// isospectral-branch classification and per-candidate boundary and
/// normalizability checks. predicted_added keeps only candidates that pass.
ValidationReport validate(const TransformationPlan& plan, const Grid& grid = {});

/// Branch whose images satisfy psi(0) = 0, probed on the lowest base state
/// whose energy is not a factorization energy.
std::optional<Branch> isospectral_branch(const PartnerPotential& p);

}  // namespace susyq::design
