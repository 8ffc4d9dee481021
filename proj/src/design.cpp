#include "susyq/design.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "susyq/error.hpp"
#include "susyq/wronskian.hpp"

namespace susyq::design {

namespace {

// Leading power of x in W for `evens` even and `odds` odd generic seeds: the
// seeds span x^0, x^2, ..., x^{2(evens-1)} and x^1, x^3, ..., x^{2 odds - 1}.
int wronskian_order(int evens, int odds) {
  const int k = evens + odds;
  return evens * (evens - 1) + odds * odds - k * (k - 1) / 2;
}

int pow_minus_one(int e) { return (e % 2 == 0) ? 1 : -1; }

bool is_match(const TransformationPlan& plan) {
  return plan.interval && plan.parities == parity_assignment(plan.order(), plan.interval->kind);
}

std::string format_energy(double e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", e);
  return buf;
}

}  // namespace

const char* to_string(IntervalKind k) { return k == IntervalKind::A ? "A" : "B"; }

double IntervalClass::lower() const {
  if (kind == IntervalKind::A) {
    return index == 0 ? -INFINITY : 2.0 * index - 0.5;
  }
  return 2.0 * index + 0.5;
}

double IntervalClass::upper() const {
  if (kind == IntervalKind::A) {
    return index == 0 ? 0.5 : 2.0 * index + 0.5;
  }
  return 2.0 * index + 1.5;
}

IntervalClass classify_interval(double epsilon) {
  if (!std::isfinite(epsilon)) {
    throw invalid_parameter("factorization energy must be finite");
  }
  if (epsilon < 0.5) {
    return {IntervalKind::A, 0};
  }
  const double t = epsilon - 0.5;
  const double m = std::floor(t);
  if (m == t) {
    throw boundary_error("factorization energy " + format_energy(epsilon) +
                         " lies on an interval endpoint");
  }
  const int mi = static_cast<int>(m);
  if (mi % 2 == 0) {
    return {IntervalKind::B, mi / 2};
  }
  return {IntervalKind::A, (mi + 1) / 2};
}

std::vector<Parity> parity_assignment(int k, IntervalKind kind) {
  std::vector<Parity> out;
  out.reserve(static_cast<std::size_t>(std::max(k, 0)));
  const int shift = kind == IntervalKind::A ? 0 : 1;
  for (int j = 1; j <= k; ++j) {
    out.push_back(pow_minus_one(k - j + shift) > 0 ? Parity::even : Parity::odd);
  }
  return out;
}

std::vector<SeedSolution> TransformationPlan::seeds() const {
  std::vector<SeedSolution> s;
  s.reserve(epsilons.size());
  for (std::size_t j = 0; j < epsilons.size(); ++j) {
    s.push_back(make_seed(epsilons[j], parities[j]));
  }
  return s;
}

TransformationPlan make_plan(std::vector<double> epsilons,
                             std::optional<std::vector<Parity>> parities) {
  if (parities && parities->size() != epsilons.size()) {
    throw invalid_parameter("parities and factorization energies differ in count");
  }
  for (double e : epsilons) {
    if (!std::isfinite(e)) {
      throw invalid_parameter("factorization energies must be finite");
    }
  }
  std::vector<std::size_t> perm(epsilons.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return epsilons[a] < epsilons[b]; });

  TransformationPlan plan;
  for (std::size_t i : perm) {
    plan.epsilons.push_back(epsilons[i]);
  }
  for (std::size_t i = 1; i < plan.epsilons.size(); ++i) {
    if (plan.epsilons[i] == plan.epsilons[i - 1]) {
      throw invalid_parameter("duplicate factorization energy " + format_energy(plan.epsilons[i]));
    }
  }

  std::optional<IntervalClass> first;
  bool common = true;
  for (double e : plan.epsilons) {
    try {
      const IntervalClass c = classify_interval(e);
      if (!first) {
        first = c;
      } else if (!(c == *first)) {
        common = false;
      }
    } catch (const boundary_error&) {
      common = false;
    }
  }
  if (common && first) {
    plan.interval = first;
  }

  if (parities) {
    for (std::size_t i : perm) {
      plan.parities.push_back((*parities)[i]);
    }
  } else {
    plan.auto_parities = true;
    const IntervalKind kind = first ? first->kind : IntervalKind::A;
    plan.parities = parity_assignment(plan.order(), kind);
  }
  return plan;
}

const std::vector<std::string>& rule_ids() {
  static const std::vector<std::string> ids{
      rules::interval_mixed,        rules::interval_boundary, rules::odd_above_e0,
      rules::parity_mismatch,       rules::wronskian_zero,    rules::candidate_nonphysical,
      rules::candidate_nonnormalizable};
  return ids;
}

int vanishing_gain(int evens, int odds, Parity removed) {
  const int before = wronskian_order(evens, odds);
  const int after = removed == Parity::even ? wronskian_order(evens - 1, odds)
                                            : wronskian_order(evens, odds - 1);
  return after - before;
}

std::vector<AddedLevel> predict_added(const TransformationPlan& plan) {
  std::vector<Violation> ignored;
  return predict_added(plan, ignored);
}

std::vector<AddedLevel> predict_added(const TransformationPlan& plan,
                                      std::vector<Violation>& findings) {
  const int k = plan.order();
  if (k == 0 || !plan.interval) {
    return {};
  }
  if (k % 2 == 1 && plan.epsilons.front() > 1.5) {
    findings.push_back({rules::odd_above_e0, "order " + std::to_string(k) +
                                                 " is odd but all factorization energies lie above E0 = 3/2"});
    return {};
  }

  std::vector<AddedLevel> out;
  if (is_match(plan)) {
    Parity wanted = Parity::even;
    if (k % 2 == 1 && plan.interval->kind == IntervalKind::A) {
      wanted = Parity::odd;
    }
    for (int j = 1; j <= k; ++j) {
      if (plan.parities[static_cast<std::size_t>(j - 1)] == wanted) {
        out.push_back({j, plan.epsilons[static_cast<std::size_t>(j - 1)]});
      }
    }
    return out;
  }

  const int evens = static_cast<int>(std::count(plan.parities.begin(), plan.parities.end(), Parity::even));
  const int odds = k - evens;
  for (int j = 1; j <= k; ++j) {
    const Parity p = plan.parities[static_cast<std::size_t>(j - 1)];
    if (vanishing_gain(evens, odds, p) >= 1) {
      out.push_back({j, plan.epsilons[static_cast<std::size_t>(j - 1)]});
    }
  }
  return out;
}

std::vector<CandidateParity> parity_algebra(int k, IntervalKind kind) {
  const auto parities = parity_assignment(k, kind);
  std::vector<CandidateParity> out;
  // Each Wronskian term flips floor(k/2) parities relative to u_1...u_k.
  const int p_product = kind == IntervalKind::A ? pow_minus_one(k / 2) : pow_minus_one((k + 1) / 2);
  const int p_w = pow_minus_one(k / 2) * p_product;
  for (int j = 1; j <= k; ++j) {
    const Parity seed = parities[static_cast<std::size_t>(j - 1)];
    const int p_rest = p_product * sign_of(seed);
    const int p_minor = pow_minus_one((k - 1) / 2) * p_rest;
    const int p_phi = p_minor * p_w;
    bool physical;
    if (p_w == 1) {
      // Even denominator nonzero at 0: an odd phi vanishes there.
      physical = p_phi == -1;
    } else {
      // Odd denominator vanishes at 0: phi is regular and vanishing only
      // when the minor is odd as well (phi even, ~x^2).
      physical = p_minor == -1;
    }
    out.push_back({j, seed, p_w, p_minor, p_phi, physical});
  }
  return out;
}

namespace {

double scaled_wronskian_sign(const std::vector<SeedSolution>& seeds, double x) {
  return static_cast<double>(scaled_wronskian(seeds, x, -1, sign_only).sign);
}

double refine_zero(const std::vector<SeedSolution>& seeds, double lo, double hi, double sign_lo) {
  while (hi - lo > zero_tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double s = scaled_wronskian_sign(seeds, mid);
    if (s == 0.0) {
      return mid;
    }
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> collect_zeros(const std::vector<SeedSolution>& seeds, const std::vector<double>& xs,
                                  const std::vector<double>& signs) {
  std::vector<double> zeros;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (signs[i] == 0.0) {
      zeros.push_back(xs[i]);
      continue;
    }
    if (i + 1 < xs.size() && signs[i + 1] != 0.0 && signs[i + 1] != signs[i]) {
      zeros.push_back(refine_zero(seeds, xs[i], xs[i + 1], signs[i]));
    }
  }
  return zeros;
}

}  // namespace

std::vector<double> scan_singularities(const std::vector<SeedSolution>& seeds, const Grid& grid) {
  grid.check();
  if (seeds.empty()) {
    return {};
  }
  const auto xs = grid.interior();
  const auto signs = tabulate([&](double x) { return scaled_wronskian_sign(seeds, x); }, xs);
  return collect_zeros(seeds, xs, signs);
}

std::vector<double> scan_singularities_serial(const std::vector<SeedSolution>& seeds, const Grid& grid) {
  grid.check();
  if (seeds.empty()) {
    return {};
  }
  const auto xs = grid.interior();
  const auto signs = tabulate_serial([&](double x) { return scaled_wronskian_sign(seeds, x); }, xs);
  return collect_zeros(seeds, xs, signs);
}

std::vector<double> scan_singularities(const TransformationPlan& plan, const Grid& grid) {
  return scan_singularities(plan.seeds(), grid);
}

BoundaryVerdict boundary_check(const RealFunction& f) {
  const double f1 = std::abs(f(1e-2));
  const double f2 = std::abs(f(1e-3));
  const double f3 = std::abs(f(1e-4));
  if (!std::isfinite(f1) || !std::isfinite(f2) || !std::isfinite(f3) || f1 == 0.0) {
    return {false, NAN};
  }
  const bool physical = f2 * decade_decay <= f1 && f3 * decade_decay <= f2;
  const double power = f3 > 0.0 ? 0.5 * std::log10(f1 / f3) : INFINITY;
  return {physical, power};
}

std::optional<Branch> isospectral_branch(const PartnerPotential& p) {
  std::optional<Branch> found;
  int physical_count = 0;
  for (Branch b : {Branch::odd, Branch::even}) {
    for (int n = 0; n < 8; ++n) {
      const BaseState s = make_base_state(b, n);
      const bool degenerate = std::any_of(p.seeds().begin(), p.seeds().end(),
                                          [&](const SeedSolution& u) { return u.epsilon == s.energy; });
      if (degenerate) {
        continue;
      }
      bool physical = false;
      try {
        physical = boundary_check([&](double x) { return transformed_eigenfunction(p, s, x); }).physical;
      } catch (const singularity_error&) {
        physical = false;
      }
      if (physical) {
        found = b;
        ++physical_count;
      }
      break;
    }
  }
  if (physical_count != 1) {
    return std::nullopt;
  }
  return found;
}

bool ValidationReport::passed(const std::string& rule) const {
  return std::none_of(violations.begin(), violations.end(),
                      [&](const Violation& v) { return v.rule == rule; });
}

ValidationReport validate(const TransformationPlan& plan, const Grid& grid) {
  ValidationReport report;
  const int k = plan.order();

  std::optional<IntervalClass> first;
  bool boundary = false;
  bool mixed = false;
  for (double e : plan.epsilons) {
    try {
      const IntervalClass c = classify_interval(e);
      if (!first) {
        first = c;
      } else if (!(c == *first)) {
        mixed = true;
      }
    } catch (const boundary_error& err) {
      boundary = true;
      report.violations.push_back({rules::interval_boundary, err.what()});
    }
  }
  if (mixed) {
    report.violations.push_back(
        {rules::interval_mixed, "factorization energies are not chosen in a single interval"});
  }
  if (!boundary && !mixed && plan.interval && !plan.auto_parities &&
      plan.parities != parity_assignment(k, plan.interval->kind)) {
    report.violations.push_back({rules::parity_mismatch,
                                 std::string("parities differ from the class-") +
                                     to_string(plan.interval->kind) + " assignment"});
  }

  const auto predicted = predict_added(plan, report.violations);

  const auto seeds = plan.seeds();
  report.wronskian_zeros = scan_singularities(seeds, grid);
  if (!report.wronskian_zeros.empty()) {
    report.violations.push_back({rules::wronskian_zero,
                                 std::to_string(report.wronskian_zeros.size()) +
                                     " zero(s) of W inside the domain, first at x = " +
                                     format_energy(report.wronskian_zeros.front())});
  } else {
    const PartnerPotential partner(seeds);
    report.isospectral_branch = isospectral_branch(partner);
    for (const AddedLevel& level : predicted) {
      const RealFunction phi = [&, j = level.index](double x) { return added_state(partner, j, x); };
      const std::string tag = "candidate j=" + std::to_string(level.index) + " (e=" +
                              format_energy(level.epsilon) + ")";
      if (!boundary_check(phi).physical) {
        report.violations.push_back({rules::candidate_nonphysical, tag + " does not vanish at x = 0"});
        continue;
      }
      try {
        normalize(phi, grid);
      } catch (const non_normalizable& err) {
        report.violations.push_back({rules::candidate_nonnormalizable, tag + ": " + err.what()});
        continue;
      }
      report.predicted_added.push_back(level);
    }
  }

  report.ok = report.violations.empty() && report.wronskian_zeros.empty();
  return report;
}

}  // namespace susyq::design
