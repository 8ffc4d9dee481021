#include "susyq/partner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "susyq/error.hpp"
#include "susyq/wronskian.hpp"

namespace susyq {

namespace {

void check_x(double x) {
  if (!(x > 0.0)) {
    throw domain_error("partner evaluation needs x > 0, got " + std::to_string(x));
  }
}

}  // namespace

const char* to_string(Branch b) { return b == Branch::odd ? "odd" : "even"; }

BaseState make_base_state(Branch branch, int n) {
  if (n < 0) {
    throw invalid_parameter("base state index must be non-negative");
  }
  const double log_sqrt_pi = 0.5 * std::log(std::numbers::pi);
  if (branch == Branch::odd) {
    // C_n = [sqrt(pi) 2^{2n} (2n+1)!]^{-1/2}
    const double log_c = -0.5 * (log_sqrt_pi + 2.0 * n * std::numbers::ln2 + std::lgamma(2.0 * n + 2.0));
    return {branch, n, 2.0 * n + 1.5, std::exp(log_c)};
  }
  // B_n = [sqrt(pi) 2^{2n-1} (2n)!]^{-1/2}
  const double log_b = -0.5 * (log_sqrt_pi + (2.0 * n - 1.0) * std::numbers::ln2 + std::lgamma(2.0 * n + 1.0));
  return {branch, n, 2.0 * n + 0.5, std::exp(log_b)};
}

double hermite(int m, double x) {
  if (m == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int i = 1; i < m; ++i) {
    const double next = 2.0 * x * cur - 2.0 * i * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {
int hermite_degree(const BaseState& s) { return s.branch == Branch::odd ? 2 * s.n + 1 : 2 * s.n; }
}  // namespace

double base_state_value(const BaseState& s, double x) {
  if (x < 0.0) {
    throw domain_error("base states live on x >= 0");
  }
  return s.norm_constant * std::exp(-0.5 * x * x) * hermite(hermite_degree(s), x);
}

SeedSolution base_state_seed(const BaseState& s) {
  // H_2n = (-1)^n (2n)!/n! M(-n, 1/2, x^2), H_2n+1 = (-1)^n 2 (2n+1)!/n! x M(-n, 3/2, x^2)
  const double sign = s.n % 2 == 0 ? 1.0 : -1.0;
  const int m = hermite_degree(s);
  double log_c = std::lgamma(m + 1.0) - std::lgamma(s.n + 1.0);
  if (s.branch == Branch::odd) {
    log_c += std::numbers::ln2;
  }
  const double c = sign * s.norm_constant * std::exp(log_c);
  return s.branch == Branch::odd ? SeedSolution{s.energy, 0.0, c} : SeedSolution{s.energy, c, 0.0};
}

PartnerPotential::PartnerPotential(std::vector<SeedSolution> seeds) : seeds_(std::move(seeds)) {
  for (std::size_t i = 1; i < seeds_.size(); ++i) {
    if (!(seeds_[i].epsilon > seeds_[i - 1].epsilon)) {
      throw invalid_parameter("factorization energies must be strictly increasing");
    }
  }
}

double partner_v(const PartnerPotential& p, double x) {
  check_x(x);
  if (p.order() == 0) {
    return 0.5 * x * x;
  }
  return 0.5 * x * x - log_w_second_deriv(p.seeds(), x);
}

double transformed_eigenfunction(const PartnerPotential& p, const BaseState& s, double x) {
  check_x(x);
  double log_norm = 0.0;
  for (const auto& u : p.seeds()) {
    const double gap = s.energy - u.epsilon;
    if (gap == 0.0) {
      throw degenerate_error("base energy " + std::to_string(s.energy) +
                             " equals a factorization energy");
    }
    log_norm -= 0.5 * std::log(2.0 * std::abs(gap));
  }
  if (p.order() == 0) {
    return base_state_value(s, x);
  }
  std::vector<SeedSolution> extended = p.seeds();
  extended.push_back(base_state_seed(s));
  return wronskian_ratio(extended, -1, p.order(), x, log_norm - 0.5 * x * x);
}

double added_state(const PartnerPotential& p, int j, double x) {
  check_x(x);
  if (j < 1 || j > p.order()) {
    throw index_error("added-state index " + std::to_string(j) + " outside 1.." +
                      std::to_string(p.order()));
  }
  // e^{-(k-1)x^2/2} / e^{-k x^2/2}
  return wronskian_ratio(p.seeds(), j - 1, -1, x, 0.5 * x * x);
}

double normalize(const RealFunction& f, const Grid& grid) {
  grid.check();
  int panels = grid.n + 1;
  panels += panels % 2;
  const double step = (grid.x_max - grid.x_min) / panels;
  std::vector<double> xs(static_cast<std::size_t>(panels) + 1);
  for (int i = 0; i <= panels; ++i) {
    xs[static_cast<std::size_t>(i)] = grid.x_min + i * step;
  }
  std::vector<double> values;
  try {
    values = tabulate(f, xs);
  } catch (const singularity_error& e) {
    throw non_normalizable(std::string("function is singular on the grid: ") + e.what());
  }
  double peak = 0.0;
  for (double& v : values) {
    if (!std::isfinite(v)) {
      throw non_normalizable("function is not finite on the grid");
    }
    peak = std::max(peak, std::abs(v));
    v *= v;
  }
  if (peak == 0.0) {
    throw non_normalizable("function vanishes identically");
  }
  const double tail = std::sqrt(values.back());
  if (tail >= 1e-8 * peak) {
    throw non_normalizable("tail |f(x_max)| = " + std::to_string(tail) +
                           " is not negligible against max|f| = " + std::to_string(peak));
  }
  // strip (0, x_min) as a rectangle; negligible unless f(0) != 0
  const double strip = grid.x_min * values.front();
  return 1.0 / std::sqrt(simpson(values, step) + strip);
}

}  // namespace susyq
