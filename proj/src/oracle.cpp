#include "susyq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "susyq/error.hpp"

namespace susyq::oracle {

namespace {

struct Bounds {
  double lo;
  double hi;
};

Bounds gershgorin(const Tridiag& t) {
  const std::size_t n = t.diag.size();
  Bounds b{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()};
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) {
      radius += std::abs(t.off[i - 1]);
    }
    if (i + 1 < n) {
      radius += std::abs(t.off[i]);
    }
    b.lo = std::min(b.lo, t.diag[i] - radius);
    b.hi = std::max(b.hi, t.diag[i] + radius);
  }
  return b;
}

void check_request(const Tridiag& t, int m) {
  if (t.diag.empty() || t.off.size() + 1 != t.diag.size()) {
    throw invalid_parameter("malformed tridiagonal matrix");
  }
  if (m < 0 || m > max_eigenvalues || m > static_cast<int>(t.diag.size())) {
    throw invalid_parameter("cannot request " + std::to_string(m) + " eigenvalues");
  }
}

// Bisection for the eigenvalue with 0-based index `index`.
double bisect(const Tridiag& t, int index, Bounds b) {
  double lo = b.lo;
  double hi = b.hi;
  while (true) {
    const double width = hi - lo;
    const double ulp_floor = 4.0 * std::numeric_limits<double>::epsilon() *
                             std::max(std::abs(lo), std::abs(hi));
    if (width <= std::max(bisection_width, ulp_floor)) {
      break;
    }
    const double mid = lo + 0.5 * width;
    if (mid <= lo || mid >= hi) {
      break;
    }
    if (sturm_count(t, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace

Tridiag discretize(const RealFunction& potential, const Grid& grid) {
  grid.check();
  const std::vector<double> xs = grid.interior();
  const std::vector<double> v = tabulate(potential, xs);
  const double h = grid.h();
  const double inv_h2 = 1.0 / (h * h);
  Tridiag t;
  t.diag.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i]) || std::abs(v[i]) > potential_ceiling) {
      throw singularity_error("potential is singular near x = " + std::to_string(xs[i]) +
                              " (V = " + std::to_string(v[i]) + ")");
    }
    t.diag[i] = inv_h2 + v[i];
  }
  t.off.assign(v.size() - 1, -0.5 * inv_h2);
  return t;
}

int sturm_count(const Tridiag& t, double sigma) {
  const std::size_t n = t.diag.size();
  double max_off2 = 0.0;
  for (double b : t.off) {
    max_off2 = std::max(max_off2, b * b);
  }
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, max_off2);
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    d = t.diag[i] - sigma - (i > 0 ? t.off[i - 1] * t.off[i - 1] / d : 0.0);
    if (std::abs(d) < pivmin) {
      d = -pivmin;
    }
    if (d < 0.0) {
      ++count;
    }
  }
  return count;
}

std::vector<double> eigenvalues_low(const Tridiag& t, int m) {
  check_request(t, m);
  const Bounds b = gershgorin(t);
  std::vector<double> out(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < m; ++i) {
    out[static_cast<std::size_t>(i)] = bisect(t, i, b);
  }
  return out;
}

std::vector<double> eigenvalues_low_serial(const Tridiag& t, int m) {
  check_request(t, m);
  const Bounds b = gershgorin(t);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    out.push_back(bisect(t, i, b));
  }
  return out;
}

double residual(const RealFunction& potential, const RealFunction& f, double energy,
                std::span<const double> sample) {
  const double h = residual_step;
  double worst = 0.0;
  for (double x : sample) {
    const double f0 = f(x);
    const double d2 = (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f0 + 16.0 * f(x - h) - f(x - 2 * h)) /
                      (12.0 * h * h);
    const double r = std::abs(-0.5 * d2 + (potential(x) - energy) * f0) / std::max(1.0, std::abs(f0));
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace susyq::oracle
