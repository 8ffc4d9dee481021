#pragma once

// Uniform grid on (x_min, x_max) and point-parallel tabulation kernels.

#include <exception>
#include <functional>
#include <span>
#include <vector>

namespace susyq {

/// n interior points x_i = x_min + i h, i = 1..n, h = (x_max - x_min)/(n + 1).
/// The endpoints carry Dirichlet values.
struct Grid {
  double x_min = 1e-4;
  double x_max = 10.0;
  int n = 4000;

  double h() const { return (x_max - x_min) / (n + 1); }
  double point(int i) const { return x_min + i * h(); }
  std::vector<double> interior() const;

  /// Throws invalid_parameter unless 0 < x_min < x_max and n >= 100.
  void check() const;
};

using RealFunction = std::function<double(double)>;

/// f over xs, OpenMP-parallel over points. The first exception raised by any
/// point is rethrown after the loop.
std::vector<double> tabulate(const RealFunction& f, std::span<const double> xs);

/// Serial reference for tabulate().
std::vector<double> tabulate_serial(const RealFunction& f, std::span<const double> xs);

/// Composite Simpson rule for samples on a uniform grid with an even number
/// of panels (odd number of samples).
double simpson(std::span<const double> samples, double step);

}  // namespace susyq
