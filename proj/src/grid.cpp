#include "susyq/grid.hpp"

#include <mutex>
#include <string>

#include "susyq/error.hpp"

namespace susyq {

std::vector<double> Grid::interior() const {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[static_cast<std::size_t>(i)] = point(i + 1);
  }
  return xs;
}

void Grid::check() const {
  if (!(x_min > 0.0) || !(x_max > x_min)) {
    throw invalid_parameter("grid needs 0 < x_min < x_max");
  }
  if (n < 100) {
    throw invalid_parameter("grid needs at least 100 interior points, got " + std::to_string(n));
  }
}

std::vector<double> tabulate(const RealFunction& f, std::span<const double> xs) {
  std::vector<double> out(xs.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<long>(xs.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) {
        failure = std::current_exception();
      }
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return out;
}

std::vector<double> tabulate_serial(const RealFunction& f, std::span<const double> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    out.push_back(f(x));
  }
  return out;
}

double simpson(std::span<const double> samples, double step) {
  if (samples.size() < 3 || samples.size() % 2 == 0) {
    throw invalid_parameter("Simpson rule needs an odd number (>= 3) of samples");
  }
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    (i % 2 == 1 ? odd : even) += samples[i];
  }
  return step / 3.0 * (samples.front() + 4.0 * odd + 2.0 * even + samples.back());
}

}  // namespace susyq
