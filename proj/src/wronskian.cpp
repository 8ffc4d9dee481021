#include "susyq/wronskian.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "precision.hpp"
#include "seed_jet.hpp"
#include "susyq/error.hpp"

namespace susyq {

namespace {

void check_x(double x) {
  if (!(x > 0.0)) {
    throw domain_error("Wronskian evaluation needs x > 0, got " + std::to_string(x));
  }
}

void check_orders(std::span<const int> orders, std::size_t columns) {
  if (orders.size() != columns) {
    throw invalid_parameter("derivative orders and functions differ in count");
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 0 || (i > 0 && orders[i] <= orders[i - 1])) {
      throw invalid_parameter("derivative orders must be non-negative and strictly increasing");
    }
  }
}

std::vector<int> iota_orders(std::size_t k) {
  std::vector<int> o(k);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

template <class T>
struct Det {
  int sign = 0;
  T log_abs = 0;
  double lost = 0.0;
};

// Digits lost are estimated from the componentwise condition number
// sum |a_ij (A^-1)_ji|: entries carry small relative errors, and this is the
// factor by which those reach the determinant.
template <class T>
Det<T> lu_det(std::vector<T> a, std::size_t n) {
  using std::abs;
  using std::log;
  Det<T> d;
  d.sign = 1;
  if (n == 0) {
    return d;
  }
  for (std::size_t i = 0; i < n; ++i) {
    T scale = 0;
    for (std::size_t j = 0; j < n; ++j) {
      scale = std::max(scale, T(abs(a[i * n + j])));
    }
    if (scale == 0) {
      return {0, T(0), 0.0};
    }
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] /= scale;
    }
    d.log_abs += log(scale);
  }
  const std::vector<T> scaled = a;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (abs(a[i * n + k]) > abs(a[piv * n + k])) {
        piv = i;
      }
    }
    const T p = a[piv * n + k];
    if (p == 0) {
      return {0, T(0), INFINITY};  // may be a rounding artefact; let a wider type confirm
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[k * n + j], a[piv * n + j]);
      }
      std::swap(perm[k], perm[piv]);
      d.sign = -d.sign;
    }
    if (p < 0) {
      d.sign = -d.sign;
    }
    d.log_abs += log(abs(p));
    for (std::size_t i = k + 1; i < n; ++i) {
      T& f = a[i * n + k];
      f /= p;
      if (f == 0) {
        continue;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] -= f * a[k * n + j];
      }
    }
  }

  // column c of the inverse from L U y = P e_c
  T kappa = 0;
  std::vector<T> y(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = perm[i] == c ? T(1) : T(0);
      for (std::size_t j = 0; j < i; ++j) {
        y[i] -= a[i * n + j] * y[j];
      }
    }
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) {
        y[i] -= a[i * n + j] * y[j];
      }
      y[i] /= a[i * n + i];
    }
    // y = column c of A^-1, paired with row c of A
    for (std::size_t j = 0; j < n; ++j) {
      kappa += abs(scaled[c * n + j] * y[j]);
    }
  }
  d.lost = std::log10(std::max(1.0, static_cast<double>(kappa)));
  if (!std::isfinite(d.lost)) {
    d.lost = INFINITY;
  }
  return d;
}

template <class T>
using Columns = std::vector<std::vector<T>>;

struct JetKey {
  double epsilon;
  double b1;
  double b2;
  double x;

  bool operator==(const JetKey&) const = default;
};

struct JetKeyHash {
  std::size_t operator()(const JetKey& k) const {
    std::size_t h = 0;
    for (double v : {k.epsilon, k.b1, k.b2, k.x}) {
      h = h * 1000003u ^ std::hash<double>{}(v);
    }
    return h;
  }
};

// Potentials, states and norms of one plan revisit the same (seed, x) pairs,
// and the Kummer series dominate every evaluation. Per-thread, bounded.
template <class T>
const detail::Jet<T>& cached_jet(const SeedSolution& u, double x) {
  constexpr std::size_t capacity = 1 << 16;
  thread_local std::unordered_map<JetKey, detail::Jet<T>, JetKeyHash> cache;
  const JetKey key{u.epsilon, u.b1, u.b2, x};
  if (auto it = cache.find(key); it != cache.end()) {
    return it->second;
  }
  if (cache.size() >= capacity) {
    cache.clear();
  }
  return cache.emplace(key, detail::seed_jet<T>(u, x)).first->second;
}

template <class T>
Columns<T> seed_columns(std::span<const SeedSolution> seeds, double x, int max_order) {
  Columns<T> cols(seeds.size(), std::vector<T>(static_cast<std::size_t>(max_order) + 1));
  for (std::size_t j = 0; j < seeds.size(); ++j) {
    detail::fill_derivs<T>(cached_jet<T>(seeds[j], x), x, cols[j]);
  }
  return cols;
}

template <class T>
std::vector<T> select(const Columns<T>& cols, std::span<const int> orders, int skip) {
  const std::size_t n = orders.size();
  std::vector<T> m(n * n);
  std::size_t c = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(j) == skip) {
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      m[i * n + c] = cols[j][static_cast<std::size_t>(orders[i])];
    }
    ++c;
  }
  return m;
}

// Digits lost against the larger of |det| 10^-digits and the floor.
template <class T>
double lost_against(const Det<T>& d, const Tolerance& tol) {
  if (d.sign == 0 || !std::isfinite(tol.log_abs_floor)) {
    return d.lost;
  }
  const double log10_det = static_cast<double>(d.log_abs) / std::log(10.0);
  const double slack = tol.log_abs_floor / std::log(10.0) - (log10_det - tol.digits);
  return d.lost - std::max(0.0, slack);
}

template <class T>
LogDet to_log_det(const Det<T>& d) {
  return {d.sign, d.sign == 0 ? -INFINITY : static_cast<double>(d.log_abs)};
}

void check_floor(const LogDet& w, double x) {
  if (w.sign == 0 || w.log_abs < std::log(wronskian_floor)) {
    throw singularity_error("Wronskian vanishes at x = " + std::to_string(x));
  }
}

}  // namespace

LogDet determinant(const DerivativeMatrix& m) {
  return to_log_det(lu_det<long double>(m.entries, m.size()));
}

LogDet scaled_wronskian(std::span<const SeedSolution> seeds, double x, int skip,
                        Tolerance tol) {
  if (skip >= static_cast<int>(seeds.size())) {
    throw index_error("column index out of range");
  }
  const std::size_t k = seeds.size() - (skip >= 0 ? 1 : 0);
  if (k == 0) {
    return {1, 0.0};
  }
  const auto orders = iota_orders(k);
  return detail::with_escalation<LogDet>(tol.digits, [&]<class T>() {
    const auto cols = seed_columns<T>(seeds, x, static_cast<int>(k) - 1);
    const Det<T> d = lu_det(select(cols, orders, skip), k);
    return detail::Attempt<LogDet>{to_log_det(d), lost_against(d, tol)};
  });
}

namespace {

// log_offset is added to ln|W| before the floor check.
LogDerivs log_derivs_impl(std::span<const SeedSolution> seeds, double x, double log_offset) {
  const std::size_t k = seeds.size();
  if (k == 0) {
    return {0.0, 0.0};
  }
  const int kk = static_cast<int>(k);
  const auto orders = iota_orders(k);
  // W' replaces the top order k-1 by k; W'' = det(.., k-1, k) + det(.., k-2, k+1).
  std::vector<int> o1 = orders;
  o1.back() = kk;
  std::vector<int> o2 = orders;
  o2.back() = kk + 1;
  std::vector<int> o3 = orders;
  if (k >= 2) {
    o3[k - 2] = kk - 1;
    o3[k - 1] = kk;
  }

  struct Result {
    LogDerivs d;
    LogDet w;
  };
  const Result r = detail::with_escalation<Result>(Tolerance{}.digits, [&]<class T>() {
    using std::exp;
    const auto cols = seed_columns<T>(seeds, x, kk + 1);
    const Det<T> w = lu_det(select(cols, orders, -1), k);
    if (w.sign == 0) {
      return detail::Attempt<Result>{{{NAN, NAN}, to_log_det(w)}, w.lost};
    }
    double lost = w.lost;
    auto ratio = [&](const std::vector<int>& o) -> T {
      const Det<T> d = lu_det(select(cols, o, -1), k);
      if (d.sign == 0) {
        lost = std::max(lost, d.lost);
        return T(0);
      }
      const T q = d.sign * w.sign * exp(d.log_abs - w.log_abs);
      // error measured against max(1, |q|)
      const double log10_q = static_cast<double>(d.log_abs - w.log_abs) / std::log(10.0);
      lost = std::max(lost, d.lost + std::min(0.0, log10_q));
      return q;
    };
    const T d1 = ratio(o1);
    T d2 = ratio(o2);
    if (k >= 2) {
      d2 += ratio(o3);
    }
    return detail::Attempt<Result>{
        {{static_cast<double>(d1), static_cast<double>(d2 - d1 * d1)}, to_log_det(w)}, lost};
  });
  LogDet full = r.w;
  full.log_abs += log_offset;
  check_floor(full, x);
  return r.d;
}

}  // namespace

LogDerivs scaled_log_derivs(std::span<const SeedSolution> seeds, double x) {
  return log_derivs_impl(seeds, x, 0.0);
}

double wronskian_ratio(std::span<const SeedSolution> seeds, int num_skip, int den_skip, double x,
                       double extra_log) {
  check_x(x);
  const int size = static_cast<int>(seeds.size());
  if (num_skip >= size || den_skip >= size) {
    throw index_error("column index out of range");
  }
  const std::size_t kn = seeds.size() - (num_skip >= 0 ? 1 : 0);
  const std::size_t kd = seeds.size() - (den_skip >= 0 ? 1 : 0);
  const int top = static_cast<int>(std::max(kn, kd)) - 1;
  struct Result {
    double value;
    LogDet den;
  };
  const Result r = detail::with_escalation<Result>(Tolerance{}.digits, [&]<class T>() {
    const auto cols = seed_columns<T>(seeds, x, std::max(top, 0));
    const Det<T> den = kd == 0 ? Det<T>{1, T(0), 0.0} : lu_det(select(cols, iota_orders(kd), den_skip), kd);
    const Det<T> num = kn == 0 ? Det<T>{1, T(0), 0.0} : lu_det(select(cols, iota_orders(kn), num_skip), kn);
    if (den.sign == 0) {
      return detail::Attempt<Result>{{NAN, to_log_det(den)}, den.lost};
    }
    if (num.sign == 0) {
      return detail::Attempt<Result>{{0.0, to_log_det(den)}, num.lost};
    }
    const double log_q = static_cast<double>(num.log_abs - den.log_abs) + extra_log;
    // relative errors of both determinants, against max(1, |q|)
    const double cond = std::pow(10.0, num.lost) + std::pow(10.0, den.lost);
    const double lost = std::log10(cond) + std::min(0.0, log_q / std::log(10.0));
    return detail::Attempt<Result>{{num.sign * den.sign * std::exp(log_q), to_log_det(den)}, lost};
  });
  LogDet full = r.den;
  full.log_abs -= 0.5 * static_cast<double>(kd) * x * x;
  check_floor(full, x);
  return r.value;
}

double det_orders(std::span<const SeedSolution> seeds, std::span<const int> orders, double x) {
  check_x(x);
  check_orders(orders, seeds.size());
  if (seeds.empty()) {
    return 1.0;
  }
  Columns<long double> cols;
  cols.reserve(seeds.size());
  for (const auto& s : seeds) {
    const auto d = seed_derivs(s, x, orders.back());
    cols.emplace_back(d.begin(), d.end());
  }
  return to_log_det(lu_det(select(cols, orders, -1), seeds.size())).value();
}

LogDet wronskian_log(std::span<const SeedSolution> seeds, double x) {
  check_x(x);
  LogDet w = scaled_wronskian(seeds, x);
  w.log_abs -= 0.5 * static_cast<double>(seeds.size()) * x * x;
  return w;
}

double wronskian(std::span<const SeedSolution> seeds, double x) {
  return wronskian_log(seeds, x).value();
}

double wronskian_minor(std::span<const SeedSolution> seeds, int j, double x) {
  check_x(x);
  if (j < 1 || j > static_cast<int>(seeds.size())) {
    throw index_error("Wronskian minor index " + std::to_string(j) + " outside 1.." +
                      std::to_string(seeds.size()));
  }
  LogDet w = scaled_wronskian(seeds, x, j - 1);
  w.log_abs -= 0.5 * static_cast<double>(seeds.size() - 1) * x * x;
  return w.value();
}

LogDerivs log_w_derivs(std::span<const SeedSolution> seeds, double x) {
  check_x(x);
  const double k = static_cast<double>(seeds.size());
  const auto d = log_derivs_impl(seeds, x, -0.5 * k * x * x);
  return {d.first - k * x, d.second - k};
}

double log_w_second_deriv(std::span<const SeedSolution> seeds, double x) {
  return log_w_derivs(seeds, x).second;
}

}  // namespace susyq
