#pragma once

#include <stdexcept>
#include <string>

namespace susyq {

/// Base of every error thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_parameter : public error {
 public:
  using error::error;
};

class non_convergence : public error {
 public:
  using error::error;
};

/// Evaluation requested outside the domain of a function (e.g. x <= 0).
class domain_error : public error {
 public:
  using error::error;
};

/// Wronskian (or potential) vanishes / blows up at the evaluation point.
class singularity_error : public error {
 public:
  using error::error;
};

/// A base-state energy coincides with a factorization energy.
class degenerate_error : public error {
 public:
  using error::error;
};

class index_error : public error {
 public:
  using error::error;
};

/// Factorization energy on an interval endpoint (half-integer).
class boundary_error : public error {
 public:
  using error::error;
};

class non_normalizable : public error {
 public:
  using error::error;
};

class config_error : public error {
 public:
  config_error(const std::string& what, int line = 0)
      : error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace susyq
