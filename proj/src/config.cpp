#include "susyq/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <set>

#include "susyq/error.hpp"

namespace susyq {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_decimal(std::string_view token) {
  const std::string s(trim(token));
  if (s.empty()) {
    throw config_error("empty number");
  }
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw config_error("not a number: '" + s + "'");
  }
  return v;
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> items;
  if (trim(value).empty()) {
    return items;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = value.find(',', start);
    items.push_back(trim(value.substr(start, comma == std::string_view::npos ? value.npos : comma - start)));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return items;
}

int parse_int(std::string_view token) {
  const double v = parse_decimal(token);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw config_error("not an integer: '" + std::string(trim(token)) + "'");
  }
  return static_cast<int>(v);
}

Parity parse_parity(std::string_view token) {
  const std::string_view t = trim(token);
  if (t == "+1" || t == "1" || t == "+" || t == "even") {
    return Parity::even;
  }
  if (t == "-1" || t == "-" || t == "odd") {
    return Parity::odd;
  }
  throw config_error("parity must be +1 or -1, got '" + std::string(t) + "'");
}

}  // namespace

double parse_number(std::string_view token) {
  const std::string_view t = trim(token);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) {
    return parse_decimal(t);
  }
  const double p = parse_decimal(t.substr(0, slash));
  const double q = parse_decimal(t.substr(slash + 1));
  if (q == 0.0) {
    throw config_error("zero denominator in '" + std::string(t) + "'");
  }
  return p / q;
}

PlanConfig parse_config(std::string_view text) {
  PlanConfig cfg;
  std::set<std::string, std::less<>> seen;
  int epsilons_line = 0;
  int parities_line = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw config_error("expected 'key = value'", line_no);
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw config_error("duplicate key '" + key + "'", line_no);
    }
    try {
      if (key == "order") {
        cfg.order = parse_int(value);
        if (cfg.order < 0) {
          throw config_error("order must be non-negative");
        }
      } else if (key == "epsilons") {
        epsilons_line = line_no;
        for (auto item : split_list(value)) {
          cfg.epsilons.push_back(parse_number(item));
        }
      } else if (key == "parities") {
        parities_line = line_no;
        std::vector<Parity> ps;
        for (auto item : split_list(value)) {
          ps.push_back(parse_parity(item));
        }
        cfg.parities = std::move(ps);
      } else if (key == "x_max") {
        cfg.x_max = parse_number(value);
        if (!(cfg.x_max > 0.0)) {
          throw config_error("x_max must be positive");
        }
      } else if (key == "grid_n") {
        cfg.grid_n = parse_int(value);
        if (cfg.grid_n < 100) {
          throw config_error("grid_n must be at least 100");
        }
      } else if (key == "levels_to_report") {
        cfg.levels_to_report = parse_int(value);
        if (cfg.levels_to_report < 1 || cfg.levels_to_report > 20) {
          throw config_error("levels_to_report must be in 1..20");
        }
      } else if (key == "output_dir") {
        if (value.empty()) {
          throw config_error("output_dir must not be empty");
        }
        cfg.output_dir = std::string(value);
      } else {
        throw config_error("unknown key '" + key + "'");
      }
    } catch (const config_error& e) {
      if (e.line() > 0) {
        throw;
      }
      throw config_error(e.what(), line_no);
    }
  }

  if (!seen.contains("order")) {
    throw config_error("missing required key 'order'");
  }
  if (!seen.contains("epsilons")) {
    throw config_error("missing required key 'epsilons'");
  }
  if (static_cast<int>(cfg.epsilons.size()) != cfg.order) {
    throw config_error("'epsilons' has " + std::to_string(cfg.epsilons.size()) +
                           " entries but order is " + std::to_string(cfg.order),
                       epsilons_line);
  }
  if (cfg.parities && static_cast<int>(cfg.parities->size()) != cfg.order) {
    throw config_error("'parities' has " + std::to_string(cfg.parities->size()) +
                           " entries but order is " + std::to_string(cfg.order),
                       parities_line);
  }
  return cfg;
}

}  // namespace susyq
