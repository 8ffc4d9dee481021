#include "susyq/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "susyq/design.hpp"
#include "susyq/error.hpp"
#include "susyq/oracle.hpp"
#include "susyq/partner.hpp"

namespace susyq {

using json = nlohmann::ordered_json;

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::run:
      return "run";
    case Command::validate:
      return "validate";
    case Command::spectrum:
      return "spectrum";
  }
  return "?";
}

std::string label(double energy) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "E=%.12g", energy);
  return buf;
}

json config_json(const PlanConfig& cfg, const design::TransformationPlan& plan) {
  json j;
  j["order"] = cfg.order;
  json eps = json::array();
  json par = json::array();
  for (std::size_t i = 0; i < plan.epsilons.size(); ++i) {
    eps.push_back(round12(plan.epsilons[i]));
    par.push_back(sign_of(plan.parities[i]));
  }
  j["epsilons"] = eps;
  j["parities"] = par;
  j["parities_auto"] = plan.auto_parities;
  j["x_max"] = round12(cfg.x_max);
  j["grid_n"] = cfg.grid_n;
  j["levels_to_report"] = cfg.levels_to_report;
  if (plan.interval) {
    j["interval"] = {{"class", design::to_string(plan.interval->kind)},
                     {"index", plan.interval->index}};
  } else {
    j["interval"] = nullptr;
  }
  return j;
}

json validation_json(const design::ValidationReport& r) {
  json j;
  j["ok"] = r.ok;
  json rules = json::object();
  for (const auto& id : design::rule_ids()) {
    rules[id] = r.passed(id) ? "pass" : "fail";
  }
  j["rules"] = rules;
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"rule", v.rule}, {"message", v.message}});
  }
  j["violations"] = violations;
  json added = json::array();
  for (const auto& a : r.predicted_added) {
    added.push_back({{"index", a.index}, {"epsilon", round12(a.epsilon)}});
  }
  j["predicted_added"] = added;
  if (r.isospectral_branch) {
    j["isospectral_branch"] = to_string(*r.isospectral_branch);
  } else {
    j["isospectral_branch"] = nullptr;
  }
  json zeros = json::array();
  for (double z : r.wronskian_zeros) {
    zeros.push_back(round12(z));
  }
  j["wronskian_zeros"] = zeros;
  return j;
}

json rounded(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) {
    a.push_back(round12(x));
  }
  return a;
}

struct State {
  std::string kind;  // "isospectral" or "added"
  int index;         // n or j
  double energy;
  RealFunction f;    // unnormalized
  double norm = 1.0;
};

std::vector<double> residual_sample(double x_max) {
  std::vector<double> s;
  const double lo = 0.1;
  const double hi = 0.6 * x_max;
  constexpr int count = 40;
  for (int i = 0; i < count; ++i) {
    s.push_back(lo + (hi - lo) * i / (count - 1));
  }
  return s;
}

void run_numerics(const PlanConfig& cfg, const design::TransformationPlan& plan,
                  const design::ValidationReport& report, const Grid& grid, json& out,
                  Artifacts& art) {
  const PartnerPotential partner(plan.seeds());
  if (!report.isospectral_branch) {
    throw singularity_error("no base-state branch satisfies the boundary condition at 0");
  }
  const Branch branch = *report.isospectral_branch;
  const int m = cfg.levels_to_report;

  std::vector<double> predicted;
  for (const auto& a : report.predicted_added) {
    predicted.push_back(a.epsilon);
  }
  for (int n = 0; static_cast<int>(predicted.size()) < m + static_cast<int>(report.predicted_added.size()); ++n) {
    predicted.push_back(make_base_state(branch, n).energy);
  }
  std::sort(predicted.begin(), predicted.end());
  predicted.resize(static_cast<std::size_t>(m));

  const RealFunction vtilde = [&](double x) { return partner_v(partner, x); };
  const auto tri = oracle::discretize(vtilde, grid);
  const auto spectrum = oracle::eigenvalues_low(tri, m);

  double worst = 0.0;
  for (int i = 0; i < m; ++i) {
    worst = std::max(worst, std::abs(spectrum[static_cast<std::size_t>(i)] - predicted[static_cast<std::size_t>(i)]));
  }
  const bool spectrum_pass = worst <= spectrum_tolerance;
  out["predicted_spectrum"] = rounded(predicted);
  out["oracle_spectrum"] = rounded(spectrum);
  out["spectrum_check"] = {{"tolerance", spectrum_tolerance},
                           {"max_abs_error", round12(worst)},
                           {"pass", spectrum_pass}};

  std::vector<State> states;
  for (int n = 0; n < isospectral_states; ++n) {
    const BaseState s = make_base_state(branch, n);
    states.push_back({"isospectral", n, s.energy,
                      [&partner, s](double x) { return transformed_eigenfunction(partner, s, x); }});
  }
  for (const auto& a : report.predicted_added) {
    states.push_back({"added", a.index, a.epsilon,
                      [&partner, j = a.index](double x) { return added_state(partner, j, x); }});
  }
  std::stable_sort(states.begin(), states.end(),
                   [](const State& a, const State& b) { return a.energy < b.energy; });

  const auto sample = residual_sample(cfg.x_max);
  bool residual_pass = true;
  json states_json = json::array();
  for (auto& s : states) {
    s.norm = normalize(s.f, grid);
    const double r = oracle::residual(
        vtilde, [&](double x) { return s.norm * s.f(x); }, s.energy, sample);
    const bool pass = r <= residual_tolerance;
    residual_pass = residual_pass && pass;
    states_json.push_back({{"label", label(s.energy)},
                           {"kind", s.kind},
                           {"index", s.index},
                           {"energy", round12(s.energy)},
                           {"residual", round12(r)},
                           {"pass", pass}});
  }
  out["states"] = states_json;
  out["residual_check"] = {{"tolerance", residual_tolerance}, {"pass", residual_pass}};

  const auto xs = grid.interior();
  const auto vt = tabulate(vtilde, xs);
  std::string pot = "x,V,Vtilde\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    pot += format_csv(xs[i]) + "," + format_csv(0.5 * xs[i] * xs[i]) + "," + format_csv(vt[i]) + "\n";
  }
  art.potential_csv = std::move(pot);

  std::vector<std::vector<double>> columns;
  std::string st = "x";
  for (const auto& s : states) {
    st += "," + label(s.energy);
    auto col = tabulate(s.f, xs);
    for (double& v : col) {
      v *= s.norm;
    }
    columns.push_back(std::move(col));
  }
  st += "\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    st += format_csv(xs[i]);
    for (const auto& col : columns) {
      st += "," + format_csv(col[i]);
    }
    st += "\n";
  }
  art.states_csv = std::move(st);

  const bool pass = spectrum_pass && residual_pass;
  out["status"] = pass ? "ok" : "numerical-failure";
  art.exit_code = pass ? exit_code::ok : exit_code::numerical;
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) {
    return v;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return std::strtod(buf, nullptr);
}

std::string format_csv(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

Artifacts execute(Command command, const PlanConfig& cfg) {
  design::TransformationPlan plan;
  try {
    plan = design::make_plan(cfg.epsilons, cfg.parities);
  } catch (const invalid_parameter& e) {
    throw config_error(e.what());
  }
  const Grid grid{1e-4, cfg.x_max, cfg.grid_n};
  try {
    grid.check();
  } catch (const invalid_parameter& e) {
    throw config_error(e.what());
  }

  Artifacts art;
  json out;
  out["command"] = command_name(command);
  out["config"] = config_json(cfg, plan);

  try {
    if (command == Command::spectrum) {
      const PartnerPotential partner(plan.seeds());
      const auto tri = oracle::discretize([&](double x) { return partner_v(partner, x); }, grid);
      out["oracle_spectrum"] = rounded(oracle::eigenvalues_low(tri, cfg.levels_to_report));
      out["status"] = "ok";
      art.exit_code = exit_code::ok;
    } else {
      const auto report = design::validate(plan, grid);
      out["validation"] = validation_json(report);
      if (!report.ok) {
        out["status"] = "violation";
        art.exit_code = exit_code::violation;
      } else if (command == Command::validate) {
        out["status"] = "ok";
        art.exit_code = exit_code::ok;
      } else {
        run_numerics(cfg, plan, report, grid, out, art);
      }
    }
  } catch (const error& e) {
    out["status"] = "numerical-failure";
    out["error"] = e.what();
    art.exit_code = exit_code::numerical;
    art.potential_csv.reset();
    art.states_csv.reset();
  }
  art.report_json = out.dump(2) + "\n";
  return art;
}

void write_artifacts(const Artifacts& art, const std::string& output_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create " + output_dir + ": " + ec.message());
  }
  auto write = [&](const char* name, const std::string& body) {
    const fs::path path = fs::path(output_dir) / name;
    std::ofstream f(path, std::ios::binary);
    f << body;
    f.close();
    if (!f) {
      throw std::runtime_error("cannot write " + path.string());
    }
  };
  write("report.json", art.report_json);
  if (art.potential_csv) {
    write("potential.csv", *art.potential_csv);
  }
  if (art.states_csv) {
    write("states.csv", *art.states_csv);
  }
}

}  // namespace susyq
