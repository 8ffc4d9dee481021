// susyq: build and verify k-th order partners of the truncated oscillator.
//
//   susyq run <config>       validation, construction and oracle check
//   susyq validate <config>  design rules only
//   susyq spectrum <config>  oracle eigenvalues of the partner only

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "susyq/error.hpp"
#include "susyq/pipeline.hpp"

namespace {

int dispatch(susyq::Command command, const std::string& config_path) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "susyq: cannot read " << config_path << "\n";
    return susyq::exit_code::io;
  }
  std::ostringstream text;
  text << in.rdbuf();

  susyq::Artifacts art;
  std::string output_dir;
  try {
    const auto cfg = susyq::parse_config(text.str());
    output_dir = cfg.output_dir;
    art = susyq::execute(command, cfg);
  } catch (const susyq::config_error& e) {
    std::cerr << "susyq: " << config_path << ": " << e.what() << "\n";
    return susyq::exit_code::config;
  }

  try {
    susyq::write_artifacts(art, output_dir);
  } catch (const std::runtime_error& e) {
    std::cerr << "susyq: " << e.what() << "\n";
    return susyq::exit_code::io;
  }
  std::cout << art.report_json;
  return art.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supersymmetric partners of the truncated harmonic oscillator"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "validate, construct and verify a transformation plan");
  auto* validate = app.add_subcommand("validate", "check a plan against the design rules");
  auto* spectrum = app.add_subcommand("spectrum", "oracle eigenvalues of the partner potential");
  for (auto* sub : {run, validate, spectrum}) {
    sub->add_option("config", config_path, "plan configuration file")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : susyq::exit_code::config;
  }

  if (run->parsed()) {
    return dispatch(susyq::Command::run, config_path);
  }
  if (validate->parsed()) {
    return dispatch(susyq::Command::validate, config_path);
  }
  return dispatch(susyq::Command::spectrum, config_path);
}
