// Command-line front end. Talks to the library only through the C interface.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperharm.h"

namespace {

struct Handles {
  hyh_config* config = nullptr;
  hyh_result* result = nullptr;
  ~Handles() {
    hyh_result_free(result);
    hyh_config_free(config);
  }
};

int report_failure(hyh_status status) {
  std::fprintf(stderr, "error [%s]: %s\n", hyh_last_error_kind(), hyh_last_error());
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral multipliers and Fourier inequalities on rank-one symmetric spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_file;
  std::vector<std::string> overrides;
  bool print_json = false;
  // flag name -> config key
  const std::vector<std::pair<std::string, std::string>> mapped{
      {"geometry", "geometry"}, {"n", "n"},           {"alpha", "alpha"},     {"beta", "beta"},
      {"p", "p"},               {"q", "q"},           {"b", "b"},             {"symbol", "symbol"},
      {"weight", "weight"},     {"suite", "suite"},   {"t-grid", "t_grid"},   {"out", "out"},
      {"seed", "seed"},         {"bound", "bound"},   {"input", "input"},     {"input-file", "input_file"},
      {"shift", "shift"},       {"t", "t"},           {"sigma", "sigma"},     {"lambda-max", "lambda_max"},
      {"r-max", "r_max"},       {"R", "R"},           {"zeta", "zeta"},       {"s", "s"},
  };
  std::map<std::string, std::string> values;
  for (const auto& [flag, key] : mapped) {
    std::string name = flag.size() == 1 ? "-" + flag : "--" + flag;
    if (flag.size() == 1) name += ",--" + flag;
    app.add_option(name, values[key], "sets " + key);
  }
  app.add_option("--config", config_file, "key=value configuration file");
  app.add_option("--set", overrides, "extra key=value settings, applied last");
  bool exploratory = false;
  bool round_trip = false;
  app.add_flag("--exploratory", exploratory, "run checks outside the stated hypotheses, flagged");
  app.add_flag("--round-trip", round_trip, "transform: report the Plancherel defect");
  app.add_flag("--json", print_json, "print the JSON document instead of the text summary");

  const char* commands[] = {"transform", "bound", "verify", "heat-curve"};
  const char* help[] = {"spherical transform of a built-in or CSV radial function",
                        "evaluate a closed-form or numerical bound",
                        "run a verification suite",
                        "empirical heat decay curve against the bound"};
  for (int k = 0; k < 4; ++k) app.add_subcommand(commands[k], help[k]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return HYH_VALIDATION_ERROR;
  }

  Handles h;
  hyh_status st = hyh_config_new(&h.config);
  if (st != HYH_OK) return report_failure(st);
  if (!config_file.empty() && (st = hyh_config_load(h.config, config_file.c_str())) != HYH_OK)
    return report_failure(st);
  for (const auto& [key, value] : values) {
    if (value.empty()) continue;
    if ((st = hyh_config_set(h.config, key.c_str(), value.c_str())) != HYH_OK) return report_failure(st);
  }
  if (exploratory && (st = hyh_config_set(h.config, "exploratory", "true")) != HYH_OK) return report_failure(st);
  if (round_trip && (st = hyh_config_set(h.config, "round_trip", "true")) != HYH_OK) return report_failure(st);
  for (const std::string& kv : overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "error [usage]: --set expects key=value, got '%s'\n", kv.c_str());
      return HYH_VALIDATION_ERROR;
    }
    if ((st = hyh_config_set(h.config, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str())) != HYH_OK)
      return report_failure(st);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  st = hyh_run(command.c_str(), h.config, &h.result);
  if (st != HYH_OK && st != HYH_ASSERTION_FAILED) return report_failure(st);
  std::fputs(print_json ? hyh_result_json(h.result) : hyh_result_summary(h.result), stdout);
  if (print_json) std::fputc('\n', stdout);
  return static_cast<int>(st);
}
