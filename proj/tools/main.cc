// Copyright 2026 The contdo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// contdo: run double oracle and fictitious play experiments.
//
//   contdo run --game g1 --algo double-oracle --epsilon 1e-3 --seed 7
//   contdo run --game blotto --n 3 --c 0.0625 --init grid
//       --oracle enumeration --epsilon 1e-6
//   contdo compare --game g2 --max-iters 200
//
// Settings are applied in order: built-in defaults, --config file,
// $CONTDO_OUT_DIR, then command-line flags.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "experiment.h"

namespace {

using contdo::tools::ExperimentConfig;

// Flags shared by both subcommands, keyed by setting name.
const char* const kSettingFlags[][2] = {
    {"game", "g1, g2, blotto or matrix"},
    {"epsilon", "stopping tolerance on upper - lower"},
    {"max-iters", "iteration cap"},
    {"seed", "seed for the random initial strategies"},
    {"resolution", "grid spacing of the interval-game oracles"},
    {"lipschitz", "Lipschitz bound used for the declared oracle accuracy"},
    {"oracle", "blotto oracle: milp or enumeration"},
    {"n", "blotto battlefields"},
    {"a", "blotto battlefield weights, comma-separated"},
    {"c", "blotto contest sharpness"},
    {"init", "blotto initial sets: corners, grid or random"},
    {"matrix", "payoff rows separated by ';', entries by ','"},
    {"out-dir", "output directory"},
    {"record-time", "write wall time per iteration (true/false)"},
    {"parallel", "run the two oracles concurrently (true/false)"},
};

struct FlagValues {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void Register(CLI::App* app) {
    for (const auto& [name, help] : kSettingFlags) {
      options[name] =
          app->add_option(std::string("--") + name, values[name], help);
    }
  }

  void ApplyTo(ExperimentConfig& config) const {
    for (const auto& [name, option] : options) {
      if (option->count() > 0) {
        contdo::tools::ApplySetting(config, name, values.at(name));
      }
    }
  }
};

void ApplyEnvironment(ExperimentConfig& config) {
  if (const char* dir = std::getenv(contdo::tools::kOutDirEnv)) {
    if (*dir != '\0') contdo::tools::ApplySetting(config, "out-dir", dir);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double oracle and fictitious play for continuous games"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "run one experiment");
  FlagValues run_flags;
  run_flags.Register(run);
  std::string run_config;
  std::string run_algo;
  run->add_option("--config", run_config, "flat key=value config file");
  run->add_option("--algo", run_algo, "double-oracle or fictitious-play");

  CLI::App* compare =
      app.add_subcommand("compare", "double oracle vs fictitious play");
  FlagValues compare_flags;
  compare_flags.Register(compare);
  std::string config_a;
  std::string config_b;
  std::string algo_a;
  std::string algo_b;
  compare->add_option("--config", config_a, "config of the first run");
  compare->add_option("--config-b", config_b, "config of the second run");
  compare->add_option("--algo", algo_a, "algorithm of the first run");
  compare->add_option("--algo-b", algo_b, "algorithm of the second run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : contdo::tools::kExitError;
  }

  try {
    if (run->parsed()) {
      ExperimentConfig config;
      if (!run_config.empty()) contdo::tools::LoadConfigFile(config, run_config);
      ApplyEnvironment(config);
      run_flags.ApplyTo(config);
      if (!run_algo.empty()) contdo::tools::ApplySetting(config, "algo", run_algo);
      const auto summary = contdo::tools::RunExperiment(config, std::cerr);
      if (summary.exit_code != contdo::tools::kExitError) {
        std::cout << "terminated_by=" << summary.terminated_by
                  << " iterations=" << summary.trace.size()
                  << " value=" << summary.value << '\n'
                  << "wrote " << summary.trace_path << " and "
                  << summary.result_path << '\n';
      }
      return summary.exit_code;
    }

    ExperimentConfig first;
    if (!config_a.empty()) contdo::tools::LoadConfigFile(first, config_a);
    ExperimentConfig second = first;
    second.algorithm =
        first.algorithm == contdo::tools::Algorithm::kDoubleOracle
            ? contdo::tools::Algorithm::kFictitiousPlay
            : contdo::tools::Algorithm::kDoubleOracle;
    if (!config_b.empty()) {
      second = ExperimentConfig{};
      contdo::tools::LoadConfigFile(second, config_b);
    }
    for (ExperimentConfig* c : {&first, &second}) {
      ApplyEnvironment(*c);
      compare_flags.ApplyTo(*c);
    }
    if (!algo_a.empty()) contdo::tools::ApplySetting(first, "algo", algo_a);
    if (!algo_b.empty()) contdo::tools::ApplySetting(second, "algo", algo_b);
    return contdo::tools::RunCompare(first, second, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return contdo::tools::kExitError;
  }
}
