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

// Experiment runner behind the contdo command-line tool.
//
// A run writes two files into the output directory:
//
//   trace.csv    iter,lower,upper,gap,subgame_value,size_x,size_y,time_s
//   result.json  final mixtures, bounds, termination reason, config echo
//
// and `compare` writes compare.csv with iter,do_lower,do_upper,fp_lower,
// fp_upper.

#ifndef CONTDO_TOOLS_EXPERIMENT_H_
#define CONTDO_TOOLS_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "contdo/game.h"

namespace contdo::tools {

inline constexpr char kTraceHeader[] =
    "iter,lower,upper,gap,subgame_value,size_x,size_y,time_s";
inline constexpr char kCompareHeader[] =
    "iter,do_lower,do_upper,fp_lower,fp_upper";
inline constexpr char kOutDirEnv[] = "CONTDO_OUT_DIR";

// Exit statuses of the tool.
inline constexpr int kExitGap = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitIterationCap = 2;

// Invalid configuration; field() names the offending setting.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class GameKind { kPolynomial, kTownsend, kBlotto, kMatrix };
enum class Algorithm { kDoubleOracle, kFictitiousPlay };
enum class BlottoOracle { kMilp, kEnumeration };
enum class BlottoInit { kCorners, kGrid, kRandom };

const char* ToString(GameKind g);
const char* ToString(Algorithm a);
const char* ToString(BlottoOracle o);
const char* ToString(BlottoInit i);

struct ExperimentConfig {
  GameKind game = GameKind::kPolynomial;
  Algorithm algorithm = Algorithm::kDoubleOracle;
  double epsilon = 1e-3;
  int max_iters = 1000;
  std::uint64_t seed = 0;

  // Interval games.
  double resolution = 1e-4;
  std::optional<double> lipschitz;  // defaults to the game's own bound

  // Blotto.
  BlottoOracle oracle = BlottoOracle::kMilp;
  int n = 3;
  std::vector<double> a;  // empty: all ones
  double c = 0.0625;
  BlottoInit init = BlottoInit::kCorners;

  // Custom matrix game, rows separated by ';', entries by ','.
  std::string matrix;

  std::string out_dir = "out";
  bool record_time = false;
  bool parallel = true;
};

// Sets one field from its textual form. Keys use the flag spelling without
// leading dashes; '_' and '-' are interchangeable. Throws ConfigError.
void ApplySetting(ExperimentConfig& config, const std::string& key,
                  const std::string& value);

// Reads a flat key=value file; blank lines and '#' comments are skipped.
void LoadConfigFile(ExperimentConfig& config, const std::string& path);

// Throws ConfigError unless the config is runnable.
void Validate(const ExperimentConfig& config);

// Every field as key=value lines, in ApplySetting syntax.
std::vector<std::pair<std::string, std::string>> Describe(
    const ExperimentConfig& config);

// The game a config describes.
GameDefinition MakeGame(const ExperimentConfig& config);

// Initial strategy sets drawn from the seed.
struct InitialSets {
  std::vector<StrategyPoint> x;
  std::vector<StrategyPoint> y;
};
InitialSets MakeInitialSets(const ExperimentConfig& config);

// One trace row, shared by both algorithms.
struct TraceRow {
  int iter = 0;
  double lower = 0.0;
  double upper = 0.0;
  double subgame_value = 0.0;
  std::size_t size_x = 0;
  std::size_t size_y = 0;
  double time_s = 0.0;
};

std::string FormatTraceRow(const TraceRow& row);

struct RunSummary {
  int exit_code = kExitError;
  std::string terminated_by;
  std::vector<TraceRow> trace;
  std::optional<FiniteMixedStrategy> p;
  std::optional<FiniteMixedStrategy> q;
  double value = 0.0;
  std::string trace_path;
  std::string result_path;
};

// Runs one experiment, writing trace.csv and result.json under out_dir.
// Errors after the trace is opened still leave the rows written so far.
// Diagnostics go to log.
RunSummary RunExperiment(const ExperimentConfig& config, std::ostream& log);

// Runs a double oracle and a fictitious play config that agree on every
// other setting and writes out_dir/compare.csv. Returns the exit status.
int RunCompare(const ExperimentConfig& first, const ExperimentConfig& second,
               std::ostream& log);

}  // namespace contdo::tools

#endif  // CONTDO_TOOLS_EXPERIMENT_H_
