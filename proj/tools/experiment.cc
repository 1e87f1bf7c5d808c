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

#include "experiment.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "contdo/blotto.h"
#include "contdo/double_oracle.h"
#include "contdo/errors.h"
#include "contdo/fictitious_play.h"
#include "contdo/interval_games.h"
#include "contdo/matrix_game.h"

namespace contdo::tools {
namespace {

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string NormalizeKey(std::string key) {
  key = Trim(key);
  while (!key.empty() && key.front() == '-') key.erase(key.begin());
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

double ParseDouble(const std::string& field, const std::string& text) {
  const std::string t = Trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw ConfigError(field, "expected a number, got '" + text + "'");
  }
  if (used != t.size() || !std::isfinite(v)) {
    throw ConfigError(field, "expected a finite number, got '" + text + "'");
  }
  return v;
}

long long ParseInteger(const std::string& field, const std::string& text) {
  const std::string t = Trim(text);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw ConfigError(field, "expected an integer, got '" + text + "'");
  }
  if (used != t.size()) {
    throw ConfigError(field, "expected an integer, got '" + text + "'");
  }
  return v;
}

std::uint64_t ParseSeed(const std::string& field, const std::string& text) {
  const std::string t = Trim(text);
  if (t.empty() || t[0] == '-' || t[0] == '+') {
    throw ConfigError(field, "expected a nonnegative integer, got '" + text + "'");
  }
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(t, &used);
  } catch (const std::exception&) {
    throw ConfigError(field, "expected a nonnegative integer, got '" + text + "'");
  }
  if (used != t.size()) {
    throw ConfigError(field, "expected a nonnegative integer, got '" + text + "'");
  }
  return v;
}

bool ParseBool(const std::string& field, const std::string& text) {
  const std::string t = Trim(text);
  if (t == "1" || t == "true" || t == "yes" || t == "on") return true;
  if (t == "0" || t == "false" || t == "no" || t == "off") return false;
  throw ConfigError(field, "expected true or false, got '" + text + "'");
}

std::vector<double> ParseList(const std::string& field,
                              const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(ParseDouble(field, item));
  if (out.empty()) throw ConfigError(field, "expected a comma-separated list");
  return out;
}

Matrix ParseMatrix(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line, ';')) {
    if (Trim(line).empty()) continue;
    rows.push_back(ParseList("matrix", line));
  }
  if (rows.empty()) throw ConfigError("matrix", "no rows given");
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) {
      throw ConfigError("matrix", "rows have different lengths");
    }
  }
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<double> BlottoWeights(const ExperimentConfig& config) {
  if (!config.a.empty()) return config.a;
  return std::vector<double>(static_cast<std::size_t>(config.n), 1.0);
}

BlottoGame ToBlotto(const ExperimentConfig& config) {
  return BlottoGame{BlottoWeights(config), config.c};
}

struct Setup {
  GameDefinition game;
  std::unique_ptr<BestResponseOracle> oracle1;
  std::unique_ptr<BestResponseOracle> oracle2;
};

GameDefinition GameFor(const ExperimentConfig& config) {
  switch (config.game) {
    case GameKind::kPolynomial:
      return MakePolynomialGame();
    case GameKind::kTownsend:
      return MakeTownsendGame();
    case GameKind::kBlotto:
      return MakeBlottoGame(ToBlotto(config));
    case GameKind::kMatrix:
      return EmbedMatrixGame(ParseMatrix(config.matrix));
  }
  throw ConfigError("game", "unsupported game");
}

Setup MakeSetup(const ExperimentConfig& config) {
  Setup s{GameFor(config), nullptr, nullptr};
  switch (config.game) {
    case GameKind::kPolynomial:
    case GameKind::kTownsend: {
      const bool g1 = config.game == GameKind::kPolynomial;
      const double lipschitz = config.lipschitz.value_or(
          g1 ? kPolynomialLipschitz : kTownsendLipschitz);
      s.oracle1 = std::make_unique<GridOracle>(s.game, Player::kOne,
                                               config.resolution, lipschitz);
      s.oracle2 = std::make_unique<GridOracle>(s.game, Player::kTwo,
                                               config.resolution, lipschitz);
      break;
    }
    case GameKind::kBlotto: {
      const BlottoGame blotto = ToBlotto(config);
      if (config.oracle == BlottoOracle::kMilp) {
        s.oracle1 = std::make_unique<BlottoMilpOracle>(blotto, Player::kOne);
        s.oracle2 = std::make_unique<BlottoMilpOracle>(blotto, Player::kTwo);
      } else {
        s.oracle1 = std::make_unique<BlottoEnumerationOracle>(
            blotto, Player::kOne, config.c);
        s.oracle2 = std::make_unique<BlottoEnumerationOracle>(
            blotto, Player::kTwo, config.c);
      }
      break;
    }
    case GameKind::kMatrix: {
      const Matrix m = ParseMatrix(config.matrix);
      s.oracle1 = std::make_unique<ExhaustiveOracle>(
          s.game, Player::kOne, SimplexVertices(m.rows()));
      s.oracle2 = std::make_unique<ExhaustiveOracle>(
          s.game, Player::kTwo, SimplexVertices(m.cols()));
      break;
    }
  }
  return s;
}

StrategyPoint RandomAllocation(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> exp(1.0);
  std::vector<double> v(n);
  double sum = 0.0;
  for (double& e : v) {
    e = exp(rng);
    sum += e;
  }
  for (double& e : v) e /= sum;
  return StrategyPoint(std::move(v));
}

// Common output of both algorithms.
struct AlgorithmResult {
  Termination terminated_by;
  FiniteMixedStrategy p;
  FiniteMixedStrategy q;
  double value;
};

AlgorithmResult RunAlgorithm(const ExperimentConfig& config,
                             const std::function<void(const TraceRow&)>& sink,
                             std::ostream& log) {
  Setup s = MakeSetup(config);
  InitialSets init = MakeInitialSets(config);
  const bool warn_milp =
      config.game == GameKind::kBlotto && config.oracle == BlottoOracle::kMilp;
  bool warned = false;

  if (config.algorithm == Algorithm::kDoubleOracle) {
    DoubleOracleOptions options;
    options.epsilon = config.epsilon;
    options.max_iters = config.max_iters;
    options.parallel_oracles = config.parallel;
    options.on_iteration = [&](const IterationRecord& rec) {
      const std::size_t k = std::max(rec.size_x, rec.size_y) + 1;
      if (warn_milp && !warned && k * config.n > 200) {
        log << "warning: MILP oracle with k*n = " << k * config.n
            << " > 200 may be slow; consider --oracle enumeration for n = 3\n";
        warned = true;
      }
      sink(TraceRow{rec.index, rec.lower, rec.upper, rec.subgame_value,
                    rec.size_x, rec.size_y, rec.time_s});
    };
    SolveResult r = RunDoubleOracle(s.game, *s.oracle1, *s.oracle2,
                                    std::move(init.x), std::move(init.y),
                                    options);
    return AlgorithmResult{r.terminated_by, std::move(r.p_star),
                           std::move(r.q_star), r.value};
  }

  FictitiousPlayOptions options;
  options.iterations = config.max_iters;
  options.parallel_oracles = config.parallel;
  double last_gap = 0.0;
  options.on_iteration = [&](const FpRecord& rec) {
    const std::size_t k = std::max(rec.support1, rec.support2);
    if (warn_milp && !warned && k * config.n > 200) {
      log << "warning: MILP oracle with k*n = " << k * config.n
          << " > 200 may be slow; consider --oracle enumeration for n = 3\n";
      warned = true;
    }
    last_gap = rec.gap();
    sink(TraceRow{rec.index, rec.lower, rec.upper, rec.value, rec.support1,
                  rec.support2, rec.time_s});
  };
  FpResult r = RunFictitiousPlay(s.game, *s.oracle1, *s.oracle2, init.x[0],
                                 init.y[0], options);
  const Termination t = last_gap <= config.epsilon + kStoppingSlack
                            ? Termination::kGap
                            : Termination::kIterationCap;
  const double value = r.trace.back().value;
  return AlgorithmResult{t, std::move(r.empirical1), std::move(r.empirical2),
                         value};
}

nlohmann::json MixtureJson(const FiniteMixedStrategy& m) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const StrategyPoint& a : m.atoms()) {
    atoms.push_back(std::vector<double>(a.coords().begin(), a.coords().end()));
  }
  return {{"atoms", atoms}, {"weights", m.weights()}};
}

int ExitCodeFor(Termination t) {
  return t == Termination::kGap ? kExitGap : kExitIterationCap;
}

std::string TerminationName(Termination t) {
  switch (t) {
    case Termination::kGap:
      return "gap";
    case Termination::kIterationCap:
      return "iteration-cap";
    case Termination::kStalled:
      return "stalled";
  }
  return "unknown";
}

}  // namespace

GameDefinition MakeGame(const ExperimentConfig& config) {
  return GameFor(config);
}

const char* ToString(GameKind g) {
  switch (g) {
    case GameKind::kPolynomial:
      return "g1-polynomial";
    case GameKind::kTownsend:
      return "g2-townsend";
    case GameKind::kBlotto:
      return "blotto";
    case GameKind::kMatrix:
      return "custom-finite-matrix";
  }
  return "unknown";
}

const char* ToString(Algorithm a) {
  return a == Algorithm::kDoubleOracle ? "double-oracle" : "fictitious-play";
}

const char* ToString(BlottoOracle o) {
  return o == BlottoOracle::kMilp ? "milp" : "enumeration";
}

const char* ToString(BlottoInit i) {
  switch (i) {
    case BlottoInit::kCorners:
      return "corners";
    case BlottoInit::kGrid:
      return "grid";
    case BlottoInit::kRandom:
      return "random";
  }
  return "unknown";
}

void ApplySetting(ExperimentConfig& config, const std::string& raw_key,
                  const std::string& raw_value) {
  const std::string key = NormalizeKey(raw_key);
  const std::string value = Trim(raw_value);
  if (key == "game") {
    if (value == "g1" || value == "g1-polynomial") {
      config.game = GameKind::kPolynomial;
    } else if (value == "g2" || value == "g2-townsend") {
      config.game = GameKind::kTownsend;
    } else if (value == "blotto") {
      config.game = GameKind::kBlotto;
    } else if (value == "matrix" || value == "custom-finite-matrix") {
      config.game = GameKind::kMatrix;
    } else {
      throw ConfigError(key, "unknown game '" + value +
                                 "' (g1, g2, blotto, matrix)");
    }
  } else if (key == "algo" || key == "algorithm") {
    if (value == "double-oracle" || value == "do") {
      config.algorithm = Algorithm::kDoubleOracle;
    } else if (value == "fictitious-play" || value == "fp") {
      config.algorithm = Algorithm::kFictitiousPlay;
    } else {
      throw ConfigError("algo", "unknown algorithm '" + value +
                                    "' (double-oracle, fictitious-play)");
    }
  } else if (key == "epsilon") {
    config.epsilon = ParseDouble(key, value);
  } else if (key == "max-iters") {
    const long long v = ParseInteger(key, value);
    if (v < 1 || v > 100'000'000) {
      throw ConfigError(key, "must lie in [1, 1e8]");
    }
    config.max_iters = static_cast<int>(v);
  } else if (key == "seed") {
    config.seed = ParseSeed(key, value);
  } else if (key == "resolution") {
    config.resolution = ParseDouble(key, value);
  } else if (key == "lipschitz") {
    config.lipschitz = ParseDouble(key, value);
  } else if (key == "oracle") {
    if (value == "milp") {
      config.oracle = BlottoOracle::kMilp;
    } else if (value == "enumeration") {
      config.oracle = BlottoOracle::kEnumeration;
    } else {
      throw ConfigError(key, "unknown oracle '" + value +
                                 "' (milp, enumeration)");
    }
  } else if (key == "n") {
    const long long v = ParseInteger(key, value);
    if (v < 1 || v > 1000) throw ConfigError(key, "must lie in [1, 1000]");
    config.n = static_cast<int>(v);
  } else if (key == "a") {
    config.a = ParseList(key, value);
  } else if (key == "c") {
    config.c = ParseDouble(key, value);
  } else if (key == "init") {
    if (value == "corners") {
      config.init = BlottoInit::kCorners;
    } else if (value == "grid") {
      config.init = BlottoInit::kGrid;
    } else if (value == "random") {
      config.init = BlottoInit::kRandom;
    } else {
      throw ConfigError(key, "unknown init '" + value +
                                 "' (corners, grid, random)");
    }
  } else if (key == "matrix") {
    config.matrix = value;
  } else if (key == "out-dir") {
    if (value.empty()) throw ConfigError(key, "must not be empty");
    config.out_dir = value;
  } else if (key == "record-time") {
    config.record_time = ParseBool(key, value);
  } else if (key == "parallel") {
    config.parallel = ParseBool(key, value);
  } else {
    throw ConfigError(key.empty() ? "<empty>" : key, "unknown setting");
  }
}

void LoadConfigFile(ExperimentConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (Trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config", path + ":" + std::to_string(line_no) +
                                      ": expected key = value");
    }
    ApplySetting(config, line.substr(0, eq), line.substr(eq + 1));
  }
}

void Validate(const ExperimentConfig& config) {
  if (!(config.epsilon >= 0.0)) throw ConfigError("epsilon", "must be >= 0");
  if (config.max_iters < 1) throw ConfigError("max-iters", "must be >= 1");
  if (!(config.resolution > 0.0)) {
    throw ConfigError("resolution", "must be > 0");
  }
  if (config.lipschitz && !(*config.lipschitz >= 0.0)) {
    throw ConfigError("lipschitz", "must be >= 0");
  }
  if (config.game == GameKind::kBlotto) {
    if (config.n < 2) throw ConfigError("n", "blotto needs n >= 2");
    if (!config.a.empty() &&
        config.a.size() != static_cast<std::size_t>(config.n)) {
      throw ConfigError("a", "has " + std::to_string(config.a.size()) +
                                 " weights but n = " +
                                 std::to_string(config.n));
    }
    for (double w : config.a) {
      if (!(w > 0.0)) throw ConfigError("a", "weights must be positive");
    }
    if (!(config.c > 0.0) || config.c > 1.0) {
      throw ConfigError("c", "must lie in (0, 1]");
    }
    if (config.init == BlottoInit::kGrid ||
        config.oracle == BlottoOracle::kEnumeration) {
      try {
        GridDivisions(config.c);
      } catch (const ParameterError& e) {
        throw ConfigError("c", e.what());
      }
    }
  }
  if (config.game == GameKind::kMatrix) ParseMatrix(config.matrix);
}

std::vector<std::pair<std::string, std::string>> Describe(
    const ExperimentConfig& config) {
  std::string a;
  for (double w : config.a) a += (a.empty() ? "" : ",") + FormatDouble(w);
  return {
      {"game", ToString(config.game)},
      {"algo", ToString(config.algorithm)},
      {"epsilon", FormatDouble(config.epsilon)},
      {"max-iters", std::to_string(config.max_iters)},
      {"seed", std::to_string(config.seed)},
      {"resolution", FormatDouble(config.resolution)},
      {"lipschitz",
       config.lipschitz ? FormatDouble(*config.lipschitz) : std::string()},
      {"oracle", ToString(config.oracle)},
      {"n", std::to_string(config.n)},
      {"a", a},
      {"c", FormatDouble(config.c)},
      {"init", ToString(config.init)},
      {"matrix", config.matrix},
      {"out-dir", config.out_dir},
      {"record-time", config.record_time ? "true" : "false"},
      {"parallel", config.parallel ? "true" : "false"},
  };
}

InitialSets MakeInitialSets(const ExperimentConfig& config) {
  std::mt19937_64 rng(config.seed);
  InitialSets out;
  switch (config.game) {
    case GameKind::kPolynomial:
    case GameKind::kTownsend: {
      const GameDefinition game = GameFor(config);
      std::uniform_real_distribution<double> u1(game.space1.lower()[0],
                                                game.space1.upper()[0]);
      std::uniform_real_distribution<double> u2(game.space2.lower()[0],
                                                game.space2.upper()[0]);
      out.x.push_back(StrategyPoint{u1(rng)});
      out.y.push_back(StrategyPoint{u2(rng)});
      break;
    }
    case GameKind::kBlotto: {
      const auto n = static_cast<std::size_t>(config.n);
      switch (config.init) {
        case BlottoInit::kCorners:
          out.x = SimplexVertices(n);
          break;
        case BlottoInit::kGrid:
          out.x = SimplexGrid(n, config.c);
          break;
        case BlottoInit::kRandom:
          out.x.push_back(RandomAllocation(rng, n));
          out.y.push_back(RandomAllocation(rng, n));
          return out;
      }
      out.y = out.x;
      break;
    }
    case GameKind::kMatrix: {
      const Matrix m = ParseMatrix(config.matrix);
      const auto rows = SimplexVertices(m.rows());
      const auto cols = SimplexVertices(m.cols());
      std::uniform_int_distribution<std::size_t> pick_row(0, rows.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_col(0, cols.size() - 1);
      out.x.push_back(rows[pick_row(rng)]);
      out.y.push_back(cols[pick_col(rng)]);
      break;
    }
  }
  return out;
}

std::string FormatTraceRow(const TraceRow& row) {
  return std::to_string(row.iter) + "," + FormatDouble(row.lower) + "," +
         FormatDouble(row.upper) + "," + FormatDouble(row.upper - row.lower) +
         "," + FormatDouble(row.subgame_value) + "," +
         std::to_string(row.size_x) + "," + std::to_string(row.size_y) + "," +
         FormatDouble(row.time_s);
}

RunSummary RunExperiment(const ExperimentConfig& config, std::ostream& log) {
  RunSummary summary;
  try {
    Validate(config);
    const std::filesystem::path dir(config.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      throw ConfigError("out-dir", "cannot create '" + config.out_dir +
                                       "': " + ec.message());
    }
    summary.trace_path = (dir / "trace.csv").string();
    summary.result_path = (dir / "result.json").string();
    std::ofstream trace(summary.trace_path, std::ios::trunc);
    if (!trace) {
      throw ConfigError("out-dir", "cannot write '" + summary.trace_path + "'");
    }
    trace << kTraceHeader << '\n' << std::flush;

    AlgorithmResult result = RunAlgorithm(
        config,
        [&](const TraceRow& r) {
          TraceRow row = r;
          if (!config.record_time) row.time_s = 0.0;
          summary.trace.push_back(row);
          trace << FormatTraceRow(row) << '\n' << std::flush;
        },
        log);

    const TraceRow& last = summary.trace.back();
    summary.terminated_by = TerminationName(result.terminated_by);
    summary.exit_code = ExitCodeFor(result.terminated_by);
    summary.value = result.value;

    nlohmann::json config_echo = nlohmann::json::object();
    for (const auto& [key, value] : Describe(config)) config_echo[key] = value;
    nlohmann::json doc = {
        {"game", ToString(config.game)},
        {"algorithm", ToString(config.algorithm)},
        {"seed", config.seed},
        {"terminated_by", summary.terminated_by},
        {"iterations", summary.trace.size()},
        {"lower", last.lower},
        {"upper", last.upper},
        {"gap", last.upper - last.lower},
        {"value", result.value},
        {"p", MixtureJson(result.p)},
        {"q", MixtureJson(result.q)},
        {"config", config_echo},
    };
    summary.p = std::move(result.p);
    summary.q = std::move(result.q);
    std::ofstream out(summary.result_path, std::ios::trunc);
    if (!out) {
      throw ConfigError("out-dir", "cannot write '" + summary.result_path +
                                       "'");
    }
    out << doc.dump(2) << '\n';
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    summary.exit_code = kExitError;
  }
  return summary;
}

int RunCompare(const ExperimentConfig& first, const ExperimentConfig& second,
               std::ostream& log) {
  try {
    Validate(first);
    Validate(second);
    if (first.algorithm == second.algorithm) {
      throw ConfigError("algo", std::string("both runs use ") +
                                    ToString(first.algorithm) +
                                    "; compare needs one of each");
    }
    const auto a = Describe(first);
    const auto b = Describe(second);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string& key = a[i].first;
      if (key == "algo" || key == "out-dir" || key == "record-time" ||
          key == "parallel") {
        continue;
      }
      if (a[i].second != b[i].second) {
        throw ConfigError(key, "differs between the two runs ('" +
                                   a[i].second + "' vs '" + b[i].second +
                                   "')");
      }
    }
    const ExperimentConfig& do_config =
        first.algorithm == Algorithm::kDoubleOracle ? first : second;
    const ExperimentConfig& fp_config =
        first.algorithm == Algorithm::kDoubleOracle ? second : first;

    std::vector<TraceRow> do_rows;
    std::vector<TraceRow> fp_rows;
    RunAlgorithm(do_config, [&](const TraceRow& r) { do_rows.push_back(r); },
                 log);
    RunAlgorithm(fp_config, [&](const TraceRow& r) { fp_rows.push_back(r); },
                 log);

    const std::filesystem::path dir(first.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      throw ConfigError("out-dir", "cannot create '" + first.out_dir +
                                       "': " + ec.message());
    }
    const std::string path = (dir / "compare.csv").string();
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ConfigError("out-dir", "cannot write '" + path + "'");
    out << kCompareHeader << '\n';
    const std::size_t rows = std::max(do_rows.size(), fp_rows.size());
    for (std::size_t i = 0; i < rows; ++i) {
      const TraceRow& d = do_rows[std::min(i, do_rows.size() - 1)];
      const TraceRow& f = fp_rows[std::min(i, fp_rows.size() - 1)];
      out << i + 1 << ',' << FormatDouble(d.lower) << ','
          << FormatDouble(d.upper) << ',' << FormatDouble(f.lower) << ','
          << FormatDouble(f.upper) << '\n';
    }
    log << "wrote " << path << " (" << rows << " rows)\n";
    return kExitGap;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace contdo::tools
