#ifndef INCPATH_HARNESS_HPP
#define INCPATH_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "incpath/cyclestats.hpp"
#include "incpath/kgreedy.hpp"
#include "incpath/ordering.hpp"

namespace incpath {

std::string_view toolkit_version() noexcept;

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // unbiased; 0 for a single value
  double ci_low = 0.0;  // mean -/+ 1.96 stddev / sqrt(count)
  double ci_high = 0.0;
};

// Throws std::invalid_argument on empty input.
Summary summarize(std::span<const double> values);

nlohmann::json to_json(const Summary& summary);

inline constexpr std::string_view thread_env_var = "INCPATH_THREADS";

// `requested` if nonzero, else INCPATH_THREADS if set to a positive
// integer, else 1.
std::size_t resolve_threads(std::size_t requested);

struct ExperimentConfig {
  std::string command;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  LabelModel model = LabelModel::permutation;
  KGreedyMode mode = KGreedyMode::exhaust;
  Precision precision = Precision::rational;
  std::size_t c_max = 80;
  bool full_enumeration = false;  // census: every ordered pair instead of A = identity
  std::size_t threads = 0;
  bool emit_raw = false;
  bool record_timing = true;
};

nlohmann::json to_json(const ExperimentConfig& config);

struct Report {
  ExperimentConfig config;
  std::vector<double> raw;         // one value per trial, in trial order
  std::optional<Summary> summary;  // summary of raw
  nlohmann::json results = nlohmann::json::object();
  std::string csv;                 // tabular export, empty when the command has none
  double duration_seconds = 0.0;
};

// Raw values appear only with config.emit_raw, the duration only with
// config.record_timing.
nlohmann::json to_json(const Report& report);

const std::vector<std::string_view>& command_names();

// Runs one experiment. Trial t of a randomized command uses the ordering
// random_ordering(n, trial_seed(seed, t), model), so results do not depend
// on the thread count. Throws std::invalid_argument for unknown commands
// or bad parameters and capacity_error when a module cap is exceeded.
Report run(const ExperimentConfig& config);

}  // namespace incpath

#endif  // INCPATH_HARNESS_HPP
