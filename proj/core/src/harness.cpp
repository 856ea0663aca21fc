#include "incpath/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "incpath/errors.hpp"
#include "incpath/exact.hpp"
#include "incpath/rng.hpp"
#include "incpath/secondmoment.hpp"
#include "incpath/walks.hpp"

namespace incpath {

std::string_view toolkit_version() noexcept { return INCPATH_VERSION; }

Summary summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: empty input");
  Summary s;
  s.count = values.size();
  // Sorting first makes the floating-point sums independent of input order.
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (double v : sorted) total += v;
  s.mean = total / static_cast<double>(s.count);
  if (s.count > 1) {
    double squares = 0.0;
    for (double v : sorted) squares += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(squares / static_cast<double>(s.count - 1));
  }
  const double half = 1.96 * s.stddev / std::sqrt(static_cast<double>(s.count));
  s.ci_low = s.mean - half;
  s.ci_high = s.mean + half;
  return s;
}

nlohmann::json to_json(const Summary& s) {
  return {{"count", s.count}, {"mean", s.mean}, {"stddev", s.stddev}, {"ci95", {s.ci_low, s.ci_high}}};
}

std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv(std::string(thread_env_var).c_str())) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return 1;
}

nlohmann::json to_json(const ExperimentConfig& c) {
  return {{"command", c.command},
          {"n", c.n},
          {"k", c.k},
          {"trials", c.trials},
          {"seed", c.seed},
          {"model", to_string(c.model)},
          {"mode", to_string(c.mode)},
          {"precision", to_string(c.precision)},
          {"c_max", c.c_max},
          {"full_enumeration", c.full_enumeration},
          {"emit_raw", c.emit_raw}};
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json out{{"version", toolkit_version()},
                     {"prng", rng_name},
                     {"seed_mixer", seed_mixer_name},
                     {"config", to_json(r.config)},
                     {"results", r.results}};
  if (r.summary) out["summary"] = to_json(*r.summary);
  if (r.config.emit_raw && !r.raw.empty()) out["raw"] = r.raw;
  if (r.config.record_timing) out["duration_seconds"] = r.duration_seconds;
  return out;
}

const std::vector<std::string_view>& command_names() {
  static const std::vector<std::string_view> names{"greedy-sim", "kgreedy-sim", "walks-demo", "alpha-table",
                                                   "cycles-mc",  "hamprob",     "moments",    "census",
                                                   "bounds",     "constant-c",  "worstcase"};
  return names;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// Calls trial(t) for t < trials on a pool of workers; slot t of the result
// belongs to trial t. The first exception stops the pool and is rethrown.
template <class T, class F>
std::vector<T> run_trials(std::uint64_t trials, std::size_t threads, F&& trial) {
  std::vector<T> out(trials);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::uint64_t t = next.fetch_add(1);
      if (t >= trials) return;
      try {
        out[t] = trial(t);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(trials);
        return;
      }
    }
  };
  const std::size_t workers = static_cast<std::size_t>(std::min<std::uint64_t>(threads, trials));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

EdgeOrdering trial_ordering(const ExperimentConfig& c, std::uint64_t t) {
  return random_ordering(c.n, trial_seed(c.seed, t), c.model);
}

void require_trials(const ExperimentConfig& c, std::size_t min_n) {
  require(c.n >= min_n, c.command + ": --n must be at least " + std::to_string(min_n));
  require(c.trials >= 1, c.command + ": --trials must be at least 1");
}

void set_values(Report& report, std::vector<double> values) {
  report.summary = summarize(values);
  report.raw = std::move(values);
}

std::string high_precision_string(const HighPrecision& x, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << x;
  return out.str();
}

void greedy_sim(const ExperimentConfig& c, std::size_t threads, Report& report) {
  require_trials(c, 2);
  auto values = run_trials<double>(c.trials, threads, [&](std::uint64_t t) {
    return static_cast<double>(greedy_path(trial_ordering(c, t), 0).length()) / static_cast<double>(c.n);
  });
  set_values(report, std::move(values));
  report.results = {{"quantity", "greedy path length / n"}, {"target", 1.0 - std::exp(-1.0)}};
}

struct KGreedyTrial {
  double fraction = 0.0;
  KGreedyTrace trace;
};

void kgreedy_sim(const ExperimentConfig& c, std::size_t threads, Report& report) {
  require_trials(c, 2);
  require(c.k >= 1, "kgreedy-sim: --k must be at least 1");
  auto trials = run_trials<KGreedyTrial>(c.trials, threads, [&](std::uint64_t t) {
    auto result = k_greedy_path(trial_ordering(c, t), 0, c.k, c.mode);
    return KGreedyTrial{static_cast<double>(result.path.length()) / static_cast<double>(c.n),
                        std::move(result.trace)};
  });

  std::vector<double> values;
  std::vector<std::uint64_t> retained(c.k + 1, 0);
  std::uint64_t extensions = 0;
  double waiting = 0.0;
  for (const auto& trial : trials) {
    values.push_back(trial.fraction);
    for (const auto& r : trial.trace.extensions) {
      ++retained[r.retained_subtree_size];
      waiting += r.waiting_time;
      ++extensions;
    }
  }
  set_values(report, std::move(values));
  report.results = {{"quantity", "k-greedy path length / n"},
                    {"retained_subtree_counts", retained},
                    {"full_tree_extensions", extensions},
                    {"mean_waiting_time", extensions ? waiting / static_cast<double>(extensions) : 0.0}};
  if (c.k <= float_cycle_cap) {
    const auto a = alpha(c.k);
    report.results["alpha_k"] = a.value;
    report.results["predicted_fraction"] = 1.0 - std::exp(-1.0 / a.value);
    report.results["longest_cycle_pmf"] = longest_cycle_distribution(
        c.k, c.k <= rational_cycle_cap ? Precision::rational : Precision::floating).pmf;
  }
  std::ostringstream csv;
  write_trace_csv(csv, trials.front().trace);
  report.csv = csv.str();
}

struct WalkTrial {
  std::size_t total_steps = 0;
  std::size_t max_walk = 0;
  std::size_t max_refusal_path = 0;
  std::size_t greedy_length = 0;
  std::size_t longest_walk = 0;
};

WalkTrial walk_statistics(const EdgeOrdering& ordering) {
  const auto walks = pedestrian_walks(ordering);
  const auto paths = refusal_paths(ordering);
  std::size_t greedy = 0;
  for (Vertex v = 0; v < ordering.n(); ++v) greedy = std::max(greedy, greedy_path(ordering, v).length());
  return WalkTrial{walks.total_steps(), walks.max_length(), paths.max_length(), greedy,
                   longest_increasing_walk_len(ordering)};
}

nlohmann::json to_json(const WalkTrial& w) {
  return {{"total_steps", w.total_steps},
          {"max_walk", w.max_walk},
          {"max_refusal_path", w.max_refusal_path},
          {"max_greedy_path", w.greedy_length},
          {"longest_walk", w.longest_walk}};
}

std::size_t ceil_sqrt(std::size_t x) {
  std::size_t r = static_cast<std::size_t>(std::sqrt(static_cast<double>(x)));
  while (r * r < x) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= x) --r;
  return r;
}

nlohmann::json guarantees(std::size_t n, const std::vector<WalkTrial>& trials) {
  bool steps_ok = true;
  std::size_t min_walk = SIZE_MAX;
  std::size_t min_refusal = SIZE_MAX;
  for (const auto& w : trials) {
    steps_ok = steps_ok && w.total_steps == n * (n - 1);
    min_walk = std::min(min_walk, w.max_walk);
    min_refusal = std::min(min_refusal, w.max_refusal_path);
  }
  return {{"total_steps_equal_n_n_minus_1", steps_ok},
          {"min_max_walk", min_walk},
          {"walk_guarantee", n - 1},
          {"min_max_refusal_path", min_refusal},
          {"refusal_guarantee", ceil_sqrt(n - 1)}};
}

void walks_demo(const ExperimentConfig& c, std::size_t threads, Report& report) {
  require_trials(c, 2);
  auto trials = run_trials<WalkTrial>(c.trials, threads,
                                      [&](std::uint64_t t) { return walk_statistics(trial_ordering(c, t)); });
  std::vector<double> values;
  for (const auto& w : trials) values.push_back(static_cast<double>(w.max_refusal_path));
  set_values(report, std::move(values));
  report.results = guarantees(c.n, trials);
  report.results["quantity"] = "longest refusal path";
  report.results["first_trial"] = to_json(trials.front());
  if (c.model == LabelModel::real) {
    const auto ordering = trial_ordering(c, 0);
    const auto path = greedy_path(ordering, 0);
    const auto js = jumps(ordering, path.as_walk());
    report.results["first_trial_greedy_jump_total"] = js.total();
  }
}

void worstcase(const ExperimentConfig& c, Report& report) {
  require(c.n >= 2 && c.n % 2 == 0, "worstcase: --n must be even and at least 2");
  const auto ordering = matching_ordering(c.n);
  const WalkTrial w = walk_statistics(ordering);
  report.results = guarantees(c.n, {w});
  report.results["ordering"] = "round-robin 1-factorization";
  report.results["statistics"] = to_json(w);
  if (c.n <= 16) report.results["longest_increasing_path"] = longest_increasing_path_len(ordering);
}

void alpha_table_command(const ExperimentConfig& c, Report& report) {
  require(c.k >= 1, "alpha-table: --k must be at least 1");
  const auto rows = alpha_table(c.k, c.precision);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"k", r.k}, {"alpha", r.alpha}, {"predicted_fraction", r.predicted_fraction},
                       {"mean_ratio", r.mean_ratio}};
    if (r.exact_alpha) row["alpha_exact"] = rational_to_json(*r.exact_alpha);
    out.push_back(std::move(row));
  }
  report.results = {{"rows", std::move(out)}, {"alpha_k_max", rows.back().alpha}};
  if (rows.size() >= 2) report.results["richardson_alpha"] = richardson_alpha_estimate(rows);
  std::ostringstream csv;
  write_alpha_csv(csv, rows);
  report.csv = csv.str();
}

void cycles_mc(const ExperimentConfig& c, std::size_t threads, Report& report) {
  require(c.k >= 1, "cycles-mc: --k must be at least 1");
  require(c.trials >= 1, "cycles-mc: --trials must be at least 1");
  auto longest = run_trials<std::size_t>(c.trials, threads, [&](std::uint64_t t) {
    const auto sample = sample_longest_cycle(c.k, 1, trial_seed(c.seed, t));
    return static_cast<std::size_t>(std::find(sample.counts.begin(), sample.counts.end(), 1) - sample.counts.begin());
  });
  std::vector<std::uint64_t> counts(c.k + 1, 0);
  std::vector<double> values;
  for (std::size_t s : longest) {
    ++counts[s];
    values.push_back(static_cast<double>(s) / static_cast<double>(c.k));
  }
  set_values(report, std::move(values));
  report.results = {{"quantity", "L_k / k"}, {"counts", counts}};
  if (c.k <= float_cycle_cap) {
    const auto table =
        longest_cycle_distribution(c.k, c.k <= rational_cycle_cap ? Precision::rational : Precision::floating);
    double worst_z = 0.0;
    const double n = static_cast<double>(c.trials);
    for (std::size_t s = 1; s <= c.k; ++s) {
      const double p = table.pmf[s];
      const double sd = std::sqrt(n * p * (1.0 - p));
      if (sd > 0.0) worst_z = std::max(worst_z, std::abs(static_cast<double>(counts[s]) - n * p) / sd);
    }
    report.results["exact_pmf"] = table.pmf;
    report.results["max_abs_z"] = worst_z;
  }
}

struct HamTrial {
  double exists = 0.0;
  double count = 0.0;
};

void hamprob(const ExperimentConfig& c, std::size_t threads, Report& report) {
  require_trials(c, 2);
  if (c.n > default_exact_cap) {
    throw capacity_error("hamprob: n=" + std::to_string(c.n) + " exceeds the exact oracle cap of " +
                         std::to_string(default_exact_cap));
  }
  auto trials = run_trials<HamTrial>(c.trials, threads, [&](std::uint64_t t) {
    const auto ordering = trial_ordering(c, t);
    const bool exists = has_increasing_ham_path(ordering);
    const std::uint64_t count = count_increasing_ham_paths(ordering);
    if (exists != (count > 0)) throw std::logic_error("hamprob: existence and counting oracles disagree");
    return HamTrial{exists ? 1.0 : 0.0, static_cast<double>(count)};
  });
  std::vector<double> indicators, counts;
  for (const auto& t : trials) {
    indicators.push_back(t.exists);
    counts.push_back(t.count);
  }
  set_values(report, std::move(indicators));
  report.results = {{"quantity", "indicator of an increasing Hamiltonian path"},
                    {"one_over_e", std::exp(-1.0)},
                    {"count_summary", to_json(summarize(counts))},
                    {"expected_count", c.n}};
}

void moments(const ExperimentConfig& c, Report& report) {
  const auto m = exact_moments(c.n);
  report.results = to_json(m);
  std::ostringstream csv;
  write_census_csv(csv, m.census);
  report.csv = csv.str();
}

void census(const ExperimentConfig& c, Report& report) {
  const auto method = c.full_enumeration ? CensusMethod::full_enumeration : CensusMethod::symmetry_reduced;
  const auto table = profile_census(c.n, method);
  MomentReport m;
  m.n = c.n;
  m.first_moment = Rational(static_cast<long>(c.n));
  m.census = table;
  Integer pairs = 0;
  for (const auto& [sig, entry] : table) {
    pairs += entry.pair_count;
    m.second_moment += entry.mass;
  }
  report.results = to_json(m);
  report.results["method"] = c.full_enumeration ? "full_enumeration" : "symmetry_reduced";
  report.results["total_pairs"] = pairs.str();
  std::ostringstream csv;
  write_census_csv(csv, table);
  report.csv = csv.str();
}

void bounds(const ExperimentConfig& c, Report& report) {
  const auto s = s_sum_bounds(c.n);
  const double n2 = static_cast<double>(c.n) * static_cast<double>(c.n);
  const double s1 = static_cast<double>(s.s1_value);
  const double s2 = to_double(s.s2_bound);
  const double s3 = to_double(s.s3_bound);
  report.results = {{"small_c_max", s.small_c_max},
                    {"middle_c_max", s.middle_c_max},
                    {"s1_value", s1},
                    {"s1_without_poisson", to_double(s.s1_without_poisson)},
                    {"s2_bound", s2},
                    {"s3_bound", s3},
                    {"s1_over_e_n2", s1 / (std::exp(1.0) * n2)},
                    {"s2_over_n2", s2 / n2},
                    {"s3_over_n2", s3 / n2}};
}

void constant_c(const ExperimentConfig& c, Report& report) {
  const HighPrecision value = constant_c_partial(c.c_max);
  const HighPrecision e3 = boost::multiprecision::exp(HighPrecision(3));
  report.results = {{"c_max", c.c_max},
                    {"partial_sum", high_precision_string(value, 40)},
                    {"e_cubed", high_precision_string(e3, 40)},
                    {"abs_difference", static_cast<double>(abs(e3 - value))}};
}

}  // namespace

Report run(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.config = config;
  const std::size_t threads = resolve_threads(config.threads);
  const std::string& cmd = config.command;

  if (cmd == "greedy-sim") {
    greedy_sim(config, threads, report);
  } else if (cmd == "kgreedy-sim") {
    kgreedy_sim(config, threads, report);
  } else if (cmd == "walks-demo") {
    walks_demo(config, threads, report);
  } else if (cmd == "worstcase") {
    worstcase(config, report);
  } else if (cmd == "alpha-table") {
    alpha_table_command(config, report);
  } else if (cmd == "cycles-mc") {
    cycles_mc(config, threads, report);
  } else if (cmd == "hamprob") {
    hamprob(config, threads, report);
  } else if (cmd == "moments") {
    moments(config, report);
  } else if (cmd == "census") {
    census(config, report);
  } else if (cmd == "bounds") {
    bounds(config, report);
  } else if (cmd == "constant-c") {
    constant_c(config, report);
  } else {
    throw std::invalid_argument("unknown command '" + cmd + "'");
  }

  report.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace incpath
