#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "incpath/errors.hpp"
#include "incpath/harness.hpp"
#include "incpath/rng.hpp"
#include "incpath/ordering.hpp"

namespace {

constexpr int exit_invalid = 2;
constexpr int exit_capacity = 3;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Increasing paths in edge-ordered complete graphs: simulations and exact computations"};
  app.set_version_flag("--version", std::string(incpath::toolkit_version()));

  incpath::ExperimentConfig config;
  std::string model = "perm";
  std::string mode = "exhaust";
  std::string precision = "rational";
  std::string out_path;
  std::string csv_path;
  std::string ordering_path;
  bool no_timing = false;

  std::vector<std::string> commands(incpath::command_names().begin(), incpath::command_names().end());
  app.add_option("command", config.command, "Experiment to run")->required()->check(CLI::IsMember(commands));
  app.add_option("--n", config.n, "Number of vertices");
  app.add_option("--k", config.k, "Search-tree size, or largest cycle length for alpha-table and cycles-mc");
  app.add_option("--trials", config.trials, "Number of independent trials")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Master seed");
  app.add_option("--model", model, "Label model")->check(CLI::IsMember({"perm", "real"}));
  app.add_option("--mode", mode, "k-greedy termination mode")->check(CLI::IsMember({"strict", "exhaust"}));
  app.add_option("--precision", precision, "Arithmetic for cycle statistics")
      ->check(CLI::IsMember({"rational", "float"}));
  app.add_option("--c-max", config.c_max, "Truncation point for constant-c");
  app.add_flag("--full", config.full_enumeration, "census: enumerate every ordered pair");
  app.add_option("--threads", config.threads,
                 "Worker threads (default: $" + std::string(incpath::thread_env_var) + " or 1)");
  app.add_flag("--emit-raw", config.emit_raw, "Include per-trial values in the report");
  app.add_flag("--no-timing", no_timing, "Omit the wall-clock duration so reports compare byte for byte");
  app.add_option("--out", out_path, "Write the JSON report here instead of stdout");
  app.add_option("--csv", csv_path, "Write the command's table (alpha rows, census, k-greedy trace) here");
  app.add_option("--write-ordering", ordering_path, "Write the ordering of trial 0 here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_invalid;
  }

  try {
    config.model = incpath::parse_label_model(model);
    config.mode = incpath::parse_kgreedy_mode(mode);
    config.precision = incpath::parse_precision(precision);
    config.record_timing = !no_timing;

    const incpath::Report report = incpath::run(config);
    const std::string json = incpath::to_json(report).dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << json;
    } else {
      write_file(out_path, json);
    }
    if (!csv_path.empty()) write_file(csv_path, report.csv);
    if (!ordering_path.empty()) {
      std::ofstream out(ordering_path);
      if (!out) throw std::invalid_argument("cannot open '" + ordering_path + "' for writing");
      incpath::write_ordering(out, incpath::random_ordering(config.n, incpath::trial_seed(config.seed, 0), config.model));
    }
  } catch (const incpath::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return exit_capacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
