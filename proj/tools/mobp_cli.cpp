// Experiment driver: generate or load an instance, sweep every requested
// (heuristic, order) cell and report the archives.
//
// Exit codes: 0 success, 1 usage error, 2 invalid instance.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mobp/mobp.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kInstanceError = 2;

bool write_file(const std::filesystem::path& path, const auto& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  writer(out);
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biobjective bin packing: heterogeneousness-controlled Best-Fit / Random-Fit sweeps"};

  std::optional<std::size_t> generate_n;
  std::string instance_path;
  std::uint64_t seed = 0;
  std::string heuristic = "all";
  std::string order = "all";
  std::string step_text = "0.1";
  int reps = 100;
  std::string out_dir;
  unsigned threads = 1;
  bool all = false;

  auto* gen = app.add_option("--generate", generate_n, "Generate a benchmark instance with N items (multiple of 5)");
  auto* inst = app.add_option("--instance", instance_path, "Read the instance from PATH");
  gen->excludes(inst);
  inst->excludes(gen);
  app.add_option("--seed", seed, "Seed for instance generation and the sweeps");
  app.add_option("--heuristic", heuristic, "best-fit | random-fit | all")
      ->check(CLI::IsMember({"best-fit", "random-fit", "all"}));
  app.add_option("--order", order, "decreasing | increasing | random | all")
      ->check(CLI::IsMember({"decreasing", "increasing", "random", "all"}));
  app.add_flag("--all", all, "Shorthand for --heuristic all --order all");
  app.add_option("--step", step_text, "Level increment s, decimal or p/q (default 0.1)");
  app.add_option("--reps", reps, "Solutions per level (default 100)");
  app.add_option("--out", out_dir, "Write results.csv, timings.csv (and instance.txt) into DIR");
  app.add_option("--threads", threads, "Worker threads per sweep (results do not depend on it)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (!generate_n && instance_path.empty()) {
    std::cerr << "error: one of --generate or --instance is required\n";
    return kUsageError;
  }

  mobp::ExperimentConfig config;
  config.seed = seed;
  config.solutions_per_level = reps;
  config.threads = threads;
  try {
    config.step = mobp::Rational::parse(step_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: --step: " << e.what() << '\n';
    return kUsageError;
  }
  if (config.step <= mobp::Rational(0)) {
    std::cerr << "error: --step must be positive\n";
    return kUsageError;
  }
  if (config.step > mobp::Rational(1)) {
    std::cerr << "warning: --step " << step_text << " exceeds 1; integer levels will be skipped\n";
  }
  if (reps < 1) {
    std::cerr << "error: --reps must be at least 1\n";
    return kUsageError;
  }
  if (!all && heuristic != "all") config.heuristics = {*mobp::parse_heuristic(heuristic)};
  if (!all && order != "all") config.orderings = {*mobp::parse_ordering(order)};

  std::optional<mobp::Instance> instance;
  try {
    instance = generate_n ? mobp::generate(*generate_n, seed) : mobp::read_instance_file(instance_path);
  } catch (const mobp::InstanceError& e) {
    std::cerr << "error: invalid instance: " << e.what() << '\n';
    return kInstanceError;
  }

  const auto cells = mobp::run_cells(*instance, config);

  if (out_dir.empty()) {
    mobp::write_results_csv(std::cout, cells);
    for (const auto& cell : cells) {
      std::cerr << mobp::to_string(cell.heuristic) << '/' << mobp::to_string(cell.ordering) << ": "
                << cell.seconds << " s\n";
    }
    return 0;
  }

  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  bool ok = !ec;
  ok = ok && write_file(dir / "results.csv", [&](std::ostream& os) { mobp::write_results_csv(os, cells); });
  ok = ok && write_file(dir / "timings.csv", [&](std::ostream& os) { mobp::write_timings_csv(os, cells); });
  if (generate_n) {
    ok = ok && write_file(dir / "instance.txt", [&](std::ostream& os) { mobp::write_instance(*instance, os); });
  }
  if (!ok) {
    std::cerr << "error: cannot write reports to '" << out_dir << "'\n";
    return kUsageError;
  }

  std::cout << "n = " << instance->size() << ", c = " << instance->capacity()
            << ", lower bound = " << instance->trivial_lower_bound()
            << ", attributes = " << instance->attribute_count() << '\n';
  mobp::write_table(std::cout, cells);
  return 0;
}
