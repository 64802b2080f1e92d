// Command-line front end: budget-sweep experiments, Leja node export,
// surrogate evaluation and mean quadrature.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lejasparse/experiment.hpp"
#include "lejasparse/leja.hpp"
#include "lejasparse/postproc.hpp"
#include "lejasparse/sparse.hpp"

namespace {

using namespace lejasparse;

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
            std::optional<std::string> output,
            std::optional<std::uint64_t> reference_size,
            std::optional<std::string> surrogate_dir) {
  ExperimentConfig config = load_config(config_path);
  if (seed) config.seed = *seed;
  if (output) config.output = *output;
  if (reference_size) {
    config.reference.size = *reference_size;
    config.reference.value.reset();
  }
  if (surrogate_dir) config.surrogate_dir = *surrogate_dir;

  const std::vector<ResultRow> rows = run_experiment(config);
  write_result_csv(config.output, rows);
  std::cerr << "wrote " << rows.size() << " rows to " << config.output << "\n";
  for (const ResultRow& row : rows)
    if (row.status != "ok") {
      std::cerr << "budget " << row.budget << ": " << row.status << "\n";
      return 1;
    }
  return 0;
}

int cmd_leja(const std::string& dist_text, const std::string& kind,
             std::size_t count, double y0, bool y0_set,
             const std::string& output) {
  if (count == 0) throw std::invalid_argument("leja: count must be >= 1");

  LejaSequence seq = [&] {
    if (kind == "unweighted") return LejaSequence::unweighted(y0_set ? y0 : 1.0);
    if (kind == "symmetric") return LejaSequence::symmetric();
    if (kind == "weighted") {
      if (dist_text.empty())
        throw std::invalid_argument("leja: weighted sequences need --dist");
      const Distribution dist = parse_distribution_text(dist_text);
      return y0_set ? LejaSequence::weighted(dist, y0)
                    : LejaSequence::weighted(dist);
    }
    throw std::invalid_argument("leja: kind must be weighted, unweighted or symmetric");
  }();
  seq.extend_to(count);

  std::ofstream out(output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + output);
  out << "index,node,objective\n";
  for (std::size_t j = 0; j < count; ++j)
    out << j << ',' << format_double(seq.node(j)) << ','
        << format_double(seq.objective(j)) << '\n';
  if (!out) throw std::runtime_error("write failed: " + output);
  std::cerr << "wrote " << count << " nodes to " << output << "\n";
  return 0;
}

std::vector<std::vector<double>> read_points_csv(const std::string& path,
                                                 std::size_t dimension) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::vector<std::vector<double>> points;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (...) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (lineno == 1) continue;  // header
      throw std::runtime_error(path + ": non-numeric data at line " +
                               std::to_string(lineno));
    }
    if (row.size() != dimension)
      throw std::runtime_error(path + ": line " + std::to_string(lineno) +
                               " has " + std::to_string(row.size()) +
                               " columns, expected " + std::to_string(dimension));
    points.push_back(std::move(row));
  }
  return points;
}

int cmd_eval(const std::string& surrogate_path, const std::string& points_path,
             const std::string& output) {
  const SparseSurrogate surrogate = SparseSurrogate::load(surrogate_path);
  const auto points = read_points_csv(points_path, surrogate.dimension());

  std::ofstream out(output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + output);
  for (std::size_t n = 0; n < surrogate.dimension(); ++n)
    out << 'y' << (n + 1) << ',';
  out << "value\n";
  for (const auto& point : points) {
    for (double v : point) out << format_double(v) << ',';
    out << format_double(surrogate.eval(point)) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + output);
  std::cerr << "evaluated " << points.size() << " points\n";
  return 0;
}

int cmd_mean(const std::string& surrogate_path) {
  const SparseSurrogate surrogate = SparseSurrogate::load(surrogate_path);
  std::cout << format_double(mean_direct(surrogate).value) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension-adaptive sparse interpolation on weighted Leja nodes"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run a budget-sweep experiment from a config file");
  std::string config_path;
  run->add_option("--config", config_path, "JSON experiment config")->required();
  std::optional<std::uint64_t> seed;
  run->add_option("--seed", seed, "Override the config seed");
  std::optional<std::string> output;
  run->add_option("--output", output, "Override the output CSV path");
  std::optional<std::uint64_t> reference_size;
  run->add_option("--reference-size", reference_size,
                  "Override the reference sample size (discards a cached value)");
  std::optional<std::string> surrogate_dir;
  run->add_option("--surrogate-dir", surrogate_dir,
                  "Directory for per-budget surrogate files");

  // leja
  auto* leja = app.add_subcommand("leja", "Export a Leja node sequence as CSV");
  std::string dist_text;
  leja->add_option("--dist", dist_text,
                   "Distribution record, e.g. {\"type\":\"Normal\",\"mu\":0,\"sigma\":1}");
  std::string kind = "weighted";
  leja->add_option("--kind", kind, "weighted | unweighted | symmetric");
  std::size_t count = 0;
  leja->add_option("--count", count, "Number of nodes")->required();
  double y0 = 0.0;
  auto* y0_opt = leja->add_option("--y0", y0, "Initial node (default: density mode)");
  std::string leja_output = "leja.csv";
  leja->add_option("--output", leja_output, "Output CSV path");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a stored surrogate at points from a CSV");
  std::string surrogate_path;
  eval->add_option("--surrogate", surrogate_path, "Surrogate JSON file")->required();
  std::string points_path;
  eval->add_option("--points", points_path, "CSV of input points (one per row)")->required();
  std::string eval_output = "values.csv";
  eval->add_option("--output", eval_output, "Output CSV path");

  // mean
  auto* mean = app.add_subcommand("mean", "Print the direct-quadrature mean of a stored surrogate");
  std::string mean_surrogate;
  mean->add_option("--surrogate", mean_surrogate, "Surrogate JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(config_path, seed, output, reference_size, surrogate_dir);
    if (leja->parsed())
      return cmd_leja(dist_text, kind, count, y0, y0_opt->count() > 0, leja_output);
    if (eval->parsed()) return cmd_eval(surrogate_path, points_path, eval_output);
    if (mean->parsed()) return cmd_mean(mean_surrogate);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
