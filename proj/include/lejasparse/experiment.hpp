#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lejasparse/benchmarks.hpp"
#include "lejasparse/distributions.hpp"
#include "lejasparse/postproc.hpp"
#include "lejasparse/sampling.hpp"

namespace lejasparse {

struct ReferenceConfig {
  PointStream::Kind method = PointStream::Kind::sobol;
  std::uint64_t size = kDefaultReferenceSize;
  std::optional<double> value;  // cached reference mean; skips computation
};

// One experiment: a model approximated at a list of increasing budgets, each
// build started from scratch, with the RMS cross-validation error and the
// relative mean error recorded per budget.
struct ExperimentConfig {
  BenchmarkModel model;
  std::vector<std::uint64_t> budgets;  // strictly increasing, positive
  double tolerance = 0.0;
  std::uint64_t cv_sample_size = kDefaultCvSampleSize;
  ReferenceConfig reference;
  std::uint64_t seed = 0;
  std::string output = "results.csv";
  std::optional<std::string> surrogate_dir;
};

// 10, 20, ..., 100, 200, ..., 1000 (19 entries).
std::vector<std::uint64_t> default_budgets();

struct ResultRow {
  std::uint64_t budget = 0;
  std::uint64_t eval_count = 0;
  double eps_cv_rms = 0.0;
  double eps_rel_mean = 0.0;
  double mean_estimate = 0.0;
  double wall_time_seconds = 0.0;
  std::string status = "ok";  // diagnostic only; not part of the CSV schema
};

// Strict JSON config: unknown keys are rejected everywhere. See the README
// for the schema.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

Distribution parse_distribution_text(const std::string& text);

std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

// Fixed column order: budget,eval_count,eps_cv_rms,eps_rel_mean,
// mean_estimate,wall_time_seconds. Doubles are written in shortest
// round-trip form.
void write_result_csv(const std::string& path, std::span<const ResultRow> rows);
std::string result_csv_text(std::span<const ResultRow> rows);

// Shortest exact decimal representation.
std::string format_double(double v);

}  // namespace lejasparse
