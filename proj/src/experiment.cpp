#include "lejasparse/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "lejasparse/sparse.hpp"

namespace lejasparse {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok)
      throw std::invalid_argument("config: unknown key \"" + key + "\" in " + where);
  }
}

Distribution parse_distribution(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("config: distribution record needs a \"type\"");
  const std::string type = j.at("type").get<std::string>();
  if (type == "Uniform") {
    reject_unknown_keys(j, {"type", "a", "b"}, "Uniform");
    return Distribution::uniform(j.at("a").get<double>(), j.at("b").get<double>());
  }
  if (type == "Normal") {
    reject_unknown_keys(j, {"type", "mu", "sigma"}, "Normal");
    return Distribution::normal(j.at("mu").get<double>(), j.at("sigma").get<double>());
  }
  if (type == "TruncatedNormal") {
    reject_unknown_keys(j, {"type", "mu", "sigma", "l", "u"}, "TruncatedNormal");
    return Distribution::truncated_normal(
        j.at("mu").get<double>(), j.at("sigma").get<double>(),
        j.at("l").get<double>(), j.at("u").get<double>());
  }
  if (type == "Gumbel") {
    reject_unknown_keys(j, {"type", "loc", "scale"}, "Gumbel");
    return Distribution::gumbel(j.at("loc").get<double>(), j.at("scale").get<double>());
  }
  throw std::invalid_argument("config: unknown distribution type \"" + type + "\"");
}

BenchmarkModel parse_model(const json& j) {
  if (j.is_string()) return benchmark_spec(j.get<std::string>());
  if (j.is_object()) {
    reject_unknown_keys(j, {"name", "value", "dists"}, "model");
    const std::string name = j.value("name", std::string("constant"));
    if (name != "constant")
      throw std::invalid_argument(
          "config: external models support only \"constant\"");
    const double value = j.at("value").get<double>();
    BenchmarkModel model;
    model.name = "constant";
    for (const json& dj : j.at("dists")) model.dists.push_back(parse_distribution(dj));
    if (model.dists.empty())
      throw std::invalid_argument("config: external model needs at least one dist");
    model.dimension = model.dists.size();
    model.evaluator = [value](std::span<const double>) { return value; };
    return model;
  }
  throw std::invalid_argument("config: model must be a name or an object");
}

}  // namespace

std::vector<std::uint64_t> default_budgets() {
  std::vector<std::uint64_t> budgets;
  for (std::uint64_t b = 10; b <= 100; b += 10) budgets.push_back(b);
  for (std::uint64_t b = 200; b <= 1000; b += 100) budgets.push_back(b);
  return budgets;
}

Distribution parse_distribution_text(const std::string& text) {
  return parse_distribution(json::parse(text));
}

ExperimentConfig parse_config_text(const std::string& text) {
  const json j = json::parse(text);
  reject_unknown_keys(j,
                      {"model", "budgets", "tolerance", "cv_sample_size",
                       "reference", "seed", "output", "surrogate_dir"},
                      "config");
  if (!j.contains("model"))
    throw std::invalid_argument("config: missing \"model\"");

  ExperimentConfig cfg;
  cfg.model = parse_model(j.at("model"));
  cfg.budgets = j.contains("budgets")
                    ? j.at("budgets").get<std::vector<std::uint64_t>>()
                    : default_budgets();
  if (cfg.budgets.empty())
    throw std::invalid_argument("config: budgets must be non-empty");
  for (std::size_t k = 0; k < cfg.budgets.size(); ++k) {
    if (cfg.budgets[k] == 0)
      throw std::invalid_argument("config: budgets must be positive");
    if (k > 0 && cfg.budgets[k] <= cfg.budgets[k - 1])
      throw std::invalid_argument("config: budgets must be strictly increasing");
  }
  cfg.tolerance = j.value("tolerance", 0.0);
  if (cfg.tolerance < 0.0)
    throw std::invalid_argument("config: tolerance must be >= 0");
  cfg.cv_sample_size = j.value("cv_sample_size", kDefaultCvSampleSize);
  if (cfg.cv_sample_size == 0)
    throw std::invalid_argument("config: cv_sample_size must be >= 1");

  if (j.contains("reference")) {
    const json& r = j.at("reference");
    reject_unknown_keys(r, {"method", "size", "value"}, "reference");
    const std::string method = r.value("method", std::string("sobol"));
    if (method == "sobol")
      cfg.reference.method = PointStream::Kind::sobol;
    else if (method == "mc" || method == "pseudo-random")
      cfg.reference.method = PointStream::Kind::pseudo_random;
    else
      throw std::invalid_argument("config: reference.method must be sobol or mc");
    cfg.reference.size = r.value("size", kDefaultReferenceSize);
    if (cfg.reference.size == 0)
      throw std::invalid_argument("config: reference.size must be >= 1");
    if (r.contains("value")) cfg.reference.value = r.at("value").get<double>();
  }
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.output = j.value("output", std::string("results.csv"));
  if (j.contains("surrogate_dir"))
    cfg.surrogate_dir = j.at("surrogate_dir").get<std::string>();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_config_text(text);
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  const auto& dists = config.model.dists;
  const std::size_t dim = dists.size();

  // reference mean: computed once, reused across budgets
  double reference = 0.0;
  if (config.reference.value.has_value()) {
    reference = *config.reference.value;
  } else {
    PointStream stream =
        config.reference.method == PointStream::Kind::sobol
            ? PointStream::sobol(dim)
            : PointStream::pseudo_random(dim, config.seed + 1);
    reference =
        mc_reference_mean(config.model.evaluator, dists, config.reference.size, stream)
            .mean;
  }

  // one seeded cross-validation sample per experiment
  PointStream cv_stream = PointStream::pseudo_random(dim, config.seed);
  std::vector<std::vector<double>> cv_sample =
      cv_stream.take(config.cv_sample_size);
  for (auto& point : cv_sample)
    for (std::size_t n = 0; n < dim; ++n) point[n] = dists[n].sample(point[n]);

  SequenceWorkspace workspace = SequenceWorkspace::create(dists);

  std::vector<ResultRow> rows;
  rows.reserve(config.budgets.size());
  for (std::uint64_t budget : config.budgets) {
    ResultRow row;
    row.budget = budget;
    try {
      const auto t0 = std::chrono::steady_clock::now();
      auto [surrogate, report] =
          adaptive_build(config.model.evaluator, dists, budget, config.tolerance,
                         nullptr, &workspace);
      const auto t1 = std::chrono::steady_clock::now();
      row.wall_time_seconds = std::chrono::duration<double>(t1 - t0).count();
      row.eval_count = surrogate.eval_count();
      row.eps_cv_rms = rms_cv_error(
          [&surrogate](std::span<const double> y) { return surrogate.eval(y); },
          config.model.evaluator, cv_sample);
      row.mean_estimate = mean_direct(surrogate).value;
      row.eps_rel_mean = rel_mean_error(row.mean_estimate, reference);
      if (config.surrogate_dir.has_value())
        surrogate.save(*config.surrogate_dir + "/" + config.model.name + "_B" +
                       std::to_string(budget) + ".json");
    } catch (const std::exception& e) {
      row.status = e.what();
      row.eps_cv_rms = row.eps_rel_mean = row.mean_estimate =
          std::numeric_limits<double>::quiet_NaN();
      std::cerr << "budget " << budget << " failed: " << e.what() << "\n";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::string result_csv_text(std::span<const ResultRow> rows) {
  std::string out =
      "budget,eval_count,eps_cv_rms,eps_rel_mean,mean_estimate,wall_time_seconds\n";
  for (const ResultRow& r : rows) {
    out += std::to_string(r.budget);
    out += ',';
    out += std::to_string(r.eval_count);
    out += ',';
    out += format_double(r.eps_cv_rms);
    out += ',';
    out += format_double(r.eps_rel_mean);
    out += ',';
    out += format_double(r.mean_estimate);
    out += ',';
    out += format_double(r.wall_time_seconds);
    out += '\n';
  }
  return out;
}

void write_result_csv(const std::string& path, std::span<const ResultRow> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << result_csv_text(rows);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace lejasparse
