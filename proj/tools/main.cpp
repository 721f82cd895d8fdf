// Copyright 2026 The monobayes Authors
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

// Command-line front end: test a series for a monotone trend, simulate
// benchmark datasets, reproduce the rejection-rate study, calibrate the
// prior, and run the Bayes-factor comparison experiment.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monobayes/bayes_factor.hpp"
#include "monobayes/bench.hpp"
#include "monobayes/calibrate.hpp"
#include "monobayes/mono_test.hpp"
#include "monobayes/series_io.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.10g", v);
  return buffer;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  return out;
}

struct PriorFlags {
  std::optional<double> lambda, mu, m, a, b;
  double gamma0 = 0.5, gamma1 = 0.5;
  double level = 0.05;
  int k_max = 0;  // 0: no explicit cap

  void attach(CLI::App* cmd) {
    cmd->add_option("--lambda", lambda, "Geometric prior parameter for k");
    cmd->add_option("--mu", mu, "Prior precision scale for the levels");
    cmd->add_option("--m", m, "Prior level mean (default: empirical mean)");
    cmd->add_option("--a", a, "Inverse-Gamma shape (default: from data)");
    cmd->add_option("--b", b, "Inverse-Gamma rate (default: from data)");
    cmd->add_option("--gamma0", gamma0, "Loss weight against false rejection");
    cmd->add_option("--gamma1", gamma1, "Loss weight against false acceptance");
    cmd->add_option("--level", level, "Type-I target used for M0");
    cmd->add_option("--k-max", k_max, "Cap on the number of bins (0 = n)");
  }

  // Base hyperparameters before the per-dataset (m, a, b) fit.
  monobayes::HyperParams base() const {
    monobayes::HyperParams hp;
    if (lambda) hp.lambda = *lambda;
    if (mu) hp.mu = *mu;
    hp.gamma0 = gamma0;
    hp.gamma1 = gamma1;
    hp.level = level;
    if (k_max > 0) hp.k_max = k_max;
    return hp;
  }

  // Hyperparameters for one concrete dataset.
  monobayes::HyperParams resolve(const monobayes::Dataset& data) const {
    monobayes::HyperParams hp = monobayes::auto_hyperparams(data, base());
    if (m) hp.m = *m;
    if (a) hp.a = *a;
    if (b) hp.b = *b;
    hp.validate();
    return hp;
  }
};

int cmd_test(const std::string& input, const std::string& direction,
             const PriorFlags& prior, const monobayes::TestConfig& cfg,
             const std::string& json_out, bool exit_code_decision) {
  monobayes::Dataset data = monobayes::load_series(input);
  if (direction == "increasing") {
    data = monobayes::negated(std::move(data));
  }
  const monobayes::HyperParams hp = prior.resolve(data);
  const monobayes::TestReport report = monobayes::run_test(data, hp, cfg);

  std::cout << "n: " << data.n() << "\n"
            << "direction: " << direction << "\n"
            << "iterations: " << cfg.chain.iterations << "\n"
            << "burn_in: " << cfg.chain.resolved_burn_in() << "\n"
            << "seed: " << cfg.chain.seed << "\n"
            << "lambda: " << fmt(hp.lambda) << "\n"
            << "mu: " << fmt(hp.mu) << "\n"
            << "m: " << fmt(hp.m) << "\n"
            << "a: " << fmt(hp.a) << "\n"
            << "b: " << fmt(hp.b) << "\n"
            << "level: " << fmt(hp.level) << "\n"
            << "k_min: " << hp.k_min << "\n"
            << "k_max: " << hp.effective_k_max(data.n()) << "\n"
            << "sigma_hat: " << fmt(report.sigma_hat) << "\n"
            << "M0: " << fmt(report.m0) << "\n"
            << "draws_used: " << report.draws_used << "\n"
            << "acceptance_rate: " << fmt(report.acceptance_rate) << "\n"
            << "modal_k: " << report.modal_k << "\n"
            << "pi_hat: " << fmt(report.pi_hat) << "\n"
            << "cutoff: " << fmt(report.cutoff) << "\n"
            << "delta: " << report.delta << "\n"
            << "decision: "
            << (report.delta ? "reject monotonicity" : "compatible with monotonicity")
            << "\n";
  for (const auto& [k, freq] : report.k_histogram) {
    std::cout << "k_hist[" << k << "]: " << fmt(freq) << "\n";
  }

  if (!json_out.empty()) {
    json doc;
    doc["n"] = data.n();
    doc["direction"] = direction;
    doc["iterations"] = cfg.chain.iterations;
    doc["burn_in"] = cfg.chain.resolved_burn_in();
    doc["seed"] = cfg.chain.seed;
    doc["hyperparams"] = {{"lambda", hp.lambda}, {"mu", hp.mu},
                          {"m", hp.m},           {"a", hp.a},
                          {"b", hp.b},           {"level", hp.level},
                          {"gamma0", hp.gamma0}, {"gamma1", hp.gamma1},
                          {"k_min", hp.k_min},
                          {"k_max", hp.effective_k_max(data.n())}};
    doc["sigma_hat"] = report.sigma_hat;
    doc["M0"] = report.m0;
    doc["draws_used"] = report.draws_used;
    doc["acceptance_rate"] = report.acceptance_rate;
    doc["modal_k"] = report.modal_k;
    doc["pi_hat"] = report.pi_hat;
    doc["cutoff"] = report.cutoff;
    doc["delta"] = report.delta;
    json hist = json::object();
    for (const auto& [k, freq] : report.k_histogram) {
      hist[std::to_string(k)] = freq;
    }
    doc["k_histogram"] = hist;
    open_out(json_out) << doc.dump(2) << "\n";
  }
  return exit_code_decision && report.delta ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian test of monotone trend for equispaced series"};
  app.require_subcommand(1);

  // --- test ---
  auto* test = app.add_subcommand("test", "Test one series for monotonicity");
  std::string input, direction = "non-increasing", json_out;
  bool exit_code_decision = false;
  monobayes::TestConfig test_cfg;
  std::string sigma_est = "modal-k";
  test->add_option("--input", input, "Series file")->required();
  test->add_option("--direction", direction,
                   "Trend direction under the null hypothesis")
      ->check(CLI::IsMember({"non-increasing", "increasing"}));
  test->add_option("--iterations,-K", test_cfg.chain.iterations,
                   "Sampler iterations");
  test->add_option("--burn-in", test_cfg.chain.burn_in,
                   "Burn-in iterations (default K/10)");
  test->add_option("--seed", test_cfg.chain.seed, "RNG seed");
  test->add_option("--k-init", test_cfg.chain.k_init, "Initial bin count");
  test->add_option("--sigma-estimator", sigma_est,
                   "sigma_hat estimator for M0")
      ->check(CLI::IsMember({"modal-k", "chain-mean"}));
  test->add_option("--json-out", json_out, "Also write the report as JSON");
  test->add_flag("--exit-code-decision", exit_code_decision,
                 "Exit with code 2 when monotonicity is rejected");
  PriorFlags test_prior;
  test_prior.attach(test);

  // --- simulate ---
  auto* simulate = app.add_subcommand(
      "simulate", "Draw one dataset from a benchmark function");
  int sim_fid = 9, sim_n = 100;
  double sim_sigma2 = -1.0;
  std::uint64_t sim_seed = 1;
  std::string sim_out = "-";
  simulate->add_option("--function", sim_fid, "Benchmark function id 1..9")
      ->required();
  simulate->add_option("--n", sim_n, "Sample size");
  simulate->add_option("--sigma2", sim_sigma2,
                       "Noise variance (default per function)");
  simulate->add_option("--seed", sim_seed, "RNG seed");
  simulate->add_option("--out", sim_out, "Output file ('-' = stdout)");

  // --- bench ---
  auto* bench = app.add_subcommand(
      "bench", "Rejection-rate study over benchmark scenarios");
  std::string scen_path, bench_out_dir = ".";
  std::vector<int> bench_fids;
  std::vector<int> bench_ns = {100};
  int bench_reps = 100;
  long long bench_iters = 5000;
  std::uint64_t bench_seed = 1;
  int bench_threads = 0;
  bench->add_option("--scenarios", scen_path,
                    "JSON scenario file (overrides the flag grid)");
  bench->add_option("--functions", bench_fids,
                    "Benchmark function ids (default 1..9)");
  bench->add_option("--n", bench_ns, "Sample sizes");
  bench->add_option("--replications", bench_reps, "Replications per scenario");
  bench->add_option("--iterations,-K", bench_iters, "Sampler iterations");
  bench->add_option("--seed", bench_seed, "Base seed");
  bench->add_option("--threads", bench_threads, "Worker threads (0 = cores)");
  bench->add_option("--out", bench_out_dir, "Output directory");
  PriorFlags bench_prior;
  bench_prior.attach(bench);

  // --- calibrate ---
  auto* calibrate = app.add_subcommand(
      "calibrate", "Grid-calibrate (mu, lambda) on flat-truth simulations");
  int cal_n = 100;
  monobayes::CalibrationConfig cal_cfg;
  std::string cal_out = "-";
  calibrate->add_option("--n", cal_n, "Sample size to calibrate for");
  calibrate->add_option("--level", cal_cfg.level, "Type-I target");
  calibrate->add_option("--replications", cal_cfg.replications,
                        "Replications per grid cell");
  calibrate->add_option("--iterations,-K", cal_cfg.iterations,
                        "Sampler iterations per replication");
  calibrate->add_option("--seed", cal_cfg.seed, "Base seed");
  calibrate->add_option("--threads", cal_cfg.threads, "Worker threads");
  calibrate->add_option("--grid-mu", cal_cfg.grid_mu, "mu grid (ascending)");
  calibrate->add_option("--grid-lambda", cal_cfg.grid_lambda,
                        "lambda grid (ascending)");
  calibrate->add_option("--out", cal_out, "Report file ('-' = stdout)");

  // --- bf ---
  auto* bf = app.add_subcommand(
      "bf", "Log Bayes factor replication study under the flat truth");
  int bf_n = 100, bf_reps = 100;
  monobayes::BfStudyConfig bf_cfg;
  std::string bf_out_dir = ".";
  bf->add_option("--n", bf_n, "Sample size");
  bf->add_option("--reps", bf_reps, "Replications");
  bf->add_option("--sigma2", bf_cfg.sigma2, "Noise variance");
  bf->add_option("--iterations,-K", bf_cfg.chain.iterations,
                 "Sampler iterations");
  bf->add_option("--bins", bf_cfg.bins, "Histogram bin count");
  bf->add_option("--seed", bf_cfg.seed, "Base seed");
  bf->add_option("--threads", bf_cfg.threads, "Worker threads");
  bf->add_option("--out", bf_out_dir, "Output directory");
  PriorFlags bf_prior;
  bf_prior.attach(bf);

  CLI11_PARSE(app, argc, argv);

  try {
    if (test->parsed()) {
      if (sigma_est == "chain-mean") {
        test_cfg.sigma_estimator =
            monobayes::SigmaEstimator::kChainMeanSqrtSigma2;
      }
      return cmd_test(input, direction, test_prior, test_cfg, json_out,
                      exit_code_decision);
    }

    if (simulate->parsed()) {
      if (sim_sigma2 <= 0.0) sim_sigma2 = monobayes::default_sigma2(sim_fid);
      monobayes::Rng rng(sim_seed);
      const monobayes::Dataset data = monobayes::simulate_dataset(
          monobayes::benchmark_function(sim_fid), sim_sigma2, sim_n, rng);
      if (sim_out == "-") {
        monobayes::write_series(std::cout, data);
      } else {
        auto out = open_out(sim_out);
        monobayes::write_series(out, data);
      }
      return 0;
    }

    if (bench->parsed()) {
      std::vector<monobayes::Scenario> scenarios;
      if (!scen_path.empty()) {
        std::ifstream in(scen_path);
        if (!in) throw std::runtime_error("cannot open " + scen_path);
        json doc = json::parse(in);
        for (const json& item : doc.at("scenarios")) {
          monobayes::Scenario s;
          s.function_id = item.at("function");
          s.sigma2 = item.value("sigma2",
                                monobayes::default_sigma2(s.function_id));
          s.n = item.value("n", 100);
          s.replications = item.value("replications", bench_reps);
          s.iterations = item.value("iterations", bench_iters);
          s.seed = item.value("seed", bench_seed);
          scenarios.push_back(s);
        }
      } else {
        if (bench_fids.empty()) {
          bench_fids = {1, 2, 3, 4, 5, 6, 7, 8, 9};
        }
        for (int fid : bench_fids) {
          for (int n : bench_ns) {
            monobayes::Scenario s;
            s.function_id = fid;
            s.sigma2 = monobayes::default_sigma2(fid);
            s.n = n;
            s.replications = bench_reps;
            s.iterations = bench_iters;
            s.seed = bench_seed;
            scenarios.push_back(s);
          }
        }
      }
      monobayes::BenchOptions opts;
      opts.base = bench_prior.base();
      opts.threads = bench_threads;
      const auto table = monobayes::rejection_table(scenarios, opts);

      const std::filesystem::path dir(bench_out_dir);
      std::filesystem::create_directories(dir);
      {
        auto out = open_out(dir / "rejection_table.csv");
        monobayes::write_rejection_table(out, table);
      }
      {
        auto out = open_out(dir / "replications.csv");
        monobayes::write_replication_log(out, table);
      }
      monobayes::write_rejection_table(std::cout, table);
      return 0;
    }

    if (calibrate->parsed()) {
      const monobayes::CalibrationResult result =
          monobayes::calibrate_mu_lambda(cal_n, cal_cfg);
      if (!result.constraint_met) {
        std::cerr << "warning: no grid pair met the level; returning the "
                     "pair with the smallest estimated type-I error\n";
      }
      if (cal_out == "-") {
        monobayes::write_calibration(std::cout, result);
      } else {
        auto out = open_out(cal_out);
        monobayes::write_calibration(out, result);
        std::cout << "mu: " << fmt(result.mu)
                  << "\nlambda: " << fmt(result.lambda) << "\n";
      }
      return 0;
    }

    if (bf->parsed()) {
      bf_cfg.base = bf_prior.base();
      const monobayes::BfStudyResult result =
          monobayes::run_bf_study(bf_n, bf_reps, bf_cfg);
      const std::filesystem::path dir(bf_out_dir);
      std::filesystem::create_directories(dir);
      {
        auto out = open_out(dir / "bf_histogram.csv");
        monobayes::write_bf_histogram(out, result);
      }
      {
        auto out = open_out(dir / "bf_values.csv");
        monobayes::write_bf_values(out, result);
      }
      std::cout << "replications: " << result.log_bfs.size() << "\n"
                << "negative_log_bf: " << result.negative << "\n"
                << "plus_infinite: " << result.plus_infinite << "\n"
                << "minus_infinite: " << result.minus_infinite << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
