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

#include "monobayes/bench.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "monobayes/calibrate.hpp"
#include "monobayes/parallel.hpp"

namespace monobayes {

double benchmark_function(int id, double x) {
  switch (id) {
    case 1:
      return (x <= 0.5 ? -15.0 * (x - 0.5) * (x - 0.5) * (x - 0.5) : 0.0) -
             0.3 * (x - 0.5) + std::exp(-250.0 * (x - 0.25) * (x - 0.25));
    case 2:
      return 0.15 * x;
    case 3:
      return 0.2 * std::exp(-50.0 * (x - 0.5) * (x - 0.5));
    case 4:
      return -0.5 * std::cos(6.0 * std::numbers::pi * x);
    case 5:
      return -0.2 * x + benchmark_function(3, x);
    case 6:
      return -0.2 * x + benchmark_function(4, x);
    case 7:
      return -(1.0 + x) + 0.25 * std::exp(-50.0 * (x - 0.5) * (x - 0.5));
    case 8:
      return -0.5 * x * x;
    case 9:
      return 0.0;
    default:
      throw std::domain_error("benchmark_function: id must be 1..9, got " +
                              std::to_string(id));
  }
}

std::function<double(double)> benchmark_function(int id) {
  benchmark_function(id, 0.0);  // validate id eagerly
  return [id](double x) { return benchmark_function(id, x); };
}

double default_sigma2(int function_id) {
  switch (function_id) {
    case 5:
      return 0.004;
    case 6:
      return 0.006;
    default:
      benchmark_function(function_id, 0.0);
      return 0.01;
  }
}

Dataset simulate_dataset(const std::function<double(double)>& f,
                         double sigma2, int n, Rng& rng) {
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("simulate_dataset: sigma2 must be positive");
  }
  const double sigma = std::sqrt(sigma2);
  std::vector<double> y(n);
  for (int i = 1; i <= n; ++i) {
    y[i - 1] = f(static_cast<double>(i) / n) + sigma * rng.normal();
  }
  return make_dataset(std::move(y));
}

ScenarioResult run_scenario(const Scenario& scenario,
                            const BenchOptions& opts) {
  if (scenario.replications < 1) {
    throw std::invalid_argument("run_scenario: needs replications >= 1");
  }
  const auto f = benchmark_function(scenario.function_id);

  ScenarioResult result;
  result.scenario = scenario;
  result.records.resize(scenario.replications);

  parallel_for(scenario.replications, opts.threads, [&](long long rep) {
    const std::uint64_t rep_seed =
        derive_seed(scenario.seed, static_cast<std::uint64_t>(rep));
    Rng data_rng(derive_seed(rep_seed, 0));
    const Dataset data =
        simulate_dataset(f, scenario.sigma2, scenario.n, data_rng);

    const HyperParams hp = auto_hyperparams(data, opts.base);
    TestConfig tc;
    tc.chain.iterations = scenario.iterations;
    tc.chain.burn_in = opts.burn_in;
    tc.chain.seed = derive_seed(rep_seed, 1);
    tc.sigma_estimator = opts.sigma_estimator;

    const TestReport report = run_test(data, hp, tc);
    ReplicationRecord& rec = result.records[rep];
    rec.replication = static_cast<int>(rep);
    rec.pi_hat = report.pi_hat;
    rec.delta = report.delta;
    rec.m0 = report.m0;
    rec.sigma_hat = report.sigma_hat;
  });

  long long rejections = 0;
  for (const ReplicationRecord& rec : result.records) rejections += rec.delta;
  result.rejection_pct =
      100.0 * static_cast<double>(rejections) / scenario.replications;
  return result;
}

std::vector<ScenarioResult> rejection_table(std::span<const Scenario> list,
                                            const BenchOptions& opts) {
  std::vector<ScenarioResult> table;
  table.reserve(list.size());
  for (const Scenario& scenario : list) {
    table.push_back(run_scenario(scenario, opts));
  }
  return table;
}

std::vector<SweepPoint> consistency_sweep(int function_id,
                                          std::span<const int> n_list,
                                          const Scenario& base,
                                          const BenchOptions& opts) {
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) {
      throw std::invalid_argument("consistency_sweep: n_list must ascend");
    }
  }
  std::vector<SweepPoint> curve;
  curve.reserve(n_list.size());
  for (int n : n_list) {
    Scenario scenario = base;
    scenario.function_id = function_id;
    scenario.n = n;
    curve.push_back({n, run_scenario(scenario, opts).rejection_pct});
  }
  return curve;
}

}  // namespace monobayes
