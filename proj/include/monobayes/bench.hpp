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

#ifndef MONOBAYES_BENCH_HPP_
#define MONOBAYES_BENCH_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "monobayes/mono_test.hpp"

namespace monobayes {

// The nine benchmark regression functions on [0,1]. Functions 1..7 have
// genuine upward departures; 8 and 9 are non-increasing.
double benchmark_function(int id, double x);
std::function<double(double)> benchmark_function(int id);

// Residual variance each benchmark function is usually paired with.
double default_sigma2(int function_id);

// y_i = f(i/n) + sigma z_i on the design grid.
Dataset simulate_dataset(const std::function<double(double)>& f,
                         double sigma2, int n, Rng& rng);

struct Scenario {
  int function_id = 9;
  double sigma2 = 0.01;
  int n = 100;
  int replications = 100;
  long long iterations = 5000;
  std::uint64_t seed = 1;
};

struct ReplicationRecord {
  int replication = 0;
  double pi_hat = 0.0;
  int delta = 0;
  double m0 = 0.0;
  double sigma_hat = 0.0;
};

struct ScenarioResult {
  Scenario scenario;
  double rejection_pct = 0.0;
  std::vector<ReplicationRecord> records;
};

struct BenchOptions {
  HyperParams base;  // (m, a, b) are refit per simulated dataset
  SigmaEstimator sigma_estimator = SigmaEstimator::kPosteriorMeanAtModalK;
  long long burn_in = -1;  // negative: iterations / 10
  int threads = 0;
};

ScenarioResult run_scenario(const Scenario& scenario,
                            const BenchOptions& opts);

// One row per scenario; replications are scheduled in parallel and
// reduced by integer counts, so the thread count never changes a row.
std::vector<ScenarioResult> rejection_table(std::span<const Scenario> list,
                                            const BenchOptions& opts);

struct SweepPoint {
  int n = 0;
  double rejection_pct = 0.0;
};

// Rejection rate of one benchmark function across sample sizes.
std::vector<SweepPoint> consistency_sweep(int function_id,
                                          std::span<const int> n_list,
                                          const Scenario& base,
                                          const BenchOptions& opts);

}  // namespace monobayes

#endif  // MONOBAYES_BENCH_HPP_
