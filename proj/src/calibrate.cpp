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

#include "monobayes/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "monobayes/parallel.hpp"

namespace monobayes {

namespace {

constexpr double kVarianceFloor = 1e-12;

}  // namespace

DataHyperParams default_data_hyperparams(const Dataset& data) {
  const int n = data.n();
  if (n < 2) {
    throw std::invalid_argument("default_data_hyperparams: needs n >= 2");
  }
  double mean = 0.0;
  for (double v : data.y) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : data.y) ss += (v - mean) * (v - mean);
  const double s2 = std::max(ss / (n - 1), kVarianceFloor);
  return DataHyperParams{mean, s2 + 1.0, s2 * s2};
}

HyperParams auto_hyperparams(const Dataset& data, HyperParams base) {
  const DataHyperParams fitted = default_data_hyperparams(data);
  base.m = fitted.m;
  base.a = fitted.a;
  base.b = fitted.b;
  return base;
}

CalibrationResult calibrate_mu_lambda(int n, const CalibrationConfig& cfg) {
  if (cfg.grid_mu.empty() || cfg.grid_lambda.empty()) {
    throw std::invalid_argument("calibrate_mu_lambda: empty grid");
  }
  if (!std::is_sorted(cfg.grid_mu.begin(), cfg.grid_mu.end()) ||
      !std::is_sorted(cfg.grid_lambda.begin(), cfg.grid_lambda.end())) {
    throw std::invalid_argument("calibrate_mu_lambda: grids must ascend");
  }
  if (cfg.replications < 1) {
    throw std::invalid_argument("calibrate_mu_lambda: needs replications >= 1");
  }

  // Flat-truth replicates are shared across grid cells: same data, same
  // chain seeds, so cells differ only through (mu, lambda).
  std::vector<Dataset> replicates;
  replicates.reserve(cfg.replications);
  for (int r = 0; r < cfg.replications; ++r) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    std::vector<double> y(n);
    for (double& v : y) v = rng.normal();
    replicates.push_back(make_dataset(std::move(y)));
  }

  CalibrationResult result;
  result.n = n;
  const std::size_t cells = cfg.grid_mu.size() * cfg.grid_lambda.size();
  result.grid.resize(cells);

  const long long tasks =
      static_cast<long long>(cells) * cfg.replications;
  std::vector<char> rejected(static_cast<std::size_t>(tasks), 0);
  parallel_for(tasks, cfg.threads, [&](long long task) {
    const auto cell = static_cast<std::size_t>(task) / cfg.replications;
    const int rep = static_cast<int>(task % cfg.replications);
    const double mu = cfg.grid_mu[cell / cfg.grid_lambda.size()];
    const double lambda = cfg.grid_lambda[cell % cfg.grid_lambda.size()];

    HyperParams hp = auto_hyperparams(replicates[rep], cfg.base);
    hp.mu = mu;
    hp.lambda = lambda;
    hp.level = cfg.level;

    TestConfig tc;
    tc.chain.iterations = cfg.iterations;
    tc.chain.seed = derive_seed(cfg.seed, 0x10000000ULL + rep);
    const TestReport report = run_test(replicates[rep], hp, tc);
    rejected[static_cast<std::size_t>(task)] =
        static_cast<char>(report.delta);
  });

  for (std::size_t cell = 0; cell < cells; ++cell) {
    long long rejections = 0;
    for (int rep = 0; rep < cfg.replications; ++rep) {
      rejections += rejected[cell * cfg.replications + rep];
    }
    result.grid[cell].mu = cfg.grid_mu[cell / cfg.grid_lambda.size()];
    result.grid[cell].lambda = cfg.grid_lambda[cell % cfg.grid_lambda.size()];
    result.grid[cell].rejection_rate =
        static_cast<double>(rejections) / cfg.replications;
  }

  // Smallest (mu, lambda) lexicographically whose estimate meets the
  // level; the grid vector is already in that order. When no cell
  // qualifies, fall back to the cell with the smallest estimated type-I
  // error (the estimates grow with mu, so "largest pair" would be the
  // worst choice, not the safest).
  for (const CalibrationCell& cell : result.grid) {
    if (cell.rejection_rate <= cfg.level) {
      result.mu = cell.mu;
      result.lambda = cell.lambda;
      result.constraint_met = true;
      return result;
    }
  }
  const auto safest = std::min_element(
      result.grid.begin(), result.grid.end(),
      [](const CalibrationCell& x, const CalibrationCell& y) {
        return x.rejection_rate < y.rejection_rate;
      });
  result.mu = safest->mu;
  result.lambda = safest->lambda;
  result.constraint_met = false;
  return result;
}

}  // namespace monobayes
