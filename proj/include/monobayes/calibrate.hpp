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

#ifndef MONOBAYES_CALIBRATE_HPP_
#define MONOBAYES_CALIBRATE_HPP_

#include <cstdint>
#include <vector>

#include "monobayes/mono_test.hpp"

namespace monobayes {

struct DataHyperParams {
  double m = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// m = mean(y); with s2 the sample variance (n-1 divisor, floored at
// 1e-12 for degenerate data): a = s2 + 1 and b = s2^2, which puts the
// prior mean of sigma^2 at s2.
DataHyperParams default_data_hyperparams(const Dataset& data);

// Copies base and fills (m, a, b) from the data.
HyperParams auto_hyperparams(const Dataset& data, HyperParams base);

struct CalibrationConfig {
  std::vector<double> grid_mu = {0.01, 0.05, 0.1, 0.5, 1.0};
  std::vector<double> grid_lambda = {0.05, 0.1, 0.2, 0.3, 0.5};
  int replications = 200;
  long long iterations = 2000;
  double level = 0.05;
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = all cores
  HyperParams base;  // k_min/k_max/gammas carried into each cell
};

struct CalibrationCell {
  double mu = 0.0;
  double lambda = 0.0;
  double rejection_rate = 0.0;  // estimated type-I error at f = 0
};

struct CalibrationResult {
  double mu = 0.0;
  double lambda = 0.0;
  bool constraint_met = false;  // false: fell back to the largest pair
  int n = 0;
  std::vector<CalibrationCell> grid;  // mu-major, lambda-minor order
};

// Simulates flat-truth data (f = 0, sigma = 1) and estimates the type-I
// error of the full test at every grid pair, returning the smallest
// (mu, lambda) in lexicographic order whose estimate stays within level.
// Falls back to the largest pair when no cell qualifies.
CalibrationResult calibrate_mu_lambda(int n, const CalibrationConfig& cfg);

}  // namespace monobayes

#endif  // MONOBAYES_CALIBRATE_HPP_
