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

#ifndef MONOBAYES_STEP_MODEL_HPP_
#define MONOBAYES_STEP_MODEL_HPP_

#include <functional>
#include <span>
#include <vector>

#include "monobayes/dataset.hpp"

namespace monobayes {

// Piecewise-constant function with k equal-width bins on [0,1]; bin j
// covers [(j-1)/k, j/k), the last bin being closed at 1.
struct StepFunction {
  int k = 0;
  std::vector<double> omega;  // one level per bin

  double operator()(double x) const;
};

// Per-bin summaries of a dataset. Empty bins report the prior level mean
// that was passed in and a zero sum of squares.
struct BinStats {
  std::vector<long long> counts;  // n_j
  std::vector<double> means;      // bin means (prior mean m where empty)
  std::vector<double> sse;        // within-bin sum of squared deviations
};

// 1-based bin index of x in [0,1]; x = 1 maps to the last bin.
// Throws std::domain_error for x outside [0,1] or k < 1.
int bin_index(double x, int k);

// Bin of design point i/n, computed in exact integer arithmetic.
int design_bin(int i, int n, int k);

// Per-bin counts/means/sums of squares over the design grid.
// Requires 1 <= k <= n.
BinStats bin_stats(const Dataset& data, int k, double m);

// Largest upward violation max_{j >= i} (omega_j - omega_i). Zero exactly
// when the levels are non-increasing. Single pass over a running minimum;
// each candidate is the same subtraction the pairwise maximum would take,
// so the result matches the O(k^2) scan bit for bit.
double discrepancy(std::span<const double> omega);
double discrepancy(const StepFunction& sf);

// Bin-wise averages of f0 over the design points: the step function
// closest to f0 in Kullback-Leibler sense. Throws std::domain_error if
// any bin holds no design point (happens once k reaches n).
StepFunction kl_projection(const std::function<double(double)>& f0, int n,
                           int k);

// Root-mean-square distance between f and g on the design grid i/n,
// i = 1..n.
double design_rms_distance(const std::function<double(double)>& f,
                           const std::function<double(double)>& g, int n);

}  // namespace monobayes

#endif  // MONOBAYES_STEP_MODEL_HPP_
