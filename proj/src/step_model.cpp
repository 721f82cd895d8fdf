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

#include "monobayes/step_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace monobayes {

double StepFunction::operator()(double x) const {
  return omega[static_cast<std::size_t>(bin_index(x, k) - 1)];
}

int bin_index(double x, int k) {
  if (k < 1) {
    throw std::domain_error("bin_index: k must be at least 1");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("bin_index: x outside [0,1]");
  }
  const int j = static_cast<int>(std::floor(x * static_cast<double>(k))) + 1;
  return std::min(j, k);
}

int design_bin(int i, int n, int k) {
  if (k < 1 || n < 1 || i < 1 || i > n) {
    throw std::domain_error("design_bin: need 1 <= i <= n and k >= 1");
  }
  const long long t =
      static_cast<long long>(i) * static_cast<long long>(k) / n;
  return static_cast<int>(std::min<long long>(t + 1, k));
}

BinStats bin_stats(const Dataset& data, int k, double m) {
  const int n = data.n();
  if (k < 1 || k > n) {
    throw std::domain_error("bin_stats: need 1 <= k <= n, got k = " +
                            std::to_string(k) + ", n = " + std::to_string(n));
  }
  BinStats stats;
  stats.counts.assign(k, 0);
  stats.means.assign(k, 0.0);
  stats.sse.assign(k, 0.0);
  for (int i = 1; i <= n; ++i) {
    const int j = design_bin(i, n, k) - 1;
    ++stats.counts[j];
    stats.means[j] += data.y[i - 1];
  }
  for (int j = 0; j < k; ++j) {
    stats.means[j] =
        stats.counts[j] > 0 ? stats.means[j] / stats.counts[j] : m;
  }
  for (int i = 1; i <= n; ++i) {
    const int j = design_bin(i, n, k) - 1;
    const double d = data.y[i - 1] - stats.means[j];
    stats.sse[j] += d * d;
  }
  return stats;
}

double discrepancy(std::span<const double> omega) {
  double best = 0.0;
  double running_min = omega.empty() ? 0.0 : omega[0];
  for (double level : omega) {
    running_min = std::min(running_min, level);
    best = std::max(best, level - running_min);
  }
  return best;
}

double discrepancy(const StepFunction& sf) {
  return discrepancy(std::span<const double>(sf.omega));
}

StepFunction kl_projection(const std::function<double(double)>& f0, int n,
                           int k) {
  if (k < 1 || k > n) {
    throw std::domain_error("kl_projection: need 1 <= k <= n");
  }
  std::vector<long long> counts(k, 0);
  std::vector<double> sums(k, 0.0);
  for (int i = 1; i <= n; ++i) {
    const int j = design_bin(i, n, k) - 1;
    ++counts[j];
    sums[j] += f0(static_cast<double>(i) / n);
  }
  StepFunction sf;
  sf.k = k;
  sf.omega.resize(k);
  for (int j = 0; j < k; ++j) {
    if (counts[j] == 0) {
      throw std::domain_error("kl_projection: bin " + std::to_string(j + 1) +
                              " holds no design point (k = " +
                              std::to_string(k) + ", n = " +
                              std::to_string(n) + ")");
    }
    sf.omega[j] = sums[j] / counts[j];
  }
  return sf;
}

double design_rms_distance(const std::function<double(double)>& f,
                           const std::function<double(double)>& g, int n) {
  if (n < 1) {
    throw std::domain_error("design_rms_distance: n must be positive");
  }
  double acc = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double x = static_cast<double>(i) / n;
    const double d = f(x) - g(x);
    acc += d * d;
  }
  return std::sqrt(acc / n);
}

}  // namespace monobayes
