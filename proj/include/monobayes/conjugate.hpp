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

#ifndef MONOBAYES_CONJUGATE_HPP_
#define MONOBAYES_CONJUGATE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "monobayes/dataset.hpp"
#include "monobayes/rng.hpp"
#include "monobayes/step_model.hpp"

namespace monobayes {

// Prior constants and decision constants for the step-function model
//   k       ~ Geometric(lambda), truncated to {k_min, ..., k_max}
//   sigma^2 ~ InverseGamma(a, b)
//   omega_j | k, sigma^2 ~ iid Normal(m, sigma^2 / mu).
struct HyperParams {
  // The (lambda, mu) defaults come from the shipped flat-truth grid
  // calibration at n = 100: the flattest pair, with type-I error at the
  // nominal level up to Monte Carlo slack.
  double lambda = 0.05;   // geometric success parameter for k
  double a = 2.0;         // Inverse-Gamma shape
  double b = 1.0;         // Inverse-Gamma rate
  double m = 0.0;         // prior level mean (response units)
  double mu = 0.01;       // prior precision scale for the levels
  double gamma0 = 0.5;    // loss weight against false rejection
  double gamma1 = 0.5;    // loss weight against false acceptance
  double level = 0.05;    // type-I target used when calibrating M0
  int k_min = 2;          // smallest bin count in the prior support
  int k_max = 1u << 20;   // configured cap; clamped to n in use

  // Support upper end for a sample of size n.
  int effective_k_max(int n) const { return k_max < n ? k_max : n; }

  // Throws std::invalid_argument when a constraint is violated.
  void validate() const;
};

// One sampled triple from the posterior.
struct PosteriorDraw {
  int k = 0;
  double sigma2 = 0.0;
  std::vector<double> omega;
};

// Log pmf of the truncated, renormalized geometric prior on k.
double log_prior_k(int k, const HyperParams& hp, int n);

// b + (1/2) sum_j [ sse_j + n_j mu / (n_j + mu) (mean_j - m)^2 ].
double b_tilde(const Dataset& data, int k, const HyperParams& hp);

// log pi(k) - (a + n/2) log b_tilde + (k/2) log mu
//   - (1/2) sum_j log(n_j + mu), for k in the truncated support.
double log_posterior_k_unnorm(const Dataset& data, int k,
                              const HyperParams& hp);

// Exact normalized posterior over k = 1..effective_k_max, computed with
// max-subtraction. Entry [k-1] is P(k | data); entries below k_min are 0.
std::vector<double> posterior_k_table(const Dataset& data,
                                      const HyperParams& hp);

// sigma^2 | k, data ~ InverseGamma(a + n/2, b_tilde).
double sample_sigma2_given_k(const Dataset& data, int k,
                             const HyperParams& hp, Rng& rng);

// omega_j | k, sigma^2, data ~ Normal((m mu + n_j mean_j)/(n_j + mu),
// sigma^2/(n_j + mu)), independent across bins.
std::vector<double> sample_omega_given_k_sigma(const Dataset& data, int k,
                                               double sigma2,
                                               const HyperParams& hp,
                                               Rng& rng);

// E[sigma | k, data] = sqrt(b_tilde) Gamma(a + n/2 - 1/2) / Gamma(a + n/2).
double sigma_posterior_mean_given_k(const Dataset& data, int k,
                                    const HyperParams& hp);

// Posterior machinery bound to one dataset, memoizing the per-k summaries
// the sampler hits repeatedly. Not meant to be shared across threads;
// each chain owns one.
class StepPosterior {
 public:
  StepPosterior(Dataset data, HyperParams hp);

  int n() const { return data_.n(); }
  int k_min() const { return hp_.k_min; }
  int k_max() const { return k_max_; }
  const HyperParams& hyper() const { return hp_; }
  const Dataset& data() const { return data_; }

  const BinStats& stats(int k) const;
  double b_tilde_at(int k) const;
  double log_posterior_k(int k) const;
  double sigma_posterior_mean(int k) const;
  std::vector<double> posterior_table() const;

  double sample_sigma2(int k, Rng& rng) const;
  void sample_omega(int k, double sigma2, Rng& rng,
                    std::vector<double>& omega) const;

 private:
  struct Entry {
    BinStats stats;
    double b_tilde = 0.0;
    double log_posterior = 0.0;
  };
  const Entry& entry(int k) const;

  Dataset data_;
  HyperParams hp_;
  int k_max_ = 0;
  mutable std::vector<std::unique_ptr<Entry>> cache_;
};

}  // namespace monobayes

#endif  // MONOBAYES_CONJUGATE_HPP_
