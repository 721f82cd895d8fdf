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

#include "monobayes/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace monobayes {

namespace {

void check_k_in_support(int k, const HyperParams& hp, int n) {
  if (k < hp.k_min || k > hp.effective_k_max(n)) {
    throw std::domain_error("k = " + std::to_string(k) +
                            " outside the prior support [" +
                            std::to_string(hp.k_min) + ", " +
                            std::to_string(hp.effective_k_max(n)) + "]");
  }
}

double b_tilde_from_stats(const BinStats& stats, const HyperParams& hp) {
  double acc = 0.0;
  for (std::size_t j = 0; j < stats.counts.size(); ++j) {
    const double nj = static_cast<double>(stats.counts[j]);
    const double dev = stats.means[j] - hp.m;
    acc += stats.sse[j] + nj * hp.mu / (nj + hp.mu) * dev * dev;
  }
  return hp.b + 0.5 * acc;
}

double log_posterior_from_stats(const BinStats& stats, double btilde, int k,
                                const HyperParams& hp, int n) {
  double log_bins = 0.0;
  for (long long nj : stats.counts) {
    log_bins += std::log(static_cast<double>(nj) + hp.mu);
  }
  return log_prior_k(k, hp, n) -
         (hp.a + 0.5 * n) * std::log(btilde) +
         0.5 * k * std::log(hp.mu) - 0.5 * log_bins;
}

}  // namespace

void HyperParams::validate() const {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::invalid_argument("lambda must lie in (0,1)");
  }
  if (!(a > 0.0)) throw std::invalid_argument("a must be positive");
  if (!(b > 0.0)) throw std::invalid_argument("b must be positive");
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
  if (!std::isfinite(m)) throw std::invalid_argument("m must be finite");
  if (!(gamma0 > 0.0) || !(gamma1 > 0.0)) {
    throw std::invalid_argument("gamma0 and gamma1 must be positive");
  }
  if (!(level > 0.0 && level < 1.0)) {
    throw std::invalid_argument("level must lie in (0,1)");
  }
  if (k_min < 1 || k_max < k_min) {
    throw std::invalid_argument("need 1 <= k_min <= k_max");
  }
}

double log_prior_k(int k, const HyperParams& hp, int n) {
  const int hi = hp.effective_k_max(n);
  check_k_in_support(k, hp, n);
  const double log_1m = std::log1p(-hp.lambda);
  // Renormalizer over {k_min..hi}: 1 - (1-lambda)^(hi-k_min+1).
  const double log_norm = std::log(-std::expm1((hi - hp.k_min + 1) * log_1m));
  return std::log(hp.lambda) + (k - hp.k_min) * log_1m - log_norm;
}

double b_tilde(const Dataset& data, int k, const HyperParams& hp) {
  return b_tilde_from_stats(bin_stats(data, k, hp.m), hp);
}

double log_posterior_k_unnorm(const Dataset& data, int k,
                              const HyperParams& hp) {
  check_k_in_support(k, hp, data.n());
  const BinStats stats = bin_stats(data, k, hp.m);
  return log_posterior_from_stats(stats, b_tilde_from_stats(stats, hp), k, hp,
                                  data.n());
}

std::vector<double> posterior_k_table(const Dataset& data,
                                      const HyperParams& hp) {
  const int hi = hp.effective_k_max(data.n());
  if (hp.k_min > hi) {
    throw std::domain_error("posterior_k_table: empty prior support");
  }
  std::vector<double> table(hi, 0.0);
  std::vector<double> logp(hi, -std::numeric_limits<double>::infinity());
  double max_logp = -std::numeric_limits<double>::infinity();
  for (int k = hp.k_min; k <= hi; ++k) {
    logp[k - 1] = log_posterior_k_unnorm(data, k, hp);
    max_logp = std::max(max_logp, logp[k - 1]);
  }
  double total = 0.0;
  for (int k = hp.k_min; k <= hi; ++k) {
    table[k - 1] = std::exp(logp[k - 1] - max_logp);
    total += table[k - 1];
  }
  for (double& p : table) p /= total;
  return table;
}

double sample_sigma2_given_k(const Dataset& data, int k,
                             const HyperParams& hp, Rng& rng) {
  return rng.inverse_gamma(hp.a + 0.5 * data.n(), b_tilde(data, k, hp));
}

std::vector<double> sample_omega_given_k_sigma(const Dataset& data, int k,
                                               double sigma2,
                                               const HyperParams& hp,
                                               Rng& rng) {
  if (!(sigma2 > 0.0)) {
    throw std::domain_error("sample_omega_given_k_sigma: sigma2 must be > 0");
  }
  const BinStats stats = bin_stats(data, k, hp.m);
  std::vector<double> omega(k);
  for (int j = 0; j < k; ++j) {
    const double nj = static_cast<double>(stats.counts[j]);
    const double mean = (hp.m * hp.mu + nj * stats.means[j]) / (nj + hp.mu);
    omega[j] = rng.normal(mean, std::sqrt(sigma2 / (nj + hp.mu)));
  }
  return omega;
}

double sigma_posterior_mean_given_k(const Dataset& data, int k,
                                    const HyperParams& hp) {
  const double shape = hp.a + 0.5 * data.n();
  if (!(shape > 0.5)) {
    throw std::domain_error(
        "sigma_posterior_mean_given_k: needs a + n/2 > 1/2");
  }
  return std::exp(0.5 * std::log(b_tilde(data, k, hp)) +
                  std::lgamma(shape - 0.5) - std::lgamma(shape));
}

StepPosterior::StepPosterior(Dataset data, HyperParams hp)
    : data_(std::move(data)), hp_(hp) {
  hp_.validate();
  k_max_ = hp_.effective_k_max(data_.n());
  if (hp_.k_min > k_max_) {
    throw std::invalid_argument("prior support empty: k_min exceeds min(k_max, n)");
  }
  cache_.resize(k_max_);
}

const StepPosterior::Entry& StepPosterior::entry(int k) const {
  check_k_in_support(k, hp_, data_.n());
  auto& slot = cache_[k - 1];
  if (!slot) {
    auto e = std::make_unique<Entry>();
    e->stats = bin_stats(data_, k, hp_.m);
    e->b_tilde = b_tilde_from_stats(e->stats, hp_);
    e->log_posterior =
        log_posterior_from_stats(e->stats, e->b_tilde, k, hp_, data_.n());
    slot = std::move(e);
  }
  return *slot;
}

const BinStats& StepPosterior::stats(int k) const { return entry(k).stats; }

double StepPosterior::b_tilde_at(int k) const { return entry(k).b_tilde; }

double StepPosterior::log_posterior_k(int k) const {
  return entry(k).log_posterior;
}

double StepPosterior::sigma_posterior_mean(int k) const {
  const double shape = hp_.a + 0.5 * data_.n();
  return std::exp(0.5 * std::log(entry(k).b_tilde) +
                  std::lgamma(shape - 0.5) - std::lgamma(shape));
}

std::vector<double> StepPosterior::posterior_table() const {
  std::vector<double> table(k_max_, 0.0);
  double max_logp = -std::numeric_limits<double>::infinity();
  for (int k = hp_.k_min; k <= k_max_; ++k) {
    max_logp = std::max(max_logp, log_posterior_k(k));
  }
  double total = 0.0;
  for (int k = hp_.k_min; k <= k_max_; ++k) {
    table[k - 1] = std::exp(log_posterior_k(k) - max_logp);
    total += table[k - 1];
  }
  for (double& p : table) p /= total;
  return table;
}

double StepPosterior::sample_sigma2(int k, Rng& rng) const {
  return rng.inverse_gamma(hp_.a + 0.5 * data_.n(), entry(k).b_tilde);
}

void StepPosterior::sample_omega(int k, double sigma2, Rng& rng,
                                 std::vector<double>& omega) const {
  const BinStats& stats = entry(k).stats;
  omega.resize(k);
  for (int j = 0; j < k; ++j) {
    const double nj = static_cast<double>(stats.counts[j]);
    const double mean = (hp_.m * hp_.mu + nj * stats.means[j]) / (nj + hp_.mu);
    omega[j] = rng.normal(mean, std::sqrt(sigma2 / (nj + hp_.mu)));
  }
}

}  // namespace monobayes
