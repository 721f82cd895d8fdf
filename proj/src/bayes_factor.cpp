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

#include "monobayes/bayes_factor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "monobayes/calibrate.hpp"
#include "monobayes/parallel.hpp"
#include "monobayes/step_model.hpp"

namespace monobayes {

double prior_prob_monotone(const HyperParams& hp, int n) {
  hp.validate();
  double total = 0.0;
  for (int k = hp.k_min; k <= hp.effective_k_max(n); ++k) {
    total += std::exp(log_prior_k(k, hp, n) - std::lgamma(k + 1.0));
  }
  return total;
}

double log_posterior_prior_odds(double posterior_monotone,
                                double prior_monotone) {
  const double inf = std::numeric_limits<double>::infinity();
  if (posterior_monotone <= 0.0) return -inf;
  if (posterior_monotone >= 1.0) return inf;
  return std::log(posterior_monotone / (1.0 - posterior_monotone)) +
         std::log((1.0 - prior_monotone) / prior_monotone);
}

LogBayesFactor log_bayes_factor(std::span<const PosteriorDraw> draws,
                                const HyperParams& hp, int n) {
  if (draws.empty()) {
    throw std::invalid_argument("log_bayes_factor: no draws");
  }
  LogBayesFactor result;
  result.total_draws = static_cast<long long>(draws.size());
  for (const PosteriorDraw& d : draws) {
    if (discrepancy(std::span<const double>(d.omega)) == 0.0) {
      ++result.monotone_draws;
    }
  }
  result.prior_monotone = prior_prob_monotone(hp, n);
  const double p = static_cast<double>(result.monotone_draws) /
                   static_cast<double>(result.total_draws);
  result.value = log_posterior_prior_odds(p, result.prior_monotone);
  return result;
}

BfStudyResult run_bf_study(int n, int reps, const BfStudyConfig& cfg) {
  if (reps < 1) {
    throw std::invalid_argument("run_bf_study: needs reps >= 1");
  }
  if (!(cfg.sigma2 > 0.0)) {
    throw std::invalid_argument("run_bf_study: sigma2 must be positive");
  }

  BfStudyResult result;
  result.log_bfs.resize(reps);
  const double sigma = std::sqrt(cfg.sigma2);
  parallel_for(reps, cfg.threads, [&](long long rep) {
    Rng data_rng(derive_seed(cfg.seed, 2 * rep));
    std::vector<double> y(n);
    for (double& v : y) v = sigma * data_rng.normal();
    const Dataset data = make_dataset(std::move(y));

    HyperParams hp = auto_hyperparams(data, cfg.base);
    ChainConfig chain = cfg.chain;
    chain.seed = derive_seed(cfg.seed, 2 * rep + 1);
    const ChainResult run = run_chain(data, hp, chain);
    result.log_bfs[rep] =
        log_bayes_factor(run.draws, hp, n).value;
  });

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : result.log_bfs) {
    if (v < 0.0) ++result.negative;
    if (std::isinf(v)) {
      ++(v > 0.0 ? result.plus_infinite : result.minus_infinite);
      continue;
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  const long long finite =
      reps - result.plus_infinite - result.minus_infinite;
  if (finite > 0) {
    if (hi <= lo) hi = lo + 1.0;  // single distinct value
    const int bins = std::max(1, cfg.bins);
    result.histogram.resize(bins);
    const double width = (hi - lo) / bins;
    for (int b = 0; b < bins; ++b) {
      result.histogram[b].lo = lo + b * width;
      result.histogram[b].hi = lo + (b + 1) * width;
    }
    for (double v : result.log_bfs) {
      if (std::isinf(v)) continue;
      int b = static_cast<int>((v - lo) / width);
      b = std::clamp(b, 0, bins - 1);
      ++result.histogram[b].count;
    }
  }
  return result;
}

}  // namespace monobayes
