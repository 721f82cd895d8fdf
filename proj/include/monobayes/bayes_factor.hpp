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

#ifndef MONOBAYES_BAYES_FACTOR_HPP_
#define MONOBAYES_BAYES_FACTOR_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "monobayes/sampler.hpp"

namespace monobayes {

// Prior probability that the step function is non-increasing:
// sum_k pi(k) / k!, since the k iid levels are exchangeable and exactly
// one of the k! orderings is sorted. Exact over the truncated support.
double prior_prob_monotone(const HyperParams& hp, int n);

// log[(p/(1-p)) * ((1-q)/q)] with infinities at the boundary.
double log_posterior_prior_odds(double posterior_monotone,
                                double prior_monotone);

struct LogBayesFactor {
  double value = 0.0;           // +-infinity when the count saturates
  long long monotone_draws = 0;
  long long total_draws = 0;
  double prior_monotone = 0.0;
};

// Posterior monotone probability is the fraction of draws whose
// discrepancy is exactly zero; ties have probability zero under the
// continuous posterior, so no tolerance is applied.
LogBayesFactor log_bayes_factor(std::span<const PosteriorDraw> draws,
                                const HyperParams& hp, int n);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  long long count = 0;
};

struct BfStudyConfig {
  double sigma2 = 0.01;
  ChainConfig chain;
  HyperParams base;   // mu/lambda/k-range; (m, a, b) are fit per dataset
  int bins = 20;
  std::uint64_t seed = 1;
  int threads = 0;
};

struct BfStudyResult {
  std::vector<double> log_bfs;      // one per replication, may be +-inf
  long long negative = 0;           // replications with log BF < 0
  long long plus_infinite = 0;
  long long minus_infinite = 0;
  std::vector<HistogramBin> histogram;  // over the finite values
};

// Replicates flat-truth datasets, runs the sampler on each, and collects
// the log Bayes factors into histogram-ready records.
BfStudyResult run_bf_study(int n, int reps, const BfStudyConfig& cfg);

}  // namespace monobayes

#endif  // MONOBAYES_BAYES_FACTOR_HPP_
