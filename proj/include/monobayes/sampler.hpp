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

#ifndef MONOBAYES_SAMPLER_HPP_
#define MONOBAYES_SAMPLER_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "monobayes/conjugate.hpp"

namespace monobayes {

struct ChainConfig {
  long long iterations = 5000;
  long long burn_in = -1;  // negative means iterations / 10
  std::uint64_t seed = 1;
  double proposal_geom_p = 0.3;
  int k_init = 2;

  long long resolved_burn_in() const {
    return burn_in >= 0 ? burn_in : iterations / 10;
  }
  void validate() const;
};

// Signed jump for the random walk on k: magnitude 1 + G with
// G ~ Geometric(geom_p) counting failures, sign uniform.
int propose_step(Rng& rng, double geom_p = 0.3);

namespace detail {

// One Metropolis step on k against an arbitrary log target. Proposals
// leaving [k_min, k_max] are rejected in place; the proposal is symmetric
// so acceptance uses the bare posterior ratio. The acceptance uniform is
// only consumed for in-range proposals.
template <typename LogTarget>
int mh_step_impl(int k, int k_min, int k_max, double geom_p, LogTarget&& logp,
                 Rng& rng) {
  const int proposed = k + propose_step(rng, geom_p);
  if (proposed < k_min || proposed > k_max) return k;
  const double log_ratio = logp(proposed) - logp(k);
  if (log_ratio >= 0.0 || std::log(rng.uniform()) < log_ratio) {
    return proposed;
  }
  return k;
}

}  // namespace detail

// Single random-walk Metropolis update of k under the exact k-posterior.
int mh_step(int current_k, const Dataset& data, const HyperParams& hp,
            Rng& rng, double geom_p = 0.3);

struct ChainResult {
  std::vector<PosteriorDraw> draws;
  long long accepted = 0;   // accepted k-moves over all iterations
  long long proposed_in_range = 0;
  double acceptance_rate() const {
    return proposed_in_range > 0
               ? static_cast<double>(accepted) / proposed_in_range
               : 0.0;
  }
};

// Runs the full sampler: each iteration moves k by one Metropolis step,
// then draws sigma^2 and omega exactly from their conditionals. Records
// the iterations past burn-in. Deterministic given (data, hp, cfg).
ChainResult run_chain(const Dataset& data, const HyperParams& hp,
                      const ChainConfig& cfg);

// Streaming variant; the visitor sees each retained draw.
ChainResult run_chain(const Dataset& data, const HyperParams& hp,
                      const ChainConfig& cfg, bool keep_draws,
                      const std::function<void(const PosteriorDraw&)>& visit);

}  // namespace monobayes

#endif  // MONOBAYES_SAMPLER_HPP_
