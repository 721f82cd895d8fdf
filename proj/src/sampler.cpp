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

#include "monobayes/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monobayes {

void ChainConfig::validate() const {
  if (iterations < 1) {
    throw std::invalid_argument("chain needs at least one iteration");
  }
  if (resolved_burn_in() >= iterations) {
    throw std::invalid_argument("burn-in must be smaller than the iteration count");
  }
  if (!(proposal_geom_p > 0.0 && proposal_geom_p < 1.0)) {
    throw std::invalid_argument("proposal_geom_p must lie in (0,1)");
  }
  if (k_init < 1) {
    throw std::invalid_argument("k_init must be positive");
  }
}

int propose_step(Rng& rng, double geom_p) {
  const long long magnitude = 1 + rng.geometric(geom_p);
  const bool negative = rng.uniform() < 0.5;
  return static_cast<int>(negative ? -magnitude : magnitude);
}

int mh_step(int current_k, const Dataset& data, const HyperParams& hp,
            Rng& rng, double geom_p) {
  return detail::mh_step_impl(
      current_k, hp.k_min, hp.effective_k_max(data.n()), geom_p,
      [&](int k) { return log_posterior_k_unnorm(data, k, hp); }, rng);
}

ChainResult run_chain(const Dataset& data, const HyperParams& hp,
                      const ChainConfig& cfg) {
  return run_chain(data, hp, cfg, /*keep_draws=*/true, nullptr);
}

ChainResult run_chain(const Dataset& data, const HyperParams& hp,
                      const ChainConfig& cfg, bool keep_draws,
                      const std::function<void(const PosteriorDraw&)>& visit) {
  cfg.validate();
  const StepPosterior posterior(data, hp);
  Rng rng(cfg.seed);

  ChainResult result;
  const long long burn = cfg.resolved_burn_in();
  if (keep_draws) {
    result.draws.reserve(static_cast<std::size_t>(cfg.iterations - burn));
  }

  int k = std::clamp(cfg.k_init, posterior.k_min(), posterior.k_max());
  PosteriorDraw draw;
  for (long long it = 0; it < cfg.iterations; ++it) {
    const int proposed = k + propose_step(rng, cfg.proposal_geom_p);
    if (proposed >= posterior.k_min() && proposed <= posterior.k_max()) {
      ++result.proposed_in_range;
      const double log_ratio =
          posterior.log_posterior_k(proposed) - posterior.log_posterior_k(k);
      if (log_ratio >= 0.0 || std::log(rng.uniform()) < log_ratio) {
        k = proposed;
        ++result.accepted;
      }
    }
    if (it < burn) continue;
    draw.k = k;
    draw.sigma2 = posterior.sample_sigma2(k, rng);
    posterior.sample_omega(k, draw.sigma2, rng, draw.omega);
    if (visit) visit(draw);
    if (keep_draws) result.draws.push_back(draw);
  }
  return result;
}

}  // namespace monobayes
