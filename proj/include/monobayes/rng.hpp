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

#ifndef MONOBAYES_RNG_HPP_
#define MONOBAYES_RNG_HPP_

#include <cstdint>
#include <random>

namespace monobayes {

// Standard normal CDF.
double normal_cdf(double x);

// Standard normal quantile (Wichura's PPND16 rational approximation,
// relative error below 1e-15). Throws std::domain_error outside (0,1).
double normal_quantile(double p);

// Derives an independent stream seed from a base seed. Used to hand
// per-replication and pilot-chain seeds out of one user-visible seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// Random source with explicitly-coded distributions so that a seed pins
// the exact draw sequence regardless of the standard library in use.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on the open interval (0,1).
  double uniform() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal by quantile inversion.
  double normal() { return normal_quantile(uniform()); }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  // Gamma(shape, rate) with mean shape/rate (Marsaglia-Tsang squeeze).
  double gamma(double shape, double rate);

  // Inverse-Gamma(shape, rate): density proportional to
  // x^{-(shape+1)} exp(-rate/x).
  double inverse_gamma(double shape, double rate) {
    return rate / gamma(shape, 1.0);
  }

  // Count of failures before the first success, P(G=g) = p (1-p)^g.
  long long geometric(double p);

 private:
  std::mt19937_64 gen_;
};

}  // namespace monobayes

#endif  // MONOBAYES_RNG_HPP_
