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

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "monobayes/bench.hpp"
#include "monobayes/rng.hpp"

using namespace monobayes;

namespace {

// Reference bin assignment straight from the partition definition:
// design point i/n falls in [(j-1)/k, j/k), the last bin closed at 1.
// Done in integer arithmetic so boundaries are exact.
int bin_by_interval_scan(int i, int n, int k) {
  const long long ik = static_cast<long long>(i) * k;
  for (int j = 1; j <= k; ++j) {
    const long long lo = static_cast<long long>(j - 1) * n;
    const long long hi = static_cast<long long>(j) * n;
    if (ik >= lo && (ik < hi || j == k)) return j;
  }
  return -1;
}

// Pairwise maximum of omega_j - omega_i over j >= i.
double discrepancy_pairwise(const std::vector<double>& omega) {
  double best = 0.0;
  for (std::size_t j = 0; j < omega.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      best = std::max(best, omega[j] - omega[i]);
    }
  }
  return best;
}

bool non_increasing(const std::vector<double>& omega) {
  for (std::size_t i = 1; i < omega.size(); ++i) {
    if (omega[i] > omega[i - 1]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("bin_index endpoints and interior") {
  CHECK(bin_index(0.0, 4) == 1);
  CHECK(bin_index(1.0, 4) == 4);
  CHECK(bin_index(0.5, 4) == 3);  // floor(0.5*4) + 1
  CHECK(bin_index(0.9999999, 4) == 4);
  CHECK(bin_index(0.25, 4) == 2);  // boundary goes right
  CHECK(bin_index(0.3, 1) == 1);

  CHECK_THROWS_AS(bin_index(-0.1, 4), std::domain_error);
  CHECK_THROWS_AS(bin_index(1.1, 4), std::domain_error);
  CHECK_THROWS_AS(bin_index(0.5, 0), std::domain_error);
}

TEST_CASE("design_bin matches the interval scan and bin_index") {
  for (int n = 2; n <= 80; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int i = 1; i <= n; ++i) {
        const int want = bin_by_interval_scan(i, n, k);
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(i);
        REQUIRE(design_bin(i, n, k) == want);
        // Off the bin boundaries the margin is at least 1/n, far above
        // rounding error, so the floating path must agree. A design
        // point exactly on a boundary (i*k divisible by n) has no double
        // representation, which is why design_bin exists.
        if ((static_cast<long long>(i) * k) % n != 0) {
          REQUIRE(bin_index(static_cast<double>(i) / n, k) == want);
        }
      }
    }
  }

  SUBCASE("exactly representable boundaries go to the right bin") {
    for (int k : {2, 4, 8, 16, 32}) {
      for (int j = 1; j < k; ++j) {
        const double x = static_cast<double>(j) / k;  // dyadic, exact
        REQUIRE(bin_index(x, k) == j + 1);
      }
    }
  }
}

TEST_CASE("bin_stats on tiny datasets") {
  SUBCASE("single bin") {
    const Dataset data = make_dataset({1.0, 3.0});
    const BinStats stats = bin_stats(data, 1, 0.0);
    REQUIRE(stats.counts.size() == 1);
    CHECK(stats.counts[0] == 2);
    CHECK(stats.means[0] == doctest::Approx(2.0));
    CHECK(stats.sse[0] == doctest::Approx(2.0));
  }
  SUBCASE("two points, two bins: both land in the upper bin") {
    // Design points are 0.5 and 1.0; [0, 0.5) is empty and takes the
    // prior mean.
    const Dataset data = make_dataset({1.0, 2.0});
    const BinStats stats = bin_stats(data, 2, -7.0);
    CHECK(stats.counts[0] == 0);
    CHECK(stats.counts[1] == 2);
    CHECK(stats.means[0] == doctest::Approx(-7.0));
    CHECK(stats.means[1] == doctest::Approx(1.5));
    CHECK(stats.sse[0] == 0.0);
    CHECK(stats.sse[1] == doctest::Approx(0.5));
  }
  SUBCASE("constant data has zero sum of squares at any k") {
    const Dataset data = make_dataset(std::vector<double>(17, 3.25));
    for (int k = 1; k <= data.n(); ++k) {
      const BinStats stats = bin_stats(data, k, 0.0);
      for (double s : stats.sse) CHECK(s == 0.0);
    }
  }
  SUBCASE("counts always sum to n") {
    Rng rng(11);
    for (int n : {2, 3, 7, 19, 53, 100}) {
      std::vector<double> y(n);
      for (double& v : y) v = rng.normal();
      const Dataset data = make_dataset(y);
      for (int k = 1; k <= n; ++k) {
        const BinStats stats = bin_stats(data, k, 0.0);
        long long total = 0;
        for (long long c : stats.counts) total += c;
        REQUIRE(total == n);
      }
    }
  }
  SUBCASE("k out of range") {
    const Dataset data = make_dataset({1.0, 2.0});
    CHECK_THROWS_AS(bin_stats(data, 3, 0.0), std::domain_error);
    CHECK_THROWS_AS(bin_stats(data, 0, 0.0), std::domain_error);
  }
}

TEST_CASE("discrepancy basics") {
  CHECK(discrepancy(StepFunction{3, {3.0, 2.0, 1.0}}) == 0.0);
  CHECK(discrepancy(StepFunction{2, {1.0, 2.0}}) == doctest::Approx(1.0));
  CHECK(discrepancy(StepFunction{3, {3.0, 1.0, 2.0}}) == doctest::Approx(1.0));
  CHECK(discrepancy(std::span<const double>()) == 0.0);
}

TEST_CASE("discrepancy equals the pairwise maximum exactly") {
  Rng rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_u64() % 50);
    std::vector<double> omega(k);
    for (double& v : omega) v = 3.0 * rng.normal();
    const double fast = discrepancy(std::span<const double>(omega));
    const double slow = discrepancy_pairwise(omega);
    REQUIRE(fast == slow);  // same subtractions, bit-identical
    REQUIRE(fast >= 0.0);
    REQUIRE((fast == 0.0) == non_increasing(omega));
  }
}

TEST_CASE("discrepancy shift invariance and positive scaling") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(rng.next_u64() % 20);
    std::vector<double> omega(k), shifted(k), scaled(k);
    const double c = rng.normal(0.0, 5.0);
    const double s = std::exp(rng.normal());
    for (int j = 0; j < k; ++j) {
      omega[j] = rng.normal();
      shifted[j] = omega[j] + c;
      scaled[j] = s * omega[j];
    }
    const double h = discrepancy(std::span<const double>(omega));
    CHECK(discrepancy(std::span<const double>(shifted)) ==
          doctest::Approx(h).epsilon(1e-12));
    CHECK(discrepancy(std::span<const double>(scaled)) ==
          doctest::Approx(s * h).epsilon(1e-12));
  }
}

TEST_CASE("step function evaluation uses the closed last bin") {
  const StepFunction sf{4, {4.0, 3.0, 2.0, 1.0}};
  CHECK(sf(0.0) == 4.0);
  CHECK(sf(0.25) == 3.0);
  CHECK(sf(0.999) == 1.0);
  CHECK(sf(1.0) == 1.0);
}

TEST_CASE("kl_projection") {
  SUBCASE("constant function projects to constant levels") {
    const StepFunction sf = kl_projection([](double) { return 4.5; }, 37, 5);
    for (double w : sf.omega) CHECK(w == doctest::Approx(4.5));
  }
  SUBCASE("non-increasing functions stay non-increasing") {
    const auto f = [](double x) { return 1.0 / (1.0 + x); };
    for (int n : {11, 50, 97}) {
      for (int k = 1; k < n; ++k) {
        CHECK(discrepancy(kl_projection(f, n, k)) == 0.0);
      }
    }
  }
  SUBCASE("empty bin throws once k reaches n") {
    const auto f = [](double x) { return x; };
    CHECK_THROWS_AS(kl_projection(f, 12, 12), std::domain_error);
    CHECK_THROWS_AS(kl_projection(f, 12, 13), std::domain_error);
  }
  SUBCASE("local bump of the seventh benchmark function") {
    // The bump around x = 0.5 only shows up in the projection once the
    // bins are narrow enough. On a fine grid the first positive k is 8
    // (boundary alignment makes k = 9 monotone again).
    const auto f7 = benchmark_function(7);
    const int n = 100000;
    for (int k = 2; k <= 7; ++k) {
      CHECK(discrepancy(kl_projection(f7, n, k)) == 0.0);
    }
    CHECK(discrepancy(kl_projection(f7, n, 8)) > 0.02);
    CHECK(discrepancy(kl_projection(f7, n, 9)) == 0.0);
    CHECK(discrepancy(kl_projection(f7, n, 13)) > 0.02);
    CHECK(discrepancy(kl_projection(f7, n, 14)) > 0.03);
  }
}

TEST_CASE("design_rms_distance") {
  const auto zero = [](double) { return 0.0; };
  const auto identity = [](double x) { return x; };

  CHECK(design_rms_distance(identity, identity, 10) == 0.0);

  SUBCASE("constant offset") {
    const auto f = [](double x) { return x + 2.5; };
    CHECK(design_rms_distance(f, identity, 23) == doctest::Approx(2.5));
  }
  SUBCASE("matches a direct grid sum") {
    // n = 2 grid is {0.5, 1.0}: mean square (0.25 + 1)/2 = 0.625.
    CHECK(design_rms_distance(identity, zero, 2) ==
          doctest::Approx(std::sqrt(0.625)).epsilon(1e-14));
    for (int n : {3, 17, 64}) {
      double acc = 0.0;
      for (int i = 1; i <= n; ++i) {
        const double x = static_cast<double>(i) / n;
        acc += x * x;
      }
      CHECK(design_rms_distance(identity, zero, n) ==
            doctest::Approx(std::sqrt(acc / n)).epsilon(1e-14));
    }
  }
}
