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

#include "monobayes/bench.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace monobayes;

TEST_CASE("benchmark function values") {
  CHECK(benchmark_function(9, 0.3) == 0.0);
  CHECK(benchmark_function(2, 1.0) == doctest::Approx(0.15));
  CHECK(benchmark_function(4, 0.0) == doctest::Approx(-0.5));
  CHECK(benchmark_function(8, 1.0) == doctest::Approx(-0.5));
  CHECK(benchmark_function(3, 0.5) == doctest::Approx(0.2));
  CHECK_THROWS_AS(benchmark_function(0, 0.5), std::domain_error);
  CHECK_THROWS_AS(benchmark_function(10, 0.5), std::domain_error);

  SUBCASE("five and six are sloped versions of three and four") {
    for (double x = 0.0; x <= 1.0; x += 0.01) {
      CHECK(benchmark_function(5, x) ==
            doctest::Approx(-0.2 * x + benchmark_function(3, x))
                .epsilon(1e-12));
      CHECK(benchmark_function(6, x) ==
            doctest::Approx(-0.2 * x + benchmark_function(4, x))
                .epsilon(1e-12));
    }
  }
  SUBCASE("default noise levels") {
    CHECK(default_sigma2(1) == 0.01);
    CHECK(default_sigma2(5) == 0.004);
    CHECK(default_sigma2(6) == 0.006);
    CHECK(default_sigma2(9) == 0.01);
    CHECK_THROWS_AS(default_sigma2(11), std::domain_error);
  }
}

TEST_CASE("benchmark functions against the monotone class") {
  // 1..7 depart upward somewhere; 8 and 9 are non-increasing, so every
  // projection stays monotone.
  const int n = 400;
  for (int id = 1; id <= 7; ++id) {
    bool found = false;
    for (int k = 2; k < 60 && !found; ++k) {
      found = discrepancy(kl_projection(benchmark_function(id), n, k)) > 0.0;
    }
    CAPTURE(id);
    CHECK(found);
  }
  for (int id : {8, 9}) {
    for (int k = 1; k < 60; ++k) {
      CHECK(discrepancy(kl_projection(benchmark_function(id), n, k)) == 0.0);
    }
  }
}

TEST_CASE("simulate_dataset") {
  SUBCASE("noiseless limit reproduces the function") {
    Rng rng(3);
    const Dataset data =
        simulate_dataset(benchmark_function(4), 1e-18, 50, rng);
    for (int i = 1; i <= 50; ++i) {
      CHECK(std::fabs(data.y[i - 1] - benchmark_function(4, i / 50.0)) <
            1e-8);
    }
  }
  SUBCASE("residual mean is centered") {
    Rng rng(4);
    const int n = 4000;
    const double sigma2 = 0.04;
    const Dataset data =
        simulate_dataset(benchmark_function(2), sigma2, n, rng);
    double acc = 0.0;
    for (int i = 1; i <= n; ++i) {
      acc += data.y[i - 1] - benchmark_function(2, static_cast<double>(i) / n);
    }
    CHECK(std::fabs(acc / n) < 3.0 * std::sqrt(sigma2 / n));
  }
  SUBCASE("deterministic given the seed") {
    Rng r1(5), r2(5);
    const Dataset a = simulate_dataset(benchmark_function(1), 0.01, 30, r1);
    const Dataset b = simulate_dataset(benchmark_function(1), 0.01, 30, r2);
    CHECK(a.y == b.y);
  }
}

TEST_CASE("scenario runs") {
  Scenario scenario;
  scenario.function_id = 1;
  scenario.sigma2 = 0.01;
  scenario.n = 60;
  scenario.replications = 6;
  scenario.iterations = 800;
  scenario.seed = 11;

  BenchOptions opts;
  opts.threads = 2;

  const ScenarioResult result = run_scenario(scenario, opts);
  REQUIRE(result.records.size() == 6);
  CHECK(result.rejection_pct >= 0.0);
  CHECK(result.rejection_pct <= 100.0);
  long long rejections = 0;
  for (const ReplicationRecord& rec : result.records) {
    CHECK(rec.pi_hat >= 0.0);
    CHECK(rec.pi_hat <= 1.0);
    rejections += rec.delta;
  }
  CHECK(result.rejection_pct ==
        doctest::Approx(100.0 * rejections / 6.0));

  SUBCASE("thread count never changes the table") {
    BenchOptions serial = opts;
    serial.threads = 1;
    const ScenarioResult again = run_scenario(scenario, serial);
    CHECK(again.rejection_pct == result.rejection_pct);
    for (std::size_t i = 0; i < again.records.size(); ++i) {
      CHECK(again.records[i].pi_hat == result.records[i].pi_hat);
    }
  }

  SUBCASE("rejection_table keeps scenario order") {
    std::vector<Scenario> list = {scenario, scenario};
    list[1].function_id = 9;
    const auto table = rejection_table(list, opts);
    REQUIRE(table.size() == 2);
    CHECK(table[0].scenario.function_id == 1);
    CHECK(table[1].scenario.function_id == 9);
  }
}

TEST_CASE("consistency sweep") {
  Scenario base;
  base.sigma2 = 0.01;
  base.replications = 4;
  base.iterations = 600;
  base.seed = 3;

  BenchOptions opts;
  opts.threads = 2;

  const std::vector<int> ns = {40, 80};
  const auto curve = consistency_sweep(2, ns, base, opts);
  REQUIRE(curve.size() == 2);
  CHECK(curve[0].n == 40);
  CHECK(curve[1].n == 80);

  const std::vector<int> bad = {80, 40};
  CHECK_THROWS_AS(consistency_sweep(2, bad, base, opts),
                  std::invalid_argument);
}
