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

#include "monobayes/series_io.hpp"

#include <doctest.h>

#include <sstream>
#include <stdexcept>

using namespace monobayes;

TEST_CASE("one value per line with comments") {
  std::istringstream in(
      "# annual anomalies\n"
      "0.25\n"
      "\n"
      "-0.5\n"
      "1e-3\n");
  const Dataset data = parse_series(in);
  REQUIRE(data.n() == 3);
  CHECK(data.y[0] == doctest::Approx(0.25));
  CHECK(data.y[1] == doctest::Approx(-0.5));
  CHECK(data.y[2] == doctest::Approx(0.001));
}

TEST_CASE("two columns use the second as the response") {
  std::istringstream in(
      "1850, -0.374\n"
      "1851, -0.218\n"
      "1852, -0.228\n"
      "1853, -0.269\n");
  const Dataset data = parse_series(in);
  REQUIRE(data.n() == 4);
  CHECK(data.y[0] == doctest::Approx(-0.374));
  CHECK(data.y[3] == doctest::Approx(-0.269));
}

TEST_CASE("time column must be equispaced") {
  std::istringstream in(
      "1850,0.1\n"
      "1851,0.2\n"
      "1853,0.3\n");
  CHECK_THROWS_AS(parse_series(in), std::runtime_error);

  std::istringstream decreasing(
      "3,0.1\n"
      "2,0.2\n"
      "1,0.3\n");
  CHECK_THROWS_AS(parse_series(decreasing), std::runtime_error);
}

TEST_CASE("malformed inputs") {
  SUBCASE("empty stream") {
    std::istringstream in("# nothing here\n");
    CHECK_THROWS_AS(parse_series(in), std::runtime_error);
  }
  SUBCASE("bad number reports the line") {
    std::istringstream in("0.5\nabc\n");
    CHECK_THROWS_WITH_AS(parse_series(in),
                         doctest::Contains("line 2"), std::runtime_error);
  }
  SUBCASE("three columns rejected") {
    std::istringstream in("1,2,3\n");
    CHECK_THROWS_AS(parse_series(in), std::runtime_error);
  }
  SUBCASE("mixed column counts rejected") {
    std::istringstream in("1\n2,3\n");
    CHECK_THROWS_AS(parse_series(in), std::runtime_error);
  }
  SUBCASE("single value is too short") {
    std::istringstream in("1.5\n");
    CHECK_THROWS_AS(parse_series(in), std::invalid_argument);
  }
  SUBCASE("non-finite responses rejected") {
    std::istringstream in("1.5\nnan\n0.5\n");
    CHECK_THROWS_AS(parse_series(in), std::invalid_argument);
    std::istringstream inf_in("1.5\ninf\n");
    CHECK_THROWS_AS(parse_series(inf_in), std::invalid_argument);
  }
}

TEST_CASE("series writer emits one value per line") {
  std::ostringstream out;
  write_series(out, Dataset{{0.5, -1.25, 3.0}});
  CHECK(out.str() == "0.5\n-1.25\n3\n");
}

TEST_CASE("table writers") {
  ScenarioResult row;
  row.scenario = Scenario{4, 0.01, 100, 2, 500, 7};
  row.rejection_pct = 50.0;
  row.records = {{0, 0.9, 1, 0.2, 0.1}, {1, 0.1, 0, 0.2, 0.1}};
  const std::vector<ScenarioResult> table = {row};

  std::ostringstream out;
  write_rejection_table(out, table);
  CHECK(out.str() ==
        "function,sigma2,n,replications,iterations,seed,rejection_pct\n"
        "f4,0.01,100,2,500,7,50\n");

  std::ostringstream log;
  write_replication_log(log, table);
  CHECK(log.str() ==
        "function,n,replication,pi_hat,delta,M0,sigma_hat\n"
        "f4,100,0,0.9,1,0.2,0.1\n"
        "f4,100,1,0.1,0,0.2,0.1\n");
}

TEST_CASE("bf histogram writer flags infinities") {
  BfStudyResult result;
  result.log_bfs = {0.5, 1.5};
  result.histogram = {{0.0, 1.0, 1}, {1.0, 2.0, 1}};
  result.plus_infinite = 2;
  std::ostringstream out;
  write_bf_histogram(out, result);
  CHECK(out.str() ==
        "bin_left,bin_right,count\n"
        "0,1,1\n"
        "1,2,1\n"
        "inf,inf,2\n");
}

TEST_CASE("calibration writer") {
  CalibrationResult result;
  result.mu = 0.05;
  result.lambda = 0.1;
  result.constraint_met = true;
  result.n = 100;
  result.grid = {{0.05, 0.1, 0.04}};
  std::ostringstream out;
  write_calibration(out, result);
  CHECK(out.str() ==
        "# chosen mu=0.05 lambda=0.1 constraint_met=1 n=100\n"
        "mu,lambda,rejection_rate\n"
        "0.05,0.1,0.04\n");
}
