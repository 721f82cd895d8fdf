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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace monobayes {

namespace {

constexpr double kGridRelTol = 1e-9;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& token, int line_no) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": cannot parse number from '" + token + "'");
  }
  if (consumed != token.size()) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": trailing characters after number in '" +
                             token + "'");
  }
  return value;
}

// The time column, affinely mapped onto (0,1], has to coincide with the
// implicit grid i/n; anything else is a non-equispaced design.
void check_design_column(const std::vector<double>& t) {
  const int n = static_cast<int>(t.size());
  const double span = t.back() - t.front();
  if (!(span > 0.0)) {
    throw std::runtime_error("time column must be strictly increasing");
  }
  for (int i = 1; i <= n; ++i) {
    const double u =
        (t[i - 1] - t.front()) / span * (n - 1.0) / n + 1.0 / n;
    const double want = static_cast<double>(i) / n;
    if (std::fabs(u - want) > kGridRelTol * std::max(1.0, std::fabs(want))) {
      throw std::runtime_error(
          "time column is not equispaced (row " + std::to_string(i) +
          "); only the implicit design grid i/n is supported");
    }
  }
}

std::string format_double(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.10g", v);
  return buffer;
}

}  // namespace

Dataset parse_series(std::istream& in) {
  std::vector<double> values;
  std::vector<double> times;
  int columns = 0;  // fixed by the first data line
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    const auto comma = body.find(',');
    const int cols = comma == std::string::npos ? 1 : 2;
    if (columns == 0) columns = cols;
    if (cols != columns) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": inconsistent column count");
    }
    if (cols == 1) {
      values.push_back(parse_number(body, line_no));
    } else {
      if (body.find(',', comma + 1) != std::string::npos) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": expected at most two columns");
      }
      times.push_back(parse_number(trim(body.substr(0, comma)), line_no));
      values.push_back(
          parse_number(trim(body.substr(comma + 1)), line_no));
    }
  }
  if (values.empty()) {
    throw std::runtime_error("input holds no data lines");
  }
  if (!times.empty()) check_design_column(times);
  return make_dataset(std::move(values));
}

Dataset load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open input file: " + path);
  }
  try {
    return parse_series(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_series(std::ostream& out, const Dataset& data) {
  for (double v : data.y) out << format_double(v) << "\n";
}

void write_rejection_table(std::ostream& out,
                           std::span<const ScenarioResult> table) {
  out << "function,sigma2,n,replications,iterations,seed,rejection_pct\n";
  for (const ScenarioResult& row : table) {
    const Scenario& s = row.scenario;
    out << "f" << s.function_id << ',' << format_double(s.sigma2) << ','
        << s.n << ',' << s.replications << ',' << s.iterations << ','
        << s.seed << ',' << format_double(row.rejection_pct) << "\n";
  }
}

void write_replication_log(std::ostream& out,
                           std::span<const ScenarioResult> table) {
  out << "function,n,replication,pi_hat,delta,M0,sigma_hat\n";
  for (const ScenarioResult& row : table) {
    for (const ReplicationRecord& rec : row.records) {
      out << "f" << row.scenario.function_id << ',' << row.scenario.n << ','
          << rec.replication << ',' << format_double(rec.pi_hat) << ','
          << rec.delta << ',' << format_double(rec.m0) << ','
          << format_double(rec.sigma_hat) << "\n";
    }
  }
}

void write_sweep(std::ostream& out, int function_id,
                 std::span<const SweepPoint> curve) {
  out << "function,n,rejection_pct\n";
  for (const SweepPoint& point : curve) {
    out << "f" << function_id << ',' << point.n << ','
        << format_double(point.rejection_pct) << "\n";
  }
}

void write_calibration(std::ostream& out, const CalibrationResult& result) {
  out << "# chosen mu=" << format_double(result.mu)
      << " lambda=" << format_double(result.lambda)
      << " constraint_met=" << (result.constraint_met ? 1 : 0)
      << " n=" << result.n << "\n";
  out << "mu,lambda,rejection_rate\n";
  for (const CalibrationCell& cell : result.grid) {
    out << format_double(cell.mu) << ',' << format_double(cell.lambda) << ','
        << format_double(cell.rejection_rate) << "\n";
  }
}

void write_bf_histogram(std::ostream& out, const BfStudyResult& result) {
  out << "bin_left,bin_right,count\n";
  for (const HistogramBin& bin : result.histogram) {
    out << format_double(bin.lo) << ',' << format_double(bin.hi) << ','
        << bin.count << "\n";
  }
  if (result.minus_infinite > 0) {
    out << "-inf,-inf," << result.minus_infinite << "\n";
  }
  if (result.plus_infinite > 0) {
    out << "inf,inf," << result.plus_infinite << "\n";
  }
}

void write_bf_values(std::ostream& out, const BfStudyResult& result) {
  out << "replication,log_bf\n";
  for (std::size_t r = 0; r < result.log_bfs.size(); ++r) {
    out << r << ',' << format_double(result.log_bfs[r]) << "\n";
  }
}

}  // namespace monobayes
