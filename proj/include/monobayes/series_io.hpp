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

#ifndef MONOBAYES_SERIES_IO_HPP_
#define MONOBAYES_SERIES_IO_HPP_

#include <iosfwd>
#include <string>

#include "monobayes/bayes_factor.hpp"
#include "monobayes/bench.hpp"
#include "monobayes/calibrate.hpp"
#include "monobayes/dataset.hpp"

namespace monobayes {

// Accepted input: one numeric value per line, or two comma-separated
// columns (time, value) where the second column is the response. Lines
// starting with '#' and blank lines are skipped; decimal point only.
// A time column must be equispaced: affinely normalized onto (0,1] it
// has to match the design grid i/n to relative tolerance 1e-9.
Dataset parse_series(std::istream& in);
Dataset load_series(const std::string& path);

void write_series(std::ostream& out, const Dataset& data);

// Delimited-text emitters for the experiment drivers.
void write_rejection_table(std::ostream& out,
                           std::span<const ScenarioResult> table);
void write_replication_log(std::ostream& out,
                           std::span<const ScenarioResult> table);
void write_sweep(std::ostream& out, int function_id,
                 std::span<const SweepPoint> curve);
void write_calibration(std::ostream& out, const CalibrationResult& result);
void write_bf_histogram(std::ostream& out, const BfStudyResult& result);
void write_bf_values(std::ostream& out, const BfStudyResult& result);

}  // namespace monobayes

#endif  // MONOBAYES_SERIES_IO_HPP_
