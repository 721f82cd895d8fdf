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

#ifndef MONOBAYES_DATASET_HPP_
#define MONOBAYES_DATASET_HPP_

#include <vector>

namespace monobayes {

// Responses observed on the implicit equispaced design grid x_i = i/n,
// i = 1..n. The grid itself is never stored.
struct Dataset {
  std::vector<double> y;

  int n() const { return static_cast<int>(y.size()); }
  double design_point(int i) const {  // i in 1..n
    return static_cast<double>(i) / static_cast<double>(n());
  }
};

// Validates n >= 2 and finiteness; throws std::invalid_argument.
Dataset make_dataset(std::vector<double> y);

// Negates every response in place. Testing for a monotone increasing
// trend reduces to testing the negated series for a non-increasing one.
Dataset negated(Dataset data);

}  // namespace monobayes

#endif  // MONOBAYES_DATASET_HPP_
