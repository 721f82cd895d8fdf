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

#include "monobayes/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace monobayes {

Dataset make_dataset(std::vector<double> y) {
  if (y.size() < 2) {
    throw std::invalid_argument("dataset needs at least two responses, got " +
                                std::to_string(y.size()));
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!std::isfinite(y[i])) {
      throw std::invalid_argument("dataset response " + std::to_string(i + 1) +
                                  " is not finite");
    }
  }
  return Dataset{std::move(y)};
}

Dataset negated(Dataset data) {
  for (double& v : data.y) v = -v;
  return data;
}

}  // namespace monobayes
