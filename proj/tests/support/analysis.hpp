// Copyright 2026 The qotto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Curve summaries shared by the unit tests and the acceptance run.
#pragma once

#include <cstddef>
#include <vector>

namespace qotto::testing {

// Interior samples strictly above both neighbours. A flat top counts once,
// provided the samples on either side of the plateau are lower.
inline int count_local_maxima(const std::vector<double>& y) {
  int count = 0;
  std::size_t i = 1;
  while (i + 1 < y.size()) {
    if (y[i] > y[i - 1]) {
      std::size_t j = i;
      while (j + 1 < y.size() && y[j + 1] == y[i]) ++j;
      if (j + 1 < y.size() && y[j + 1] < y[i]) ++count;
      i = j + 1;
    } else {
      ++i;
    }
  }
  return count;
}

}  // namespace qotto::testing
