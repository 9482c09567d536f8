// Copyright 2026 The ctwb Authors
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

#include "ctwb/task.hpp"

#include <sstream>

namespace ctwb {

std::string Task::text() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) os << ", ";
    os << pairs[i].first.text() << " -> " << pairs[i].second.text();
  }
  os << "}";
  return os.str();
}

}  // namespace ctwb
