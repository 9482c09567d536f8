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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctwb/attribute.hpp"
#include "ctwb/variable.hpp"

namespace ctwb {

// A finite set of input-attribute -> output-attribute pairs over a fixed
// substrate. Input attributes are pairwise disjoint and the list is
// non-empty.
//
// Tasks built by the kernel constructors carry their shape so backends can
// apply shape-specific decision rules; hand-assembled tasks are General and
// are decided by closure search only.
struct Task {
  enum class Shape { General, Copy, Permutation, Measurement };

  std::string substrate;
  std::vector<std::pair<AttributeRef, AttributeRef>> pairs;

  Shape shape = Shape::General;
  std::optional<Variable> source_variable;
  std::optional<Variable> output_variable;            // Measurement only
  std::optional<std::string> blank_label;             // Copy / Measurement
  std::optional<std::map<std::string, std::string>> permutation;

  std::size_t size() const { return pairs.size(); }
  std::string text() const;
};

}  // namespace ctwb
