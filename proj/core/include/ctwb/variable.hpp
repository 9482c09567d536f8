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
#include <string>
#include <vector>

#include "ctwb/attribute.hpp"

namespace ctwb {

class TheoryBackend;

// A label-indexed family of pairwise-disjoint attributes on one substrate.
class Variable {
 public:
  // Validates: at least one label, all attributes on one substrate, pairwise
  // disjoint according to the backend.
  static Variable make(const TheoryBackend& backend, std::string name,
                       std::map<std::string, AttributeRef> attrs);

  // No disjointness check; for internal use where validity is structural.
  static Variable unchecked(std::string name,
                            std::map<std::string, AttributeRef> attrs);

  const std::string& name() const { return name_; }
  const std::string& substrate() const { return substrate_; }
  std::size_t arity() const { return attrs_.size(); }
  std::vector<std::string> labels() const;
  const AttributeRef& at(const std::string& label) const;
  const std::map<std::string, AttributeRef>& attributes() const { return attrs_; }

  // Same attributes under new labels. `relabel` must be a bijection from the
  // current label set.
  Variable relabeled(const std::map<std::string, std::string>& relabel) const;

 private:
  std::string name_;
  std::string substrate_;
  std::map<std::string, AttributeRef> attrs_;
};

}  // namespace ctwb
