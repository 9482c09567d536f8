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

#include "ctwb/variable.hpp"

#include <stdexcept>

#include "ctwb/backend.hpp"

namespace ctwb {

Variable Variable::make(const TheoryBackend& backend, std::string name,
                        std::map<std::string, AttributeRef> attrs) {
  if (attrs.empty()) {
    throw std::invalid_argument("variable '" + name + "' has no labels");
  }
  const std::string& sub = attrs.begin()->second.substrate();
  for (const auto& [label, attr] : attrs) {
    if (attr.substrate() != sub) {
      throw std::invalid_argument("variable '" + name +
                                  "' mixes substrates: " + attr.substrate() +
                                  " vs " + sub);
    }
  }
  for (auto it = attrs.begin(); it != attrs.end(); ++it) {
    for (auto jt = std::next(it); jt != attrs.end(); ++jt) {
      if (!backend.attrs_disjoint(it->second, jt->second)) {
        throw std::invalid_argument(
            "variable '" + name + "': attributes " + it->first + " and " +
            jt->first + " overlap (" +
            backend.overlap_description(it->second, jt->second) + ")");
      }
    }
  }
  Variable v;
  v.name_ = std::move(name);
  v.substrate_ = sub;
  v.attrs_ = std::move(attrs);
  return v;
}

Variable Variable::unchecked(std::string name,
                             std::map<std::string, AttributeRef> attrs) {
  if (attrs.empty()) {
    throw std::invalid_argument("variable '" + name + "' has no labels");
  }
  Variable v;
  v.name_ = std::move(name);
  v.substrate_ = attrs.begin()->second.substrate();
  v.attrs_ = std::move(attrs);
  return v;
}

std::vector<std::string> Variable::labels() const {
  std::vector<std::string> out;
  out.reserve(attrs_.size());
  for (const auto& [label, attr] : attrs_) out.push_back(label);
  return out;
}

const AttributeRef& Variable::at(const std::string& label) const {
  auto it = attrs_.find(label);
  if (it == attrs_.end()) {
    throw std::invalid_argument("variable '" + name_ + "' has no label '" +
                                label + "'");
  }
  return it->second;
}

Variable Variable::relabeled(const std::map<std::string, std::string>& relabel) const {
  if (relabel.size() != attrs_.size()) {
    throw std::invalid_argument("relabeling is not a bijection on labels");
  }
  std::map<std::string, AttributeRef> out;
  for (const auto& [label, attr] : attrs_) {
    auto it = relabel.find(label);
    if (it == relabel.end()) {
      throw std::invalid_argument("relabeling misses label '" + label + "'");
    }
    if (!out.emplace(it->second, attr).second) {
      throw std::invalid_argument("relabeling collides on '" + it->second + "'");
    }
  }
  Variable v;
  v.name_ = name_;
  v.substrate_ = substrate_;
  v.attrs_ = std::move(out);
  return v;
}

}  // namespace ctwb
