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

#include "ctwb/attribute.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ctwb {

AttributeRef::AttributeRef(std::string substrate_id, std::string name,
                           AttrDesc desc)
    : substrate_(std::move(substrate_id)),
      name_(std::move(name)),
      desc_(std::make_shared<const AttrDesc>(std::move(desc))) {}

AttributeRef AttributeRef::finite_set(std::string substrate_id, std::string name,
                                      std::vector<std::string> states) {
  if (states.empty()) {
    throw std::invalid_argument("attribute '" + name + "' denotes no state");
  }
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  return AttributeRef(std::move(substrate_id), std::move(name),
                      FiniteSetDesc{std::move(states)});
}

AttributeRef AttributeRef::projector_attr(std::string substrate_id,
                                          std::string name, CMat proj) {
  if (!is_projector(proj, 1e-10)) {
    throw std::invalid_argument("attribute '" + name + "' is not a projector");
  }
  if (psd_rank(proj) < 1) {
    throw std::invalid_argument("attribute '" + name + "' has rank 0");
  }
  return AttributeRef(std::move(substrate_id), std::move(name),
                      ProjectorDesc{std::move(proj)});
}

AttributeRef AttributeRef::product(const AttributeRef& left,
                                   const AttributeRef& right) {
  std::string id = left.substrate() + "+" + right.substrate();
  std::string name = "(" + (left.name().empty() ? left.text() : left.name()) +
                     "," + (right.name().empty() ? right.text() : right.name()) +
                     ")";
  return AttributeRef(std::move(id), std::move(name),
                      ProductDesc{std::make_shared<const AttributeRef>(left),
                                  std::make_shared<const AttributeRef>(right)});
}

AttributeRef AttributeRef::empty(std::string substrate_id) {
  return AttributeRef(std::move(substrate_id), "(empty)", EmptyDesc{});
}

bool AttributeRef::is_product() const {
  return desc_ && std::holds_alternative<ProductDesc>(*desc_);
}

bool AttributeRef::is_empty_desc() const {
  return desc_ && std::holds_alternative<EmptyDesc>(*desc_);
}

std::string AttributeRef::text() const {
  if (!desc_) return "(null)";
  std::ostringstream os;
  if (const auto* f = std::get_if<FiniteSetDesc>(desc_.get())) {
    os << "{";
    for (std::size_t i = 0; i < f->states.size(); ++i) {
      if (i) os << ",";
      os << f->states[i];
    }
    os << "}";
  } else if (const auto* p = std::get_if<ProjectorDesc>(desc_.get())) {
    os << "proj(rank " << psd_rank(p->proj) << ", dim " << p->proj.rows() << ")";
  } else if (const auto* pr = std::get_if<ProductDesc>(desc_.get())) {
    os << "(" << pr->left->text() << "," << pr->right->text() << ")";
  } else {
    os << "(empty)";
  }
  return os.str();
}

}  // namespace ctwb
