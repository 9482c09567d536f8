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

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ctwb/linalg.hpp"

namespace ctwb {

// An attribute is a set of states of a substrate. The descriptor flavour is
// backend-specific: a finite set of state labels, a projector onto a
// subspace, or a pair of attributes on the factors of a composite substrate.
//
// The empty descriptor denotes the attribute holding no state. It is never
// produced by theory declarations; it can arise as the value of the bar
// operation when nothing is distinguishable from the argument.

struct FiniteSetDesc {
  std::vector<std::string> states;  // sorted, unique, non-empty
};

struct ProjectorDesc {
  CMat proj;  // Hermitian idempotent, rank >= 1
};

class AttributeRef;

struct ProductDesc {
  std::shared_ptr<const AttributeRef> left;
  std::shared_ptr<const AttributeRef> right;
};

struct EmptyDesc {};

using AttrDesc = std::variant<FiniteSetDesc, ProjectorDesc, ProductDesc, EmptyDesc>;

class AttributeRef {
 public:
  AttributeRef() = default;
  AttributeRef(std::string substrate_id, std::string name, AttrDesc desc);

  static AttributeRef finite_set(std::string substrate_id, std::string name,
                                 std::vector<std::string> states);
  static AttributeRef projector_attr(std::string substrate_id, std::string name,
                                     CMat proj);
  static AttributeRef product(const AttributeRef& left, const AttributeRef& right);
  static AttributeRef empty(std::string substrate_id);

  const std::string& substrate() const { return substrate_; }
  const std::string& name() const { return name_; }
  const AttrDesc& desc() const { return *desc_; }

  bool is_product() const;
  bool is_empty_desc() const;

  // Compact descriptor text for reports: "{1,2}", "proj(rank 1, dim 2)", ...
  std::string text() const;

 private:
  std::string substrate_;
  std::string name_;
  std::shared_ptr<const AttrDesc> desc_;
};

}  // namespace ctwb
