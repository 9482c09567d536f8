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
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ctwb/backend.hpp"
#include "ctwb/finite_theory.hpp"
#include "ctwb/kernel.hpp"

namespace ctwb {

// Kernel adapter for a finite ontic-state theory.
//
// Tasks on the substrate itself are decided by scanning the (cached, capped)
// monoid closure of the declared generators. Tasks on the composite of the
// substrate with a replica of itself additionally assume classical control:
// any closure transformation of the target factor may be conditioned on the
// readable ontic state of the source factor. Copy- and measurement-shaped
// tasks on that composite are decided by a per-state assignment rule, which
// for such source-preserving tasks coincides with closure search over the
// controlled monoid but cannot blow past the cap.
class FiniteCtBackend : public TheoryBackend {
 public:
  explicit FiniteCtBackend(FiniteTheory theory);

  const FiniteTheory& theory() const { return theory_; }
  const ClosureResult& closure() const;

  // Declared attribute by name.
  AttributeRef attribute(const std::string& name) const;
  // Ad-hoc attribute from state labels.
  AttributeRef make_attribute(std::string name,
                              std::vector<std::string> states) const;
  // Declared variables, in declaration order.
  std::vector<Variable> declared_variables() const;

  // TheoryBackend
  const std::string& substrate_id() const override { return theory_.name; }
  bool attrs_equal(const AttributeRef& a, const AttributeRef& b) const override;
  bool attrs_disjoint(const AttributeRef& a, const AttributeRef& b) const override;
  bool attr_subset(const AttributeRef& a, const AttributeRef& b) const override;
  bool attr_empty(const AttributeRef& a) const override;
  std::string overlap_description(const AttributeRef& a,
                                  const AttributeRef& b) const override;
  AttributeRef attr_union(const std::vector<AttributeRef>& as) const override;
  std::optional<std::vector<AttributeRef>> attribute_family() const override;
  std::vector<Variable> output_candidates(std::size_t arity) const override;
  TaskDecision decide(const Task& task) const override;
  TaskDecision decide_on_self_composite(const Task& task) const override;
  TaskDecision distinguishable(const AttributeRef& a,
                               const AttributeRef& b) const override;
  std::unique_ptr<TheoryBackend> compose_with(
      const TheoryBackend& other, const JointGenerators* joints) const override;

 private:
  std::vector<std::uint32_t> normalize(const AttributeRef& a) const;
  std::vector<std::string> expand_states(const AttributeRef& a) const;
  StateSetTask lower_task(const Task& task) const;
  const FiniteTheory& self_composite() const;
  const ClosureResult& self_composite_closure() const;

  FiniteTheory theory_;

  mutable std::mutex mu_;
  mutable std::unique_ptr<ClosureResult> closure_;
  mutable std::unique_ptr<FiniteTheory> self_comp_;
  mutable std::unique_ptr<ClosureResult> self_comp_closure_;
  mutable std::map<std::string, TaskDecision> dist_memo_;
  mutable std::map<std::string, std::pair<bool, bool>> infovar_memo_;
};

// Bundled theories, matching the files shipped under theories/.
FiniteTheory classical_bit();
FiniteTheory classical_trit();
FiniteTheory spekkens_toy();

// Builds the 4-ontic-state toy theory with epistemic attributes {1,2}, {3,4},
// {1,3}, {2,4} and classifies it: both Z and X are information variables, but
// their attributes intersect, so no superinformation witness exists. The
// report names the overlapping ontic states.
SectorClassification spekkens_demo();

}  // namespace ctwb
