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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctwb/attribute.hpp"
#include "ctwb/task.hpp"
#include "ctwb/variable.hpp"

namespace ctwb {

// Raised when a backend cannot support an operation at all (as opposed to
// deciding it negatively), e.g. bar() without an enumerable attribute family.
class unsupported_operation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outcome of a possibility decision. `conclusive` is false only when a
// bounded search was truncated before either finding a witness or exhausting
// the space; in that case `possible` is false and `note` explains why.
struct TaskDecision {
  bool possible = false;
  bool conclusive = true;
  std::string note;

  static TaskDecision yes(std::string n = {}) { return {true, true, std::move(n)}; }
  static TaskDecision no(std::string n = {}) { return {false, true, std::move(n)}; }
  static TaskDecision inconclusive(std::string n) { return {false, false, std::move(n)}; }
};

// Extra generators available on an explicitly composed substrate.
struct JointMapSpec {
  std::string name;
  // (left_state, right_state) -> (left_state', right_state'), total on the
  // product state set.
  std::vector<std::pair<std::pair<std::string, std::string>,
                        std::pair<std::string, std::string>>> entries;
};

struct JointGenerators {
  std::vector<JointMapSpec> finite_maps;                 // finite backends
  std::vector<std::pair<std::string, CMat>> gate_set;    // quantum backends
};

// A substrate description together with a decision procedure for task
// possibility and an attribute-distinguishability predicate. Implementations
// are immutable after construction; all queries are const.
class TheoryBackend {
 public:
  virtual ~TheoryBackend() = default;

  virtual const std::string& substrate_id() const = 0;

  // -- attribute algebra ----------------------------------------------------
  virtual bool attrs_equal(const AttributeRef& a, const AttributeRef& b) const = 0;
  virtual bool attrs_disjoint(const AttributeRef& a, const AttributeRef& b) const = 0;
  virtual bool attr_subset(const AttributeRef& a, const AttributeRef& b) const = 0;
  virtual bool attr_empty(const AttributeRef& a) const = 0;
  // Human-readable description of the overlap of two non-disjoint attributes
  // (e.g. the shared ontic state labels).
  virtual std::string overlap_description(const AttributeRef& a,
                                          const AttributeRef& b) const = 0;
  // Union of attributes; the empty list yields the empty attribute.
  virtual AttributeRef attr_union(const std::vector<AttributeRef>& as) const = 0;

  // -- enumeration ----------------------------------------------------------
  // The enumerable attribute family used by the bar operation, or nullopt if
  // the backend has none (bar is then unsupported).
  virtual std::optional<std::vector<AttributeRef>> attribute_family() const = 0;
  // Candidate output variables for distinguishing tasks of the given arity,
  // drawn from the declared attribute catalogue.
  virtual std::vector<Variable> output_candidates(std::size_t arity) const = 0;

  // -- decisions ------------------------------------------------------------
  // Possibility of a task on this substrate.
  virtual TaskDecision decide(const Task& task) const = 0;
  // Possibility of a task on the composite of this substrate with a fresh
  // replica of itself (targets of copy tasks live there).
  virtual TaskDecision decide_on_self_composite(const Task& task) const = 0;
  // Native distinguishability predicate for a pair of disjoint attributes.
  virtual TaskDecision distinguishable(const AttributeRef& a,
                                       const AttributeRef& b) const = 0;

  // -- composition ----------------------------------------------------------
  // Product substrate with this backend's kind; throws std::invalid_argument
  // on kind mismatch.
  virtual std::unique_ptr<TheoryBackend> compose_with(
      const TheoryBackend& other, const JointGenerators* joints) const = 0;
};

}  // namespace ctwb
