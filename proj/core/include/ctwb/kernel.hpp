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
#include <string>
#include <utility>
#include <vector>

#include "ctwb/backend.hpp"
#include "ctwb/task.hpp"
#include "ctwb/variable.hpp"

namespace ctwb {

// Theory-agnostic definitions: tasks built from variables, distinguishability,
// the bar operation, observables, and the information-medium /
// superinformation-medium classifiers. Everything is parameterized over a
// TheoryBackend that decides task possibility.

// Boolean decision with a conclusiveness flag and a report channel.
// `conclusive == false` only arises from truncated closure searches.
struct KernelDecision {
  bool value = false;
  bool conclusive = true;
  std::vector<std::string> notes;

  explicit operator bool() const { return value; }

  static KernelDecision yes() { return {true, true, {}}; }
  static KernelDecision no() { return {false, true, {}}; }
};

struct SectorClassification {
  bool is_information_medium = false;
  std::optional<std::pair<Variable, Variable>> superinformation_witness;
  std::vector<std::string> report;
  bool conclusive = true;
};

// The task copying v's attributes onto a blank replica:
//   union over x in v of {(x, x0) -> (x, x)}.
// `blank_label` must name an attribute of v.
Task copy_task(const Variable& v, const std::string& blank_label);

// The logically reversible task union over x of {x -> perm(x)}.
// `perm` must be a bijection on exactly v's labels.
Task permutation_task(const Variable& v,
                      const std::map<std::string, std::string>& perm);

// The perfect measurement task union over x of {(x, t0) -> (x, p_x)} from a
// source variable to an output variable with the same label set; `blank_label`
// designates the blank attribute of the output variable.
Task measurement_task(const Variable& source_v, const Variable& output_v,
                      const std::string& blank_label);

// True iff some blank makes the copy task possible and every permutation of
// v's labels is possible. Arity is capped at 6 (720 permutations).
KernelDecision is_information_variable(const TheoryBackend& backend,
                                       const Variable& v);

// True iff the pair {a, b} forms a distinguishable variable. Overlapping
// attributes are not a variable (false, with a note). An empty attribute is
// distinguishable from anything. Symmetric in a and b.
KernelDecision are_distinguishable(const TheoryBackend& backend,
                                   const AttributeRef& a, const AttributeRef& b);

// Union, within the backend's enumerated attribute family, of all attributes
// distinguishable from a. Throws unsupported_operation if the backend has no
// enumerable family.
AttributeRef bar(const TheoryBackend& backend, const AttributeRef& a);

// Information variable whose attributes are all fixed points of double bar.
KernelDecision is_observable(const TheoryBackend& backend, const Variable& v);

// Classifies a substrate from a catalogue of candidate variables:
// an information medium iff some variable is an information variable; a
// superinformation witness is the first pair of information observables,
// pairwise disjoint across the pair, whose union fails to be an information
// variable.
SectorClassification classify_sector(const TheoryBackend& backend,
                                     const std::vector<Variable>& catalogue);

// Product substrate of two backends of the same kind.
std::unique_ptr<TheoryBackend> compose(const TheoryBackend& a,
                                       const TheoryBackend& b,
                                       const JointGenerators& joints);

}  // namespace ctwb
