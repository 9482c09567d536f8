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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctwb/backend.hpp"

namespace ctwb {

inline constexpr std::size_t kDefaultClosureCap = 100000;

// A total map on the theory's state set: image[s] is the successor of s.
struct FiniteMap {
  std::string name;
  std::vector<std::uint32_t> image;
};

// A finite ontic-state theory: a state set plus named generating maps.
// Possibility of a task is decided by bounded closure of the generated
// transformation monoid.
struct FiniteTheory {
  std::string name;
  std::vector<std::string> states;
  std::vector<FiniteMap> generators;
  std::size_t closure_cap = kDefaultClosureCap;

  // Declarations registered for the kernel adapter.
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> attributes;
  std::vector<std::pair<std::string, std::vector<std::string>>> variables;

  std::optional<std::uint32_t> state_index(std::string_view state) const;
  // Throws std::invalid_argument on non-total generators, duplicate names,
  // or a cap below the generator count.
  void validate() const;
};

struct ClosureResult {
  // Distinct composed maps in breadth-first enumeration order; the identity
  // comes first. Closed under composition unless truncated.
  std::vector<std::vector<std::uint32_t>> maps;
  bool truncated = false;
};

// Breadth-first closure of the generators under composition, deduplicated by
// graph-of-map equality, stopping once `closure_cap` distinct maps have been
// enumerated.
ClosureResult monoid_closure(const FiniteTheory& t);

// A task lowered to state-index sets.
struct StateSetTask {
  std::vector<std::pair<std::vector<std::uint32_t>,
                        std::vector<std::uint32_t>>> pairs;
};

// True iff some map f in the closure satisfies f(a_in) subset of a_out for
// every pair. Streams the closure so a witness short-circuits; if the search
// truncates at the cap without a witness the result is inconclusive.
TaskDecision decide_task(const FiniteTheory& t, const StateSetTask& task);

// As decide_task, but scanning an already-materialized closure.
TaskDecision decide_task_over(const ClosureResult& closure,
                              const StateSetTask& task);

// Product theory. States are named "s|t". Generators are the two theories'
// generators lifted to act on one factor, plus the given joint maps. When
// `classical_control` is set, single-state-controlled maps are added: for
// every state s of the left (source) factor and every map g of the right
// factor's closure, the map acting as g on the right factor when the left is
// at s and trivially otherwise. These model conditioning a transformation on
// a readable ontic state of the source.
FiniteTheory compose_theories(const FiniteTheory& a, const FiniteTheory& b,
                              const std::vector<JointMapSpec>& joints,
                              bool classical_control);

}  // namespace ctwb
