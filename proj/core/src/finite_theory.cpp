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

#include "ctwb/finite_theory.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace ctwb {

namespace {

struct MapHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<std::uint32_t> identity_map(std::size_t n) {
  std::vector<std::uint32_t> id(n);
  std::iota(id.begin(), id.end(), 0u);
  return id;
}

// apply `first`, then `second`
std::vector<std::uint32_t> compose_maps(const std::vector<std::uint32_t>& second,
                                        const std::vector<std::uint32_t>& first) {
  std::vector<std::uint32_t> out(first.size());
  for (std::size_t s = 0; s < first.size(); ++s) out[s] = second[first[s]];
  return out;
}

bool map_satisfies(const std::vector<std::uint32_t>& f, const StateSetTask& task,
                   const std::vector<std::vector<bool>>& out_masks) {
  for (std::size_t p = 0; p < task.pairs.size(); ++p) {
    for (std::uint32_t s : task.pairs[p].first) {
      if (!out_masks[p][f[s]]) return false;
    }
  }
  return true;
}

std::vector<std::vector<bool>> build_out_masks(const FiniteTheory& t,
                                               const StateSetTask& task) {
  std::vector<std::vector<bool>> masks;
  masks.reserve(task.pairs.size());
  for (const auto& pr : task.pairs) {
    std::vector<bool> m(t.states.size(), false);
    for (std::uint32_t s : pr.second) m.at(s) = true;
    masks.push_back(std::move(m));
  }
  return masks;
}

// Shared BFS over the generated monoid. Calls `visit` on each distinct map in
// enumeration order; stops early if `visit` returns true. Returns whether the
// enumeration hit the cap.
template <typename Visit>
bool closure_bfs(const FiniteTheory& t, Visit visit, bool* found) {
  const std::size_t n = t.states.size();
  std::unordered_set<std::vector<std::uint32_t>, MapHash> seen;
  std::deque<std::vector<std::uint32_t>> frontier;

  auto id = identity_map(n);
  seen.insert(id);
  if (visit(id)) {
    *found = true;
    return false;
  }
  frontier.push_back(std::move(id));

  bool truncated = false;
  while (!frontier.empty()) {
    auto m = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : t.generators) {
      auto c = compose_maps(g.image, m);
      if (seen.contains(c)) continue;
      if (seen.size() >= t.closure_cap) {
        truncated = true;
        continue;
      }
      seen.insert(c);
      if (visit(c)) {
        *found = true;
        return truncated;
      }
      frontier.push_back(std::move(c));
    }
  }
  *found = false;
  return truncated;
}

}  // namespace

std::optional<std::uint32_t> FiniteTheory::state_index(std::string_view state) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == state) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

void FiniteTheory::validate() const {
  if (states.empty()) throw std::invalid_argument("theory '" + name + "': no states");
  std::set<std::string> state_names(states.begin(), states.end());
  if (state_names.size() != states.size()) {
    throw std::invalid_argument("theory '" + name + "': duplicate state names");
  }
  std::set<std::string> map_names;
  for (const auto& g : generators) {
    if (!map_names.insert(g.name).second) {
      throw std::invalid_argument("theory '" + name + "': duplicate map name '" +
                                  g.name + "'");
    }
    if (g.image.size() != states.size()) {
      throw std::invalid_argument("theory '" + name + "': map '" + g.name +
                                  "' is not total");
    }
    for (std::uint32_t to : g.image) {
      if (to >= states.size()) {
        throw std::invalid_argument("theory '" + name + "': map '" + g.name +
                                    "' targets an undeclared state");
      }
    }
  }
  if (closure_cap < std::max<std::size_t>(generators.size(), 1)) {
    throw std::invalid_argument("theory '" + name +
                                "': closure cap below generator count");
  }
}

ClosureResult monoid_closure(const FiniteTheory& t) {
  ClosureResult res;
  bool found = false;
  res.truncated = closure_bfs(
      t,
      [&](const std::vector<std::uint32_t>& m) {
        res.maps.push_back(m);
        return false;
      },
      &found);
  return res;
}

TaskDecision decide_task(const FiniteTheory& t, const StateSetTask& task) {
  if (task.pairs.empty()) throw std::invalid_argument("decide_task: empty task");
  auto masks = build_out_masks(t, task);
  bool found = false;
  bool truncated = closure_bfs(
      t,
      [&](const std::vector<std::uint32_t>& m) {
        return map_satisfies(m, task, masks);
      },
      &found);
  if (found) return TaskDecision::yes();
  if (truncated) return TaskDecision::inconclusive("inconclusive (cap)");
  return TaskDecision::no();
}

TaskDecision decide_task_over(const ClosureResult& closure,
                              const StateSetTask& task) {
  if (task.pairs.empty()) throw std::invalid_argument("decide_task: empty task");
  for (const auto& f : closure.maps) {
    bool ok = true;
    for (const auto& pr : task.pairs) {
      for (std::uint32_t s : pr.first) {
        if (std::find(pr.second.begin(), pr.second.end(), f[s]) == pr.second.end()) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return TaskDecision::yes();
  }
  if (closure.truncated) return TaskDecision::inconclusive("inconclusive (cap)");
  return TaskDecision::no();
}

FiniteTheory compose_theories(const FiniteTheory& a, const FiniteTheory& b,
                              const std::vector<JointMapSpec>& joints,
                              bool classical_control) {
  FiniteTheory out;
  out.name = a.name + "+" + b.name;
  out.closure_cap = std::max(a.closure_cap, b.closure_cap);
  const std::size_t na = a.states.size();
  const std::size_t nb = b.states.size();
  out.states.reserve(na * nb);
  for (const auto& sa : a.states) {
    for (const auto& sb : b.states) out.states.push_back(sa + "|" + sb);
  }
  auto pack = [nb](std::uint32_t ia, std::uint32_t ib) {
    return static_cast<std::uint32_t>(ia * nb + ib);
  };

  auto lift_left = [&](const FiniteMap& g) {
    FiniteMap m{g.name + "@L", std::vector<std::uint32_t>(na * nb)};
    for (std::uint32_t ia = 0; ia < na; ++ia) {
      for (std::uint32_t ib = 0; ib < nb; ++ib) {
        m.image[pack(ia, ib)] = pack(g.image[ia], ib);
      }
    }
    return m;
  };
  auto lift_right = [&](const FiniteMap& g) {
    FiniteMap m{g.name + "@R", std::vector<std::uint32_t>(na * nb)};
    for (std::uint32_t ia = 0; ia < na; ++ia) {
      for (std::uint32_t ib = 0; ib < nb; ++ib) {
        m.image[pack(ia, ib)] = pack(ia, g.image[ib]);
      }
    }
    return m;
  };

  // Base map sets used for lifting and for control. Closure elements give a
  // shallower generating set than generator words; fall back to the declared
  // generators if the closure is large or truncated.
  auto base_maps = [](const FiniteTheory& t) {
    ClosureResult c = monoid_closure(t);
    if (!c.truncated && c.maps.size() <= 256) {
      std::vector<FiniteMap> maps;
      maps.reserve(c.maps.size());
      for (std::size_t i = 0; i < c.maps.size(); ++i) {
        maps.push_back(FiniteMap{"c" + std::to_string(i), c.maps[i]});
      }
      return maps;
    }
    return t.generators;
  };

  std::vector<FiniteMap> left_base = classical_control ? base_maps(a) : a.generators;
  std::vector<FiniteMap> right_base = classical_control ? base_maps(b) : b.generators;

  auto is_identity = [](const std::vector<std::uint32_t>& img) {
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (img[i] != i) return false;
    }
    return true;
  };

  for (const auto& g : left_base) {
    if (!is_identity(g.image)) out.generators.push_back(lift_left(g));
  }
  for (const auto& g : right_base) {
    if (!is_identity(g.image)) out.generators.push_back(lift_right(g));
  }

  if (classical_control) {
    // Controlled on a left (source) state, acting on the right factor. The
    // generated monoid is exactly { (s,t) -> (pi(s), f_s(t)) } with pi in the
    // left closure and each f_s in the right closure.
    for (std::uint32_t ia = 0; ia < na; ++ia) {
      for (const auto& g : right_base) {
        if (is_identity(g.image)) continue;
        FiniteMap m{"ctrl" + std::to_string(ia) + ":" + g.name,
                    std::vector<std::uint32_t>(na * nb)};
        for (std::uint32_t ja = 0; ja < na; ++ja) {
          for (std::uint32_t jb = 0; jb < nb; ++jb) {
            m.image[pack(ja, jb)] =
                (ja == ia) ? pack(ja, g.image[jb]) : pack(ja, jb);
          }
        }
        out.generators.push_back(std::move(m));
      }
    }
  }

  for (const auto& j : joints) {
    FiniteMap m{j.name, std::vector<std::uint32_t>(na * nb, na * nb)};
    std::vector<bool> defined(na * nb, false);
    for (const auto& [from, to] : j.entries) {
      auto fa = a.state_index(from.first);
      auto fb = b.state_index(from.second);
      auto ta = a.state_index(to.first);
      auto tb = b.state_index(to.second);
      if (!fa || !fb || !ta || !tb) {
        throw std::invalid_argument("joint map '" + j.name +
                                    "' references an undeclared state");
      }
      std::uint32_t from_idx = pack(*fa, *fb);
      if (defined[from_idx]) {
        throw std::invalid_argument("joint map '" + j.name +
                                    "' defines (" + from.first + "," +
                                    from.second + ") twice");
      }
      defined[from_idx] = true;
      m.image[from_idx] = pack(*ta, *tb);
    }
    for (std::size_t i = 0; i < defined.size(); ++i) {
      if (!defined[i]) {
        throw std::invalid_argument("joint map '" + j.name +
                                    "' is not total: missing state " +
                                    out.states[i]);
      }
    }
    out.generators.push_back(std::move(m));
  }

  // Product attributes and variables, for the kernel adapter.
  for (const auto& [an, as] : a.attributes) {
    for (const auto& [bn, bs] : b.attributes) {
      std::vector<std::uint32_t> prod;
      for (auto ia : as) {
        for (auto ib : bs) prod.push_back(pack(ia, ib));
      }
      out.attributes.emplace_back(an + "x" + bn, std::move(prod));
    }
  }
  for (const auto& [avn, avattrs] : a.variables) {
    for (const auto& [bvn, bvattrs] : b.variables) {
      std::vector<std::string> attrs;
      for (const auto& aa : avattrs) {
        for (const auto& bb : bvattrs) attrs.push_back(aa + "x" + bb);
      }
      out.variables.emplace_back(avn + "x" + bvn, std::move(attrs));
    }
  }

  out.validate();
  return out;
}

}  // namespace ctwb
