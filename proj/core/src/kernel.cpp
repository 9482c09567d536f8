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

#include "ctwb/kernel.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ctwb {

namespace {

constexpr std::size_t kMaxPermutationArity = 6;

void append_note(KernelDecision& d, const std::string& note) {
  if (!note.empty()) d.notes.push_back(note);
}

}  // namespace

Task copy_task(const Variable& v, const std::string& blank_label) {
  const AttributeRef& blank = v.at(blank_label);  // throws if absent
  Task t;
  t.shape = Task::Shape::Copy;
  t.source_variable = v;
  t.blank_label = blank_label;
  for (const auto& [label, attr] : v.attributes()) {
    t.pairs.emplace_back(AttributeRef::product(attr, blank),
                         AttributeRef::product(attr, attr));
  }
  t.substrate = t.pairs.front().first.substrate();
  return t;
}

Task permutation_task(const Variable& v,
                      const std::map<std::string, std::string>& perm) {
  std::set<std::string> domain, image;
  for (const auto& [from, to] : perm) {
    domain.insert(from);
    image.insert(to);
  }
  std::set<std::string> labels;
  for (const auto& l : v.labels()) labels.insert(l);
  if (domain != labels || image != labels) {
    throw std::invalid_argument(
        "permutation is not a bijection on the variable's labels");
  }
  Task t;
  t.shape = Task::Shape::Permutation;
  t.source_variable = v;
  t.permutation = perm;
  t.substrate = v.substrate();
  for (const auto& [label, attr] : v.attributes()) {
    t.pairs.emplace_back(attr, v.at(perm.at(label)));
  }
  return t;
}

Task measurement_task(const Variable& source_v, const Variable& output_v,
                      const std::string& blank_label) {
  if (source_v.labels() != output_v.labels()) {
    throw std::invalid_argument(
        "measurement task: source and output label sets differ");
  }
  const AttributeRef& blank = output_v.at(blank_label);
  Task t;
  t.shape = Task::Shape::Measurement;
  t.source_variable = source_v;
  t.output_variable = output_v;
  t.blank_label = blank_label;
  for (const auto& [label, attr] : source_v.attributes()) {
    t.pairs.emplace_back(AttributeRef::product(attr, blank),
                         AttributeRef::product(attr, output_v.at(label)));
  }
  t.substrate = t.pairs.front().first.substrate();
  return t;
}

KernelDecision is_information_variable(const TheoryBackend& backend,
                                       const Variable& v) {
  if (v.arity() > kMaxPermutationArity) {
    throw unsupported_operation(
        "information-variable check: arity above permutation enumeration cap");
  }

  // Copy: possible for some blank attribute of v.
  KernelDecision copy_dec = KernelDecision::no();
  bool copy_inconclusive = false;
  for (const auto& label : v.labels()) {
    TaskDecision d = backend.decide_on_self_composite(copy_task(v, label));
    if (d.possible) {
      copy_dec = KernelDecision::yes();
      break;
    }
    if (!d.conclusive) {
      copy_inconclusive = true;
      append_note(copy_dec, d.note);
    }
  }
  if (!copy_dec.value) {
    copy_dec.conclusive = !copy_inconclusive;
    copy_dec.notes.insert(copy_dec.notes.begin(), "copy task impossible for every blank");
    return copy_dec;
  }

  // Every permutation of the labels.
  std::vector<std::string> labels = v.labels();
  std::vector<std::string> image = labels;
  std::sort(image.begin(), image.end());
  KernelDecision result = KernelDecision::yes();
  bool any_inconclusive = false;
  do {
    std::map<std::string, std::string> perm;
    for (std::size_t i = 0; i < labels.size(); ++i) perm[labels[i]] = image[i];
    TaskDecision d = backend.decide(permutation_task(v, perm));
    if (!d.possible) {
      if (d.conclusive) {
        KernelDecision no = KernelDecision::no();
        std::ostringstream os;
        os << "permutation task impossible:";
        for (const auto& [from, to] : perm) os << " " << from << "->" << to;
        append_note(no, os.str());
        return no;
      }
      any_inconclusive = true;
      append_note(result, d.note);
    }
  } while (std::next_permutation(image.begin(), image.end()));

  if (any_inconclusive) {
    result.value = false;
    result.conclusive = false;
    return result;
  }
  return result;
}

KernelDecision are_distinguishable(const TheoryBackend& backend,
                                   const AttributeRef& a, const AttributeRef& b) {
  if (a.substrate() != b.substrate()) {
    throw std::invalid_argument("distinguishability: attributes on different substrates");
  }
  // The empty attribute holds no state and is distinguishable from anything.
  if (backend.attr_empty(a) || backend.attr_empty(b)) {
    KernelDecision d = KernelDecision::yes();
    d.notes.push_back("vacuous: empty attribute");
    return d;
  }
  if (!backend.attrs_disjoint(a, b)) {
    KernelDecision d = KernelDecision::no();
    d.notes.push_back("not a variable: " + backend.overlap_description(a, b));
    return d;
  }
  TaskDecision t = backend.distinguishable(a, b);
  KernelDecision d;
  d.value = t.possible;
  d.conclusive = t.conclusive;
  append_note(d, t.note);
  return d;
}

AttributeRef bar(const TheoryBackend& backend, const AttributeRef& a) {
  auto family = backend.attribute_family();
  if (!family) {
    throw unsupported_operation("bar: backend has no enumerable attribute family");
  }
  std::vector<AttributeRef> distinguishable_members;
  for (const AttributeRef& b : *family) {
    if (are_distinguishable(backend, a, b).value) {
      distinguishable_members.push_back(b);
    }
  }
  return backend.attr_union(distinguishable_members);
}

KernelDecision is_observable(const TheoryBackend& backend, const Variable& v) {
  KernelDecision info = is_information_variable(backend, v);
  if (!info.value) return info;
  for (const auto& [label, attr] : v.attributes()) {
    AttributeRef closure = bar(backend, bar(backend, attr));
    if (!backend.attrs_equal(closure, attr)) {
      KernelDecision d = KernelDecision::no();
      d.notes.push_back("attribute " + label + ": double bar is " +
                        closure.text() + ", not " + attr.text());
      return d;
    }
  }
  return info;
}

SectorClassification classify_sector(const TheoryBackend& backend,
                                     const std::vector<Variable>& catalogue) {
  if (catalogue.empty()) {
    throw std::invalid_argument("classify_sector: empty catalogue");
  }
  SectorClassification out;

  std::vector<bool> is_info(catalogue.size(), false);
  for (std::size_t i = 0; i < catalogue.size(); ++i) {
    KernelDecision d = is_information_variable(backend, catalogue[i]);
    is_info[i] = d.value;
    if (!d.conclusive) out.conclusive = false;
    out.report.push_back("variable " + catalogue[i].name() +
                         (d.value ? ": information variable"
                                  : ": not an information variable"));
    for (const auto& n : d.notes) out.report.push_back("  " + n);
  }
  out.is_information_medium =
      std::any_of(is_info.begin(), is_info.end(), [](bool b) { return b; });

  // First pair, in catalogue order, of disjoint information observables whose
  // union fails to be an information variable.
  for (std::size_t i = 0; i < catalogue.size() && !out.superinformation_witness; ++i) {
    for (std::size_t j = i + 1; j < catalogue.size(); ++j) {
      const Variable& x = catalogue[i];
      const Variable& z = catalogue[j];

      bool disjoint_across = true;
      for (const auto& [lx, ax] : x.attributes()) {
        for (const auto& [lz, az] : z.attributes()) {
          if (!backend.attrs_disjoint(ax, az)) {
            out.report.push_back("intersection non-empty: " + x.name() + "[" +
                                 lx + "] and " + z.name() + "[" + lz + "]: " +
                                 backend.overlap_description(ax, az));
            disjoint_across = false;
          }
        }
      }
      if (!disjoint_across) continue;

      KernelDecision obs_x = is_observable(backend, x);
      KernelDecision obs_z = is_observable(backend, z);
      if (!obs_x.conclusive || !obs_z.conclusive) out.conclusive = false;
      if (!obs_x.value || !obs_z.value) continue;

      std::map<std::string, AttributeRef> merged;
      for (const auto& [l, a] : x.attributes()) merged.emplace(l, a);
      for (const auto& [l, a] : z.attributes()) {
        if (!merged.emplace(l, a).second) {
          merged.emplace(z.name() + "." + l, a);
        }
      }
      Variable union_var = Variable::make(backend, x.name() + "+" + z.name(),
                                          std::move(merged));
      KernelDecision union_info = is_information_variable(backend, union_var);
      if (!union_info.conclusive) out.conclusive = false;
      if (!union_info.value) {
        out.superinformation_witness = std::make_pair(x, z);
        out.report.push_back("superinformation witness: (" + x.name() + ", " +
                             z.name() + "): union " + union_var.name() +
                             " is not an information variable");
        break;
      }
    }
  }

  if (!out.superinformation_witness) {
    out.report.push_back("no superinformation witness found");
  }
  return out;
}

std::unique_ptr<TheoryBackend> compose(const TheoryBackend& a,
                                       const TheoryBackend& b,
                                       const JointGenerators& joints) {
  return a.compose_with(b, &joints);
}

}  // namespace ctwb
