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

#include "ctwb/finite_parse.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ctwb {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Replace the UTF-8 arrow with "->" so the rest of the parser sees one form.
std::string normalize_arrows(std::string line) {
  const std::string utf8_arrow = "\xE2\x86\x92";
  std::size_t pos = 0;
  while ((pos = line.find(utf8_arrow, pos)) != std::string::npos) {
    line.replace(pos, utf8_arrow.size(), "->");
    pos += 2;
  }
  return line;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

int column_of(const std::string& line, const std::string& needle) {
  std::size_t pos = line.find(needle);
  return pos == std::string::npos ? 1 : static_cast<int>(pos) + 1;
}

struct Parser {
  ParsedTheoryFile file;
  FiniteTheory* current = nullptr;
  int lineno = 0;
  std::string raw;

  [[noreturn]] void fail(int col, const std::string& msg) const {
    throw ParseError(lineno, col, msg);
  }

  FiniteTheory& need_theory(const std::string& what) {
    if (!current) fail(1, what + " before any 'theory' declaration");
    return *current;
  }

  std::uint32_t need_state(const FiniteTheory& t, const std::string& s) {
    auto idx = t.state_index(s);
    if (!idx) fail(column_of(raw, s), "undeclared state '" + s + "'");
    return *idx;
  }

  void handle_theory(const std::string& rest) {
    std::string name = trim(rest);
    if (name.empty()) fail(1, "theory declaration without a name");
    for (const auto& t : file.theories) {
      if (t.name == name) fail(1, "duplicate theory '" + name + "'");
    }
    file.theories.push_back(FiniteTheory{});
    file.theories.back().name = name;
    current = &file.theories.back();
  }

  void handle_states(const std::string& rest) {
    auto& t = need_theory("states");
    if (!t.states.empty()) fail(1, "states already declared");
    t.states = tokens(rest);
    if (t.states.empty()) fail(1, "empty state list");
  }

  void handle_map(const std::string& rest) {
    auto& t = need_theory("map");
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos) fail(1, "map declaration missing ':'");
    std::string name = trim(rest.substr(0, colon));
    if (name.empty()) fail(1, "map without a name");
    FiniteMap m{name, std::vector<std::uint32_t>(t.states.size(),
                                                 static_cast<std::uint32_t>(-1))};
    std::vector<bool> defined(t.states.size(), false);
    for (const std::string& part : split(rest.substr(colon + 1), ',')) {
      std::string entry = trim(part);
      if (entry.empty()) continue;
      std::size_t arrow = entry.find("->");
      if (arrow == std::string::npos) {
        fail(column_of(raw, entry), "map entry '" + entry + "' has no arrow");
      }
      std::string from = trim(entry.substr(0, arrow));
      std::string to = trim(entry.substr(arrow + 2));
      std::uint32_t fi = need_state(t, from);
      std::uint32_t ti = need_state(t, to);
      if (defined[fi]) {
        fail(column_of(raw, entry), "map '" + name + "' defines state '" +
                                        from + "' twice");
      }
      defined[fi] = true;
      m.image[fi] = ti;
    }
    for (std::size_t i = 0; i < defined.size(); ++i) {
      if (!defined[i]) {
        fail(1, "map '" + name + "' is not total: missing state '" +
                    t.states[i] + "'");
      }
    }
    t.generators.push_back(std::move(m));
  }

  void handle_attribute(const std::string& rest) {
    auto& t = need_theory("attribute");
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos) fail(1, "attribute declaration missing ':'");
    std::string name = trim(rest.substr(0, colon));
    std::string body = trim(rest.substr(colon + 1));
    if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
      fail(column_of(raw, body), "attribute body must be {s, ...}");
    }
    std::vector<std::uint32_t> states;
    for (const std::string& part : split(body.substr(1, body.size() - 2), ',')) {
      std::string s = trim(part);
      if (s.empty()) fail(1, "empty state in attribute '" + name + "'");
      std::uint32_t idx = need_state(t, s);
      if (std::find(states.begin(), states.end(), idx) != states.end()) {
        fail(column_of(raw, s), "attribute '" + name + "' repeats state '" + s + "'");
      }
      states.push_back(idx);
    }
    if (states.empty()) fail(1, "attribute '" + name + "' denotes no state");
    std::sort(states.begin(), states.end());
    for (const auto& [an, _] : t.attributes) {
      if (an == name) fail(1, "duplicate attribute '" + name + "'");
    }
    t.attributes.emplace_back(name, std::move(states));
  }

  void handle_variable(const std::string& rest) {
    auto& t = need_theory("variable");
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos) fail(1, "variable declaration missing ':'");
    std::string name = trim(rest.substr(0, colon));
    std::vector<std::string> attrs = tokens(rest.substr(colon + 1));
    if (attrs.empty()) fail(1, "variable '" + name + "' lists no attributes");
    for (const auto& a : attrs) {
      bool known = std::any_of(t.attributes.begin(), t.attributes.end(),
                               [&](const auto& kv) { return kv.first == a; });
      if (!known) {
        fail(column_of(raw, a), "variable '" + name +
                                    "' references undeclared attribute '" + a + "'");
      }
    }
    t.variables.emplace_back(name, std::move(attrs));
  }

  void handle_joint_map(const std::string& rest) {
    // <name> on <A>x<B>: (s,t)->(s',t'), ...
    std::size_t on_pos = rest.find(" on ");
    if (on_pos == std::string::npos) fail(1, "joint map missing 'on <A>x<B>'");
    std::string name = trim(rest.substr(0, on_pos));
    std::size_t colon = rest.find(':', on_pos);
    if (colon == std::string::npos) fail(1, "joint map declaration missing ':'");
    std::string pair_names = trim(rest.substr(on_pos + 4, colon - on_pos - 4));
    std::size_t x_pos = pair_names.find('x');
    if (x_pos == std::string::npos) fail(1, "joint map substrates must be <A>x<B>");
    ParsedJointMap jm;
    jm.theory_a = trim(pair_names.substr(0, x_pos));
    jm.theory_b = trim(pair_names.substr(x_pos + 1));
    jm.spec.name = name;

    // Scan "(a,b)->(c,d)" groups; separating commas fall out naturally.
    std::string body = rest.substr(colon + 1);
    std::size_t pos = 0;
    auto read_group = [&](std::string* first, std::string* second) -> bool {
      std::size_t open = body.find('(', pos);
      if (open == std::string::npos) return false;
      std::size_t comma = body.find(',', open);
      std::size_t close = body.find(')', open);
      if (comma == std::string::npos || close == std::string::npos || comma > close) {
        fail(column_of(raw, body.substr(open, 4)), "malformed joint map entry");
      }
      *first = trim(body.substr(open + 1, comma - open - 1));
      *second = trim(body.substr(comma + 1, close - comma - 1));
      pos = close + 1;
      return true;
    };
    while (true) {
      std::string fa, fb;
      if (!read_group(&fa, &fb)) break;
      std::size_t next = body.find_first_not_of(" \t", pos);
      if (next == std::string::npos || body.compare(next, 2, "->") != 0) {
        fail(1, "joint map entry missing '->'");
      }
      pos = next + 2;
      std::string ta, tb;
      if (!read_group(&ta, &tb)) fail(1, "joint map entry missing target pair");
      jm.spec.entries.push_back({{fa, fb}, {ta, tb}});
    }
    if (jm.spec.entries.empty()) fail(1, "joint map '" + name + "' has no entries");
    file.joints.push_back(std::move(jm));
  }

  void finish() {
    for (auto& t : file.theories) {
      if (t.states.empty()) {
        throw ParseError(lineno, 1, "theory '" + t.name + "' declares no states");
      }
      t.validate();
    }
    for (const auto& jm : file.joints) {
      auto known = [&](const std::string& n) {
        return std::any_of(file.theories.begin(), file.theories.end(),
                           [&](const FiniteTheory& t) { return t.name == n; });
      };
      if (!known(jm.theory_a) || !known(jm.theory_b)) {
        throw ParseError(lineno, 1, "joint map '" + jm.spec.name +
                                        "' references an undeclared theory");
      }
    }
  }
};

}  // namespace

ParsedTheoryFile parse_theory_text(std::string_view text) {
  Parser p;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line_view =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                         : end - start);
    ++p.lineno;
    std::string line = normalize_arrows(std::string(line_view));
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    p.raw = line;
    line = trim(line);
    if (!line.empty()) {
      if (line.rfind("theory ", 0) == 0) {
        p.handle_theory(line.substr(7));
      } else if (line.rfind("states:", 0) == 0) {
        p.handle_states(line.substr(7));
      } else if (line.rfind("joint map ", 0) == 0) {
        p.handle_joint_map(line.substr(10));
      } else if (line.rfind("map ", 0) == 0) {
        p.handle_map(line.substr(4));
      } else if (line.rfind("attribute ", 0) == 0) {
        p.handle_attribute(line.substr(10));
      } else if (line.rfind("variable ", 0) == 0) {
        p.handle_variable(line.substr(9));
      } else {
        throw ParseError(p.lineno, 1, "unrecognized declaration: '" + line + "'");
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  p.finish();
  if (p.file.theories.empty()) {
    throw ParseError(1, 1, "file declares no theory");
  }
  return p.file;
}

ParsedTheoryFile parse_theory_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open theory file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_theory_text(ss.str());
}

}  // namespace ctwb
