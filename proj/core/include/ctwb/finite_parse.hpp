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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctwb/backend.hpp"
#include "ctwb/finite_theory.hpp"

namespace ctwb {

// Theory-file grammar (UTF-8, line oriented, '#' starts a comment):
//
//   theory <name>
//   states: s1 s2 ...
//   map <name>: s->s', ...            every state exactly once on the left
//   attribute <name>: {s, ...}
//   variable <name>: attr1 attr2 ...
//   joint map <name> on <A>x<B>: (s,t)->(s',t'), ...
//
// Both "->" and the arrow character are accepted.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParsedJointMap {
  std::string theory_a;
  std::string theory_b;
  JointMapSpec spec;
};

struct ParsedTheoryFile {
  std::vector<FiniteTheory> theories;
  std::vector<ParsedJointMap> joints;
};

ParsedTheoryFile parse_theory_text(std::string_view text);
ParsedTheoryFile parse_theory_file(const std::string& path);

}  // namespace ctwb
