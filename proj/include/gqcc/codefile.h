// Copyright 2026 The gqcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GQCC_CODEFILE_H
#define GQCC_CODEFILE_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gqcc/circuit.h"

namespace gqcc {

// Codefile grammar (line oriented, '#' starts a comment):
//
//   code <name>
//   params n=<int> k=<int> l=<int> r=<int> c=<int>
//   circuit:
//     H <i> [<i> ...]
//     CNOT <i> <j> <poly>
//     SWAP <i> <j>
//   errors:
//     single-qubit
//     <pauli frame strings, e.g. IZIZI|IIZII>
//
// `params` must come before `circuit:`. The `errors:` section is optional.

/// Stands for the 3n single-qubit errors of one frame inside an error set.
struct SingleQubitSet {
    friend bool operator==(const SingleQubitSet &, const SingleQubitSet &) = default;
};

using ErrorSetItem = std::variant<SingleQubitSet, PauliElement>;

struct CodeSpec {
    std::string name;
    CodeParams params;
    Circuit circuit;
    std::optional<std::vector<ErrorSetItem>> errors;

    friend bool operator==(const CodeSpec &, const CodeSpec &) = default;
};

class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, size_t column, const std::string &message);
    size_t line;
    size_t column;
    std::string message;
};

/// Largest n accepted in a codefile.
constexpr size_t kMaxFrameWidth = 1024;

/// Throws ParseError (with line and column) on any syntax or semantic problem.
CodeSpec parse_codefile(std::string_view text);

/// Canonical text; parse_codefile(format_codefile(s)) == s.
std::string format_codefile(const CodeSpec &spec);

/// Declared error set, or identity followed by the single-qubit errors when none is declared.
std::vector<PauliElement> expand_error_set(const CodeSpec &spec);

struct BuiltCode {
    GrandfatherCode initial;
    GrandfatherCode encoded;
};

BuiltCode build_code(const CodeSpec &spec);

}  // namespace gqcc

#endif
