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

#include "gqcc/codefile.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "gqcc/decoder.h"

namespace gqcc {

ParseError::ParseError(size_t line_, size_t column_, const std::string &message_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + message_),
      line(line_),
      column(column_),
      message(message_) {
}

namespace {

struct Token {
    std::string_view text;
    size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        if (i >= line.size()) {
            break;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            i++;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {
    }

    CodeSpec run() {
        size_t pos = 0;
        while (pos <= text_.size()) {
            if (pos == text_.size() && pos > 0) {
                break;  // nothing after the final newline
            }
            size_t end = text_.find('\n', pos);
            std::string_view line = text_.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
            line_no_++;
            if (size_t hash = line.find('#'); hash != std::string_view::npos) {
                line = line.substr(0, hash);
            }
            auto tokens = tokenize(line);
            if (!tokens.empty()) {
                handle(tokens);
            }
            if (end == std::string_view::npos) {
                break;
            }
            pos = end + 1;
        }
        if (!have_name_) {
            throw ParseError(line_no_, 1, "missing 'code <name>' line");
        }
        if (!have_params_) {
            throw ParseError(line_no_, 1, "missing 'params' line");
        }
        spec_.circuit.width = spec_.params.n;
        return std::move(spec_);
    }

   private:
    enum class Section { Header, Circuit, Errors };

    [[noreturn]] void fail(size_t column, const std::string &msg) const {
        throw ParseError(line_no_, column, msg);
    }

    size_t parse_uint(const Token &t, std::string_view what) const {
        size_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (t.text.empty() || ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            fail(t.column, "expected a non-negative integer for " + std::string(what) + ", got '" +
                               std::string(t.text) + "'");
        }
        return v;
    }

    size_t parse_index(const Token &t) const {
        size_t v = parse_uint(t, "qubit index");
        if (v < 1 || v > spec_.params.n) {
            fail(t.column, "qubit index " + std::string(t.text) + " out of range 1.." + std::to_string(spec_.params.n));
        }
        return v;
    }

    void handle(const std::vector<Token> &tokens) {
        const Token &head = tokens[0];
        if (head.text == "code") {
            if (have_name_) {
                fail(head.column, "duplicate 'code' line");
            }
            if (tokens.size() != 2) {
                fail(head.column, "expected 'code <name>'");
            }
            for (char ch : tokens[1].text) {
                if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.')) {
                    fail(tokens[1].column, "code name may only contain letters, digits, '_', '-' and '.'");
                }
            }
            spec_.name = std::string(tokens[1].text);
            have_name_ = true;
            return;
        }
        if (head.text == "params") {
            parse_params(tokens);
            return;
        }
        if (head.text == "circuit:") {
            if (tokens.size() != 1) {
                fail(tokens[1].column, "unexpected text after 'circuit:'");
            }
            if (!have_params_) {
                fail(head.column, "'params' must come before 'circuit:'");
            }
            if (seen_circuit_) {
                fail(head.column, "duplicate 'circuit:' section");
            }
            if (section_ == Section::Errors) {
                fail(head.column, "'circuit:' must come before 'errors:'");
            }
            seen_circuit_ = true;
            section_ = Section::Circuit;
            return;
        }
        if (head.text == "errors:") {
            if (tokens.size() != 1) {
                fail(tokens[1].column, "unexpected text after 'errors:'");
            }
            if (!have_params_) {
                fail(head.column, "'params' must come before 'errors:'");
            }
            if (spec_.errors) {
                fail(head.column, "duplicate 'errors:' section");
            }
            spec_.errors.emplace();
            section_ = Section::Errors;
            return;
        }
        switch (section_) {
            case Section::Circuit:
                parse_gate(tokens);
                return;
            case Section::Errors:
                parse_error_item(tokens);
                return;
            case Section::Header:
                fail(head.column, "unexpected '" + std::string(head.text) + "' (expected code, params or circuit:)");
        }
    }

    void parse_params(const std::vector<Token> &tokens) {
        if (have_params_) {
            fail(tokens[0].column, "duplicate 'params' line");
        }
        struct Field {
            const char *key;
            size_t *dest;
            bool seen;
        };
        Field fields[] = {
            {"n", &spec_.params.n, false},
            {"k", &spec_.params.k, false},
            {"l", &spec_.params.l, false},
            {"r", &spec_.params.r, false},
            {"c", &spec_.params.c, false},
        };
        for (size_t i = 1; i < tokens.size(); i++) {
            const Token &t = tokens[i];
            size_t eq = t.text.find('=');
            if (eq == std::string_view::npos) {
                fail(t.column, "expected <key>=<value>, got '" + std::string(t.text) + "'");
            }
            std::string_view key = t.text.substr(0, eq);
            auto it = std::find_if(std::begin(fields), std::end(fields), [&](const Field &f) {
                return key == f.key;
            });
            if (it == std::end(fields)) {
                fail(t.column, "unknown parameter '" + std::string(key) + "' (expected n, k, l, r, c)");
            }
            if (it->seen) {
                fail(t.column, "parameter '" + std::string(key) + "' given twice");
            }
            Token value{t.text.substr(eq + 1), t.column + eq + 1};
            size_t v = parse_uint(value, "parameter " + std::string(key));
            if (v > kMaxFrameWidth) {
                fail(value.column, "parameter " + std::string(key) + " exceeds " + std::to_string(kMaxFrameWidth));
            }
            *it->dest = v;
            it->seen = true;
        }
        for (const auto &f : fields) {
            if (!f.seen) {
                fail(tokens[0].column, std::string("missing parameter '") + f.key + "'");
            }
        }
        const auto &p = spec_.params;
        if (p.n == 0) {
            fail(tokens[0].column, "constraint n >= 1 violated");
        }
        if (p.k + p.l + p.c + p.r > p.n) {
            fail(tokens[0].column, "constraint a = n-k-l-c-r >= 0 violated (n=" + std::to_string(p.n) +
                                       ", k+l+c+r=" + std::to_string(p.k + p.l + p.c + p.r) + ")");
        }
        have_params_ = true;
    }

    void parse_gate(const std::vector<Token> &tokens) {
        const Token &head = tokens[0];
        auto need = [&](size_t count, const char *usage) {
            if (tokens.size() < count) {
                fail(head.column, std::string("expected '") + usage + "'");
            }
        };
        if (head.text == "H") {
            need(2, "H <i> [<i> ...]");
            Hadamard h;
            for (size_t i = 1; i < tokens.size(); i++) {
                size_t t = parse_index(tokens[i]);
                if (std::find(h.targets.begin(), h.targets.end(), t) != h.targets.end()) {
                    fail(tokens[i].column, "repeated Hadamard target " + std::to_string(t));
                }
                h.targets.push_back(t);
            }
            spec_.circuit.gates.emplace_back(std::move(h));
        } else if (head.text == "CNOT") {
            need(4, "CNOT <i> <j> <poly>");
            Cnot g;
            g.control = parse_index(tokens[1]);
            g.target = parse_index(tokens[2]);
            if (g.control == g.target) {
                fail(tokens[2].column, "control equals target");
            }
            std::string poly;
            for (size_t i = 3; i < tokens.size(); i++) {
                poly += tokens[i].text;
            }
            try {
                g.delays = LaurentPoly::parse(poly);
            } catch (const std::invalid_argument &e) {
                fail(tokens[3].column, e.what());
            }
            spec_.circuit.gates.emplace_back(std::move(g));
        } else if (head.text == "SWAP") {
            if (tokens.size() != 3) {
                fail(head.column, "expected 'SWAP <i> <j>'");
            }
            Swap g{parse_index(tokens[1]), parse_index(tokens[2])};
            if (g.a == g.b) {
                fail(tokens[2].column, "swap of a qubit with itself");
            }
            spec_.circuit.gates.emplace_back(g);
        } else {
            fail(head.column, "unknown gate '" + std::string(head.text) + "' (expected H, CNOT or SWAP)");
        }
    }

    void parse_error_item(const std::vector<Token> &tokens) {
        if (tokens.size() != 1) {
            fail(tokens[1].column, "one error per line");
        }
        const Token &t = tokens[0];
        if (t.text == "single-qubit") {
            spec_.errors->emplace_back(SingleQubitSet{});
            return;
        }
        try {
            PauliElement e = PauliElement::parse(t.text);
            if (e.width() != spec_.params.n) {
                fail(t.column, "error '" + std::string(t.text) + "' has width " + std::to_string(e.width()) +
                                   ", expected n=" + std::to_string(spec_.params.n));
            }
            spec_.errors->emplace_back(std::move(e));
        } catch (const std::invalid_argument &e) {
            fail(t.column, e.what());
        }
    }

    std::string_view text_;
    size_t line_no_ = 0;
    Section section_ = Section::Header;
    bool have_name_ = false;
    bool have_params_ = false;
    bool seen_circuit_ = false;
    CodeSpec spec_;
};

}  // namespace

CodeSpec parse_codefile(std::string_view text) {
    return Parser(text).run();
}

std::string format_codefile(const CodeSpec &spec) {
    std::ostringstream out;
    const auto &p = spec.params;
    out << "code " << spec.name << "\n";
    out << "params n=" << p.n << " k=" << p.k << " l=" << p.l << " r=" << p.r << " c=" << p.c << "\n";
    out << "circuit:\n";
    for (const auto &g : spec.circuit.gates) {
        out << "  " << gate_str(g) << "\n";
    }
    if (spec.errors) {
        out << "errors:\n";
        for (const auto &item : *spec.errors) {
            if (std::holds_alternative<SingleQubitSet>(item)) {
                out << "  single-qubit\n";
            } else {
                out << "  " << std::get<PauliElement>(item).str() << "\n";
            }
        }
    }
    return out.str();
}

std::vector<PauliElement> expand_error_set(const CodeSpec &spec) {
    std::vector<PauliElement> out;
    if (!spec.errors) {
        out.emplace_back(spec.params.n);
        auto singles = single_qubit_errors(spec.params.n);
        out.insert(out.end(), singles.begin(), singles.end());
        return out;
    }
    for (const auto &item : *spec.errors) {
        if (std::holds_alternative<SingleQubitSet>(item)) {
            auto singles = single_qubit_errors(spec.params.n);
            out.insert(out.end(), singles.begin(), singles.end());
        } else {
            out.push_back(std::get<PauliElement>(item));
        }
    }
    return out;
}

BuiltCode build_code(const CodeSpec &spec) {
    BuiltCode built;
    built.initial = build_initial_code(spec.params);
    built.encoded = apply_circuit(built.initial, spec.circuit);
    return built;
}

}  // namespace gqcc
