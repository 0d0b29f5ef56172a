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

#include "gqcc/circuit.h"

#include <algorithm>
#include <stdexcept>

namespace gqcc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_index(size_t i, size_t width, const GateOp &gate) {
    if (i < 1 || i > width) {
        throw std::invalid_argument(
            "qubit index " + std::to_string(i) + " out of range 1.." + std::to_string(width) + " in '" +
            gate_str(gate) + "'");
    }
}

}  // namespace

std::string gate_str(const GateOp &gate) {
    return std::visit(
        overloaded{
            [](const Hadamard &h) {
                std::string s = "H";
                for (size_t t : h.targets) {
                    s += ' ' + std::to_string(t);
                }
                return s;
            },
            [](const Cnot &g) {
                return "CNOT " + std::to_string(g.control) + ' ' + std::to_string(g.target) + ' ' + g.delays.str();
            },
            [](const Swap &g) {
                return "SWAP " + std::to_string(g.a) + ' ' + std::to_string(g.b);
            },
        },
        gate);
}

void validate_gate(const GateOp &gate, size_t width) {
    std::visit(
        overloaded{
            [&](const Hadamard &h) {
                if (h.targets.empty()) {
                    throw std::invalid_argument("H needs at least one target");
                }
                for (size_t t : h.targets) {
                    check_index(t, width, gate);
                }
                std::vector<size_t> sorted = h.targets;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                    throw std::invalid_argument("repeated target in '" + gate_str(gate) + "'");
                }
            },
            [&](const Cnot &g) {
                check_index(g.control, width, gate);
                check_index(g.target, width, gate);
                if (g.control == g.target) {
                    throw std::invalid_argument("control equals target in '" + gate_str(gate) + "'");
                }
            },
            [&](const Swap &g) {
                check_index(g.a, width, gate);
                check_index(g.b, width, gate);
                if (g.a == g.b) {
                    throw std::invalid_argument("swap of a qubit with itself in '" + gate_str(gate) + "'");
                }
            },
        },
        gate);
}

void Circuit::validate() const {
    for (const auto &g : gates) {
        validate_gate(g, width);
    }
}

void apply_gate(PauliElement &row, const GateOp &gate, size_t alice_offset) {
    if (row.width() < alice_offset) {
        throw std::invalid_argument("apply_gate: offset exceeds row width");
    }
    validate_gate(gate, row.width() - alice_offset);
    auto col = [&](size_t i) {
        return alice_offset + i - 1;
    };
    std::visit(
        overloaded{
            [&](const Hadamard &h) {
                for (size_t t : h.targets) {
                    std::swap(row.z(col(t)), row.x(col(t)));
                }
            },
            [&](const Cnot &g) {
                size_t i = col(g.control);
                size_t j = col(g.target);
                // X: col j += f(D) col i.  Z: col i += f(1/D) col j.
                if (!row.x(i).is_zero()) {
                    row.x(j) += g.delays * row.x(i);
                }
                if (!row.z(j).is_zero()) {
                    row.z(i) += g.delays.reciprocal() * row.z(j);
                }
            },
            [&](const Swap &g) {
                std::swap(row.z(col(g.a)), row.z(col(g.b)));
                std::swap(row.x(col(g.a)), row.x(col(g.b)));
            },
        },
        gate);
}

PolyMatrix apply_gate(const PolyMatrix &m, const GateOp &gate, size_t alice_offset) {
    if (m.width() < alice_offset) {
        throw std::invalid_argument("apply_gate: offset exceeds matrix width");
    }
    validate_gate(gate, m.width() - alice_offset);
    PolyMatrix out = m;
    for (auto &row : out.rows()) {
        apply_gate(row, gate, alice_offset);
    }
    return out;
}

GrandfatherCode apply_circuit(const GrandfatherCode &code, const Circuit &circuit) {
    if (circuit.width != code.params.n) {
        throw std::invalid_argument(
            "circuit width " + std::to_string(circuit.width) + " does not match n=" + std::to_string(code.params.n));
    }
    circuit.validate();
    GrandfatherCode out = code;
    size_t c = code.params.c;
    for (const auto &gate : circuit.gates) {
        for (auto &row : out.global.rows()) {
            apply_gate(row, gate, c);
        }
        for (PolyMatrix *m : {&out.s_e, &out.s_i, &out.s_g, &out.s_c}) {
            for (auto &row : m->rows()) {
                apply_gate(row, gate, 0);
            }
        }
    }
    return out;
}

Circuit invert(const Circuit &circuit) {
    Circuit out = circuit;
    std::reverse(out.gates.begin(), out.gates.end());
    return out;
}

PauliElement conjugate_pauli(const PauliElement &e, const Circuit &circuit) {
    if (e.width() != circuit.width) {
        throw std::invalid_argument(
            "conjugate_pauli: element width " + std::to_string(e.width()) + " does not match circuit width " +
            std::to_string(circuit.width));
    }
    PauliElement out = e;
    for (const auto &gate : circuit.gates) {
        apply_gate(out, gate, 0);
    }
    return out;
}

}  // namespace gqcc
