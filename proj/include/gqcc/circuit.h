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

#ifndef GQCC_CIRCUIT_H
#define GQCC_CIRCUIT_H

#include <string>
#include <variant>
#include <vector>

#include "gqcc/stabilizer.h"

namespace gqcc {

// Gate qubit indices are 1-based and address Alice's qubits of every frame.

/// Hadamard on each target qubit of every frame.
struct Hadamard {
    std::vector<size_t> targets;
    friend bool operator==(const Hadamard &, const Hadamard &) = default;
};

/// CNOT from `control` in every frame to `target` delayed by each exponent of `delays`.
struct Cnot {
    size_t control = 0;
    size_t target = 0;
    LaurentPoly delays;
    friend bool operator==(const Cnot &, const Cnot &) = default;
};

struct Swap {
    size_t a = 0;
    size_t b = 0;
    friend bool operator==(const Swap &, const Swap &) = default;
};

using GateOp = std::variant<Hadamard, Cnot, Swap>;

/// `H 3 4 5`, `CNOT 2 4 1+D`, `SWAP 1 4`.
std::string gate_str(const GateOp &gate);

/// Throws std::invalid_argument if an index is outside 1..width or a two-qubit gate
/// uses the same qubit twice.
void validate_gate(const GateOp &gate, size_t width);

struct Circuit {
    size_t width = 0;
    std::vector<GateOp> gates;

    void validate() const;
    friend bool operator==(const Circuit &, const Circuit &) = default;
};

/// Applies one gate's column rule to every row. Alice qubit i is column
/// `alice_offset + i - 1`, so pass c for a global matrix and 0 for an Alice-local one.
void apply_gate(PauliElement &row, const GateOp &gate, size_t alice_offset);
PolyMatrix apply_gate(const PolyMatrix &m, const GateOp &gate, size_t alice_offset);

/// Runs the circuit over the stabilizer (offset c) and all subgroup matrices (offset 0).
GrandfatherCode apply_circuit(const GrandfatherCode &code, const Circuit &circuit);

/// Every gate is its own inverse, so this reverses the gate order.
Circuit invert(const Circuit &circuit);

/// Pushes an Alice-local Pauli element through the circuit.
PauliElement conjugate_pauli(const PauliElement &e, const Circuit &circuit);

}  // namespace gqcc

#endif
