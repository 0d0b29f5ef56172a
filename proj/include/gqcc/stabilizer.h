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

#ifndef GQCC_STABILIZER_H
#define GQCC_STABILIZER_H

#include <cstddef>
#include <string>
#include <vector>

#include "gqcc/pauli.h"

namespace gqcc {

/// Parameters [n,k,l;r,c] of a grandfather code.
///
/// Alice's n columns per frame are laid out as
/// [ebit halves (c) | ancillas (a) | gauge (r) | classical (l) | information (k)].
struct CodeParams {
    size_t n = 0;
    size_t k = 0;
    size_t l = 0;
    size_t r = 0;
    size_t c = 0;

    /// a = n - k - l - c - r. Only meaningful once `validate` passes.
    size_t ancillas() const {
        return n - k - l - c - r;
    }
    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;

    size_t ebit_column(size_t j) const {
        return j;
    }
    size_t ancilla_column(size_t j) const {
        return c + j;
    }
    size_t gauge_column(size_t j) const {
        return c + ancillas() + j;
    }
    size_t classical_column(size_t j) const {
        return c + ancillas() + r + j;
    }
    size_t info_column(size_t j) const {
        return c + ancillas() + r + l + j;
    }

    friend bool operator==(const CodeParams &, const CodeParams &) = default;
};

/// Rows of Pauli elements of a common width: a generator matrix [Z(D) | X(D)].
class PolyMatrix {
   public:
    PolyMatrix() = default;
    explicit PolyMatrix(size_t width) : width_(width) {
    }
    /// Throws std::invalid_argument if a row has the wrong width.
    PolyMatrix(size_t width, std::vector<PauliElement> rows);

    size_t width() const {
        return width_;
    }
    size_t num_rows() const {
        return rows_.size();
    }
    bool empty() const {
        return rows_.empty();
    }
    const std::vector<PauliElement> &rows() const {
        return rows_;
    }
    std::vector<PauliElement> &rows() {
        return rows_;
    }
    const PauliElement &operator[](size_t i) const {
        return rows_[i];
    }
    PauliElement &operator[](size_t i) {
        return rows_[i];
    }
    void push_back(PauliElement row);

    /// Multi-line `[ z ... | x ... ]` text, columns aligned.
    std::string str() const;

    friend bool operator==(const PolyMatrix &, const PolyMatrix &) = default;

   private:
    size_t width_ = 0;
    std::vector<PauliElement> rows_;
};

/// True when both matrices have the same shape and each row of `a` equals the
/// matching row of `b` times some unit D^k (k may differ per row).
bool shift_equivalent(const PolyMatrix &a, const PolyMatrix &b);

/// Stabilizer and the four local subgroup matrices of a grandfather code.
///
/// `global` has width c+n with Bob's c columns first. The subgroup matrices are
/// Alice-local (width n).
struct GrandfatherCode {
    CodeParams params;
    PolyMatrix global;
    PolyMatrix s_e;
    PolyMatrix s_i;
    PolyMatrix s_g;
    PolyMatrix s_c;

    friend bool operator==(const GrandfatherCode &, const GrandfatherCode &) = default;
};

struct InitialSubgroups {
    PolyMatrix s_e;
    PolyMatrix s_i;
    PolyMatrix s_g;
    PolyMatrix s_c;
};

PolyMatrix build_initial_stabilizer(const CodeParams &params);
InitialSubgroups build_initial_subgroups(const CodeParams &params);
GrandfatherCode build_initial_code(const CodeParams &params);

/// True iff every pair of rows has zero shifted symplectic product.
bool validate_symplectic(const PolyMatrix &m);

/// Drops Bob's c leading columns. Throws std::invalid_argument unless width is c+n.
PolyMatrix alice_restriction(const PolyMatrix &m, const CodeParams &params);

/// Pads an Alice-local element with c identity columns for Bob.
PauliElement with_bob_columns(const PauliElement &alice, const CodeParams &params);

/// Checks every structural invariant of a code; returns one message per violation.
std::vector<std::string> check_code_structure(const GrandfatherCode &code);

}  // namespace gqcc

#endif
