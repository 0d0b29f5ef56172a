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

#include "gqcc/stabilizer.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gqcc {

void CodeParams::validate() const {
    if (n == 0) {
        throw std::invalid_argument("n must be at least 1");
    }
    if (k + l + c + r > n) {
        throw std::invalid_argument(
            "ancilla count a = n-k-l-c-r would be negative (n=" + std::to_string(n) +
            ", k+l+c+r=" + std::to_string(k + l + c + r) + ")");
    }
}

PolyMatrix::PolyMatrix(size_t width, std::vector<PauliElement> rows) : width_(width) {
    for (auto &row : rows) {
        push_back(std::move(row));
    }
}

void PolyMatrix::push_back(PauliElement row) {
    if (row.width() != width_) {
        throw std::invalid_argument(
            "row of width " + std::to_string(row.width()) + " in a matrix of width " + std::to_string(width_));
    }
    rows_.push_back(std::move(row));
}

std::string PolyMatrix::str() const {
    size_t cell = 1;
    for (const auto &row : rows_) {
        for (size_t q = 0; q < width_; q++) {
            cell = std::max({cell, row.z(q).str().size(), row.x(q).str().size()});
        }
    }
    auto pad = [&](const std::string &s) {
        return s + std::string(cell - s.size(), ' ');
    };
    std::ostringstream out;
    for (const auto &row : rows_) {
        out << "[ ";
        for (size_t q = 0; q < width_; q++) {
            out << pad(row.z(q).str()) << ' ';
        }
        out << '|';
        for (size_t q = 0; q < width_; q++) {
            out << ' ' << pad(row.x(q).str());
        }
        out << " ]\n";
    }
    return out.str();
}

namespace {

// Lowest exponent over all entries of a row, or 0 for an all-zero row.
int row_origin(const PauliElement &row) {
    auto span = row.frame_span();
    return span ? span->first : 0;
}

PauliElement z_on(size_t width, size_t col) {
    PauliElement p(width);
    p.z(col) = LaurentPoly::one();
    return p;
}

PauliElement x_on(size_t width, size_t col) {
    PauliElement p(width);
    p.x(col) = LaurentPoly::one();
    return p;
}

}  // namespace

bool shift_equivalent(const PolyMatrix &a, const PolyMatrix &b) {
    if (a.width() != b.width() || a.num_rows() != b.num_rows()) {
        return false;
    }
    for (size_t i = 0; i < a.num_rows(); i++) {
        if (a[i].shifted(-row_origin(a[i])) != b[i].shifted(-row_origin(b[i]))) {
            return false;
        }
    }
    return true;
}

PolyMatrix build_initial_stabilizer(const CodeParams &params) {
    params.validate();
    size_t c = params.c;
    size_t width = c + params.n;
    PolyMatrix m(width);
    // Bob's column j pairs with Alice's ebit column j (global index c + j).
    for (size_t j = 0; j < c; j++) {
        PauliElement row = z_on(width, j);
        row.z(c + j) = LaurentPoly::one();
        m.push_back(std::move(row));
    }
    for (size_t j = 0; j < c; j++) {
        PauliElement row = x_on(width, j);
        row.x(c + j) = LaurentPoly::one();
        m.push_back(std::move(row));
    }
    for (size_t j = 0; j < params.ancillas(); j++) {
        m.push_back(z_on(width, c + params.ancilla_column(j)));
    }
    return m;
}

InitialSubgroups build_initial_subgroups(const CodeParams &params) {
    params.validate();
    size_t n = params.n;
    InitialSubgroups g{PolyMatrix(n), PolyMatrix(n), PolyMatrix(n), PolyMatrix(n)};
    for (size_t j = 0; j < params.c; j++) {
        g.s_e.push_back(z_on(n, params.ebit_column(j)));
    }
    for (size_t j = 0; j < params.c; j++) {
        g.s_e.push_back(x_on(n, params.ebit_column(j)));
    }
    for (size_t j = 0; j < params.ancillas(); j++) {
        g.s_i.push_back(z_on(n, params.ancilla_column(j)));
    }
    for (size_t j = 0; j < params.r; j++) {
        g.s_g.push_back(z_on(n, params.gauge_column(j)));
    }
    for (size_t j = 0; j < params.r; j++) {
        g.s_g.push_back(x_on(n, params.gauge_column(j)));
    }
    for (size_t j = 0; j < params.l; j++) {
        g.s_c.push_back(z_on(n, params.classical_column(j)));
    }
    return g;
}

GrandfatherCode build_initial_code(const CodeParams &params) {
    auto groups = build_initial_subgroups(params);
    return GrandfatherCode{
        params,
        build_initial_stabilizer(params),
        std::move(groups.s_e),
        std::move(groups.s_i),
        std::move(groups.s_g),
        std::move(groups.s_c),
    };
}

bool validate_symplectic(const PolyMatrix &m) {
    for (size_t i = 0; i < m.num_rows(); i++) {
        for (size_t j = i + 1; j < m.num_rows(); j++) {
            if (!symplectic_product(m[i], m[j]).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

PolyMatrix alice_restriction(const PolyMatrix &m, const CodeParams &params) {
    if (m.width() != params.c + params.n) {
        throw std::invalid_argument(
            "alice_restriction: matrix width " + std::to_string(m.width()) + " is not c+n=" +
            std::to_string(params.c + params.n));
    }
    PolyMatrix out(params.n);
    for (const auto &row : m.rows()) {
        std::vector<LaurentPoly> z(row.z().begin() + params.c, row.z().end());
        std::vector<LaurentPoly> x(row.x().begin() + params.c, row.x().end());
        out.push_back(PauliElement(std::move(z), std::move(x)));
    }
    return out;
}

PauliElement with_bob_columns(const PauliElement &alice, const CodeParams &params) {
    if (alice.width() != params.n) {
        throw std::invalid_argument("with_bob_columns: element width is not n");
    }
    std::vector<LaurentPoly> z(params.c), x(params.c);
    z.insert(z.end(), alice.z().begin(), alice.z().end());
    x.insert(x.end(), alice.x().begin(), alice.x().end());
    return PauliElement(std::move(z), std::move(x));
}

std::vector<std::string> check_code_structure(const GrandfatherCode &code) {
    std::vector<std::string> problems;
    const auto &p = code.params;
    try {
        p.validate();
    } catch (const std::invalid_argument &e) {
        problems.emplace_back(e.what());
        return problems;
    }
    auto expect_shape = [&](const PolyMatrix &m, const char *name, size_t width, size_t rows) {
        if (m.width() != width || m.num_rows() != rows) {
            problems.push_back(
                std::string(name) + " has shape " + std::to_string(m.num_rows()) + "x" + std::to_string(m.width()) +
                ", expected " + std::to_string(rows) + "x" + std::to_string(width));
            return false;
        }
        return true;
    };
    bool shapes = true;
    shapes &= expect_shape(code.global, "stabilizer", p.c + p.n, 2 * p.c + p.ancillas());
    shapes &= expect_shape(code.s_e, "S_E", p.n, 2 * p.c);
    shapes &= expect_shape(code.s_i, "S_I", p.n, p.ancillas());
    shapes &= expect_shape(code.s_g, "S_G", p.n, 2 * p.r);
    shapes &= expect_shape(code.s_c, "S_C", p.n, p.l);
    if (!shapes) {
        return problems;
    }

    for (size_t i = 0; i < code.global.num_rows(); i++) {
        for (size_t j = i + 1; j < code.global.num_rows(); j++) {
            auto prod = symplectic_product(code.global[i], code.global[j]);
            if (!prod.is_zero()) {
                problems.push_back(
                    "stabilizer rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                    " do not commute under all shifts (product " + prod.str() + ")");
            }
        }
    }

    // Ebit rows pair as (Z_j, X_j) = (row j, row c+j); all other S_E pairs commute.
    for (size_t i = 0; i < code.s_e.num_rows(); i++) {
        for (size_t j = i + 1; j < code.s_e.num_rows(); j++) {
            auto prod = symplectic_product(code.s_e[i], code.s_e[j]);
            bool paired = j == i + p.c && i < p.c;
            if (paired ? !prod.is_one() : !prod.is_zero()) {
                problems.push_back(
                    "S_E rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " have product " +
                    prod.str() + ", expected " + (paired ? "1" : "0"));
            }
        }
    }

    struct Named {
        const PolyMatrix *m;
        const char *name;
    };
    const Named all[] = {{&code.s_e, "S_E"}, {&code.s_i, "S_I"}, {&code.s_g, "S_G"}, {&code.s_c, "S_C"}};
    const Named isolated[] = {{&code.s_i, "S_I"}, {&code.s_c, "S_C"}};
    for (const auto &a : isolated) {
        for (size_t i = 0; i < a.m->num_rows(); i++) {
            for (const auto &b : all) {
                if (a.m == &code.s_c && b.m == &code.s_i) {
                    continue;  // already reported from the S_I side
                }
                for (size_t j = 0; j < b.m->num_rows(); j++) {
                    if (a.m == b.m && j <= i) {
                        continue;
                    }
                    auto prod = symplectic_product((*a.m)[i], (*b.m)[j]);
                    if (!prod.is_zero()) {
                        problems.push_back(
                            std::string(a.name) + " row " + std::to_string(i + 1) + " and " + b.name + " row " +
                            std::to_string(j + 1) + " do not commute (product " + prod.str() + ")");
                    }
                }
            }
        }
    }
    return problems;
}

}  // namespace gqcc
