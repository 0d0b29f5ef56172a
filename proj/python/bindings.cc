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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gqcc/codefile.h"
#include "gqcc/simulator.h"

namespace py = pybind11;
using namespace gqcc;

namespace {

std::vector<PauliElement> rows_of(const PolyMatrix &m) {
    return m.rows();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Grandfather quantum convolutional codes.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def(py::init<>())
        .def(py::init([](const std::string &text) {
                 return LaurentPoly::parse(text);
             }),
             py::arg("text"))
        .def_static("monomial", &LaurentPoly::monomial)
        .def_property_readonly("exponents", &LaurentPoly::exponents)
        .def("is_zero", &LaurentPoly::is_zero)
        .def("coefficient", &LaurentPoly::coefficient)
        .def("reciprocal", &LaurentPoly::reciprocal)
        .def("shifted", &LaurentPoly::shifted)
        .def(py::self + py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &LaurentPoly::str)
        .def("__repr__", [](const LaurentPoly &p) {
            return "LaurentPoly('" + p.str() + "')";
        });

    py::class_<PauliElement>(m, "PauliElement")
        .def(py::init([](const std::string &text) {
                 return PauliElement::parse(text);
             }),
             py::arg("text"))
        .def_static("single", &PauliElement::single, py::arg("width"), py::arg("qubit"), py::arg("letter"),
                    py::arg("frame") = 0)
        .def_property_readonly("width", &PauliElement::width)
        .def("weight", &PauliElement::weight)
        .def("is_identity", &PauliElement::is_identity)
        .def("shifted", &PauliElement::shifted)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &PauliElement::str)
        .def("__repr__", [](const PauliElement &e) {
            return "PauliElement('" + e.str() + "')";
        });

    m.def("symplectic_product", &symplectic_product, py::arg("a"), py::arg("b"));

    py::class_<CodeSpec>(m, "CodeSpec")
        .def_readonly("name", &CodeSpec::name)
        .def_property_readonly("params", [](const CodeSpec &s) {
            const auto &p = s.params;
            py::dict d;
            d["n"] = p.n;
            d["k"] = p.k;
            d["l"] = p.l;
            d["r"] = p.r;
            d["c"] = p.c;
            return d;
        })
        .def_property_readonly("num_gates", [](const CodeSpec &s) {
            return s.circuit.gates.size();
        })
        .def(py::self == py::self);

    m.def("parse_codefile", &parse_codefile, py::arg("text"));
    m.def("format_codefile", &format_codefile, py::arg("spec"));

    py::class_<GrandfatherCode>(m, "Code")
        .def_property_readonly("stabilizer", [](const GrandfatherCode &c) {
            return rows_of(c.global);
        })
        .def_property_readonly("s_e", [](const GrandfatherCode &c) {
            return rows_of(c.s_e);
        })
        .def_property_readonly("s_i", [](const GrandfatherCode &c) {
            return rows_of(c.s_i);
        })
        .def_property_readonly("s_g", [](const GrandfatherCode &c) {
            return rows_of(c.s_g);
        })
        .def_property_readonly("s_c", [](const GrandfatherCode &c) {
            return rows_of(c.s_c);
        })
        .def("structure_problems", &check_code_structure)
        .def("__repr__", [](const GrandfatherCode &c) {
            return c.global.str();
        });

    m.def(
        "build_code",
        [](const CodeSpec &spec) {
            auto built = build_code(spec);
            return py::make_tuple(built.initial, built.encoded);
        },
        py::arg("spec"), "Returns (initial, encoded) codes.");

    m.def(
        "syndrome_table",
        [](const GrandfatherCode &code) {
            auto table = build_syndrome_table(code, single_qubit_errors(code.params.n));
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto &row : table.rows()) {
                out.emplace_back(error_label(row.error), bits_str(row.key));
            }
            return out;
        },
        py::arg("code"), "Single-qubit errors and their syndromes, as (label, bits) pairs.");

    m.def(
        "is_passively_corrected",
        [](const GrandfatherCode &code, const PauliElement &e) {
            return is_passively_corrected(code, e);
        },
        py::arg("code"), py::arg("error"));

    m.def(
        "estimate_logical_rate",
        [](const GrandfatherCode &code, const std::string &noise, size_t frames, uint64_t trials, uint64_t seed,
           unsigned threads) {
            SimReport rep;
            {
                py::gil_scoped_release release;
                rep = estimate_logical_rate(code, parse_noise(noise), frames, trials, seed, threads);
            }
            return py::module_::import("json").attr("loads")(rep.json());
        },
        py::arg("code"), py::arg("noise"), py::arg("frames") = 100, py::arg("trials") = 1000, py::arg("seed") = 0,
        py::arg("threads") = 1, "Runs the stream simulator and returns the report as a dict.");
}
