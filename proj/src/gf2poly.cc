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

#include "gqcc/gf2poly.h"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <ostream>
#include <stdexcept>

namespace gqcc {

namespace {

// Largest exponent magnitude accepted by the text parser.
constexpr long kMaxParsedExponent = 1 << 20;

// Sorts and cancels equal exponents in pairs.
void normalize(std::vector<int> &exps) {
    std::sort(exps.begin(), exps.end());
    std::vector<int> out;
    out.reserve(exps.size());
    for (size_t i = 0; i < exps.size();) {
        size_t j = i;
        while (j < exps.size() && exps[j] == exps[i]) {
            j++;
        }
        if ((j - i) % 2 == 1) {
            out.push_back(exps[i]);
        }
        i = j;
    }
    exps = std::move(out);
}

}  // namespace

LaurentPoly::LaurentPoly(std::initializer_list<int> exponents) : exps_(exponents) {
    normalize(exps_);
}

LaurentPoly LaurentPoly::from_exponents(std::vector<int> exponents) {
    LaurentPoly p;
    p.exps_ = std::move(exponents);
    normalize(p.exps_);
    return p;
}

LaurentPoly LaurentPoly::monomial(int exponent) {
    LaurentPoly p;
    p.exps_.push_back(exponent);
    return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '\t') {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("empty polynomial");
    }
    if (s == "0") {
        return {};
    }
    std::vector<int> exps;
    size_t pos = 0;
    while (true) {
        size_t end = s.find('+', pos);
        std::string_view term(s.data() + pos, (end == std::string::npos ? s.size() : end) - pos);
        if (term.empty()) {
            throw std::invalid_argument("empty term in polynomial '" + std::string(text) + "'");
        }
        if (term == "1") {
            exps.push_back(0);
        } else if (term == "D") {
            exps.push_back(1);
        } else if (term.size() > 2 && term[0] == 'D' && term[1] == '^') {
            std::string_view digits = term.substr(2);
            bool negative = false;
            if (digits[0] == '-') {
                negative = true;
                digits.remove_prefix(1);
            }
            long value = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
            if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() ||
                value > kMaxParsedExponent) {
                throw std::invalid_argument("bad exponent in term '" + std::string(term) + "'");
            }
            exps.push_back(static_cast<int>(negative ? -value : value));
        } else {
            throw std::invalid_argument("bad term '" + std::string(term) + "'");
        }
        if (end == std::string::npos) {
            break;
        }
        pos = end + 1;
    }
    return from_exponents(std::move(exps));
}

std::string LaurentPoly::str() const {
    if (exps_.empty()) {
        return "0";
    }
    std::string out;
    for (int e : exps_) {
        if (!out.empty()) {
            out += '+';
        }
        if (e == 0) {
            out += '1';
        } else if (e == 1) {
            out += 'D';
        } else {
            out += "D^" + std::to_string(e);
        }
    }
    return out;
}

bool LaurentPoly::coefficient(int exponent) const {
    return std::binary_search(exps_.begin(), exps_.end(), exponent);
}

int LaurentPoly::min_degree() const {
    if (exps_.empty()) {
        throw std::domain_error("min_degree of the zero polynomial");
    }
    return exps_.front();
}

int LaurentPoly::max_degree() const {
    if (exps_.empty()) {
        throw std::domain_error("max_degree of the zero polynomial");
    }
    return exps_.back();
}

LaurentPoly LaurentPoly::reciprocal() const {
    LaurentPoly p;
    p.exps_.reserve(exps_.size());
    for (auto it = exps_.rbegin(); it != exps_.rend(); ++it) {
        p.exps_.push_back(-*it);
    }
    return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    for (int &e : p.exps_) {
        e += k;
    }
    return p;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other) {
    if (other.exps_.empty()) {
        return *this;
    }
    std::vector<int> out;
    out.reserve(exps_.size() + other.exps_.size());
    std::set_symmetric_difference(
        exps_.begin(), exps_.end(), other.exps_.begin(), other.exps_.end(), std::back_inserter(out));
    exps_ = std::move(out);
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<int> terms;
    terms.reserve(a.exps_.size() * b.exps_.size());
    for (int ea : a.exps_) {
        for (int eb : b.exps_) {
            terms.push_back(ea + eb);
        }
    }
    return LaurentPoly::from_exponents(std::move(terms));
}

std::ostream &operator<<(std::ostream &out, const LaurentPoly &p) {
    return out << p.str();
}

}  // namespace gqcc
