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

#ifndef GQCC_GF2POLY_H
#define GQCC_GF2POLY_H

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gqcc {

/// A binary Laurent polynomial in the delay variable D.
///
/// Stored as the sorted, duplicate-free list of exponents whose coefficient is 1.
/// Arithmetic is exact over GF(2)[D, D^-1]; nothing is ever truncated.
class LaurentPoly {
   public:
    LaurentPoly() = default;

    /// Builds a polynomial from exponents. Repeated exponents cancel in pairs.
    LaurentPoly(std::initializer_list<int> exponents);
    static LaurentPoly from_exponents(std::vector<int> exponents);
    static LaurentPoly monomial(int exponent);
    static LaurentPoly one() {
        return monomial(0);
    }

    /// Parses text such as `1+D`, `D^-1`, `D^2 + D^-3` or `0`.
    /// Throws std::invalid_argument on malformed text.
    static LaurentPoly parse(std::string_view text);

    /// Canonical text, terms in ascending exponent order (`D^-1+1+D`). Zero prints as `0`.
    std::string str() const;

    bool is_zero() const {
        return exps_.empty();
    }
    bool is_one() const {
        return exps_.size() == 1 && exps_[0] == 0;
    }
    bool coefficient(int exponent) const;
    /// Both throw std::domain_error on the zero polynomial.
    int min_degree() const;
    int max_degree() const;
    size_t term_count() const {
        return exps_.size();
    }
    const std::vector<int> &exponents() const {
        return exps_;
    }

    /// Substitutes D -> D^-1.
    LaurentPoly reciprocal() const;
    /// Multiplies by D^k.
    LaurentPoly shifted(int k) const;

    LaurentPoly &operator+=(const LaurentPoly &other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) {
        a += b;
        return a;
    }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    LaurentPoly &operator*=(const LaurentPoly &other) {
        *this = *this * other;
        return *this;
    }

    friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;
    friend auto operator<=>(const LaurentPoly &a, const LaurentPoly &b) {
        return a.exps_ <=> b.exps_;
    }

   private:
    std::vector<int> exps_;
};

std::ostream &operator<<(std::ostream &out, const LaurentPoly &p);

}  // namespace gqcc

#endif
