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

#include "gqcc/pauli.h"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <set>
#include <stdexcept>

namespace gqcc {

namespace {

void require_same_width(const PauliElement &a, const PauliElement &b, const char *op) {
    if (a.width() != b.width()) {
        throw std::invalid_argument(
            std::string(op) + ": width mismatch (" + std::to_string(a.width()) + " vs " +
            std::to_string(b.width()) + ")");
    }
}

}  // namespace

PauliElement::PauliElement(size_t width) : z_(width), x_(width) {
}

PauliElement::PauliElement(std::vector<LaurentPoly> z, std::vector<LaurentPoly> x)
    : z_(std::move(z)), x_(std::move(x)) {
    if (z_.size() != x_.size()) {
        throw std::invalid_argument("PauliElement: z and x have different lengths");
    }
}

PauliElement PauliElement::from_frames(size_t width, const std::vector<FrameString> &frames) {
    std::vector<std::vector<int>> zs(width), xs(width);
    std::set<int> seen;
    for (const auto &f : frames) {
        if (!seen.insert(f.frame).second) {
            throw std::invalid_argument("frame " + std::to_string(f.frame) + " given twice");
        }
        if (f.letters.size() != width) {
            throw std::invalid_argument(
                "frame string '" + f.letters + "' has length " + std::to_string(f.letters.size()) +
                ", expected " + std::to_string(width));
        }
        for (size_t q = 0; q < width; q++) {
            switch (f.letters[q]) {
                case 'I':
                    break;
                case 'X':
                    xs[q].push_back(f.frame);
                    break;
                case 'Z':
                    zs[q].push_back(f.frame);
                    break;
                case 'Y':
                    xs[q].push_back(f.frame);
                    zs[q].push_back(f.frame);
                    break;
                default:
                    throw std::invalid_argument(
                        std::string("invalid Pauli letter '") + f.letters[q] + "' in '" + f.letters + "'");
            }
        }
    }
    PauliElement out(width);
    for (size_t q = 0; q < width; q++) {
        out.z_[q] = LaurentPoly::from_exponents(std::move(zs[q]));
        out.x_[q] = LaurentPoly::from_exponents(std::move(xs[q]));
    }
    return out;
}

PauliElement PauliElement::parse(std::string_view text) {
    int first = 0;
    if (!text.empty() && text[0] == '@') {
        size_t colon = text.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("expected ':' after frame offset in '" + std::string(text) + "'");
        }
        std::string_view digits = text.substr(1, colon - 1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), first);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || first < -(1 << 20) ||
            first > (1 << 20)) {
            throw std::invalid_argument("bad frame offset in '" + std::string(text) + "'");
        }
        text.remove_prefix(colon + 1);
    }
    std::vector<FrameString> frames;
    size_t pos = 0;
    while (true) {
        size_t end = text.find_first_of("|,", pos);
        std::string_view part = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        frames.push_back({first + static_cast<int>(frames.size()), std::string(part)});
        if (end == std::string_view::npos) {
            break;
        }
        pos = end + 1;
    }
    size_t width = frames[0].letters.size();
    if (width == 0) {
        throw std::invalid_argument("empty frame string");
    }
    return from_frames(width, frames);
}

PauliElement PauliElement::single(size_t width, size_t qubit, char letter, int frame) {
    if (qubit >= width) {
        throw std::invalid_argument("qubit index out of range");
    }
    std::string s(width, 'I');
    s[qubit] = letter;
    return from_frames(width, {{frame, s}});
}

bool PauliElement::is_identity() const {
    for (size_t q = 0; q < width(); q++) {
        if (!z_[q].is_zero() || !x_[q].is_zero()) {
            return false;
        }
    }
    return true;
}

char PauliElement::letter(int frame, size_t qubit) const {
    bool zb = z_[qubit].coefficient(frame);
    bool xb = x_[qubit].coefficient(frame);
    return "IXZY"[xb + 2 * zb];
}

std::optional<std::pair<int, int>> PauliElement::frame_span() const {
    std::optional<std::pair<int, int>> span;
    auto extend = [&](const LaurentPoly &p) {
        if (p.is_zero()) {
            return;
        }
        if (!span) {
            span = {p.min_degree(), p.max_degree()};
        } else {
            span->first = std::min(span->first, p.min_degree());
            span->second = std::max(span->second, p.max_degree());
        }
    };
    for (size_t q = 0; q < width(); q++) {
        extend(z_[q]);
        extend(x_[q]);
    }
    return span;
}

std::string PauliElement::frame_str(int frame) const {
    std::string s(width(), 'I');
    for (size_t q = 0; q < width(); q++) {
        s[q] = letter(frame, q);
    }
    return s;
}

std::vector<FrameString> PauliElement::frames() const {
    std::vector<FrameString> out;
    auto span = frame_span();
    if (!span) {
        return out;
    }
    for (int t = span->first; t <= span->second; t++) {
        out.push_back({t, frame_str(t)});
    }
    return out;
}

std::string PauliElement::str() const {
    auto span = frame_span();
    if (!span) {
        return std::string(width(), 'I');
    }
    std::string out;
    if (span->first != 0) {
        out = "@" + std::to_string(span->first) + ":";
    }
    for (int t = span->first; t <= span->second; t++) {
        if (t != span->first) {
            out += '|';
        }
        out += frame_str(t);
    }
    return out;
}

size_t PauliElement::weight() const {
    size_t total = 0;
    for (size_t q = 0; q < width(); q++) {
        const auto &a = z_[q].exponents();
        const auto &b = x_[q].exponents();
        // |support(z) ∪ support(x)|
        size_t common = 0;
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) {
                common++;
                i++;
                j++;
            } else if (a[i] < b[j]) {
                i++;
            } else {
                j++;
            }
        }
        total += a.size() + b.size() - common;
    }
    return total;
}

PauliElement PauliElement::shifted(int k) const {
    PauliElement out = *this;
    for (size_t q = 0; q < width(); q++) {
        out.z_[q] = z_[q].shifted(k);
        out.x_[q] = x_[q].shifted(k);
    }
    return out;
}

PauliElement &PauliElement::operator*=(const PauliElement &other) {
    require_same_width(*this, other, "compose");
    for (size_t q = 0; q < width(); q++) {
        z_[q] += other.z_[q];
        x_[q] += other.x_[q];
    }
    return *this;
}

PauliElement compose(const PauliElement &a, const PauliElement &b) {
    return a * b;
}

LaurentPoly symplectic_product(const PauliElement &a, const PauliElement &b) {
    require_same_width(a, b, "symplectic_product");
    LaurentPoly total;
    for (size_t q = 0; q < a.width(); q++) {
        if (!a.z(q).is_zero() && !b.x(q).is_zero()) {
            total += a.z(q).reciprocal() * b.x(q);
        }
        if (!a.x(q).is_zero() && !b.z(q).is_zero()) {
            total += a.x(q).reciprocal() * b.z(q);
        }
    }
    return total;
}

std::ostream &operator<<(std::ostream &out, const PauliElement &p) {
    return out << p.str();
}

}  // namespace gqcc
