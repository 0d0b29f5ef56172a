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

#ifndef GQCC_PAULI_H
#define GQCC_PAULI_H

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gqcc/gf2poly.h"

namespace gqcc {

/// One frame of a Pauli sequence: a frame index and a string over {I,X,Y,Z}.
struct FrameString {
    int frame;
    std::string letters;
};

/// A Pauli sequence modulo phase, stored as the polynomial pair (z | x).
///
/// Column q of the element acts on qubit q of every frame. The coefficient of D^t
/// in x[q] (resp. z[q]) is the X (resp. Z) bit of qubit q in frame t, so the letter
/// at (t, q) is I/X/Z/Y for (z, x) = (0,0)/(0,1)/(1,0)/(1,1).
class PauliElement {
   public:
    PauliElement() = default;
    explicit PauliElement(size_t width);
    /// Throws std::invalid_argument if the vectors differ in length.
    PauliElement(std::vector<LaurentPoly> z, std::vector<LaurentPoly> x);

    /// Throws std::invalid_argument on a bad letter, a length mismatch or a repeated frame.
    static PauliElement from_frames(size_t width, const std::vector<FrameString> &frames);

    /// Parses `XIIXX|XIXIX` (frames 0, 1, ...). A leading `@k:` starts at frame k.
    /// Frames may also be separated by commas.
    static PauliElement parse(std::string_view text);

    /// Single-qubit Pauli `letter` on 0-based qubit `qubit` of `frame`.
    static PauliElement single(size_t width, size_t qubit, char letter, int frame = 0);

    size_t width() const {
        return z_.size();
    }
    const std::vector<LaurentPoly> &z() const {
        return z_;
    }
    const std::vector<LaurentPoly> &x() const {
        return x_;
    }
    const LaurentPoly &z(size_t q) const {
        return z_[q];
    }
    const LaurentPoly &x(size_t q) const {
        return x_[q];
    }
    LaurentPoly &z(size_t q) {
        return z_[q];
    }
    LaurentPoly &x(size_t q) {
        return x_[q];
    }

    bool is_identity() const;
    char letter(int frame, size_t qubit) const;
    /// Inclusive range of frames carrying a non-identity letter; nullopt for the identity.
    std::optional<std::pair<int, int>> frame_span() const;
    std::string frame_str(int frame) const;
    std::vector<FrameString> frames() const;

    /// Canonical frame-string form, the inverse of `parse`.
    std::string str() const;

    /// Number of (frame, qubit) positions that are not I.
    size_t weight() const;

    /// Multiplies every entry by D^k (moves the element k frames later).
    PauliElement shifted(int k) const;

    /// Composition mod phase: componentwise GF(2) addition.
    PauliElement &operator*=(const PauliElement &other);
    friend PauliElement operator*(PauliElement a, const PauliElement &b) {
        a *= b;
        return a;
    }

    friend bool operator==(const PauliElement &, const PauliElement &) = default;
    friend auto operator<=>(const PauliElement &a, const PauliElement &b) {
        if (auto c = a.z_ <=> b.z_; c != 0) {
            return c;
        }
        return a.x_ <=> b.x_;
    }

   private:
    std::vector<LaurentPoly> z_;
    std::vector<LaurentPoly> x_;
};

/// Same as `a * b`. Throws std::invalid_argument on a width mismatch.
PauliElement compose(const PauliElement &a, const PauliElement &b);

/// The shifted symplectic product sum_q z_a(1/D) x_b(D) + x_a(1/D) z_b(D).
///
/// The coefficient of D^k is 1 exactly when b anticommutes with a delayed by k frames.
/// Throws std::invalid_argument on a width mismatch.
LaurentPoly symplectic_product(const PauliElement &a, const PauliElement &b);

std::ostream &operator<<(std::ostream &out, const PauliElement &p);

}  // namespace gqcc

#endif
