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

#include "gqcc/decoder.h"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace gqcc {

namespace {

// Packed GF(2) vector.
class BitRow {
   public:
    explicit BitRow(size_t nbits) : words_((nbits + 63) / 64, 0) {
    }
    void set(size_t i) {
        words_[i / 64] |= uint64_t{1} << (i % 64);
    }
    bool get(size_t i) const {
        return (words_[i / 64] >> (i % 64)) & 1;
    }
    void xor_with(const BitRow &o) {
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= o.words_[w];
        }
    }
    std::optional<size_t> lowest() const {
        for (size_t w = 0; w < words_.size(); w++) {
            if (words_[w]) {
                return w * 64 + std::countr_zero(words_[w]);
            }
        }
        return std::nullopt;
    }

   private:
    std::vector<uint64_t> words_;
};

// Row-echelon basis where each vector owns a distinct pivot bit that every
// later vector has cleared.
class EchelonBasis {
   public:
    void reduce(BitRow &v) const {
        for (const auto &[pivot, b] : basis_) {
            if (v.get(pivot)) {
                v.xor_with(b);
            }
        }
    }
    void insert(BitRow v) {
        reduce(v);
        if (auto p = v.lowest()) {
            basis_.emplace_back(*p, std::move(v));
        }
    }

   private:
    std::vector<std::pair<size_t, BitRow>> basis_;
};

PauliElement to_global(const GrandfatherCode &code, const PauliElement &error) {
    const auto &p = code.params;
    if (error.width() == p.n) {
        return with_bob_columns(error, p);
    }
    if (error.width() == p.c + p.n) {
        return error;
    }
    throw std::invalid_argument(
        "error width " + std::to_string(error.width()) + " is neither n=" + std::to_string(p.n) +
        " nor c+n=" + std::to_string(p.c + p.n));
}

std::optional<PauliElement> to_alice(const GrandfatherCode &code, const PauliElement &e) {
    const auto &p = code.params;
    if (e.width() == p.n) {
        return e;
    }
    if (e.width() != p.c + p.n) {
        throw std::invalid_argument("element width is neither n nor c+n");
    }
    for (size_t q = 0; q < p.c; q++) {
        if (!e.z(q).is_zero() || !e.x(q).is_zero()) {
            return std::nullopt;
        }
    }
    std::vector<LaurentPoly> z(e.z().begin() + p.c, e.z().end());
    std::vector<LaurentPoly> x(e.x().begin() + p.c, e.x().end());
    return PauliElement(std::move(z), std::move(x));
}

bool solve_membership(const std::vector<const PauliElement *> &gens, const PauliElement &e, int slack) {
    auto espan = *e.frame_span();
    size_t n = e.width();

    struct Shifted {
        const PauliElement *row;
        int lo;
        int hi;
    };
    std::vector<Shifted> rows;
    for (const auto *g : gens) {
        if (auto s = g->frame_span()) {
            rows.push_back({g, s->first, s->second});
        }
    }
    int fmin = espan.first;
    int fmax = espan.second;
    struct Copy {
        const PauliElement *row;
        int shift;
    };
    std::vector<Copy> copies;
    for (const auto &r : rows) {
        int kmin = espan.first - r.hi - slack;
        int kmax = espan.second - r.lo + slack;
        for (int k = kmin; k <= kmax; k++) {
            copies.push_back({r.row, k});
        }
        fmin = std::min(fmin, kmin + r.lo);
        fmax = std::max(fmax, kmax + r.hi);
    }
    size_t nframes = static_cast<size_t>(fmax - fmin + 1);
    size_t nbits = nframes * n * 2;
    auto encode = [&](const PauliElement &p, int shift) {
        BitRow v(nbits);
        for (size_t q = 0; q < n; q++) {
            for (int e : p.z(q).exponents()) {
                v.set(static_cast<size_t>(e + shift - fmin) * 2 * n + 2 * q);
            }
            for (int e : p.x(q).exponents()) {
                v.set(static_cast<size_t>(e + shift - fmin) * 2 * n + 2 * q + 1);
            }
        }
        return v;
    };

    EchelonBasis basis;
    for (const auto &c : copies) {
        basis.insert(encode(*c.row, c.shift));
    }
    BitRow target = encode(e, 0);
    basis.reduce(target);
    return !target.lowest().has_value();
}

}  // namespace

std::string bits_str(const SyndromeBits &bits) {
    std::string s;
    s.reserve(bits.size());
    for (bool b : bits) {
        s += b ? '1' : '0';
    }
    return s;
}

SyndromeBits parse_bits(std::string_view text) {
    SyndromeBits bits;
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("syndrome bits must be 0 or 1, got '" + std::string(text) + "'");
        }
        bits.push_back(ch == '1');
    }
    return bits;
}

std::vector<RowSpan> generator_spans(const GrandfatherCode &code) {
    std::vector<RowSpan> spans;
    for (size_t g = 0; g < code.global.num_rows(); g++) {
        auto s = code.global[g].frame_span();
        if (!s) {
            throw std::invalid_argument("stabilizer row " + std::to_string(g + 1) + " is the identity");
        }
        spans.push_back({s->first, s->second});
    }
    return spans;
}

size_t constraint_length(const GrandfatherCode &code) {
    size_t len = 1;
    for (const auto &s : generator_spans(code)) {
        len = std::max(len, static_cast<size_t>(s.hi - s.lo + 1));
    }
    return len;
}

std::vector<LaurentPoly> syndrome_polys(const GrandfatherCode &code, const PauliElement &error) {
    PauliElement g = to_global(code, error);
    std::vector<LaurentPoly> out;
    out.reserve(code.global.num_rows());
    for (const auto &row : code.global.rows()) {
        out.push_back(symplectic_product(row, g));
    }
    return out;
}

SyndromeBits syndrome_window(const std::vector<LaurentPoly> &polys, const std::vector<RowSpan> &spans, int frame) {
    SyndromeBits bits;
    for (size_t g = 0; g < polys.size(); g++) {
        for (int t = frame - spans[g].lo; t >= frame - spans[g].hi; t--) {
            bits.push_back(polys[g].coefficient(t));
        }
    }
    return bits;
}

SyndromeBits Syndrome::key() const {
    SyndromeBits k;
    k.reserve(bits.size());
    for (const auto &b : bits) {
        k.push_back(b.value);
    }
    return k;
}

std::string Syndrome::str() const {
    return bits_str(key());
}

Syndrome syndrome_of(const GrandfatherCode &code, const PauliElement &error, int frame) {
    auto spans = generator_spans(code);
    auto polys = syndrome_polys(code, error);
    Syndrome s;
    s.frame = frame;
    for (size_t g = 0; g < polys.size(); g++) {
        for (int t = frame - spans[g].lo; t >= frame - spans[g].hi; t--) {
            s.bits.push_back({g, t, polys[g].coefficient(t)});
        }
    }
    return s;
}

PassiveResult passive_membership(const GrandfatherCode &code, const PauliElement &e, PassiveOptions opts) {
    auto alice = to_alice(code, e);
    int slack = std::max(opts.slack, 0);
    if (!alice) {
        return {false, slack};
    }
    if (alice->is_identity()) {
        return {true, slack};
    }
    std::vector<const PauliElement *> gens;
    for (const PolyMatrix *m : {&code.s_i, &code.s_g, &code.s_c}) {
        for (const auto &row : m->rows()) {
            gens.push_back(&row);
        }
    }
    while (true) {
        if (solve_membership(gens, *alice, slack)) {
            return {true, slack};
        }
        int next = slack == 0 ? 1 : slack * 2;
        if (next > opts.max_slack) {
            return {false, slack};
        }
        slack = next;
    }
}

bool is_passively_corrected(const GrandfatherCode &code, const PauliElement &e, PassiveOptions opts) {
    return passive_membership(code, e, opts).member;
}

SyndromeCollision::SyndromeCollision(PauliElement first_, PauliElement second_, SyndromeBits key_)
    : std::runtime_error(
          "errors " + error_label(first_) + " and " + error_label(second_) + " share syndrome " + bits_str(key_) +
          " and their product is not passively corrected"),
      first(std::move(first_)),
      second(std::move(second_)),
      key(std::move(key_)) {
}

SyndromeTable::SyndromeTable(size_t key_width, size_t window_frames, size_t error_width)
    : key_width_(key_width), window_frames_(window_frames) {
    entries_.emplace(SyndromeBits(key_width, false), PauliElement(error_width));
}

std::optional<PauliElement> SyndromeTable::lookup(const SyndromeBits &key) const {
    if (key.size() != key_width_) {
        throw std::invalid_argument(
            "syndrome has " + std::to_string(key.size()) + " bits, table expects " + std::to_string(key_width_));
    }
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

SyndromeTable build_syndrome_table(
    const GrandfatherCode &code, const std::vector<PauliElement> &errors, PassiveOptions opts) {
    auto spans = generator_spans(code);
    size_t key_width = 0;
    for (const auto &s : spans) {
        key_width += static_cast<size_t>(s.hi - s.lo + 1);
    }
    SyndromeTable table(key_width, constraint_length(code), code.params.n);
    for (const auto &raw : errors) {
        auto alice = to_alice(code, raw);
        if (!alice) {
            throw std::invalid_argument("table errors must act on Alice's qubits only: " + raw.str());
        }
        SyndromeBits key = syndrome_window(syndrome_polys(code, *alice), spans, 0);
        table.rows_.push_back({*alice, key});
        auto [it, inserted] = table.entries_.emplace(key, *alice);
        if (!inserted && !is_passively_corrected(code, it->second * *alice, opts)) {
            throw SyndromeCollision(it->second, *alice, key);
        }
    }
    return table;
}

std::optional<PauliElement> decode_lookup(const SyndromeTable &table, const SyndromeBits &key) {
    return table.lookup(key);
}

std::vector<PauliElement> single_qubit_errors(size_t n) {
    std::vector<PauliElement> out;
    for (size_t q = 0; q < n; q++) {
        for (char letter : {'X', 'Y', 'Z'}) {
            out.push_back(PauliElement::single(n, q, letter));
        }
    }
    return out;
}

std::string error_label(const PauliElement &e) {
    if (e.is_identity()) {
        return "I";
    }
    if (e.weight() == 1) {
        auto span = *e.frame_span();
        if (span.first == 0) {
            for (size_t q = 0; q < e.width(); q++) {
                char l = e.letter(0, q);
                if (l != 'I') {
                    return std::string(1, l) + std::to_string(q + 1);
                }
            }
        }
    }
    return e.str();
}

std::string_view pair_class_name(PairClass c) {
    switch (c) {
        case PairClass::Detected:
            return "DETECTED";
        case PairClass::Degenerate:
            return "DEGENERATE";
        case PairClass::Violation:
            return "VIOLATION";
    }
    return "?";
}

bool CorrectabilityReport::correctable() const {
    return std::none_of(pairs.begin(), pairs.end(), [](const PairReport &p) {
        return p.cls == PairClass::Violation;
    });
}

bool is_detected(const GrandfatherCode &code, const PauliElement &e) {
    auto alice = to_alice(code, e);
    if (!alice) {
        // Bob's halves never see channel noise; global elements go through the stabilizer.
        for (const auto &p : syndrome_polys(code, e)) {
            if (!p.is_zero()) {
                return true;
            }
        }
        return false;
    }
    for (const PolyMatrix *m : {&code.s_e, &code.s_i}) {
        for (const auto &row : m->rows()) {
            if (!symplectic_product(row, *alice).is_zero()) {
                return true;
            }
        }
    }
    return false;
}

CorrectabilityReport check_correctable_set(
    const GrandfatherCode &code, const std::vector<PauliElement> &errors, PassiveOptions opts) {
    CorrectabilityReport report;
    for (size_t a = 0; a < errors.size(); a++) {
        for (size_t b = a + 1; b < errors.size(); b++) {
            PauliElement product = compose(errors[a], errors[b]);
            PairClass cls;
            if (is_detected(code, product)) {
                cls = PairClass::Detected;
            } else if (is_passively_corrected(code, product, opts)) {
                cls = PairClass::Degenerate;
            } else {
                cls = PairClass::Violation;
            }
            report.pairs.push_back({a, b, cls});
        }
    }
    return report;
}

}  // namespace gqcc
