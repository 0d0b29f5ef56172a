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

#ifndef GQCC_DECODER_H
#define GQCC_DECODER_H

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gqcc/stabilizer.h"

namespace gqcc {

using SyndromeBits = std::vector<bool>;

std::string bits_str(const SyndromeBits &bits);
/// Throws std::invalid_argument on characters other than 0/1.
SyndromeBits parse_bits(std::string_view text);

/// Frames spanned by a generator row, inclusive. Bob's columns count.
struct RowSpan {
    int lo;
    int hi;
};

/// Span of every stabilizer row. Throws std::invalid_argument on an all-zero row.
std::vector<RowSpan> generator_spans(const GrandfatherCode &code);

/// Largest number of frames any stabilizer row touches.
size_t constraint_length(const GrandfatherCode &code);

/// Per-generator anticommutation polynomials: coefficient of D^t in entry g is 1 iff
/// the error anticommutes with stabilizer row g started at frame t.
///
/// `error` is either Alice-local (width n) or global (width c+n).
std::vector<LaurentPoly> syndrome_polys(const GrandfatherCode &code, const PauliElement &error);

struct SyndromeBit {
    size_t generator;
    /// Frame at which the measured copy of the generator starts.
    int copy_start;
    bool value;
};

/// The syndrome window seen by one error frame.
///
/// Bits are grouped by generator. Within a generator, the copy whose first part
/// overlaps the frame comes first, then copies started progressively earlier.
struct Syndrome {
    int frame = 0;
    std::vector<SyndromeBit> bits;

    SyndromeBits key() const;
    std::string str() const;
};

Syndrome syndrome_of(const GrandfatherCode &code, const PauliElement &error, int frame = 0);

/// Extracts the window for `frame` from precomputed `syndrome_polys`.
SyndromeBits syndrome_window(
    const std::vector<LaurentPoly> &polys, const std::vector<RowSpan> &spans, int frame);

/// Options for the windowed membership test of the passive group.
struct PassiveOptions {
    /// Extra frames of generator shifts tried beyond the error's own span.
    int slack = 4;
    /// Slack doubles after each failed attempt until it exceeds this cap.
    int max_slack = 64;
};

struct PassiveResult {
    bool member = false;
    /// Slack of the last attempt (the cap when membership was never found).
    int slack_used = 0;
};

/// Decides whether `e` lies in the group generated by shifts of S_I, S_G and S_C
/// by GF(2) elimination over the shifted copies inside a finite frame window.
PassiveResult passive_membership(const GrandfatherCode &code, const PauliElement &e, PassiveOptions opts = {});
bool is_passively_corrected(const GrandfatherCode &code, const PauliElement &e, PassiveOptions opts = {});

/// Thrown when two errors share a syndrome and their product is not passively corrected.
class SyndromeCollision : public std::runtime_error {
   public:
    SyndromeCollision(PauliElement first, PauliElement second, SyndromeBits key);
    PauliElement first;
    PauliElement second;
    SyndromeBits key;
};

class SyndromeTable {
   public:
    struct Row {
        PauliElement error;
        SyndromeBits key;
    };

    SyndromeTable() = default;
    SyndromeTable(size_t key_width, size_t window_frames, size_t error_width);

    size_t key_width() const {
        return key_width_;
    }
    size_t window_frames() const {
        return window_frames_;
    }
    size_t size() const {
        return entries_.size();
    }
    const std::map<SyndromeBits, PauliElement> &entries() const {
        return entries_;
    }
    /// Every error the table was built from, in build order, with its key.
    const std::vector<Row> &rows() const {
        return rows_;
    }

    /// Nullopt signals a detected but uncorrectable syndrome.
    /// Throws std::invalid_argument if the key width differs.
    std::optional<PauliElement> lookup(const SyndromeBits &key) const;

   private:
    friend SyndromeTable build_syndrome_table(
        const GrandfatherCode &code, const std::vector<PauliElement> &errors, PassiveOptions opts);

    size_t key_width_ = 0;
    size_t window_frames_ = 0;
    std::map<SyndromeBits, PauliElement> entries_;
    std::vector<Row> rows_;
};

/// Maps the frame-0 syndrome window of each error to that error. A collision is
/// accepted when the product of the two errors is passively corrected (the first
/// error is kept); otherwise SyndromeCollision is thrown.
SyndromeTable build_syndrome_table(
    const GrandfatherCode &code, const std::vector<PauliElement> &errors, PassiveOptions opts = {});

std::optional<PauliElement> decode_lookup(const SyndromeTable &table, const SyndromeBits &key);

/// The 3n single-qubit errors on frame 0, ordered X1, Y1, Z1, X2, ...
std::vector<PauliElement> single_qubit_errors(size_t n);

/// `X3` for a single-qubit frame-0 error, `I` for the identity, frame-string text otherwise.
std::string error_label(const PauliElement &e);

enum class PairClass { Detected, Degenerate, Violation };
std::string_view pair_class_name(PairClass c);

struct PairReport {
    size_t a;
    size_t b;
    PairClass cls;
};

struct CorrectabilityReport {
    std::vector<PairReport> pairs;
    bool correctable() const;
};

/// Classifies every unordered pair of distinct list positions.
CorrectabilityReport check_correctable_set(
    const GrandfatherCode &code, const std::vector<PauliElement> &errors, PassiveOptions opts = {});

/// True when some shift of some S_E or S_I row anticommutes with `e`.
bool is_detected(const GrandfatherCode &code, const PauliElement &e);

}  // namespace gqcc

#endif
