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

#ifndef GQCC_SIMULATOR_H
#define GQCC_SIMULATOR_H

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gqcc/decoder.h"

namespace gqcc {

/// One uniformly random non-identity single-qubit Pauli in every error-carrying
/// frame (frames 0, L, 2L, ... for constraint length L).
struct SingleQubitAlternating {
    friend bool operator==(const SingleQubitAlternating &, const SingleQubitAlternating &) = default;
};

/// Each qubit of each frame independently suffers X, Y or Z with probability p/3 each.
struct Depolarizing {
    double p = 0;
    friend bool operator==(const Depolarizing &, const Depolarizing &) = default;
};

/// In each frame, at most one listed element (shifted to that frame) occurs,
/// element i with probability terms[i].second.
struct CustomNoise {
    std::vector<std::pair<PauliElement, double>> terms;
    friend bool operator==(const CustomNoise &, const CustomNoise &) = default;
};

using NoiseModel = std::variant<SingleQubitAlternating, Depolarizing, CustomNoise>;

/// Throws std::invalid_argument on probabilities outside [0,1] or a custom sum above 1.
void validate_noise(const NoiseModel &noise, size_t n);

/// `alternating`, `none`, `depolarizing:<p>`, or `custom:<pauli>@<p>;<pauli>@<p>...`.
NoiseModel parse_noise(std::string_view text);
std::string noise_str(const NoiseModel &noise);

/// Deterministic per-trial seed derived from a master seed (SplitMix64).
uint64_t trial_seed(uint64_t master, uint64_t trial);

/// Draws an error over frames [0, nframes) on Alice's n qubits.
PauliElement sample_error(const NoiseModel &noise, size_t n, size_t nframes, size_t stride, std::mt19937_64 &rng);

enum class ResidualClass { Clean, LogicalFailure, DetectedUncorrectable };
std::string_view residual_class_name(ResidualClass c);

struct TrialResult {
    size_t frames = 0;
    PauliElement injected;
    PauliElement estimated;
    ResidualClass residual_class = ResidualClass::Clean;
};

/// Streaming syndrome decoder for one code.
///
/// Bob measures every shifted stabilizer generator. The decoder walks the
/// error-carrying frames 0, L, 2L, ... in order, looks up each frame's syndrome
/// window in a single-qubit table, and folds every estimate's syndrome back into
/// the running syndrome. The noiseless frames around the stream are implicit: the
/// syndrome polynomials cover every copy of every generator.
class StreamDecoder {
   public:
    explicit StreamDecoder(GrandfatherCode code, PassiveOptions opts = {});
    StreamDecoder(GrandfatherCode code, SyndromeTable table, PassiveOptions opts = {});

    const GrandfatherCode &code() const {
        return code_;
    }
    const SyndromeTable &table() const {
        return table_;
    }
    /// Spacing between error-carrying frames: the constraint length.
    size_t stride() const {
        return stride_;
    }

    /// Decodes `injected` (Alice-local, frames [0, nframes)) and classifies the residual.
    TrialResult decode(const PauliElement &injected, size_t nframes) const;

    TrialResult run_trial(const NoiseModel &noise, size_t nframes, uint64_t seed) const;

   private:
    ResidualClass classify(const PauliElement &residual, bool lookup_failed) const;

    GrandfatherCode code_;
    SyndromeTable table_;
    PassiveOptions opts_;
    std::vector<RowSpan> spans_;
    size_t stride_ = 1;
    // The passive group commutes with every stabilizer row, so a residual with a
    // nonzero syndrome cannot be passively corrected.
    bool passive_commutes_ = false;
};

TrialResult run_trial(const GrandfatherCode &code, const NoiseModel &noise, size_t nframes, uint64_t seed);

struct SimReport {
    std::string noise;
    uint64_t trials = 0;
    uint64_t frames = 0;
    uint64_t clean = 0;
    uint64_t failures = 0;
    uint64_t detected = 0;
    /// failures / trials with a 95% Wilson score interval.
    double failure_rate = 0;
    double ci_low = 0;
    double ci_high = 0;
    uint64_t seed = 0;
    double wall_time_s = 0;

    std::string json() const;
    static std::string csv_header();
    std::string csv_row() const;
};

/// Aggregates independent trials. Trial i uses `trial_seed(seed, i)`, so the report
/// (apart from wall time) is the same for any thread count.
SimReport estimate_logical_rate(
    const StreamDecoder &decoder, const NoiseModel &noise, size_t nframes, uint64_t trials, uint64_t seed,
    unsigned threads = 1);
SimReport estimate_logical_rate(
    const GrandfatherCode &code, const NoiseModel &noise, size_t nframes, uint64_t trials, uint64_t seed,
    unsigned threads = 1);

/// 95% Wilson score interval for `successes` out of `trials`.
std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials);

}  // namespace gqcc

#endif
