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

#include "gqcc/simulator.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "json.hpp"
#include "test_support.h"

using namespace gqcc;
using namespace gqcc::testing;

namespace {

const StreamDecoder &example_decoder() {
    static const StreamDecoder decoder(example_code());
    return decoder;
}

/// True if the decoded residual, pulled back through the encoder, touches only
/// passive degrees of freedom: Z on ancillas and classical bits, anything on gauge qubits.
bool pulls_back_to_passive(const PauliElement &residual) {
    auto p = example_params();
    auto back = conjugate_pauli(residual, invert(example_circuit()));
    for (size_t q = 0; q < p.n; q++) {
        bool ancilla_or_classical = q == p.ancilla_column(0) || q == p.classical_column(0);
        bool gauge = q == p.gauge_column(0);
        if (gauge) {
            continue;
        }
        if (!back.x(q).is_zero()) {
            return false;
        }
        if (!ancilla_or_classical && !back.z(q).is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(Noise, parse_and_print) {
    EXPECT_EQ(parse_noise("alternating"), NoiseModel(SingleQubitAlternating{}));
    EXPECT_EQ(parse_noise("none"), NoiseModel(Depolarizing{0}));
    EXPECT_EQ(parse_noise("depolarizing:0.25"), NoiseModel(Depolarizing{0.25}));
    auto custom = parse_noise("custom:XIIII@0.1;IZIZI|IIZII@0.2");
    ASSERT_TRUE(std::holds_alternative<CustomNoise>(custom));
    EXPECT_EQ(std::get<CustomNoise>(custom).terms.size(), 2u);
    EXPECT_EQ(parse_noise(noise_str(custom)), custom);
    EXPECT_EQ(noise_str(Depolarizing{0.5}), "depolarizing:0.5");
    EXPECT_THROW(parse_noise("bitflip"), std::invalid_argument);
    EXPECT_THROW(parse_noise("depolarizing:x"), std::invalid_argument);
    EXPECT_THROW(parse_noise("custom:XIIII"), std::invalid_argument);
}

TEST(Noise, validation) {
    EXPECT_THROW(validate_noise(Depolarizing{1.5}, 5), std::invalid_argument);
    EXPECT_THROW(validate_noise(Depolarizing{-0.1}, 5), std::invalid_argument);
    EXPECT_THROW(validate_noise(parse_noise("custom:XIIII@0.7;ZIIII@0.6"), 5), std::invalid_argument);
    EXPECT_THROW(validate_noise(parse_noise("custom:XII@0.1"), 5), std::invalid_argument);
    EXPECT_NO_THROW(validate_noise(parse_noise("custom:XIIII@0.5;ZIIII@0.5"), 5));
}

TEST(Noise, alternating_puts_one_error_on_even_frames) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; trial++) {
        auto e = sample_error(SingleQubitAlternating{}, 5, 10, 2, rng);
        for (int f = 0; f < 10; f++) {
            size_t hits = 0;
            for (size_t q = 0; q < 5; q++) {
                hits += e.letter(f, q) != 'I';
            }
            EXPECT_EQ(hits, f % 2 == 0 ? 1u : 0u);
        }
        EXPECT_EQ(e.weight(), 5u);
    }
}

TEST(Noise, depolarizing_marginal_rate) {
    std::mt19937_64 rng(5);
    size_t hits = 0, slots = 0;
    for (int trial = 0; trial < 400; trial++) {
        hits += sample_error(Depolarizing{0.1}, 5, 10, 2, rng).weight();
        slots += 50;
    }
    double rate = static_cast<double>(hits) / static_cast<double>(slots);
    EXPECT_NEAR(rate, 0.1, 0.01);
}

TEST(Simulator, zero_noise_is_clean) {
    auto r = run_trial(example_code(), Depolarizing{0}, 10, 1);
    EXPECT_TRUE(r.injected.is_identity());
    EXPECT_EQ(r.residual_class, ResidualClass::Clean);
    auto rep = estimate_logical_rate(example_code(), parse_noise("none"), 10, 50, 3);
    EXPECT_EQ(rep.clean, 50u);
    EXPECT_EQ(rep.failures, 0u);
}

TEST(Simulator, alternating_noise_is_always_corrected) {
    for (uint64_t seed = 0; seed < 200; seed++) {
        auto r = example_decoder().run_trial(SingleQubitAlternating{}, 20, seed);
        EXPECT_EQ(r.residual_class, ResidualClass::Clean) << seed;
        EXPECT_TRUE(pulls_back_to_passive(r.injected * r.estimated)) << seed;
    }
}

TEST(Simulator, alternating_rate_is_zero) {
    auto rep = estimate_logical_rate(example_decoder(), SingleQubitAlternating{}, 100, 1000, 7);
    EXPECT_EQ(rep.trials, 1000u);
    EXPECT_EQ(rep.failures, 0u);
    EXPECT_EQ(rep.detected, 0u);
    EXPECT_EQ(rep.failure_rate, 0.0);
    EXPECT_EQ(rep.ci_low, 0.0);
    EXPECT_GT(rep.ci_high, 0.0);
}

TEST(Simulator, deterministic_and_thread_independent) {
    auto noise = Depolarizing{0.05};
    auto a = estimate_logical_rate(example_decoder(), noise, 8, 300, 11, 1);
    auto b = estimate_logical_rate(example_decoder(), noise, 8, 300, 11, 1);
    auto c = estimate_logical_rate(example_decoder(), noise, 8, 300, 11, 3);
    for (const auto *r : {&b, &c}) {
        EXPECT_EQ(r->clean, a.clean);
        EXPECT_EQ(r->failures, a.failures);
        EXPECT_EQ(r->detected, a.detected);
        EXPECT_EQ(r->failure_rate, a.failure_rate);
        EXPECT_EQ(r->ci_high, a.ci_high);
    }
    EXPECT_EQ(a.clean + a.failures + a.detected, a.trials);
    auto r1 = example_decoder().run_trial(noise, 8, trial_seed(11, 5));
    auto r2 = example_decoder().run_trial(noise, 8, trial_seed(11, 5));
    EXPECT_EQ(r1.injected, r2.injected);
    EXPECT_EQ(r1.estimated, r2.estimated);
}

TEST(Simulator, trial_seeds_are_distinct) {
    std::set<uint64_t> seeds;
    for (uint64_t i = 0; i < 1000; i++) {
        seeds.insert(trial_seed(0, i));
    }
    EXPECT_EQ(seeds.size(), 1000u);
}

TEST(Simulator, clean_residuals_pull_back_to_passive_part) {
    size_t clean = 0;
    for (uint64_t seed = 0; seed < 400; seed++) {
        auto r = example_decoder().run_trial(Depolarizing{0.03}, 6, seed);
        auto residual = r.injected * r.estimated;
        if (r.residual_class == ResidualClass::Clean) {
            clean++;
            EXPECT_TRUE(pulls_back_to_passive(residual)) << residual;
            EXPECT_TRUE(is_passively_corrected(example_code(), residual));
        } else {
            EXPECT_FALSE(is_passively_corrected(example_code(), residual));
        }
    }
    EXPECT_GT(clean, 0u);
}

TEST(Simulator, two_frame_patterns_match_oracle) {
    auto code = example_code();
    for (const auto &a : single_qubit_errors(5)) {
        for (const auto &b : single_qubit_errors(5)) {
            auto injected = a * b.shifted(1);
            auto r = example_decoder().decode(injected, 2);
            EXPECT_EQ(residual_class_name(r.residual_class), oracle_two_frame_class(code, injected)) << injected;
        }
    }
}

TEST(Simulator, depolarizing_rate_agrees_with_enumeration) {
    // Exact contribution of every configuration with at most two faulty slots, plus
    // the leftover probability mass as an upper allowance.
    const double p = 0.01;
    const size_t n = 5, nframes = 4, slots = n * nframes;
    auto slot_error = [&](size_t slot, size_t which) {
        return PauliElement::single(n, slot % n, "XYZ"[which], static_cast<int>(slot / n));
    };
    auto prob = [&](size_t w) {
        return std::pow(p / 3, static_cast<double>(w)) * std::pow(1 - p, static_cast<double>(slots - w));
    };
    double covered = prob(0), unclean = 0;
    for (size_t s = 0; s < slots; s++) {
        for (size_t w = 0; w < 3; w++) {
            auto e = slot_error(s, w);
            covered += prob(1);
            if (example_decoder().decode(e, nframes).residual_class != ResidualClass::Clean) {
                unclean += prob(1);
            }
            for (size_t s2 = s + 1; s2 < slots; s2++) {
                for (size_t w2 = 0; w2 < 3; w2++) {
                    covered += prob(2);
                    auto e2 = e * slot_error(s2, w2);
                    if (example_decoder().decode(e2, nframes).residual_class != ResidualClass::Clean) {
                        unclean += prob(2);
                    }
                }
            }
        }
    }
    double leftover = 1 - covered;
    ASSERT_LT(leftover, 2e-3);

    auto rep = estimate_logical_rate(example_decoder(), Depolarizing{p}, nframes, 20000, 99);
    auto [lo, hi] = wilson_interval(rep.failures + rep.detected, rep.trials);
    EXPECT_LE(lo, unclean + leftover);
    EXPECT_GE(hi, unclean);
}

TEST(Simulator, custom_noise_of_passive_element_is_clean) {
    auto noise = parse_noise("custom:@-1:IZIZI|IIZII|IIIII@0.5");
    for (uint64_t seed = 0; seed < 20; seed++) {
        EXPECT_EQ(example_decoder().run_trial(noise, 10, seed).residual_class, ResidualClass::Clean);
    }
}

TEST(Simulator, rejects_wrong_width_error) {
    EXPECT_THROW(example_decoder().decode(PauliElement(4), 2), std::invalid_argument);
    EXPECT_THROW(estimate_logical_rate(example_decoder(), Depolarizing{0.1}, 4, 0, 1), std::invalid_argument);
}

TEST(Report, wilson_interval_edges) {
    auto [lo0, hi0] = wilson_interval(0, 100);
    EXPECT_EQ(lo0, 0.0);
    EXPECT_NEAR(hi0, 0.037, 0.001);
    auto [lo1, hi1] = wilson_interval(100, 100);
    EXPECT_EQ(hi1, 1.0);
    EXPECT_LT(lo1, 1.0);
    auto [lo, hi] = wilson_interval(50, 100);
    EXPECT_NEAR(lo, 0.404, 0.001);
    EXPECT_NEAR(hi, 0.596, 0.001);
}

TEST(Report, json_and_csv_fields) {
    auto rep = estimate_logical_rate(example_decoder(), SingleQubitAlternating{}, 10, 20, 3);
    auto j = nlohmann::json::parse(rep.json());
    EXPECT_EQ(j["noise"], "alternating");
    EXPECT_EQ(j["trials"], 20);
    EXPECT_EQ(j["frames"], 10);
    EXPECT_EQ(j["failures"], 0);
    EXPECT_EQ(j["seed"], 3);
    EXPECT_TRUE(j.contains("wall_time_s"));
    auto header = SimReport::csv_header();
    auto row = rep.csv_row();
    EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
    EXPECT_EQ(row.substr(0, 12), "alternating,");
}
