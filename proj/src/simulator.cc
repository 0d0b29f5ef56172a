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
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace gqcc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

uint64_t uniform_below(std::mt19937_64 &rng, uint64_t bound) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

double parse_probability(std::string_view text) {
    std::string s(text);
    size_t used = 0;
    double p;
    try {
        p = std::stod(s, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("bad probability '" + s + "'");
    }
    if (used != s.size()) {
        throw std::invalid_argument("bad probability '" + s + "'");
    }
    return p;
}

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

void validate_noise(const NoiseModel &noise, size_t n) {
    std::visit(
        overloaded{
            [](const SingleQubitAlternating &) {},
            [](const Depolarizing &d) {
                if (!(d.p >= 0 && d.p <= 1)) {
                    throw std::invalid_argument("depolarizing probability must be in [0,1]");
                }
            },
            [n](const CustomNoise &c) {
                double total = 0;
                for (const auto &[e, p] : c.terms) {
                    if (!(p >= 0 && p <= 1)) {
                        throw std::invalid_argument("custom noise probability must be in [0,1]");
                    }
                    if (e.width() != n) {
                        throw std::invalid_argument("custom noise element " + e.str() + " does not have width n");
                    }
                    total += p;
                }
                if (total > 1 + 1e-12) {
                    throw std::invalid_argument("custom noise probabilities sum above 1");
                }
            },
        },
        noise);
}

NoiseModel parse_noise(std::string_view text) {
    if (text == "alternating") {
        return SingleQubitAlternating{};
    }
    if (text == "none") {
        return Depolarizing{0};
    }
    constexpr std::string_view dep = "depolarizing:";
    constexpr std::string_view custom = "custom:";
    if (text.starts_with(dep)) {
        return Depolarizing{parse_probability(text.substr(dep.size()))};
    }
    if (text.starts_with(custom)) {
        CustomNoise c;
        std::string_view rest = text.substr(custom.size());
        while (!rest.empty()) {
            size_t semi = rest.find(';');
            std::string_view item = rest.substr(0, semi);
            size_t at = item.rfind('@');
            if (at == std::string_view::npos) {
                throw std::invalid_argument("custom noise term '" + std::string(item) + "' needs '@<probability>'");
            }
            c.terms.emplace_back(PauliElement::parse(item.substr(0, at)), parse_probability(item.substr(at + 1)));
            if (semi == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(semi + 1);
        }
        return c;
    }
    throw std::invalid_argument(
        "unknown noise model '" + std::string(text) +
        "' (expected alternating, none, depolarizing:<p>, custom:<pauli>@<p>;...)");
}

std::string noise_str(const NoiseModel &noise) {
    return std::visit(
        overloaded{
            [](const SingleQubitAlternating &) -> std::string {
                return "alternating";
            },
            [](const Depolarizing &d) -> std::string {
                return "depolarizing:" + format_double(d.p);
            },
            [](const CustomNoise &c) -> std::string {
                std::string s = "custom:";
                for (size_t i = 0; i < c.terms.size(); i++) {
                    if (i) {
                        s += ';';
                    }
                    s += c.terms[i].first.str() + "@" + format_double(c.terms[i].second);
                }
                return s;
            },
        },
        noise);
}

uint64_t trial_seed(uint64_t master, uint64_t trial) {
    uint64_t z = master + (trial + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

PauliElement sample_error(const NoiseModel &noise, size_t n, size_t nframes, size_t stride, std::mt19937_64 &rng) {
    std::vector<std::vector<int>> zs(n), xs(n);
    auto put = [&](size_t q, int frame, uint64_t which) {
        // which: 0 = X, 1 = Y, 2 = Z
        if (which != 2) {
            xs[q].push_back(frame);
        }
        if (which != 0) {
            zs[q].push_back(frame);
        }
    };
    PauliElement extra(n);
    std::visit(
        overloaded{
            [&](const SingleQubitAlternating &) {
                for (size_t f = 0; f < nframes; f += stride) {
                    size_t q = uniform_below(rng, n);
                    put(q, static_cast<int>(f), uniform_below(rng, 3));
                }
            },
            [&](const Depolarizing &d) {
                if (d.p <= 0) {
                    return;
                }
                for (size_t f = 0; f < nframes; f++) {
                    for (size_t q = 0; q < n; q++) {
                        if (uniform01(rng) < d.p) {
                            put(q, static_cast<int>(f), uniform_below(rng, 3));
                        }
                    }
                }
            },
            [&](const CustomNoise &c) {
                for (size_t f = 0; f < nframes; f++) {
                    double u = uniform01(rng);
                    for (const auto &[e, p] : c.terms) {
                        if (u < p) {
                            extra *= e.shifted(static_cast<int>(f));
                            break;
                        }
                        u -= p;
                    }
                }
            },
        },
        noise);
    std::vector<LaurentPoly> z, x;
    for (size_t q = 0; q < n; q++) {
        z.push_back(LaurentPoly::from_exponents(std::move(zs[q])));
        x.push_back(LaurentPoly::from_exponents(std::move(xs[q])));
    }
    return PauliElement(std::move(z), std::move(x)) * extra;
}

std::string_view residual_class_name(ResidualClass c) {
    switch (c) {
        case ResidualClass::Clean:
            return "CLEAN";
        case ResidualClass::LogicalFailure:
            return "LOGICAL_FAILURE";
        case ResidualClass::DetectedUncorrectable:
            return "DETECTED_UNCORRECTABLE";
    }
    return "?";
}

StreamDecoder::StreamDecoder(GrandfatherCode code, PassiveOptions opts)
    : StreamDecoder(code, build_syndrome_table(code, single_qubit_errors(code.params.n), opts), opts) {
}

StreamDecoder::StreamDecoder(GrandfatherCode code, SyndromeTable table, PassiveOptions opts)
    : code_(std::move(code)), table_(std::move(table)), opts_(opts) {
    spans_ = generator_spans(code_);
    stride_ = constraint_length(code_);
    passive_commutes_ = true;
    for (const PolyMatrix *m : {&code_.s_i, &code_.s_g, &code_.s_c}) {
        for (const auto &row : m->rows()) {
            for (const auto &p : syndrome_polys(code_, row)) {
                passive_commutes_ &= p.is_zero();
            }
        }
    }
}

ResidualClass StreamDecoder::classify(const PauliElement &residual, bool lookup_failed) const {
    if (residual.is_identity()) {
        return ResidualClass::Clean;
    }
    bool syndrome_zero = true;
    for (const auto &p : syndrome_polys(code_, residual)) {
        syndrome_zero &= p.is_zero();
    }
    if ((syndrome_zero || !passive_commutes_) && is_passively_corrected(code_, residual, opts_)) {
        return ResidualClass::Clean;
    }
    if (lookup_failed || !syndrome_zero) {
        return ResidualClass::DetectedUncorrectable;
    }
    return ResidualClass::LogicalFailure;
}

TrialResult StreamDecoder::decode(const PauliElement &injected, size_t nframes) const {
    if (injected.width() != code_.params.n) {
        throw std::invalid_argument("injected error must be Alice-local (width n)");
    }
    auto polys = syndrome_polys(code_, injected);
    PauliElement estimate(code_.params.n);
    bool failed = false;
    for (size_t f = 0; f < nframes; f += stride_) {
        int frame = static_cast<int>(f);
        auto found = table_.lookup(syndrome_window(polys, spans_, frame));
        if (!found) {
            failed = true;
            continue;
        }
        if (found->is_identity()) {
            continue;
        }
        PauliElement step = found->shifted(frame);
        auto delta = syndrome_polys(code_, step);
        for (size_t g = 0; g < polys.size(); g++) {
            polys[g] += delta[g];
        }
        estimate *= step;
    }
    TrialResult result;
    result.frames = nframes;
    result.injected = injected;
    result.residual_class = classify(injected * estimate, failed);
    result.estimated = std::move(estimate);
    return result;
}

TrialResult StreamDecoder::run_trial(const NoiseModel &noise, size_t nframes, uint64_t seed) const {
    std::mt19937_64 rng(seed);
    return decode(sample_error(noise, code_.params.n, nframes, stride_, rng), nframes);
}

TrialResult run_trial(const GrandfatherCode &code, const NoiseModel &noise, size_t nframes, uint64_t seed) {
    validate_noise(noise, code.params.n);
    return StreamDecoder(code).run_trial(noise, nframes, seed);
}

std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    const double z = 1.959963984540054;
    double n = static_cast<double>(trials);
    double p = static_cast<double>(successes) / n;
    double denom = 1 + z * z / n;
    double center = (p + z * z / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
    double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
    double high = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {low, high};
}

SimReport estimate_logical_rate(
    const StreamDecoder &decoder, const NoiseModel &noise, size_t nframes, uint64_t trials, uint64_t seed,
    unsigned threads) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    validate_noise(noise, decoder.code().params.n);
    auto start = std::chrono::steady_clock::now();
    threads = std::max(1u, threads);

    struct Counts {
        uint64_t clean = 0, failures = 0, detected = 0;
    };
    std::vector<Counts> partial(threads);
    auto work = [&](unsigned t) {
        for (uint64_t i = t; i < trials; i += threads) {
            auto r = decoder.run_trial(noise, nframes, trial_seed(seed, i));
            switch (r.residual_class) {
                case ResidualClass::Clean:
                    partial[t].clean++;
                    break;
                case ResidualClass::LogicalFailure:
                    partial[t].failures++;
                    break;
                case ResidualClass::DetectedUncorrectable:
                    partial[t].detected++;
                    break;
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(work, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    SimReport report;
    report.noise = noise_str(noise);
    report.trials = trials;
    report.frames = nframes;
    report.seed = seed;
    for (const auto &c : partial) {
        report.clean += c.clean;
        report.failures += c.failures;
        report.detected += c.detected;
    }
    report.failure_rate = static_cast<double>(report.failures) / static_cast<double>(trials);
    std::tie(report.ci_low, report.ci_high) = wilson_interval(report.failures, trials);
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SimReport estimate_logical_rate(
    const GrandfatherCode &code, const NoiseModel &noise, size_t nframes, uint64_t trials, uint64_t seed,
    unsigned threads) {
    return estimate_logical_rate(StreamDecoder(code), noise, nframes, trials, seed, threads);
}

std::string SimReport::json() const {
    nlohmann::ordered_json j;
    j["noise"] = noise;
    j["trials"] = trials;
    j["frames"] = frames;
    j["clean"] = clean;
    j["failures"] = failures;
    j["detected"] = detected;
    j["failure_rate"] = failure_rate;
    j["ci_low"] = ci_low;
    j["ci_high"] = ci_high;
    j["seed"] = seed;
    j["wall_time_s"] = wall_time_s;
    return j.dump();
}

std::string SimReport::csv_header() {
    return "noise,trials,frames,clean,failures,detected,failure_rate,ci_low,ci_high,seed,wall_time_s";
}

std::string SimReport::csv_row() const {
    std::ostringstream out;
    out << noise << ',' << trials << ',' << frames << ',' << clean << ',' << failures << ',' << detected << ','
        << format_double(failure_rate) << ',' << format_double(ci_low) << ',' << format_double(ci_high) << ','
        << seed << ',' << format_double(wall_time_s);
    return out.str();
}

}  // namespace gqcc
