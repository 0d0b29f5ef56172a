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

#include "gqcc/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gqcc/codefile.h"
#include "gqcc/decoder.h"
#include "gqcc/simulator.h"

namespace gqcc {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CodeSpec load_spec(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_codefile(buf.str());
    } catch (const ParseError &e) {
        throw UsageError(path + ":" + std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.message);
    }
}

void print_matrix(std::ostream &out, const std::string &title, const PolyMatrix &m) {
    out << title << " (" << m.num_rows() << " x " << m.width() << "|" << m.width() << "):\n";
    if (m.empty()) {
        out << "  (no rows)\n";
        return;
    }
    std::istringstream lines(m.str());
    std::string line;
    while (std::getline(lines, line)) {
        out << "  " << line << "\n";
    }
}

void print_code(std::ostream &out, const GrandfatherCode &code, const std::string &tag, const std::string &suffix) {
    print_matrix(out, tag + " S" + suffix + "(D)", code.global);
    print_matrix(out, tag + " S_E" + suffix + "(D)", code.s_e);
    print_matrix(out, tag + " S_I" + suffix + "(D)", code.s_i);
    print_matrix(out, tag + " S_G" + suffix + "(D)", code.s_g);
    print_matrix(out, tag + " S_C" + suffix + "(D)", code.s_c);
}

std::string params_str(const CodeParams &p) {
    return "[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.l) + ";" +
           std::to_string(p.r) + "," + std::to_string(p.c) + "]";
}

int cmd_validate(const std::string &file, std::ostream &out) {
    auto spec = load_spec(file);
    auto built = build_code(spec);
    bool ok = true;
    auto report = [&](const char *what, const GrandfatherCode &code) {
        auto problems = check_code_structure(code);
        out << what << ": " << (problems.empty() ? "ok" : "FAILED") << "\n";
        for (const auto &p : problems) {
            out << "  " << p << "\n";
        }
        ok &= problems.empty();
    };
    out << "code " << spec.name << " " << params_str(spec.params) << ", a=" << spec.params.ancillas() << "\n";
    report("initial", built.initial);
    report("encoded", built.encoded);
    return ok ? kExitOk : kExitFailure;
}

int cmd_encode(const std::string &file, std::ostream &out) {
    auto spec = load_spec(file);
    auto built = build_code(spec);
    out << "code " << spec.name << " " << params_str(spec.params) << "\n\n";
    print_code(out, built.initial, "initial", "0");
    out << "\n";
    print_code(out, built.encoded, "encoded", "");
    return kExitOk;
}

int cmd_syndrome_table(const std::string &file, std::ostream &out, std::ostream &err) {
    auto spec = load_spec(file);
    auto built = build_code(spec);
    try {
        auto table = build_syndrome_table(built.encoded, single_qubit_errors(spec.params.n));
        out << "error,syndrome\n";
        for (const auto &row : table.rows()) {
            out << error_label(row.error) << "," << bits_str(row.key) << "\n";
        }
    } catch (const SyndromeCollision &e) {
        err << "syndrome table failed: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_check(const std::string &file, std::ostream &out) {
    auto spec = load_spec(file);
    auto built = build_code(spec);
    auto errors = expand_error_set(spec);
    auto report = check_correctable_set(built.encoded, errors);
    size_t counts[3] = {0, 0, 0};
    for (const auto &p : report.pairs) {
        out << error_label(errors[p.a]) << " " << error_label(errors[p.b]) << " " << pair_class_name(p.cls) << "\n";
        counts[static_cast<int>(p.cls)]++;
    }
    out << "pairs: " << report.pairs.size() << ", detected: " << counts[0] << ", degenerate: " << counts[1]
        << ", violations: " << counts[2] << "\n";
    out << "correctable: " << (report.correctable() ? "yes" : "no") << "\n";
    return report.correctable() ? kExitOk : kExitFailure;
}

int cmd_passive(const std::string &file, const std::string &error_text, int slack, std::ostream &out) {
    auto spec = load_spec(file);
    auto built = build_code(spec);
    PauliElement e;
    try {
        e = PauliElement::parse(error_text);
    } catch (const std::invalid_argument &ex) {
        throw UsageError(std::string("--error: ") + ex.what());
    }
    if (e.width() != spec.params.n) {
        throw UsageError("--error has width " + std::to_string(e.width()) + ", expected n=" + std::to_string(spec.params.n));
    }
    PassiveOptions opts;
    opts.slack = slack;
    opts.max_slack = std::max(opts.max_slack, slack);
    auto result = passive_membership(built.encoded, e, opts);
    out << e.str() << ": " << (result.member ? "passively corrected" : "not passively corrected") << " (slack "
        << result.slack_used << ")\n";
    return result.member ? kExitOk : kExitFailure;
}

struct SimulateArgs {
    std::string noise;
    size_t frames = 100;
    uint64_t trials = 1000;
    uint64_t seed = 0;
    unsigned threads = 1;
    bool json = false;
    bool csv = false;
};

int cmd_simulate(const std::string &file, const SimulateArgs &a, std::ostream &out) {
    auto spec = load_spec(file);
    auto built = build_code(spec);
    NoiseModel noise;
    try {
        noise = parse_noise(a.noise);
        validate_noise(noise, spec.params.n);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--noise: ") + e.what());
    }
    StreamDecoder decoder(built.encoded);
    if (a.frames < decoder.stride()) {
        throw UsageError("--frames must be at least the constraint length " + std::to_string(decoder.stride()));
    }
    auto report = estimate_logical_rate(decoder, noise, a.frames, a.trials, a.seed, a.threads);
    if (a.json) {
        out << report.json() << "\n";
    } else if (a.csv) {
        out << SimReport::csv_header() << "\n" << report.csv_row() << "\n";
    } else {
        out << "noise:        " << report.noise << "\n"
            << "trials:       " << report.trials << " x " << report.frames << " frames (seed " << report.seed << ")\n"
            << "clean:        " << report.clean << "\n"
            << "failures:     " << report.failures << "\n"
            << "detected:     " << report.detected << "\n"
            << "failure rate: " << report.failure_rate << " [95% CI " << report.ci_low << ", " << report.ci_high
            << "]\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Grandfather quantum convolutional code toolkit", "gqcc"};
    app.require_subcommand(1);

    std::string file;
    auto *validate = app.add_subcommand("validate", "Check commutation and subgroup structure of a code");
    validate->add_option("file", file, "Codefile")->required();

    auto *encode = app.add_subcommand("encode", "Print initial and encoded generator matrices");
    encode->add_option("file", file, "Codefile")->required();

    auto *table = app.add_subcommand("syndrome-table", "Emit the single-qubit syndrome table as CSV");
    table->add_option("file", file, "Codefile")->required();

    auto *check = app.add_subcommand("check", "Classify every pair of the declared error set");
    check->add_option("file", file, "Codefile")->required();

    std::string error_text;
    int slack = PassiveOptions{}.slack;
    auto *passive = app.add_subcommand("passive", "Test membership in the passively corrected group");
    passive->add_option("file", file, "Codefile")->required();
    passive->add_option("--error", error_text, "Pauli frame strings, e.g. 'IZIZI|IIZII'")->required();
    passive->add_option("--slack", slack, "Initial shift slack in frames")->check(CLI::Range(0, 1 << 16));

    SimulateArgs sim;
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo logical failure rate");
    simulate->add_option("file", file, "Codefile")->required();
    simulate->add_option("--noise", sim.noise, "alternating | none | depolarizing:<p> | custom:<pauli>@<p>;...")
        ->required();
    simulate->add_option("--frames", sim.frames, "Frames per trial")->check(CLI::Range(size_t{1}, size_t{1} << 20));
    simulate->add_option("--trials", sim.trials, "Number of trials")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim.seed, "Master seed");
    simulate->add_option("--threads", sim.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    auto *json_flag = simulate->add_flag("--json", sim.json, "Emit the report as one JSON object");
    simulate->add_flag("--csv", sim.csv, "Emit the report as a CSV header and row")->excludes(json_flag);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (validate->parsed()) {
            return cmd_validate(file, out);
        }
        if (encode->parsed()) {
            return cmd_encode(file, out);
        }
        if (table->parsed()) {
            return cmd_syndrome_table(file, out, err);
        }
        if (check->parsed()) {
            return cmd_check(file, out);
        }
        if (passive->parsed()) {
            return cmd_passive(file, error_text, slack, out);
        }
        if (simulate->parsed()) {
            return cmd_simulate(file, sim, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace gqcc
