/*
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

// Command-line front end: every verification and simulation in the library
// as a reproducible, JSON-emitting subcommand. One JSON document goes to
// stdout (or --out); human-readable summaries go to stderr. All randomness
// flows from --seed, so identical argument vectors produce byte-identical
// output.
//
// Exit codes: 0 success, 1 result-invariant violation (e.g. election
// failures, a verification that misses its tolerance), 2 bad arguments.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "wtilde/election.hpp"
#include "wtilde/json_io.hpp"
#include "wtilde/majorana.hpp"
#include "wtilde/slocc.hpp"
#include "wtilde/statekit.hpp"

namespace {

using nlohmann::ordered_json;
using namespace wtilde;

struct Options {
    int n = 0;
    double alpha2 = 0.5;
    long long trials = 10000;
    int restarts = 200;
    int iters = 4000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string out;
    std::string source = "ghz";
    std::string target = "wtilde";
};

PureState named_state(const std::string& kind, int n, double alpha2) {
    if (kind == "ghz") return ghz_state(n);
    if (kind == "w") return w_state(n);
    if (kind == "wtilde") {
        return wtilde_state(n, std::sqrt(alpha2), std::sqrt(1.0 - alpha2));
    }
    throw std::invalid_argument("unknown state kind: " + kind);
}

void emit(const std::string& json_text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << json_text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + out_path);
    }
    out << json_text << "\n";
}

ordered_json config_json(const DegeneracyConfig& c) {
    return ordered_json(c.cardinalities);
}

ordered_json point_json(const ProjectiveQubit& q) {
    return ordered_json::array(
        {ordered_json::array({q.a0.real(), q.a0.imag()}),
         ordered_json::array({q.a1.real(), q.a1.imag()})});
}

ordered_json operator_json(const LocalOperator& m) {
    auto pair = [](cplx z) {
        return ordered_json::array({z.real(), z.imag()});
    };
    return ordered_json::array(
        {ordered_json::array({pair(m.m00), pair(m.m01)}),
         ordered_json::array({pair(m.m10), pair(m.m11)})});
}

int cmd_state(const Options& o) {
    const PureState s = named_state(o.source, o.n, o.alpha2);
    emit(state_to_json(s), o.out);
    std::cerr << "state: " << o.source << " n=" << o.n << " dim=" << s.dim()
              << " alpha2=" << o.alpha2 << "\n";
    return 0;
}

int cmd_lemma1(const Options& o) {
    const Lemma1Report r = verify_lemma1(o.n);
    emit(lemma1_to_json(r), o.out);
    double max_err = 0.0;
    for (const auto& row : r.per_weight) max_err = std::max(max_err, row.abs_err);
    std::cerr << "lemma1: n=" << o.n << " max |direct - closed_form|=" << max_err
              << " fidelity_to_wtilde=" << r.fidelity_to_wtilde << "\n";
    // Full enumeration up to n = 8 holds the absolute bound; the permanent
    // evaluation above that is checked relative to the overlap magnitude.
    const double peak = std::abs(r.per_weight[1].closed_form);
    const double err_bound = (o.n <= 8) ? 1e-9 : 1e-9 * (1.0 + peak);
    const bool ok =
        max_err <= err_bound && r.fidelity_to_wtilde >= 1.0 - 1e-10;
    return ok ? 0 : 1;
}

int cmd_degeneracy(const Options& o) {
    const PureState s = named_state(o.source, o.n, o.alpha2);
    const std::vector<ProjectiveQubit> points = majorana_extract(s, o.tol);
    const DegeneracyConfig config = degeneracy_config(points);
    const PureState recon = normalize(majorana_sum_fast(points));
    const double fid = fidelity(recon, s);

    ordered_json j;
    j["n"] = o.n;
    j["source"] = o.source;
    j["alpha2"] = o.alpha2;
    j["tol"] = o.tol;
    j["config"] = config_json(config);
    ordered_json pts = ordered_json::array();
    for (const auto& q : points) pts.push_back(point_json(q));
    j["points"] = std::move(pts);
    j["reconstruction_fidelity"] = fid;
    emit(j.dump(), o.out);

    std::cerr << "degeneracy: " << o.source << " n=" << o.n << " config=[";
    for (std::size_t i = 0; i < config.cardinalities.size(); ++i) {
        std::cerr << (i ? "," : "") << config.cardinalities[i];
    }
    std::cerr << "] reconstruction_fidelity=" << fid << "\n";
    return 0;
}

int cmd_slocc_verdict(const Options& o) {
    const PureState a = named_state(o.source, o.n, o.alpha2);
    const PureState b = named_state(o.target, o.n, o.alpha2);
    const SloccVerdict v = degeneracy_verdict(a, b, o.tol);

    ordered_json j;
    j["n"] = o.n;
    j["source"] = o.source;
    j["target"] = o.target;
    j["alpha2"] = o.alpha2;
    j["config_a"] = config_json(v.config_a);
    j["config_b"] = config_json(v.config_b);
    j["inequivalent_proven"] = v.inequivalent_proven;
    emit(j.dump(), o.out);

    std::cerr << "slocc-verdict: " << o.source << " vs " << o.target
              << " n=" << o.n << " inequivalent_proven="
              << (v.inequivalent_proven ? "true" : "false") << "\n";
    return 0;
}

int cmd_ilo_verify(const Options& o) {
    if (o.n != 3 && o.n != 4) {
        throw std::invalid_argument("ilo-verify: --n must be 3 or 4");
    }
    const LocalOperator m = (o.n == 3) ? builtin_m3() : builtin_m4();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const PureState target = wtilde_state(o.n, inv_sqrt2, inv_sqrt2);
    const double fid =
        fidelity(apply_symmetric_ilo(m, ghz_state(o.n)), target);

    // Deviation of m m^dagger from the identity, largest entry.
    const cplx r00 = m.m00 * std::conj(m.m00) + m.m01 * std::conj(m.m01);
    const cplx r01 = m.m00 * std::conj(m.m10) + m.m01 * std::conj(m.m11);
    const cplx r11 = m.m10 * std::conj(m.m10) + m.m11 * std::conj(m.m11);
    const double unitarity =
        std::max({std::abs(r00 - cplx{1.0, 0.0}), std::abs(r01),
                  std::abs(r11 - cplx{1.0, 0.0})});

    ordered_json j;
    j["n"] = o.n;
    j["operator"] = operator_json(m);
    j["fidelity_to_wtilde"] = fid;
    j["unitarity_residual"] = unitarity;
    j["det"] = ordered_json::array({m.det().real(), m.det().imag()});
    emit(j.dump(), o.out);

    std::cerr << "ilo-verify: n=" << o.n << " fidelity=" << fid
              << " unitarity_residual=" << unitarity << "\n";
    return fid >= 1.0 - 1e-9 ? 0 : 1;
}

int cmd_ilo_search(const Options& o) {
    const PureState source = named_state(o.source, o.n, o.alpha2);
    const PureState target = named_state(o.target, o.n, o.alpha2);
    IloSearchOptions opts;
    opts.restarts = o.restarts;
    opts.max_evals = o.iters;
    const IloSearchResult r = search_symmetric_ilo(source, target, opts, o.seed);
    emit(ilo_result_to_json(r), o.out);
    std::cerr << "ilo-search: " << o.source << " -> " << o.target
              << " n=" << o.n << " found=" << (r.found ? "true" : "false")
              << " best_infidelity=" << r.best_infidelity
              << " restarts_used=" << r.restarts_used << "\n";
    return 0;
}

int cmd_elect(const Options& o) {
    TrialStats stats =
        run_trials(o.n, std::sqrt(o.alpha2), std::sqrt(1.0 - o.alpha2),
                   o.trials, o.seed);
    stats.alpha2 = o.alpha2;  // report the invoked parameter, not its square-root round trip
    emit(trial_stats_to_json(stats), o.out);
    std::cerr << "elect: n=" << o.n << " trials=" << stats.trials
              << " failures=" << stats.failures << " leader_bit_one_frac="
              << static_cast<double>(stats.leader_bit_one_count) /
                     static_cast<double>(stats.trials)
              << "\n";
    return stats.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric-state toolkit and anonymous leader election simulator"};
    app.require_subcommand(1);

    Options o;

    auto add_common = [&](CLI::App* cmd, bool needs_n = true) {
        if (needs_n) {
            cmd->add_option("--n", o.n, "number of qubits / processors")
                ->required();
        }
        cmd->add_option("--seed", o.seed, "random seed (default 0)");
        cmd->add_option("--out", o.out, "write the JSON report to this file");
    };
    auto add_alpha2 = [&](CLI::App* cmd) {
        cmd->add_option("--alpha2", o.alpha2,
                        "|alpha|^2 of the resource state (default 0.5)")
            ->check(CLI::Range(0.0, 1.0));
    };
    auto add_source_target = [&](CLI::App* cmd, bool with_target) {
        cmd->add_option("--source", o.source, "source state")
            ->check(CLI::IsMember({"ghz", "w", "wtilde"}));
        if (with_target) {
            cmd->add_option("--target", o.target, "target state")
                ->check(CLI::IsMember({"ghz", "w", "wtilde"}));
        }
    };

    CLI::App* state = app.add_subcommand(
        "state", "emit a named state vector as JSON");
    add_common(state);
    add_alpha2(state);
    state->add_option("--source", o.source, "which state to emit")
        ->check(CLI::IsMember({"ghz", "w", "wtilde"}))
        ->required();

    CLI::App* lemma1 = app.add_subcommand(
        "lemma1", "check the permutation sum against its closed form");
    add_common(lemma1);

    CLI::App* degeneracy = app.add_subcommand(
        "degeneracy", "extract Majorana points and their degeneracy configuration");
    add_common(degeneracy);
    add_alpha2(degeneracy);
    degeneracy->add_option("--tol", o.tol, "extraction tolerance");
    degeneracy->add_option("--source", o.source, "which state to analyze")
        ->check(CLI::IsMember({"ghz", "w", "wtilde"}));

    CLI::App* verdict = app.add_subcommand(
        "slocc-verdict", "compare degeneracy configurations of two states");
    add_common(verdict);
    add_alpha2(verdict);
    verdict->add_option("--tol", o.tol, "extraction tolerance");
    add_source_target(verdict, true);

    CLI::App* ilo_verify = app.add_subcommand(
        "ilo-verify", "verify the built-in GHZ -> wtilde operators (n = 3, 4)");
    add_common(ilo_verify);

    CLI::App* ilo_search = app.add_subcommand(
        "ilo-search", "search for a symmetric invertible local operation");
    add_common(ilo_search);
    add_alpha2(ilo_search);
    ilo_search->add_option("--restarts", o.restarts,
                           "random restarts (default 200)")
        ->check(CLI::PositiveNumber);
    ilo_search->add_option("--iters", o.iters,
                           "objective evaluations per descent (default 4000)")
        ->check(CLI::PositiveNumber);
    add_source_target(ilo_search, true);

    CLI::App* elect = app.add_subcommand(
        "elect", "run seeded leader-election trials and report statistics");
    add_common(elect);
    add_alpha2(elect);
    elect->add_option("--trials", o.trials, "number of trials (default 10000)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (state->parsed()) return cmd_state(o);
        if (lemma1->parsed()) return cmd_lemma1(o);
        if (degeneracy->parsed()) return cmd_degeneracy(o);
        if (verdict->parsed()) return cmd_slocc_verdict(o);
        if (ilo_verify->parsed()) return cmd_ilo_verify(o);
        if (ilo_search->parsed()) return cmd_ilo_search(o);
        if (elect->parsed()) return cmd_elect(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
