/*
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "wtilde/json_io.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"

namespace wtilde {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json pair_of(cplx z) {
    return ordered_json::array({z.real(), z.imag()});
}

ordered_json operator_matrix(const LocalOperator& m) {
    return ordered_json::array(
        {ordered_json::array({pair_of(m.m00), pair_of(m.m01)}),
         ordered_json::array({pair_of(m.m10), pair_of(m.m11)})});
}

}  // namespace

std::string state_to_json(const PureState& s) {
    ordered_json j;
    j["n"] = s.n_qubits();
    ordered_json amps = ordered_json::array();
    for (std::size_t v = 0; v < s.dim(); ++v) amps.push_back(pair_of(s.amp(v)));
    j["amps"] = std::move(amps);
    return j.dump();
}

PureState state_from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("state_from_json: ") +
                                    e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("amps") ||
        !j["n"].is_number_integer() || !j["amps"].is_array()) {
        throw std::invalid_argument(
            "state_from_json: expected {\"n\": int, \"amps\": [[re, im], ...]}");
    }
    const int n = j["n"].get<int>();
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("state_from_json: n outside [1, 20]");
    }
    const auto& amps_json = j["amps"];
    if (amps_json.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("state_from_json: wrong amps length");
    }
    std::vector<cplx> amps;
    amps.reserve(amps_json.size());
    for (const auto& entry : amps_json) {
        if (!entry.is_array() || entry.size() != 2) {
            throw std::invalid_argument(
                "state_from_json: amplitude entries must be [re, im]");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return PureState(n, std::move(amps));
}

std::string lemma1_to_json(const Lemma1Report& r) {
    ordered_json j;
    j["n"] = r.n;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.per_weight) {
        ordered_json jr;
        jr["h"] = row.h;
        jr["direct"] = pair_of(row.direct);
        jr["closed_form"] = pair_of(row.closed_form);
        jr["abs_err"] = row.abs_err;
        rows.push_back(std::move(jr));
    }
    j["per_weight"] = std::move(rows);
    j["normalization"] = r.normalization;
    j["fidelity_to_wtilde"] = r.fidelity_to_wtilde;
    return j.dump();
}

std::string ilo_result_to_json(const IloSearchResult& r) {
    ordered_json j;
    j["n"] = r.n;
    j["found"] = r.found;
    j["best_infidelity"] = r.best_infidelity;
    j["operator"] = operator_matrix(r.best_operator);
    j["restarts_used"] = r.restarts_used;
    j["seed"] = r.seed;
    return j.dump();
}

std::string trial_stats_to_json(const TrialStats& s) {
    ordered_json j;
    j["n"] = s.n;
    j["alpha2"] = s.alpha2;
    j["trials"] = s.trials;
    j["failures"] = s.failures;
    j["leader_counts"] = s.leader_counts;
    j["leader_bit_one_frac"] =
        static_cast<double>(s.leader_bit_one_count) /
        static_cast<double>(s.trials);
    j["seed"] = s.seed;
    return j.dump();
}

}  // namespace wtilde
