/*
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

#include <string>
#include <string_view>

#include "wtilde/election.hpp"
#include "wtilde/majorana.hpp"
#include "wtilde/slocc.hpp"
#include "wtilde/statekit.hpp"

// JSON serialization of the library's interchange formats. Output is
// deterministic: fixed key order, shortest round-trip number encoding.

namespace wtilde {

// State vector file format: {"n": int, "amps": [[re, im], ...]} with amps
// in basis-index order.
std::string state_to_json(const PureState& s);
PureState state_from_json(std::string_view text);

// {"n", "per_weight": [{"h", "direct": [re,im], "closed_form": [re,im],
//  "abs_err"}], "normalization", "fidelity_to_wtilde"}
std::string lemma1_to_json(const Lemma1Report& r);

// {"n", "found", "best_infidelity", "operator": [[[re,im] x2] x2],
//  "restarts_used", "seed"}
std::string ilo_result_to_json(const IloSearchResult& r);

// {"n", "alpha2", "trials", "failures", "leader_counts",
//  "leader_bit_one_frac", "seed"}
std::string trial_stats_to_json(const TrialStats& s);

}  // namespace wtilde
