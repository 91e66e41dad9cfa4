/*
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wtilde/rng.hpp"
#include "wtilde/statekit.hpp"

namespace wtilde {

// Classical state of one processor. All processors start identical
// (anonymity); c is set by the measurement, the counters by the tally of
// own bit plus received broadcasts.
struct ProcessorState {
    std::optional<int> c;
    int count_zeros = 0;
    int count_ones = 0;
    std::optional<bool> leader;
};

// The final leader rule as a pure function of one processor's view. The
// counts include the processor's own bit. Ties yield false everywhere;
// they cannot occur for the supported resource states but the rule is
// total.
bool decide_leader(int c, int count_zeros, int count_ones);

// Record of one protocol run. Vectors are indexed by processor (entry i
// is processor i+1, holding qubit i+1).
struct ElectionTrace {
    int n = 0;
    std::vector<int> measured_bits;
    std::vector<int> broadcast_round;  // all n broadcast bits, one per sender
    std::vector<bool> leader_flags;
    int rounds_used = 0;
};

// Runs one election over the shared resource alpha*W_n + beta*Wbar_n:
// samples a whole-register measurement (distribution-identical to the n
// simultaneous local measurements), then executes each processor's tally
// and leader rule on its own bit plus the broadcast multiset. One
// faultless synchronous broadcast round; exactly one processor ends with
// leader = true. Requires n >= 3 and |alpha|^2 + |beta|^2 = 1.
ElectionTrace run_election(int n, cplx alpha, cplx beta, Rng& rng);

// Aggregate of seeded election trials.
struct TrialStats {
    int n = 0;
    double alpha2 = 0.0;  // |alpha|^2 of the resource
    std::uint64_t seed = 0;
    long long trials = 0;
    std::vector<long long> leader_counts;   // wins per processor
    long long leader_bit_one_count = 0;     // trials whose leader measured 1
    long long failures = 0;                 // traces without exactly one leader
};

// Runs `trials` independent elections; trial t uses Rng::stream(seed, t).
// failures counts traces violating the exactly-one-leader invariant
// (expected 0 for every valid resource).
TrialStats run_trials(int n, cplx alpha, cplx beta, long long trials,
                      std::uint64_t seed);

}  // namespace wtilde
