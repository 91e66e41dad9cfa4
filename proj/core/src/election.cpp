/*
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "wtilde/election.hpp"

#include <cmath>
#include <stdexcept>

namespace wtilde {

bool decide_leader(int c, int count_zeros, int count_ones) {
    if (c == 0) return count_ones > count_zeros;
    return count_zeros > count_ones;
}

ElectionTrace run_election(int n, cplx alpha, cplx beta, Rng& rng) {
    if (n < 3) {
        throw std::invalid_argument("run_election: need at least 3 processors");
    }
    const PureState resource = wtilde_state(n, alpha, beta);

    // One whole-register sample plays the role of the processors'
    // simultaneous local measurements; the computational-basis statistics
    // are identical. Processor i holds qubit i, so its bit sits at ket
    // position n - i.
    const std::vector<int> ket_bits = measure_computational(resource, rng);

    ElectionTrace trace;
    trace.n = n;
    trace.measured_bits.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        trace.measured_bits[static_cast<std::size_t>(i)] =
            ket_bits[static_cast<std::size_t>(n - 1 - i)];
    }
    trace.broadcast_round = trace.measured_bits;

    int total_ones = 0;
    for (int b : trace.broadcast_round) total_ones += b;
    const int total_zeros = n - total_ones;

    trace.leader_flags.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ProcessorState p;
        p.c = trace.measured_bits[static_cast<std::size_t>(i)];
        // Own bit first, then the n-1 received messages (the broadcast
        // multiset minus this processor's own message).
        if (*p.c == 0) {
            p.count_zeros = 1;
            p.count_ones = 0;
        } else {
            p.count_ones = 1;
            p.count_zeros = 0;
        }
        p.count_zeros += total_zeros - (*p.c == 0 ? 1 : 0);
        p.count_ones += total_ones - (*p.c == 1 ? 1 : 0);
        p.leader = decide_leader(*p.c, p.count_zeros, p.count_ones);
        trace.leader_flags[static_cast<std::size_t>(i)] = *p.leader;
    }
    trace.rounds_used = 1;
    return trace;
}

TrialStats run_trials(int n, cplx alpha, cplx beta, long long trials,
                      std::uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("run_trials: need at least one trial");
    }
    TrialStats stats;
    stats.n = n;
    stats.alpha2 = std::norm(alpha);
    stats.seed = seed;
    stats.trials = trials;
    stats.leader_counts.assign(static_cast<std::size_t>(n), 0);

    for (long long t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
        const ElectionTrace trace = run_election(n, alpha, beta, rng);

        int leaders = 0;
        int leader_idx = -1;
        for (int i = 0; i < n; ++i) {
            if (trace.leader_flags[static_cast<std::size_t>(i)]) {
                ++leaders;
                leader_idx = i;
            }
        }
        if (leaders != 1) {
            ++stats.failures;
            continue;
        }
        ++stats.leader_counts[static_cast<std::size_t>(leader_idx)];
        stats.leader_bit_one_count +=
            trace.measured_bits[static_cast<std::size_t>(leader_idx)];
    }
    return stats;
}

}  // namespace wtilde
