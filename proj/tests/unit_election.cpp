#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "wtilde/election.hpp"

using namespace wtilde;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("decide_leader follows the tally rule") {
    CHECK(decide_leader(0, 1, 3));        // unique zero
    CHECK_FALSE(decide_leader(1, 1, 3));  // one of the majority
    CHECK(decide_leader(1, 2, 1));        // unique one
    CHECK_FALSE(decide_leader(0, 2, 1));
    CHECK_FALSE(decide_leader(0, 2, 2));  // tie: nobody leads
    CHECK_FALSE(decide_leader(1, 2, 2));
}

TEST_CASE("run_election elects exactly the unique-bit holder") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng = Rng::stream(3, seed);
        ElectionTrace t = run_election(5, kInvSqrt2, kInvSqrt2, rng);
        REQUIRE(t.n == 5);
        REQUIRE(t.measured_bits.size() == 5);
        REQUIRE(t.leader_flags.size() == 5);
        CHECK(t.rounds_used == 1);

        int weight = std::accumulate(t.measured_bits.begin(),
                                     t.measured_bits.end(), 0);
        CHECK((weight == 1 || weight == 4));

        // The broadcast round carries every processor's bit.
        std::vector<int> sorted_bits = t.measured_bits;
        std::vector<int> sorted_bcast = t.broadcast_round;
        std::sort(sorted_bits.begin(), sorted_bits.end());
        std::sort(sorted_bcast.begin(), sorted_bcast.end());
        CHECK(sorted_bits == sorted_bcast);

        int leaders = 0;
        int minority_bit = (weight == 1) ? 1 : 0;
        for (int i = 0; i < 5; ++i) {
            if (t.leader_flags[static_cast<std::size_t>(i)]) {
                ++leaders;
                CHECK(t.measured_bits[static_cast<std::size_t>(i)] ==
                      minority_bit);
            }
        }
        CHECK(leaders == 1);
    }
}

TEST_CASE("degenerate resources still elect uniquely") {
    // Pure W: the leader always measures 1.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng = Rng::stream(4, seed);
        ElectionTrace t = run_election(4, 1.0, 0.0, rng);
        for (int i = 0; i < 4; ++i) {
            if (t.leader_flags[static_cast<std::size_t>(i)]) {
                CHECK(t.measured_bits[static_cast<std::size_t>(i)] == 1);
            }
        }
    }
    // Pure Wbar: the leader always measures 0.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng = Rng::stream(5, seed);
        ElectionTrace t = run_election(3, 0.0, 1.0, rng);
        for (int i = 0; i < 3; ++i) {
            if (t.leader_flags[static_cast<std::size_t>(i)]) {
                CHECK(t.measured_bits[static_cast<std::size_t>(i)] == 0);
            }
        }
    }
}

TEST_CASE("run_election validates its inputs") {
    Rng rng(0);
    CHECK_THROWS_AS(run_election(2, kInvSqrt2, kInvSqrt2, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_election(4, 1.0, 1.0, rng), std::invalid_argument);
}

TEST_CASE("run_trials aggregates without failures") {
    TrialStats s = run_trials(5, kInvSqrt2, kInvSqrt2, 10000, 0);
    CHECK(s.n == 5);
    CHECK(s.trials == 10000);
    CHECK(s.failures == 0);
    CHECK(std::accumulate(s.leader_counts.begin(), s.leader_counts.end(),
                          0LL) == s.trials);
    CHECK(s.alpha2 == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("leader statistics match the resource weights") {
    // Balanced resource: the leader bit is 1 about half the time.
    TrialStats s6 = run_trials(6, kInvSqrt2, kInvSqrt2, 10000, 1);
    double frac = static_cast<double>(s6.leader_bit_one_count) /
                  static_cast<double>(s6.trials);
    CHECK(std::abs(frac - 0.5) <= 4.0 * std::sqrt(0.25 / 10000.0));

    // Pure W resource: the leader bit is 1 in every trial.
    TrialStats sw = run_trials(4, 1.0, 0.0, 2000, 2);
    CHECK(sw.leader_bit_one_count == sw.trials);

    // Pure Wbar resource: never.
    TrialStats swb = run_trials(4, 0.0, 1.0, 2000, 3);
    CHECK(swb.leader_bit_one_count == 0);
}

TEST_CASE("leadership is uniform across anonymous processors") {
    TrialStats s = run_trials(4, kInvSqrt2, kInvSqrt2, 10000, 0);
    const double expected = 10000.0 / 4.0;
    double chi2 = 0.0;
    for (long long c : s.leader_counts) {
        const double d = static_cast<double>(c) - expected;
        chi2 += d * d / expected;
        CHECK(c > 0);
    }
    CHECK(chi2 < testutil::chi2_crit_001(3));
}

TEST_CASE("run_trials is reproducible from the seed") {
    TrialStats a = run_trials(5, kInvSqrt2, kInvSqrt2, 500, 12);
    TrialStats b = run_trials(5, kInvSqrt2, kInvSqrt2, 500, 12);
    CHECK(a.leader_counts == b.leader_counts);
    CHECK(a.leader_bit_one_count == b.leader_bit_one_count);
    CHECK(a.failures == b.failures);
}
