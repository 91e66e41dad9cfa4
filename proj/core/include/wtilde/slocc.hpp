/*
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

#include <cstdint>
#include <span>

#include "wtilde/majorana.hpp"
#include "wtilde/statekit.hpp"

namespace wtilde {

// Invertible 2x2 operator applied identically by every party.
struct LocalOperator {
    cplx m00, m01, m10, m11;

    cplx det() const { return m00 * m11 - m01 * m10; }

    // Throws std::invalid_argument when |det| <= 1e-10.
    LocalOperator inverse() const;
};

LocalOperator identity_operator();

// The explicit operator taking ghz_state(3) to wtilde_state(3) when
// applied by each of the three parties: entries e^(i pi/6)/cbrt(3) on the
// diagonal and -e^(5 i pi/6)/cbrt(3) off it.
LocalOperator builtin_m3();

// The unitary taking ghz_state(4) to wtilde_state(4): first column
// sqrt(2)/2, second column (-1+i)/2 over (1-i)/2.
LocalOperator builtin_m4();

// Applies m to every qubit and renormalizes. Throws on singular m
// (|det| <= 1e-10) and when the transformed vector vanishes.
PureState apply_symmetric_ilo(const LocalOperator& m, const PureState& s);

// Per-party generalization: ops[i] acts on qubit i+1. ops.size() must
// equal the qubit count.
PureState apply_local_operators(std::span<const LocalOperator> ops,
                                const PureState& s);

// One-sided SLOCC test: differing degeneracy configurations prove the
// states inequivalent; equal configurations prove nothing.
struct SloccVerdict {
    DegeneracyConfig config_a;
    DegeneracyConfig config_b;
    bool inequivalent_proven = false;
};

// Extracts both degeneracy configurations and compares them. Requires
// symmetric inputs of equal qubit count.
SloccVerdict degeneracy_verdict(const PureState& a, const PureState& b,
                                double tol = 1e-9);

struct IloSearchOptions {
    int restarts = 200;
    int max_evals = 4000;       // objective-evaluation budget per descent
    double success_threshold = 1e-8;
    double det_floor = 1e-6;    // restart points with |det| below are rejected
    bool per_party = false;     // optimize one operator per party
};

struct IloSearchResult {
    int n = 0;
    LocalOperator best_operator;  // first party's operator in per-party mode
    double best_infidelity = 0.0;
    int restarts_used = 0;
    bool found = false;
    std::uint64_t seed = 0;
};

// Minimizes 1 - |<target| normalized(m tensored across parties |source>)|^2
// over invertible m by Nelder-Mead descent from seeded Gaussian restarts
// (restart r draws from Rng::stream(seed, r), so the outcome is
// independent of scheduling). The objective is projective: rescaling m
// leaves it unchanged. A not-found result means no operator was found
// within the budget, never that none exists.
IloSearchResult search_symmetric_ilo(const PureState& source,
                                     const PureState& target,
                                     const IloSearchOptions& opts,
                                     std::uint64_t seed);

}  // namespace wtilde
