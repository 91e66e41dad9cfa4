/*
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

#include <span>
#include <vector>

#include "wtilde/statekit.hpp"

namespace wtilde {

// Default tolerance for projective equality of Majorana points: two
// points are the same iff their overlap modulus exceeds 1 - tol. 1e-8 sits
// far above root-finder noise at n <= 16 and far below the minimum
// pairwise separation of the canonical point sets at n <= 20.
inline constexpr double kProjectiveTol = 1e-8;

// Single-qubit state a0|0> + a1|1> used as a Majorana point. Compared
// projectively: global phase carries no meaning.
struct ProjectiveQubit {
    cplx a0;
    cplx a1;
};

// Normalizes (a0, a1); throws std::invalid_argument on the zero vector or
// non-finite input.
ProjectiveQubit make_projective_qubit(cplx a0, cplx a1);

// |<a|b>| for normalized points; 1 means projectively equal.
double projective_overlap(const ProjectiveQubit& a, const ProjectiveQubit& b);

bool projectively_equal(const ProjectiveQubit& a, const ProjectiveQubit& b,
                        double tol = kProjectiveTol);

// The n-2 unit-modulus roots attached to the n-point construction:
// solutions of r^(n-2) = -1 for even n and r^(n-2) = +1 for odd n,
// enumerated as exp((2k-1)pi i/(n-2)) resp. exp(2k pi i/(n-2)) for
// k = 1..n-2.
struct RootSet {
    int n = 0;
    std::vector<cplx> roots;
};

// Throws for n < 3.
RootSet roots_Rn(int n);

// The canonical n-point set: (|0> + r|1>)/sqrt(2) for each root r, plus
// |0> and |1>. All entries are pairwise projectively distinct.
std::vector<ProjectiveQubit> phi_set(int n);

// Degree-k elementary symmetric polynomial of the roots; k = 0 gives 1.
// Throws unless 0 <= k <= n-2.
cplx elementary_symmetric(const RootSet& roots, int k);

// --- symmetrized products -------------------------------------------------

// Sum over all n! qubit orderings of the product state, enumerated
// permutation by permutation. Un-normalized. Guarded to 3 <= n <= 12; the
// enumeration is sequential, so results are bitwise deterministic. Cost
// grows as n! 2^n -- beyond n = 10 prefer majorana_sum_fast.
PureState majorana_sum(std::span<const ProjectiveQubit> qubits);

// Same vector computed from the elementary symmetric polynomials of the
// qubit amplitudes in O(n^2 + 2^n): the overlap with a weight-h basis
// vector is h!(n-h)! times the degree-h coefficient of
// prod_j (a0_j + a1_j x). Agrees with majorana_sum to within roundoff.
PureState majorana_sum_fast(std::span<const ProjectiveQubit> qubits);

// normalize(majorana_sum(qubits)).
PureState majorana_sum_normalized(std::span<const ProjectiveQubit> qubits);

// <v|majorana_sum(qubits)> for one basis index without forming the whole
// state: the permanent of the single-qubit overlap matrix, evaluated by
// Ryser inclusion-exclusion in O(2^n n).
cplx majorana_overlap(std::span<const ProjectiveQubit> qubits,
                      std::uint64_t v);

// --- the closed-form overlap identity --------------------------------------

// Per-weight comparison of the permutation sum over phi_set(n) against
// its closed form, plus the scaling constant that maps the sum onto
// wtilde_state(n, 1/sqrt2, 1/sqrt2) and the achieved fidelity.
struct Lemma1Report {
    struct WeightRow {
        int h = 0;            // Hamming weight
        cplx direct;          // <v|M_n> computed from the permutation sum
        cplx closed_form;     // 0, except (n-1)! (1/sqrt2)^(n-2) at h = 1, n-1
        double abs_err = 0.0;
    };

    int n = 0;
    std::vector<WeightRow> per_weight;  // h = 0..n
    double normalization = 0.0;         // 1 / [sqrt(2n) (n-1)! (1/sqrt2)^(n-2)]
    double fidelity_to_wtilde = 0.0;
    // Max |<v|M_n> - <u|M_n>| over checked same-weight pairs (all 2^n
    // vectors for n <= 8, three representatives per weight above that).
    double same_weight_max_dev = 0.0;
};

// Runs the comparison for 3 <= n <= 12. For n <= 8 the direct side is the
// full n! enumeration over all 2^n basis vectors; for larger n one
// representative per weight is evaluated via majorana_overlap.
Lemma1Report verify_lemma1(int n);

// --- extraction and degeneracy ---------------------------------------------

// Majorana points of a symmetric state: roots of the polynomial
// sum_k sqrt(C(n,k)) c_k z^k built from the normalized Dicke coefficients
// c_k (companion-matrix eigenvalues), each root z mapped to the point
// proportional to z|0> - |1>, plus one |0> per missing degree. The
// contract is self-consistency: the normalized symmetrized product of the
// result reproduces the input with fidelity > 1 - 10*tol, else
// std::runtime_error. Requires is_symmetric(s, tol) and 3 <= n <= 16.
std::vector<ProjectiveQubit> majorana_extract(const PureState& s,
                                              double tol = 1e-9);

// Multiplicities of the distinct points, sorted non-increasing; the sum
// of the entries is the number of input points.
struct DegeneracyConfig {
    std::vector<int> cardinalities;

    bool operator==(const DegeneracyConfig&) const = default;
};

// Groups points by projective equality (overlap modulus > 1 - tol).
// Independent of input ordering.
DegeneracyConfig degeneracy_config(std::span<const ProjectiveQubit> qubits,
                                   double tol = kProjectiveTol);

}  // namespace wtilde
