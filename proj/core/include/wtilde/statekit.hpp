/*
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wtilde/rng.hpp"

namespace wtilde {

using cplx = std::complex<double>;

// Qubit counts are capped so the dense representation stays within a
// sane memory budget (2^20 amplitudes, 16 MiB).
inline constexpr int kMaxQubits = 20;

// Dense amplitude vector over the n-qubit computational basis.
//
// Basis index v encodes the ket |a_n a_(n-1) ... a_1> with qubit 1 as the
// least significant bit: v = sum_i a_i 2^(i-1). Bit vectors passed to and
// returned from this module are in ket order, i.e. bits[0] = a_n and
// bits[n-1] = a_1, so a bit vector reads as the binary numeral of v.
//
// States are normalized on construction unless the unnormalized tag is
// used (intermediates such as raw permutation sums). Amplitudes must be
// finite in either case.
class PureState {
public:
    struct unnormalized_t {};
    static constexpr unnormalized_t unnormalized{};

    // Normalized state; throws std::invalid_argument if the squared norm
    // is not 1 within 1e-12, the size is not 2^n, or any amplitude is
    // non-finite.
    PureState(int n_qubits, std::vector<cplx> amps);

    // Un-normalized intermediate; only size and finiteness are checked.
    PureState(int n_qubits, std::vector<cplx> amps, unnormalized_t);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    bool is_normalized() const { return normalized_; }

    const cplx& amp(std::size_t v) const { return amps_[v]; }
    std::span<const cplx> amps() const { return amps_; }

    // Squared norm, compensated summation.
    double norm2() const;

private:
    int n_qubits_;
    bool normalized_;
    std::vector<cplx> amps_;
};

// --- basis/index helpers -------------------------------------------------

// Index of the ket with the given bits (ket order). Throws on empty input,
// more than kMaxQubits bits, or entries outside {0, 1}.
std::uint64_t index_of_bits(std::span<const int> bits);

// Bits of index v in ket order.
std::vector<int> bits_of_index(std::uint64_t v, int n);

// Exact binomial coefficient as a double (n <= kMaxQubits).
double binomial(int n, int k);

// --- state constructors --------------------------------------------------

// |bits>, amplitude 1 on one basis vector.
PureState basis_state(std::span<const int> bits);

// Equal superposition of all weight-k basis vectors, amplitude
// 1/sqrt(C(n,k)) each.
PureState dicke_state(int n, int k);

// Weight-1 Dicke state (n >= 3).
PureState w_state(int n);

// Weight-(n-1) Dicke state, the bit complement of w_state (n >= 3).
PureState wbar_state(int n);

// alpha * w_state(n) + beta * wbar_state(n). Requires n >= 3 and
// |alpha|^2 + |beta|^2 = 1 within 1e-12. With alpha = beta = 1/sqrt(2),
// every weight-1 and weight-(n-1) basis vector carries amplitude
// 1/sqrt(2n).
PureState wtilde_state(int n, cplx alpha, cplx beta);

// (|0...0> + |1...1>)/sqrt(2), n >= 2.
PureState ghz_state(int n);

// Normalized equal superposition over the distinct arrangements of the
// given bit multiset. Equals dicke_state(n, weight) exactly.
PureState symmetrize(std::span<const int> bits);

// --- symmetry and the Dicke basis ----------------------------------------

// True iff the state is invariant, component-wise within tol, under every
// adjacent transposition of qubit positions (those generate all
// permutations).
bool is_symmetric(const PureState& s, double tol = 1e-9);

// Weights of a symmetric state on the normalized Dicke basis:
// coeffs[k] = <D(n,k)|s> for k = 0..n.
struct DickeDecomposition {
    int n = 0;
    std::vector<cplx> coeffs;
};

// Throws std::invalid_argument on non-symmetric input (checked at tol).
DickeDecomposition dicke_decompose(const PureState& s, double tol = 1e-9);

// sum_k coeffs[k] |D(n,k)>; inverse of dicke_decompose up to roundoff.
PureState dicke_reconstruct(const DickeDecomposition& d);

// --- linear algebra ------------------------------------------------------

// <a|b>; throws on qubit-count mismatch.
cplx inner_product(const PureState& a, const PureState& b);

// Kronecker product; the first argument occupies the high bits (so
// tensor(|1>, |0>) = |10>).
PureState tensor(const PureState& a, const PureState& b);

// a / ||a||; throws std::invalid_argument on the zero vector.
PureState normalize(const PureState& a);

// |<a|b>|^2 for normalized inputs.
double fidelity(const PureState& a, const PureState& b);

// --- measurement ---------------------------------------------------------

// Samples one whole-register computational-basis measurement by inverse
// CDF over the amplitude vector. Returns the sampled basis string in ket
// order. Requires a normalized state.
std::vector<int> measure_computational(const PureState& s, Rng& rng);

}  // namespace wtilde
