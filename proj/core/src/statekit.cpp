/*
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "wtilde/statekit.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace wtilde {

namespace {

// Kahan-compensated accumulator; keeps norms and inner products accurate
// to a few ulp even over 2^20-term sums.
class Compensated {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = sum_ + y;
        c_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double c_ = 0.0;
};

bool finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void check_range(int n, int min, const char* what) {
    if (n < min || n > kMaxQubits) {
        throw std::invalid_argument(std::string(what) + ": qubit count " +
                                    std::to_string(n) + " outside [" +
                                    std::to_string(min) + ", " +
                                    std::to_string(kMaxQubits) + "]");
    }
}

std::vector<cplx> checked_amps(int n_qubits, std::vector<cplx> amps,
                               const char* what) {
    check_range(n_qubits, 1, what);
    if (amps.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument(std::string(what) +
                                    ": amplitude vector size mismatch");
    }
    for (const cplx& a : amps) {
        if (!finite(a)) {
            throw std::invalid_argument(std::string(what) +
                                        ": non-finite amplitude");
        }
    }
    return amps;
}

}  // namespace

PureState::PureState(int n_qubits, std::vector<cplx> amps)
    : n_qubits_(n_qubits),
      normalized_(true),
      amps_(checked_amps(n_qubits, std::move(amps), "PureState")) {
    if (std::abs(norm2() - 1.0) > 1e-12) {
        throw std::invalid_argument("PureState: vector is not normalized");
    }
}

PureState::PureState(int n_qubits, std::vector<cplx> amps, unnormalized_t)
    : n_qubits_(n_qubits),
      normalized_(false),
      amps_(checked_amps(n_qubits, std::move(amps), "PureState")) {}

double PureState::norm2() const {
    Compensated acc;
    for (const cplx& a : amps_) acc.add(std::norm(a));
    return acc.value();
}

std::uint64_t index_of_bits(std::span<const int> bits) {
    if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("bit vector length outside [1, 20]");
    }
    std::uint64_t v = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("bit vector entries must be 0 or 1");
        }
        v = (v << 1) | static_cast<std::uint64_t>(b);
    }
    return v;
}

std::vector<int> bits_of_index(std::uint64_t v, int n) {
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        bits[static_cast<std::size_t>(j)] =
            static_cast<int>((v >> (n - 1 - j)) & 1u);
    }
    return bits;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return std::round(r);
}

PureState basis_state(std::span<const int> bits) {
    const std::uint64_t v = index_of_bits(bits);
    std::vector<cplx> amps(std::size_t{1} << bits.size());
    amps[v] = 1.0;
    return PureState(static_cast<int>(bits.size()), std::move(amps));
}

PureState dicke_state(int n, int k) {
    check_range(n, 1, "dicke_state");
    if (k < 0 || k > n) {
        throw std::invalid_argument("dicke_state: weight outside [0, n]");
    }
    const double amp = 1.0 / std::sqrt(binomial(n, k));
    std::vector<cplx> amps(std::size_t{1} << n);
    for (std::uint64_t v = 0; v < amps.size(); ++v) {
        if (std::popcount(v) == k) amps[v] = amp;
    }
    return PureState(n, std::move(amps));
}

PureState w_state(int n) {
    check_range(n, 3, "w_state");
    return dicke_state(n, 1);
}

PureState wbar_state(int n) {
    check_range(n, 3, "wbar_state");
    return dicke_state(n, n - 1);
}

PureState wtilde_state(int n, cplx alpha, cplx beta) {
    check_range(n, 3, "wtilde_state");
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12) {
        throw std::invalid_argument(
            "wtilde_state: |alpha|^2 + |beta|^2 must be 1");
    }
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<cplx> amps(std::size_t{1} << n);
    for (std::uint64_t v = 0; v < amps.size(); ++v) {
        const int w = std::popcount(v);
        if (w == 1) {
            amps[v] = alpha * inv_sqrt_n;
        } else if (w == n - 1) {
            amps[v] = beta * inv_sqrt_n;
        }
    }
    return PureState(n, std::move(amps));
}

PureState ghz_state(int n) {
    check_range(n, 2, "ghz_state");
    std::vector<cplx> amps(std::size_t{1} << n);
    const double a = 1.0 / std::sqrt(2.0);
    amps.front() = a;
    amps.back() = a;
    return PureState(n, std::move(amps));
}

PureState symmetrize(std::span<const int> bits) {
    const std::uint64_t v = index_of_bits(bits);
    return dicke_state(static_cast<int>(bits.size()),
                       std::popcount(v));
}

bool is_symmetric(const PureState& s, double tol) {
    const int n = s.n_qubits();
    for (int b = 0; b + 1 < n; ++b) {
        const std::uint64_t lo = std::uint64_t{1} << b;
        const std::uint64_t hi = std::uint64_t{1} << (b + 1);
        for (std::uint64_t v = 0; v < s.dim(); ++v) {
            const bool has_lo = (v & lo) != 0;
            const bool has_hi = (v & hi) != 0;
            if (has_lo && !has_hi) {
                if (std::abs(s.amp(v) - s.amp(v ^ lo ^ hi)) > tol) {
                    return false;
                }
            }
        }
    }
    return true;
}

DickeDecomposition dicke_decompose(const PureState& s, double tol) {
    if (!is_symmetric(s, tol)) {
        throw std::invalid_argument("dicke_decompose: state is not symmetric");
    }
    const int n = s.n_qubits();
    std::vector<Compensated> re(static_cast<std::size_t>(n) + 1);
    std::vector<Compensated> im(static_cast<std::size_t>(n) + 1);
    for (std::uint64_t v = 0; v < s.dim(); ++v) {
        const auto k = static_cast<std::size_t>(std::popcount(v));
        re[k].add(s.amp(v).real());
        im[k].add(s.amp(v).imag());
    }
    DickeDecomposition d;
    d.n = n;
    d.coeffs.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        d.coeffs[ks] = cplx{re[ks].value(), im[ks].value()} /
                       std::sqrt(binomial(n, k));
    }
    return d;
}

PureState dicke_reconstruct(const DickeDecomposition& d) {
    check_range(d.n, 1, "dicke_reconstruct");
    if (d.coeffs.size() != static_cast<std::size_t>(d.n) + 1) {
        throw std::invalid_argument(
            "dicke_reconstruct: expected n + 1 coefficients");
    }
    std::vector<cplx> per_shell(d.coeffs.size());
    for (int k = 0; k <= d.n; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        per_shell[ks] = d.coeffs[ks] / std::sqrt(binomial(d.n, k));
    }
    std::vector<cplx> amps(std::size_t{1} << d.n);
    for (std::uint64_t v = 0; v < amps.size(); ++v) {
        amps[v] = per_shell[static_cast<std::size_t>(std::popcount(v))];
    }
    return PureState(d.n, std::move(amps));
}

cplx inner_product(const PureState& a, const PureState& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("inner_product: qubit count mismatch");
    }
    Compensated re, im;
    for (std::size_t v = 0; v < a.dim(); ++v) {
        const cplx term = std::conj(a.amp(v)) * b.amp(v);
        re.add(term.real());
        im.add(term.imag());
    }
    return {re.value(), im.value()};
}

PureState tensor(const PureState& a, const PureState& b) {
    const int n = a.n_qubits() + b.n_qubits();
    check_range(n, 1, "tensor");
    std::vector<cplx> amps(std::size_t{1} << n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.amp(i) == cplx{}) continue;
        for (std::size_t j = 0; j < b.dim(); ++j) {
            amps[(i << b.n_qubits()) | j] = a.amp(i) * b.amp(j);
        }
    }
    if (a.is_normalized() && b.is_normalized()) {
        return PureState(n, std::move(amps));
    }
    return PureState(n, std::move(amps), PureState::unnormalized);
}

PureState normalize(const PureState& a) {
    const double norm = std::sqrt(a.norm2());
    if (!(norm > 1e-150)) {
        throw std::invalid_argument("normalize: zero vector");
    }
    std::vector<cplx> amps(a.amps().begin(), a.amps().end());
    for (cplx& x : amps) x /= norm;
    return PureState(a.n_qubits(), std::move(amps));
}

double fidelity(const PureState& a, const PureState& b) {
    return std::norm(inner_product(a, b));
}

std::vector<int> measure_computational(const PureState& s, Rng& rng) {
    if (std::abs(s.norm2() - 1.0) > 1e-9) {
        throw std::invalid_argument(
            "measure_computational: state is not normalized");
    }
    const double u = rng.uniform01();
    double cum = 0.0;
    std::uint64_t sampled = 0;
    for (std::uint64_t v = 0; v < s.dim(); ++v) {
        const double p = std::norm(s.amp(v));
        if (p == 0.0) continue;
        cum += p;
        sampled = v;  // last support index wins if roundoff leaves u >= cum
        if (u < cum) break;
    }
    return bits_of_index(sampled, s.n_qubits());
}

}  // namespace wtilde
