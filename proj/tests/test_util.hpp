#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "wtilde/majorana.hpp"
#include "wtilde/rng.hpp"
#include "wtilde/statekit.hpp"

namespace testutil {

using wtilde::cplx;

inline bool approx_c(cplx a, cplx b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
}

// Largest componentwise amplitude deviation between two states.
inline double max_amp_dev(const wtilde::PureState& a,
                          const wtilde::PureState& b) {
    double dev = 0.0;
    for (std::size_t v = 0; v < a.dim(); ++v) {
        dev = std::max(dev, std::abs(a.amp(v) - b.amp(v)));
    }
    return dev;
}

// Random point on the Bloch sphere.
inline wtilde::ProjectiveQubit random_qubit(wtilde::Rng& rng) {
    return wtilde::make_projective_qubit({rng.gaussian(), rng.gaussian()},
                                         {rng.gaussian(), rng.gaussian()});
}

// Random normalized Dicke coefficients -> symmetric state.
inline wtilde::PureState random_symmetric_state(int n, wtilde::Rng& rng) {
    std::vector<cplx> coeffs(n + 1);
    double norm2 = 0.0;
    for (auto& c : coeffs) {
        c = {rng.gaussian(), rng.gaussian()};
        norm2 += std::norm(c);
    }
    for (auto& c : coeffs) c /= std::sqrt(norm2);
    return wtilde::dicke_reconstruct({n, std::move(coeffs)});
}

// Greedy projective multiset comparison; adequate for well-separated
// points.
inline bool projective_multiset_match(std::vector<wtilde::ProjectiveQubit> a,
                                      std::vector<wtilde::ProjectiveQubit> b,
                                      double tol = 1e-6) {
    if (a.size() != b.size()) return false;
    for (const auto& p : a) {
        bool matched = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (wtilde::projective_overlap(p, b[j]) > 1.0 - tol) {
                b.erase(b.begin() + static_cast<std::ptrdiff_t>(j));
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

// Upper 0.001 quantiles of the chi-square distribution by degrees of
// freedom (standard table values).
inline double chi2_crit_001(int df) {
    switch (df) {
        case 1: return 10.828;
        case 2: return 13.8155;
        case 3: return 16.2662;
        case 4: return 18.4668;
        case 5: return 20.5150;
        case 6: return 22.4577;
        case 7: return 24.3219;
        case 8: return 26.1245;
        case 9: return 27.8772;
        default: return -1.0;
    }
}

}  // namespace testutil
