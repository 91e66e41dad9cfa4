/*
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "wtilde/slocc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wtilde/rng.hpp"

namespace wtilde {

namespace {

constexpr double kSingularDet = 1e-10;

void check_invertible(const LocalOperator& m, const char* what) {
    if (std::abs(m.det()) <= kSingularDet) {
        throw std::invalid_argument(std::string(what) +
                                    ": operator is singular");
    }
}

// One single-qubit operator applied to bit `b` of a raw amplitude vector.
void apply_on_bit(const LocalOperator& m, std::vector<cplx>& amps, int b) {
    const std::uint64_t mask = std::uint64_t{1} << b;
    for (std::uint64_t v = 0; v < amps.size(); ++v) {
        if (v & mask) continue;
        const cplx x = amps[v];
        const cplx y = amps[v | mask];
        amps[v] = m.m00 * x + m.m01 * y;
        amps[v | mask] = m.m10 * x + m.m11 * y;
    }
}

PureState normalized_state(int n, std::vector<cplx> amps, const char* what) {
    double norm2 = 0.0;
    for (const cplx& a : amps) norm2 += std::norm(a);
    const double norm = std::sqrt(norm2);
    if (!(norm > 1e-150)) {
        throw std::runtime_error(std::string(what) +
                                 ": transformed state vanished");
    }
    for (cplx& a : amps) a /= norm;
    return PureState(n, std::move(amps));
}

LocalOperator operator_from_params(std::span<const double> p) {
    return LocalOperator{{p[0], p[1]}, {p[2], p[3]}, {p[4], p[5]},
                         {p[6], p[7]}};
}

// --- Nelder-Mead simplex descent -----------------------------------------

struct DescentResult {
    std::vector<double> x;
    double f = 0.0;
};

DescentResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                          std::vector<double> x0, double step,
                          int max_evals) {
    const std::size_t dim = x0.size();
    std::vector<std::vector<double>> xs(dim + 1, x0);
    std::vector<double> fs(dim + 1);
    int evals = 0;

    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return objective(x);
    };

    for (std::size_t i = 0; i < dim; ++i) xs[i + 1][i] += step;
    for (std::size_t i = 0; i <= dim; ++i) fs[i] = eval(xs[i]);

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);

    while (evals < max_evals) {
        for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[dim - 1];

        if (fs[worst] - fs[best] <= 1e-14 * (1.0 + std::abs(fs[best]))) break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < dim; ++d) centroid[d] += xs[i][d];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        for (std::size_t d = 0; d < dim; ++d) {
            xr[d] = centroid[d] + (centroid[d] - xs[worst][d]);
        }
        const double fr = eval(xr);

        if (fr < fs[best]) {
            for (std::size_t d = 0; d < dim; ++d) {
                xe[d] = centroid[d] + 2.0 * (centroid[d] - xs[worst][d]);
            }
            const double fe = eval(xe);
            if (fe < fr) {
                xs[worst] = xe;
                fs[worst] = fe;
            } else {
                xs[worst] = xr;
                fs[worst] = fr;
            }
            continue;
        }
        if (fr < fs[second]) {
            xs[worst] = xr;
            fs[worst] = fr;
            continue;
        }

        const bool outside = fr < fs[worst];
        for (std::size_t d = 0; d < dim; ++d) {
            xc[d] = outside ? centroid[d] + 0.5 * (xr[d] - centroid[d])
                            : centroid[d] - 0.5 * (centroid[d] - xs[worst][d]);
        }
        const double fc = eval(xc);
        if (fc < (outside ? fr : fs[worst])) {
            xs[worst] = xc;
            fs[worst] = fc;
            continue;
        }

        // Shrink toward the best vertex.
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) continue;
            for (std::size_t d = 0; d < dim; ++d) {
                xs[i][d] = xs[best][d] + 0.5 * (xs[i][d] - xs[best][d]);
            }
            fs[i] = eval(xs[i]);
            if (evals >= max_evals) break;
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= dim; ++i) {
        if (fs[i] < fs[best]) best = i;
    }
    return {xs[best], fs[best]};
}

}  // namespace

LocalOperator LocalOperator::inverse() const {
    const cplx d = det();
    if (std::abs(d) <= kSingularDet) {
        throw std::invalid_argument("LocalOperator: singular, no inverse");
    }
    return {m11 / d, -m01 / d, -m10 / d, m00 / d};
}

LocalOperator identity_operator() { return {1.0, 0.0, 0.0, 1.0}; }

LocalOperator builtin_m3() {
    const double inv_cbrt3 = 1.0 / std::cbrt(3.0);
    const cplx diag = std::polar(inv_cbrt3, std::numbers::pi / 6.0);
    const cplx off = -std::polar(inv_cbrt3, 5.0 * std::numbers::pi / 6.0);
    return {diag, off, off, diag};
}

LocalOperator builtin_m4() {
    const double h = std::sqrt(2.0) / 2.0;
    return {cplx{h, 0.0}, cplx{-0.5, 0.5}, cplx{h, 0.0}, cplx{0.5, -0.5}};
}

PureState apply_symmetric_ilo(const LocalOperator& m, const PureState& s) {
    check_invertible(m, "apply_symmetric_ilo");
    std::vector<cplx> amps(s.amps().begin(), s.amps().end());
    for (int b = 0; b < s.n_qubits(); ++b) apply_on_bit(m, amps, b);
    return normalized_state(s.n_qubits(), std::move(amps),
                            "apply_symmetric_ilo");
}

PureState apply_local_operators(std::span<const LocalOperator> ops,
                                const PureState& s) {
    if (ops.size() != static_cast<std::size_t>(s.n_qubits())) {
        throw std::invalid_argument(
            "apply_local_operators: need one operator per qubit");
    }
    for (const LocalOperator& m : ops) {
        check_invertible(m, "apply_local_operators");
    }
    std::vector<cplx> amps(s.amps().begin(), s.amps().end());
    for (int b = 0; b < s.n_qubits(); ++b) {
        apply_on_bit(ops[static_cast<std::size_t>(b)], amps, b);
    }
    return normalized_state(s.n_qubits(), std::move(amps),
                            "apply_local_operators");
}

SloccVerdict degeneracy_verdict(const PureState& a, const PureState& b,
                                double tol) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("degeneracy_verdict: qubit count mismatch");
    }
    SloccVerdict verdict;
    verdict.config_a = degeneracy_config(majorana_extract(a, tol));
    verdict.config_b = degeneracy_config(majorana_extract(b, tol));
    verdict.inequivalent_proven =
        verdict.config_a.cardinalities != verdict.config_b.cardinalities;
    return verdict;
}

IloSearchResult search_symmetric_ilo(const PureState& source,
                                     const PureState& target,
                                     const IloSearchOptions& opts,
                                     std::uint64_t seed) {
    const int n = source.n_qubits();
    if (target.n_qubits() != n) {
        throw std::invalid_argument("search_symmetric_ilo: qubit mismatch");
    }
    if (std::abs(source.norm2() - 1.0) > 1e-9 ||
        std::abs(target.norm2() - 1.0) > 1e-9) {
        throw std::invalid_argument(
            "search_symmetric_ilo: states must be normalized");
    }
    if (opts.restarts < 1 || opts.max_evals < 16) {
        throw std::invalid_argument("search_symmetric_ilo: bad budget");
    }

    const std::size_t parties =
        opts.per_party ? static_cast<std::size_t>(n) : 1;
    const std::size_t dim = 8 * parties;

    // 1 - |<target|transformed>|^2 / ||transformed||^2, evaluated on a
    // reused scratch buffer. Exactly scale invariant in the parameters.
    std::vector<cplx> scratch(source.dim());
    auto objective = [&](std::span<const double> p) -> double {
        scratch.assign(source.amps().begin(), source.amps().end());
        for (int b = 0; b < n; ++b) {
            const std::size_t off = opts.per_party ? 8 * static_cast<std::size_t>(b) : 0;
            apply_on_bit(operator_from_params(p.subspan(off, 8)), scratch, b);
        }
        double norm2 = 0.0;
        cplx ip = 0.0;
        for (std::size_t v = 0; v < scratch.size(); ++v) {
            norm2 += std::norm(scratch[v]);
            ip += std::conj(target.amp(v)) * scratch[v];
        }
        if (!(norm2 > 1e-240)) return 2.0;
        return 1.0 - std::norm(ip) / norm2;
    };
    auto objective_vec = [&](std::span<const double> p) { return objective(p); };

    IloSearchResult result;
    result.n = n;
    result.seed = seed;
    result.best_infidelity = 2.0;

    std::vector<double> start(dim);
    for (int r = 0; r < opts.restarts; ++r) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));

        // Gaussian start, resampled while any party operator is too close
        // to singular.
        for (std::size_t party = 0; party < parties; ++party) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                for (std::size_t i = 0; i < 8; ++i) {
                    start[8 * party + i] = rng.gaussian();
                }
                const LocalOperator m = operator_from_params(
                    std::span<const double>(start).subspan(8 * party, 8));
                if (std::abs(m.det()) >= opts.det_floor) break;
            }
        }

        DescentResult d =
            nelder_mead(objective_vec, start, 0.7, opts.max_evals);
        if (d.f < 1e-5) {
            // Tight second descent from the candidate basin.
            d = nelder_mead(objective_vec, d.x, 1e-3, opts.max_evals);
        }

        if (d.f < result.best_infidelity) {
            result.best_infidelity = d.f;
            result.best_operator = operator_from_params(
                std::span<const double>(d.x).subspan(0, 8));
        }
        result.restarts_used = r + 1;
        if (result.best_infidelity < opts.success_threshold * 1e-2) break;
    }

    result.found = result.best_infidelity < opts.success_threshold;
    return result;
}

}  // namespace wtilde
