/*
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "wtilde/majorana.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wtilde {

namespace {

bool finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void check_point_count(std::size_t n, std::size_t lo, std::size_t hi,
                       const char* what) {
    if (n < lo || n > hi) {
        throw std::invalid_argument(std::string(what) + ": point count " +
                                    std::to_string(n) + " outside [" +
                                    std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    }
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= static_cast<double>(i);
    return f;
}

// <b|q> for a basis bit b.
cplx bra_bit(int b, const ProjectiveQubit& q) { return b == 0 ? q.a0 : q.a1; }

// Coefficients of prod_j (a0_j + a1_j x); coeff k is the homogeneous
// degree-k elementary symmetric form of the points.
std::vector<cplx> point_polynomial(std::span<const ProjectiveQubit> qubits) {
    std::vector<cplx> e(qubits.size() + 1);
    e[0] = 1.0;
    std::size_t used = 0;
    for (const ProjectiveQubit& q : qubits) {
        ++used;
        for (std::size_t k = used; k > 0; --k) {
            e[k] = e[k] * q.a0 + e[k - 1] * q.a1;
        }
        e[0] *= q.a0;
    }
    return e;
}

// Complex roots by companion-matrix eigenvalues, with a guarded Newton
// polish on the original polynomial. coeffs[k] multiplies z^k and the
// leading coefficient must be nonzero.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs) {
    const std::size_t deg = coeffs.size() - 1;
    if (deg == 0) return {};
    Eigen::MatrixXcd companion =
        Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg),
                               static_cast<Eigen::Index>(deg));
    for (std::size_t i = 0; i + 1 < deg; ++i) {
        companion(static_cast<Eigen::Index>(i + 1),
                  static_cast<Eigen::Index>(i)) = 1.0;
    }
    for (std::size_t i = 0; i < deg; ++i) {
        companion(static_cast<Eigen::Index>(i),
                  static_cast<Eigen::Index>(deg - 1)) =
            -coeffs[i] / coeffs[deg];
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("polynomial_roots: eigensolver failed");
    }

    auto eval = [&coeffs](cplx z, cplx& df) {
        cplx f = 0.0;
        df = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            df = df * z + f;
            f = f * z + coeffs[k];
        }
        return f;
    };

    std::vector<cplx> roots(deg);
    for (std::size_t i = 0; i < deg; ++i) {
        cplx z = solver.eigenvalues()(static_cast<Eigen::Index>(i));
        cplx df;
        cplx f = eval(z, df);
        for (int it = 0; it < 3; ++it) {
            if (std::abs(df) < 1e-300) break;
            const cplx step = f / df;
            cplx df2;
            const cplx f2 = eval(z - step, df2);
            if (std::abs(f2) >= std::abs(f)) break;  // repeated-root wobble
            z -= step;
            f = f2;
            df = df2;
        }
        roots[i] = z;
    }
    return roots;
}

}  // namespace

ProjectiveQubit make_projective_qubit(cplx a0, cplx a1) {
    if (!finite(a0) || !finite(a1)) {
        throw std::invalid_argument("projective qubit: non-finite amplitude");
    }
    const double norm = std::sqrt(std::norm(a0) + std::norm(a1));
    if (!(norm > 1e-150)) {
        throw std::invalid_argument("projective qubit: zero vector");
    }
    return {a0 / norm, a1 / norm};
}

double projective_overlap(const ProjectiveQubit& a, const ProjectiveQubit& b) {
    return std::abs(std::conj(a.a0) * b.a0 + std::conj(a.a1) * b.a1);
}

bool projectively_equal(const ProjectiveQubit& a, const ProjectiveQubit& b,
                        double tol) {
    return projective_overlap(a, b) > 1.0 - tol;
}

RootSet roots_Rn(int n) {
    if (n < 3) {
        throw std::invalid_argument("roots_Rn: need at least 3 parties");
    }
    const int m = n - 2;
    RootSet rs;
    rs.n = n;
    rs.roots.reserve(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) {
        const double angle =
            (n % 2 == 0)
                ? (2.0 * k - 1.0) * std::numbers::pi / static_cast<double>(m)
                : 2.0 * k * std::numbers::pi / static_cast<double>(m);
        rs.roots.push_back(std::polar(1.0, angle));
    }
    return rs;
}

std::vector<ProjectiveQubit> phi_set(int n) {
    RootSet rs = roots_Rn(n);
    std::vector<ProjectiveQubit> points;
    points.reserve(static_cast<std::size_t>(n));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (const cplx& r : rs.roots) {
        points.push_back({inv_sqrt2, r * inv_sqrt2});
    }
    points.push_back({1.0, 0.0});
    points.push_back({0.0, 1.0});
    return points;
}

cplx elementary_symmetric(const RootSet& roots, int k) {
    const int m = static_cast<int>(roots.roots.size());
    if (k < 0 || k > m) {
        throw std::invalid_argument(
            "elementary_symmetric: degree outside [0, n-2]");
    }
    std::vector<cplx> e(static_cast<std::size_t>(k) + 1);
    e[0] = 1.0;
    for (int i = 0; i < m; ++i) {
        const cplx r = roots.roots[static_cast<std::size_t>(i)];
        for (int j = std::min(k, i + 1); j >= 1; --j) {
            const auto js = static_cast<std::size_t>(j);
            e[js] += r * e[js - 1];
        }
    }
    return e[static_cast<std::size_t>(k)];
}

PureState majorana_sum(std::span<const ProjectiveQubit> qubits) {
    check_point_count(qubits.size(), 3, 12, "majorana_sum");
    const int n = static_cast<int>(qubits.size());
    const std::size_t dim = std::size_t{1} << n;

    // Kahan-compensated accumulation: n! additions per amplitude would
    // otherwise drift past the tolerances this sum is checked against.
    std::vector<cplx> acc(dim), comp(dim);
    std::vector<cplx> term(dim), next(dim);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    do {
        // Product state for this ordering: factor k occupies bit k.
        term[0] = 1.0;
        std::size_t width = 1;
        for (int k = 0; k < n; ++k) {
            const ProjectiveQubit& q = qubits[static_cast<std::size_t>(
                perm[static_cast<std::size_t>(k)])];
            for (std::size_t v = 0; v < width; ++v) {
                next[v] = term[v] * q.a0;
                next[v | width] = term[v] * q.a1;
            }
            width <<= 1;
            std::swap(term, next);
        }
        for (std::size_t v = 0; v < dim; ++v) {
            const cplx y = term[v] - comp[v];
            const cplx t = acc[v] + y;
            comp[v] = (t - acc[v]) - y;
            acc[v] = t;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return PureState(n, std::move(acc), PureState::unnormalized);
}

PureState majorana_sum_fast(std::span<const ProjectiveQubit> qubits) {
    check_point_count(qubits.size(), 1,
                      static_cast<std::size_t>(kMaxQubits),
                      "majorana_sum_fast");
    const int n = static_cast<int>(qubits.size());
    const std::vector<cplx> e = point_polynomial(qubits);

    std::vector<cplx> shell(static_cast<std::size_t>(n) + 1);
    for (int h = 0; h <= n; ++h) {
        shell[static_cast<std::size_t>(h)] =
            factorial(h) * factorial(n - h) * e[static_cast<std::size_t>(h)];
    }
    std::vector<cplx> amps(std::size_t{1} << n);
    for (std::uint64_t v = 0; v < amps.size(); ++v) {
        amps[v] = shell[static_cast<std::size_t>(std::popcount(v))];
    }
    return PureState(n, std::move(amps), PureState::unnormalized);
}

PureState majorana_sum_normalized(std::span<const ProjectiveQubit> qubits) {
    return normalize(majorana_sum(qubits));
}

cplx majorana_overlap(std::span<const ProjectiveQubit> qubits,
                      std::uint64_t v) {
    check_point_count(qubits.size(), 1, 20, "majorana_overlap");
    const int n = static_cast<int>(qubits.size());

    // Ryser inclusion-exclusion for the permanent of the overlap matrix
    // A[i][j] = <bit_i(v)|qubits[j]>, walking column subsets in Gray-code
    // order so each step updates the row sums by one column.
    std::vector<cplx> row_sums(static_cast<std::size_t>(n));
    cplx total = 0.0, comp = 0.0;
    std::uint64_t gray = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t g = 1; g < subsets; ++g) {
        const std::uint64_t next_gray = g ^ (g >> 1);
        const std::uint64_t flipped = next_gray ^ gray;
        const int j = std::countr_zero(flipped);
        const double sign = (next_gray & flipped) ? 1.0 : -1.0;
        const ProjectiveQubit& q = qubits[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i) {
            row_sums[static_cast<std::size_t>(i)] +=
                sign * bra_bit(static_cast<int>((v >> i) & 1u), q);
        }
        gray = next_gray;

        cplx prod = 1.0;
        for (const cplx& rs : row_sums) prod *= rs;
        const cplx term = (std::popcount(gray) % 2 == 0) ? prod : -prod;
        const cplx y = term - comp;
        const cplx t = total + y;
        comp = (t - total) - y;
        total = t;
    }
    return (n % 2 == 0) ? total : -total;
}

Lemma1Report verify_lemma1(int n) {
    if (n < 3 || n > 12) {
        throw std::invalid_argument("verify_lemma1: n outside [3, 12]");
    }
    const std::vector<ProjectiveQubit> points = phi_set(n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double peak = factorial(n - 1) * std::pow(inv_sqrt2, n - 2);

    Lemma1Report report;
    report.n = n;
    report.normalization =
        1.0 / (std::sqrt(2.0 * n) * factorial(n - 1) *
               std::pow(inv_sqrt2, n - 2));

    auto closed_form = [&](int h) -> cplx {
        return (h == 1 || h == n - 1) ? cplx{peak, 0.0} : cplx{0.0, 0.0};
    };

    const bool full_scan = n <= 8;
    std::vector<cplx> scaled;
    if (full_scan) {
        PureState m = majorana_sum(points);
        std::vector<cplx> rep(static_cast<std::size_t>(n) + 1);
        std::vector<double> err(static_cast<std::size_t>(n) + 1, 0.0);
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (std::uint64_t v = 0; v < m.dim(); ++v) {
            const auto h = static_cast<std::size_t>(std::popcount(v));
            if (!seen[h]) {
                rep[h] = m.amp(v);
                seen[h] = true;
            }
            report.same_weight_max_dev = std::max(
                report.same_weight_max_dev, std::abs(m.amp(v) - rep[h]));
            err[h] = std::max(
                err[h],
                std::abs(m.amp(v) - closed_form(static_cast<int>(h))));
        }
        for (int h = 0; h <= n; ++h) {
            const auto hs = static_cast<std::size_t>(h);
            report.per_weight.push_back(
                {h, rep[hs], closed_form(h), err[hs]});
        }
        scaled.assign(m.amps().begin(), m.amps().end());
    } else {
        for (int h = 0; h <= n; ++h) {
            // Three spread-out representatives per weight.
            const std::uint64_t base = (std::uint64_t{1} << h) - 1;
            const std::uint64_t reps[3] = {base, base << (n - h),
                                           base << ((n - h) / 2)};
            cplx vals[3];
            double dev = 0.0;
            for (int i = 0; i < 3; ++i) {
                vals[i] = majorana_overlap(points, reps[i]);
                dev = std::max(dev, std::abs(vals[i] - vals[0]));
            }
            report.same_weight_max_dev =
                std::max(report.same_weight_max_dev, dev);
            double err = 0.0;
            for (const cplx& val : vals) {
                err = std::max(err, std::abs(val - closed_form(h)));
            }
            report.per_weight.push_back({h, vals[0], closed_form(h), err});
        }
        PureState m = majorana_sum_fast(points);
        scaled.assign(m.amps().begin(), m.amps().end());
    }

    for (cplx& a : scaled) a *= report.normalization;
    const PureState rescaled(n, std::move(scaled), PureState::unnormalized);
    report.fidelity_to_wtilde =
        std::norm(inner_product(wtilde_state(n, inv_sqrt2, inv_sqrt2),
                                rescaled));
    return report;
}

std::vector<ProjectiveQubit> majorana_extract(const PureState& s,
                                              double tol) {
    const int n = s.n_qubits();
    if (n < 3 || n > 16) {
        throw std::invalid_argument("majorana_extract: n outside [3, 16]");
    }
    if (!is_symmetric(s, tol)) {
        throw std::invalid_argument("majorana_extract: state is not symmetric");
    }

    const DickeDecomposition d = dicke_decompose(s, tol);
    std::vector<cplx> poly(static_cast<std::size_t>(n) + 1);
    double scale = 0.0;
    for (int k = 0; k <= n; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        poly[ks] = std::sqrt(binomial(n, k)) * d.coeffs[ks];
        scale = std::max(scale, std::abs(poly[ks]));
    }
    const double negligible = scale * 1e-12;

    // Exact zeros at the ends of the coefficient list become the poles:
    // missing low degrees are roots at the origin (points at |1>), missing
    // high degrees are roots at infinity (points at |0>).
    int lo = 0;
    while (lo < n && std::abs(poly[static_cast<std::size_t>(lo)]) <=
                         negligible) {
        ++lo;
    }
    int hi = n;
    while (hi > lo && std::abs(poly[static_cast<std::size_t>(hi)]) <=
                          negligible) {
        --hi;
    }

    std::vector<ProjectiveQubit> points;
    points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < lo; ++i) points.push_back({0.0, 1.0});
    for (int i = hi; i < n; ++i) points.push_back({1.0, 0.0});

    if (hi > lo) {
        const std::vector<cplx> inner(
            poly.begin() + lo, poly.begin() + hi + 1);
        for (const cplx& z : polynomial_roots(inner)) {
            points.push_back(make_projective_qubit(z, -1.0));
        }
    }

    const PureState recon = normalize(majorana_sum_fast(points));
    const double fid = fidelity(recon, s);
    if (fid < 1.0 - 10.0 * tol) {
        throw std::runtime_error(
            "majorana_extract: reconstruction fidelity " +
            std::to_string(fid) + " below tolerance");
    }
    return points;
}

DegeneracyConfig degeneracy_config(std::span<const ProjectiveQubit> qubits,
                                   double tol) {
    std::vector<ProjectiveQubit> reps;
    std::vector<int> counts;
    for (const ProjectiveQubit& q : qubits) {
        bool grouped = false;
        for (std::size_t g = 0; g < reps.size(); ++g) {
            if (projectively_equal(q, reps[g], tol)) {
                ++counts[g];
                grouped = true;
                break;
            }
        }
        if (!grouped) {
            reps.push_back(q);
            counts.push_back(1);
        }
    }
    std::sort(counts.begin(), counts.end(), std::greater<>());
    return {std::move(counts)};
}

}  // namespace wtilde
