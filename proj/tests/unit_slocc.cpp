#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "wtilde/slocc.hpp"

using namespace wtilde;
using testutil::approx_c;
using testutil::max_amp_dev;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState balanced_wtilde(int n) {
    return wtilde_state(n, kInvSqrt2, kInvSqrt2);
}

LocalOperator random_operator(Rng& rng) {
    return LocalOperator{{rng.gaussian(), rng.gaussian()},
                         {rng.gaussian(), rng.gaussian()},
                         {rng.gaussian(), rng.gaussian()},
                         {rng.gaussian(), rng.gaussian()}};
}

}  // namespace

TEST_CASE("builtin_m3 matches its transcription") {
    LocalOperator m3 = builtin_m3();
    const double inv_cbrt3 = 1.0 / std::cbrt(3.0);
    const cplx diag = std::polar(inv_cbrt3, std::numbers::pi / 6.0);
    const cplx off = -std::polar(inv_cbrt3, 5.0 * std::numbers::pi / 6.0);
    CHECK(approx_c(m3.m00, diag, 1e-15));
    CHECK(approx_c(m3.m11, diag, 1e-15));
    CHECK(approx_c(m3.m01, off, 1e-15));
    CHECK(m3.m01 == m3.m10);  // symmetric as a matrix
    CHECK(std::abs(m3.det()) > 1e-10);
}

TEST_CASE("builtin_m4 is unitary") {
    LocalOperator m4 = builtin_m4();
    CHECK(approx_c(m4.m00, {std::sqrt(2.0) / 2.0, 0.0}, 1e-15));
    CHECK(approx_c(m4.m01, {-0.5, 0.5}, 1e-15));
    CHECK(approx_c(m4.m10, {std::sqrt(2.0) / 2.0, 0.0}, 1e-15));
    CHECK(approx_c(m4.m11, {0.5, -0.5}, 1e-15));

    // M4 M4^dagger = I
    const cplx a = m4.m00 * std::conj(m4.m00) + m4.m01 * std::conj(m4.m01);
    const cplx b = m4.m00 * std::conj(m4.m10) + m4.m01 * std::conj(m4.m11);
    const cplx c = m4.m10 * std::conj(m4.m00) + m4.m11 * std::conj(m4.m01);
    const cplx d = m4.m10 * std::conj(m4.m10) + m4.m11 * std::conj(m4.m11);
    CHECK(approx_c(a, {1.0, 0.0}, 1e-12));
    CHECK(approx_c(b, {0.0, 0.0}, 1e-12));
    CHECK(approx_c(c, {0.0, 0.0}, 1e-12));
    CHECK(approx_c(d, {1.0, 0.0}, 1e-12));
}

TEST_CASE("the builtin operators map GHZ onto the balanced resource state") {
    CHECK(fidelity(apply_symmetric_ilo(builtin_m3(), ghz_state(3)),
                   balanced_wtilde(3)) >= 1.0 - 1e-9);
    CHECK(fidelity(apply_symmetric_ilo(builtin_m4(), ghz_state(4)),
                   balanced_wtilde(4)) >= 1.0 - 1e-9);
}

TEST_CASE("apply_symmetric_ilo basics") {
    PureState wt = balanced_wtilde(4);
    CHECK(max_amp_dev(apply_symmetric_ilo(identity_operator(), wt), wt) <=
          1e-15);

    LocalOperator singular{1.0, 1.0, 1.0, 1.0};
    CHECK_THROWS_AS(apply_symmetric_ilo(singular, wt), std::invalid_argument);

    // Symmetric states stay symmetric under a symmetric operator.
    Rng rng(42);
    for (int rep = 0; rep < 4; ++rep) {
        LocalOperator m = random_operator(rng);
        PureState out = apply_symmetric_ilo(m, balanced_wtilde(5));
        CHECK(out.is_normalized());
        CHECK(is_symmetric(out, 1e-9));
    }
}

TEST_CASE("applying m then its inverse is the identity up to phase") {
    Rng rng(7);
    for (int rep = 0; rep < 4; ++rep) {
        LocalOperator m = random_operator(rng);
        PureState s = balanced_wtilde(4);
        PureState back = apply_symmetric_ilo(m.inverse(),
                                             apply_symmetric_ilo(m, s));
        CHECK(fidelity(back, s) >= 1.0 - 1e-9);
    }
}

TEST_CASE("the transformation objective is projective") {
    // Rescaling the operator leaves the post-normalization fidelity
    // unchanged.
    Rng rng(13);
    LocalOperator m = random_operator(rng);
    for (cplx scale : {cplx{2.0, 0.0}, cplx{0.0, -0.7}, cplx{1.3, 2.1}}) {
        LocalOperator sm{scale * m.m00, scale * m.m01, scale * m.m10,
                         scale * m.m11};
        double f1 = fidelity(apply_symmetric_ilo(m, ghz_state(4)),
                             balanced_wtilde(4));
        double f2 = fidelity(apply_symmetric_ilo(sm, ghz_state(4)),
                             balanced_wtilde(4));
        CHECK(std::abs(f1 - f2) <= 1e-12);
    }
}

TEST_CASE("apply_local_operators generalizes the symmetric action") {
    PureState s = balanced_wtilde(4);
    LocalOperator m = builtin_m4();
    std::vector<LocalOperator> same(4, m);
    CHECK(max_amp_dev(apply_local_operators(same, s),
                      apply_symmetric_ilo(m, s)) <= 1e-14);

    std::vector<LocalOperator> wrong(3, m);
    CHECK_THROWS_AS(apply_local_operators(wrong, s), std::invalid_argument);

    Rng rng(21);
    std::vector<LocalOperator> mixed;
    for (int i = 0; i < 4; ++i) mixed.push_back(random_operator(rng));
    PureState out = apply_local_operators(mixed, s);
    CHECK(out.is_normalized());
}

TEST_CASE("degeneracy_verdict separates W from the balanced resource state") {
    for (int n = 3; n <= 10; ++n) {
        SloccVerdict v = degeneracy_verdict(w_state(n), balanced_wtilde(n));
        CHECK(v.config_a.cardinalities == std::vector<int>{n - 1, 1});
        CHECK(v.config_b.cardinalities == std::vector<int>(n, 1));
        CHECK(v.inequivalent_proven);
    }

    SloccVerdict self = degeneracy_verdict(w_state(4), w_state(4));
    CHECK_FALSE(self.inequivalent_proven);

    // GHZ has the all-distinct configuration too, so the criterion cannot
    // separate it from the balanced resource state.
    for (int n = 3; n <= 8; ++n) {
        SloccVerdict v = degeneracy_verdict(ghz_state(n), balanced_wtilde(n));
        CHECK(v.config_a.cardinalities == std::vector<int>(n, 1));
        CHECK(v.config_b.cardinalities == std::vector<int>(n, 1));
        CHECK_FALSE(v.inequivalent_proven);
    }

    const std::vector<int> b100{1, 0, 0};
    CHECK_THROWS_AS(degeneracy_verdict(basis_state(b100), w_state(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(degeneracy_verdict(w_state(3), w_state(4)),
                    std::invalid_argument);
}

TEST_CASE("degeneracy_verdict is sound on identical inputs") {
    for (int n = 3; n <= 8; ++n) {
        Rng rng = Rng::stream(55, static_cast<std::uint64_t>(n));
        PureState s = testutil::random_symmetric_state(n, rng);
        CHECK_FALSE(degeneracy_verdict(s, s).inequivalent_proven);
    }
}

TEST_CASE("search_symmetric_ilo finds the 3-party transformation") {
    IloSearchOptions opts;
    opts.restarts = 60;
    IloSearchResult r =
        search_symmetric_ilo(ghz_state(3), balanced_wtilde(3), opts, 0);
    CHECK(r.n == 3);
    CHECK(r.found);
    CHECK(r.best_infidelity < 1e-8);
    CHECK(r.restarts_used >= 1);
    CHECK(r.restarts_used <= opts.restarts);
    CHECK(std::abs(r.best_operator.det()) > opts.det_floor);

    // The reported operator actually achieves the reported infidelity.
    double f = fidelity(apply_symmetric_ilo(r.best_operator, ghz_state(3)),
                        balanced_wtilde(3));
    CHECK(std::abs((1.0 - f) - r.best_infidelity) <= 1e-12);
}

TEST_CASE("search results are reproducible from the seed") {
    IloSearchOptions opts;
    opts.restarts = 8;
    opts.max_evals = 600;
    IloSearchResult a =
        search_symmetric_ilo(ghz_state(5), balanced_wtilde(5), opts, 99);
    IloSearchResult b =
        search_symmetric_ilo(ghz_state(5), balanced_wtilde(5), opts, 99);
    CHECK(a.best_infidelity == b.best_infidelity);
    CHECK(a.restarts_used == b.restarts_used);
    CHECK(a.found == b.found);
    CHECK(a.best_operator.m00 == b.best_operator.m00);
    CHECK(a.best_operator.m01 == b.best_operator.m01);
    CHECK(a.best_operator.m10 == b.best_operator.m10);
    CHECK(a.best_operator.m11 == b.best_operator.m11);

    // A tiny budget on a 5-party instance comes back not-found, which is a
    // valid result, not an error.
    CHECK_FALSE(a.found);
    CHECK(a.best_infidelity > 1e-8);
    CHECK(a.restarts_used == 8);
}

TEST_CASE("per-party search mode runs and is reproducible") {
    IloSearchOptions opts;
    opts.restarts = 4;
    opts.max_evals = 800;
    opts.per_party = true;
    IloSearchResult a =
        search_symmetric_ilo(ghz_state(3), balanced_wtilde(3), opts, 5);
    IloSearchResult b =
        search_symmetric_ilo(ghz_state(3), balanced_wtilde(3), opts, 5);
    CHECK(a.best_infidelity == b.best_infidelity);
    CHECK(a.best_infidelity >= 0.0);
    CHECK(a.best_infidelity <= 1.0);
}

TEST_CASE("LocalOperator inverse validates the determinant") {
    LocalOperator singular{1.0, 2.0, 2.0, 4.0};
    CHECK_THROWS_AS(singular.inverse(), std::invalid_argument);

    LocalOperator m{cplx{1.0, 1.0}, cplx{0.0, 2.0}, cplx{3.0, 0.0},
                    cplx{1.0, -1.0}};
    LocalOperator inv = m.inverse();
    // m * inv = I
    CHECK(approx_c(m.m00 * inv.m00 + m.m01 * inv.m10, {1.0, 0.0}, 1e-12));
    CHECK(approx_c(m.m00 * inv.m01 + m.m01 * inv.m11, {0.0, 0.0}, 1e-12));
    CHECK(approx_c(m.m10 * inv.m00 + m.m11 * inv.m10, {0.0, 0.0}, 1e-12));
    CHECK(approx_c(m.m10 * inv.m01 + m.m11 * inv.m11, {1.0, 0.0}, 1e-12));
}
