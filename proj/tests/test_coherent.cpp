#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "dcf/coherent.hpp"

using namespace dcf;

namespace {
constexpr double kPi = 3.14159265358979323846;

FieldConfig make_cfg(double beta, double k = 0.0, int eta = +1) {
    FieldConfig cfg;
    cfg.B = 0.5;
    cfg.beta = beta;
    cfg.k = k;
    cfg.eta = eta;
    return cfg;
}
}  // namespace

TEST_CASE("spec construction") {
    const CoherentSpec spec = make_coherent_spec(2.0, kPi / 3.0, 0.4);
    CHECK(spec.alpha_mod == 2.0);
    CHECK(spec.trunc == default_trunc(2.0));
    const cplx a = spec.alpha();
    CHECK(std::abs(a - 2.0 * std::exp(cplx(0.0, kPi / 3.0))) < 1e-15);
    CHECK(std::abs(spec.alpha_tilde() - a * std::exp(cplx(0.0, -0.4))) < 1e-15);

    CHECK_THROWS_AS(make_coherent_spec(-1.0, 0.0), std::invalid_argument);
}

TEST_CASE("truncation grading is frozen") {
    CHECK(default_trunc(0.5) == 16);
    CHECK(default_trunc(1.0) == 23);
    CHECK(default_trunc(2.0) == 38);
    CHECK(default_trunc(3.0) == 53);
    CHECK(default_trunc(4.0) == 71);
    // Graded rule always extends the plain tail rule.
    for (double r : {0.5, 1.0, 2.0, 4.0}) CHECK(default_trunc(r) > truncation_order(r));

    TruncationPolicy tight;
    tight.tol = 1e-12;
    tight.hard_cap = 30;
    CHECK_THROWS_AS(default_trunc(4.0, tight), CapExceeded);
}

TEST_CASE("normalization constant") {
    CHECK(coherent_norm_constant(0.0) == 1.0);
    for (double r : {0.5, 1.0, 3.0}) {
        const double want = 1.0 / std::sqrt(2.0 * std::exp(r * r) - 1.0);
        CHECK(std::abs(coherent_norm_constant(r) - want) < 1e-15);
    }
}

TEST_CASE("expansion coefficients") {
    // alpha = 0 collapses onto the ground component.
    const SpinorExpansion vac = coherent_coefficients(make_coherent_spec(0.0, 0.0));
    REQUIRE(vac.coeffs.size() == 1);
    CHECK(std::abs(vac.coeffs[0] - cplx(1.0)) < 1e-15);

    const CoherentSpec spec = make_coherent_spec(1.5, 0.8, 0.3);
    const SpinorExpansion state = coherent_coefficients(spec);
    REQUIRE(state.coeffs.size() == static_cast<std::size_t>(spec.trunc) + 1);
    CHECK(state.delta == 0.3);

    // a_1/a_0 = sqrt(2) alpha~ and a_2/a_1 = alpha~/sqrt(2).
    const cplx at = spec.alpha_tilde();
    CHECK(std::abs(state.coeffs[1] / state.coeffs[0] - std::sqrt(2.0) * at) < 1e-14);
    CHECK(std::abs(state.coeffs[2] / state.coeffs[1] - at / std::sqrt(2.0)) < 1e-14);

    // Unit norm in the orthonormal basis, even at the largest amplitude.
    const SpinorExpansion big = coherent_coefficients(make_coherent_spec(4.0, 1.2));
    CHECK(std::abs(norm(big) - 1.0) < 1e-10);

    // Under-resolved truncation is refused, not silently accepted.
    CoherentSpec starved = make_coherent_spec(4.0, 0.0);
    starved.trunc = 10;
    CHECK_THROWS_AS(coherent_coefficients(starved), TruncationInsufficient);
}

TEST_CASE("coefficients depend on phase and delta only through their difference") {
    const SpinorExpansion a = coherent_coefficients(make_coherent_spec(2.5, 1.1, 0.7));
    const SpinorExpansion b = coherent_coefficients(make_coherent_spec(2.5, 0.4, 0.0));
    REQUIRE(a.coeffs.size() == b.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        CHECK(std::abs(a.coeffs[i] - b.coeffs[i]) < 1e-14);
}

TEST_CASE("coherent states are lowering-operator eigenstates") {
    CHECK(eigenvalue_residual(make_coherent_spec(0.0, 0.0)) == 0.0);
    for (double phase : {0.0, kPi / 3.0, 1.9, 5.5})
        for (double delta : {0.0, kPi / 2.0})
            for (double mod : {0.5, 1.0, 2.0, 4.0})
                CHECK(eigenvalue_residual(make_coherent_spec(mod, phase, delta)) < 1e-9);
}

TEST_CASE("rendered state carries unit mass on the default window") {
    for (double beta : {0.0, 0.5, 0.9}) {
        const FieldConfig cfg = make_cfg(beta, 0.3);
        const CoherentSpec spec = make_coherent_spec(2.0, 0.9);
        const std::vector<double> grid = default_coherent_grid(spec, cfg, 3001);
        const CoherentRender render = render_coherent(spec, cfg, grid);
        CHECK(render.offgrid_mass < 1e-8);
        REQUIRE(render.psi.values.size() == grid.size());

        if (beta == 0.0) {
            // The deformation matrix is the identity: both spinors coincide.
            for (std::size_t i = 0; i < grid.size(); i += 500) {
                CHECK(std::abs(render.psi.values[i].up - render.phi.values[i].up) < 1e-15);
                CHECK(std::abs(render.psi.values[i].down - render.phi.values[i].down) < 1e-15);
            }
        }
    }
}

TEST_CASE("starved windows are reported, not silently truncated") {
    const FieldConfig cfg = make_cfg(0.5);
    const CoherentSpec spec = make_coherent_spec(4.0, 0.0);
    const std::vector<double> narrow = linear_grid(-1.0, 1.0, 51);
    CHECK_THROWS_AS(render_coherent(spec, cfg, narrow), GridSupportError);
    const CoherentRender render = render_coherent(spec, cfg, narrow, true);
    CHECK(render.offgrid_mass > 0.1);
}

TEST_CASE("coherent family resolves the identity") {
    const CompletenessResult r = completeness_check(3);
    CHECK(r.max_diag_err < 1e-6);
    CHECK(r.max_offdiag < 1e-6);
}
