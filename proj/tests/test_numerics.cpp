#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "dcf/numerics.hpp"

using namespace dcf;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Frozen references, computed once with exact integer / big-float arithmetic
// and pinned here so regressions cannot drift past them.
//   H_25(3)  = 802306115066290176            (physicists' polynomial, exact)
//   h_25(3)  = 0.29344700435648363
//   D_4(2)   = -5/e = -1.8393972058572117
constexpr double kH25At3 = 802306115066290176.0;
constexpr double kLittleH25At3 = 0.29344700435648363;
constexpr double kD4At2 = -1.8393972058572117;
}  // namespace

TEST_CASE("hermite function small-order values") {
    CHECK(std::abs(hermite_function(0, 0.0) - std::pow(kPi, -0.25)) < 1e-15);
    CHECK(hermite_function(1, 0.0) == 0.0);
    // h_2(0) = -1 / sqrt(2 sqrt(pi))
    CHECK(std::abs(hermite_function(2, 0.0) + 1.0 / std::sqrt(2.0 * std::sqrt(kPi))) < 1e-15);
    // h_1(z) = sqrt(2) z h_0(z)
    for (double z : {-2.0, -0.3, 0.7, 1.9})
        CHECK(std::abs(hermite_function(1, z) -
                       std::sqrt(2.0) * z * hermite_function(0, z)) < 1e-15);
}

TEST_CASE("hermite function high-order frozen value") {
    const double h = hermite_function(25, 3.0);
    CHECK(std::abs(h - kLittleH25At3) < 1e-12 * std::abs(kLittleH25At3));

    // Same number seen through the raw polynomial: undo the normalization in
    // log space and compare against the exact integer H_25(3).
    const double log_norm =
        0.5 * (25.0 * std::log(2.0) + std::lgamma(26.0) + 0.5 * std::log(kPi));
    const double log_H = std::log(std::abs(h)) + log_norm + 4.5;  // e^{+z^2/2}
    CHECK(std::abs(log_H - std::log(kH25At3)) < 1e-12);
    CHECK(h > 0.0);
}

TEST_CASE("hermite function stays bounded at extreme order") {
    // The normalized functions obey sup |h_n| <= h_0(0) ~ 0.7511 and never
    // overflow; scan a broad window at orders far beyond the raw-polynomial
    // overflow point.
    for (int n : {50, 120, 200}) {
        double worst = 0.0;
        for (int i = 0; i <= 600; ++i) {
            const double z = -30.0 + i * 0.1;
            const double v = hermite_function(n, z);
            CHECK(std::isfinite(v));
            worst = std::max(worst, std::abs(v));
        }
        CHECK(worst < 1.087);
        CHECK(worst > 0.1);  // the window genuinely contains the bulk
    }
}

TEST_CASE("series evaluation matches single evaluations") {
    for (double z : {-7.3, -1.0, 0.0, 0.4, 11.2}) {
        const std::vector<double> all = hermite_function_series(60, z);
        REQUIRE(all.size() == 61);
        for (int n : {0, 1, 2, 17, 38, 60})
            CHECK(std::abs(all[static_cast<std::size_t>(n)] - hermite_function(n, z)) == 0.0);
    }
}

TEST_CASE("polynomial part carries the Gaussian exactly") {
    for (int n : {0, 1, 2, 5, 12, 30})
        for (double z : {-4.0, -0.5, 0.0, 1.5, 3.0}) {
            const double lhs = hermite_poly_normalized(n, z) * std::exp(-0.5 * z * z);
            CHECK(std::abs(lhs - hermite_function(n, z)) < 1e-14 * (1.0 + std::abs(lhs)));
        }
}

TEST_CASE("polynomial derivative identity p_n' = sqrt(2n) p_{n-1}") {
    const double h = 1e-6;
    for (int n : {1, 2, 7, 19})
        for (double z : {-2.2, 0.3, 1.7}) {
            const double fd =
                (hermite_poly_normalized(n, z + h) - hermite_poly_normalized(n, z - h)) /
                (2.0 * h);
            const double exact = std::sqrt(2.0 * n) * hermite_poly_normalized(n - 1, z);
            CHECK(std::abs(fd - exact) < 1e-8 * (1.0 + std::abs(exact)));
        }
}

TEST_CASE("parabolic cylinder function") {
    // D_0(z) = e^{-z^2/4}, D_1(z) = z e^{-z^2/4}
    for (double z : {-3.0, -0.5, 0.0, 1.0, 2.5}) {
        CHECK(std::abs(pcf_d(0, z) - std::exp(-0.25 * z * z)) < 1e-14);
        CHECK(std::abs(pcf_d(1, z) - z * std::exp(-0.25 * z * z)) < 1e-14);
    }
    CHECK(std::abs(pcf_d(4, 2.0) - kD4At2) < 1e-12 * std::abs(kD4At2));

    // Three-term recurrence D_{n+1} - z D_n + n D_{n-1} = 0.
    for (int n : {1, 2, 5, 10, 30})
        for (double z : {-2.0, 0.7, 3.1}) {
            const double resid = pcf_d(n + 1, z) - z * pcf_d(n, z) + n * pcf_d(n - 1, z);
            CHECK(std::abs(resid) < 1e-12 * (1.0 + std::abs(pcf_d(n + 1, z))));
        }
}

TEST_CASE("truncation order frozen values") {
    CHECK(truncation_order(0.0) == 0);
    CHECK(truncation_order(0.5) == 9);
    CHECK(truncation_order(1.0) == 14);
    CHECK(truncation_order(2.0) == 25);
    CHECK(truncation_order(4.0) == 51);
}

TEST_CASE("truncation order respects the hard cap") {
    TruncationPolicy tight;
    tight.tol = 1e-30;
    tight.hard_cap = 50;
    CHECK_THROWS_AS(truncation_order(10.0, tight), CapExceeded);
    try {
        truncation_order(10.0, tight);
    } catch (const CapExceeded& e) {
        CHECK(e.cap == 50);
    }
}

TEST_CASE("linear grid") {
    const std::vector<double> g = linear_grid(-1.0, 2.0, 7);
    REQUIRE(g.size() == 7);
    CHECK(g.front() == -1.0);
    CHECK(g.back() == 2.0);
    for (std::size_t i = 1; i < g.size(); ++i)
        CHECK(std::abs((g[i] - g[i - 1]) - 0.5) < 1e-15);
    CHECK_THROWS_AS(linear_grid(0.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(linear_grid(1.0, 0.0, 5), std::invalid_argument);
}

TEST_CASE("trapezoid rule basics") {
    const std::vector<double> x = linear_grid(0.0, 1.0, 101);
    const QuadratureRule rule = trapezoid_rule(x);
    RealProfile ones{x, std::vector<double>(x.size(), 1.0)};
    CHECK(std::abs(integrate(ones, rule) - 1.0) < 1e-15);

    const std::vector<double> wide = linear_grid(-12.0, 12.0, 4801);
    const QuadratureRule wrule = trapezoid_rule(wide);
    RealProfile gauss{wide, {}};
    RealProfile h0sq{wide, {}};
    for (double z : wide) {
        gauss.values.push_back(std::exp(-z * z));
        const double h0 = hermite_function(0, z);
        h0sq.values.push_back(h0 * h0);
    }
    CHECK(std::abs(integrate(gauss, wrule) - std::sqrt(kPi)) < 1e-10);
    CHECK(std::abs(integrate(h0sq, wrule) - 1.0) < 1e-10);
}

TEST_CASE("hermite functions are orthonormal under the trapezoid rule") {
    const std::vector<double> x = linear_grid(-15.0, 15.0, 6001);
    const QuadratureRule rule = trapezoid_rule(x);
    const std::vector<int> orders = {0, 1, 2, 3, 5, 10, 20, 50};
    std::vector<std::vector<double>> sampled;
    for (int n : orders) {
        std::vector<double> v;
        v.reserve(x.size());
        for (double z : x) v.push_back(hermite_function(n, z));
        sampled.push_back(std::move(v));
    }
    for (std::size_t a = 0; a < orders.size(); ++a)
        for (std::size_t b = a; b < orders.size(); ++b) {
            RealProfile prod{x, {}};
            prod.values.reserve(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                prod.values.push_back(sampled[a][i] * sampled[b][i]);
            const double target = a == b ? 1.0 : 0.0;
            CHECK(std::abs(integrate(prod, rule) - target) < 1e-9);
        }
}

TEST_CASE("gauss-hermite rule structure") {
    for (int n : {1, 2, 5, 16, 64}) {
        const QuadratureRule rule = gauss_hermite_rule(n);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
        REQUIRE(rule.weights.size() == static_cast<std::size_t>(n));
        CHECK(rule.kind == QuadKind::gauss_hermite);
        double wsum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
            CHECK(rule.weights[i] > 0.0);
            // Nodes are roots of h_n (the bounded form keeps the residual
            // meaningful at the outer nodes, where p_n carries e^{z^2/2}).
            CHECK(std::abs(hermite_function(n, rule.nodes[i])) < 1e-12);
            // Symmetric rule.
            CHECK(std::abs(rule.nodes[i] + rule.nodes[rule.nodes.size() - 1 - i]) < 1e-13);
            CHECK(std::abs(rule.weights[i] - rule.weights[rule.nodes.size() - 1 - i]) <
                  1e-13 * rule.weights[i]);
            wsum += rule.weights[i];
        }
        CHECK(std::abs(wsum - std::sqrt(kPi)) < 1e-12);
    }
}

TEST_CASE("gauss-hermite moments are exact") {
    // int x^{2m} e^{-x^2} dx = sqrt(pi) (2m-1)!! / 2^m; n = 4 handles degree 7.
    const QuadratureRule rule = gauss_hermite_rule(4);
    const double moments[4] = {std::sqrt(kPi), std::sqrt(kPi) / 2.0, 3.0 * std::sqrt(kPi) / 4.0,
                               15.0 * std::sqrt(kPi) / 8.0};
    for (int m = 0; m < 4; ++m) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * std::pow(rule.nodes[i], 2 * m);
        CHECK(std::abs(acc - moments[m]) < 1e-12 * moments[m]);
        double odd = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            odd += rule.weights[i] * std::pow(rule.nodes[i], 2 * m + 1);
        CHECK(std::abs(odd) < 1e-13);
    }
}

TEST_CASE("gauss-hermite orthonormality of the polynomial family") {
    // With 51 nodes the rule is exact through degree 101, so the normalized
    // polynomials up to order 25 form an exact orthonormal family.
    const QuadratureRule rule = gauss_hermite_rule(51);
    for (int a : {0, 1, 3, 10, 25})
        for (int b : {0, 2, 10, 25}) {
            double acc = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                acc += rule.weights[i] * hermite_poly_normalized(a, rule.nodes[i]) *
                       hermite_poly_normalized(b, rule.nodes[i]);
            CHECK(std::abs(acc - (a == b ? 1.0 : 0.0)) < 1e-12);
        }
}

TEST_CASE("integrate validates profile against rule") {
    const std::vector<double> x = linear_grid(0.0, 1.0, 11);
    const QuadratureRule rule = trapezoid_rule(x);
    RealProfile bad{x, std::vector<double>(10, 1.0)};
    CHECK_THROWS_AS(integrate(bad, rule), std::invalid_argument);
}
