#pragma once

#include <vector>

#include "dcf/errors.hpp"

namespace dcf {

// Tail control for the infinite series that appear in coherent-state
// expansions: relative tail bound and an absolute term-count cap.
struct TruncationPolicy {
    double tol = 1e-12;
    int hard_cap = 200;
};

// A function sampled on a real-axis grid; T is double for densities,
// Spinor2 for rendered states.
template <typename T>
struct GridProfile {
    std::vector<double> x;
    std::vector<T> values;
};
using RealProfile = GridProfile<double>;

enum class QuadKind { trapezoid, gauss_hermite };

// nodes strictly increasing, weights positive, same length.  The
// Gauss-Hermite rule integrates f against exp(-x^2): callers supply the
// smooth factor only.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    QuadKind kind = QuadKind::trapezoid;
};

// Normalized Hermite function h_n(z) = (2^n n! sqrt(pi))^(-1/2) e^(-z^2/2) H_n(z),
// evaluated by the normalized three-term recurrence (raw H_n overflows near
// n ~ 150; h_n stays bounded by ~1.087 for all n).
double hermite_function(int n, double z);

// All of h_0(z) .. h_{n_max}(z) in one recurrence pass.
std::vector<double> hermite_function_series(int n_max, double z);

// Polynomial part p_n(z) = H_n(z) / sqrt(2^n n! sqrt(pi)), i.e. h_n without
// the Gaussian.  Same roots as h_n; used for quadrature weights where the
// Gaussian would underflow.  p_n' = sqrt(2n) p_{n-1}.
double hermite_poly_normalized(int n, double z);

// Parabolic cylinder function D_n(z) for nonnegative integer order, via the
// Hermite reduction D_n(z) = sqrt(n! sqrt(pi)) h_n(z/sqrt(2)).  Note D_n
// itself grows like sqrt(n!), so it genuinely overflows for n beyond ~150;
// state construction therefore goes through hermite_function instead.
double pcf_d(int n, double z);

// Smallest N with sum_{n>N} |alpha|^{2n}/n! < tol * e^{|alpha|^2}.
// Throws CapExceeded when policy.hard_cap is reached first.
int truncation_order(double alpha_mod, const TruncationPolicy& policy = {});

std::vector<double> linear_grid(double x_min, double x_max, int points);

// Composite trapezoid weights over an arbitrary strictly increasing grid.
QuadratureRule trapezoid_rule(const std::vector<double>& x);

// n-point Gauss-Hermite rule: integrates polynomials of degree <= 2n-1
// against e^{-x^2} exactly.  Roots are bracketed by dense sampling of p_n on
// [-sqrt(2n+1)-1, sqrt(2n+1)+1] and polished with Newton steps; weights use
// w_k = 1 / (n p_{n-1}(x_k)^2), which never forms an exponential.
QuadratureRule gauss_hermite_rule(int n);

// sum_i w_i f(x_i); profile must be sampled exactly on the rule's nodes.
double integrate(const RealProfile& profile, const QuadratureRule& rule);

}  // namespace dcf
