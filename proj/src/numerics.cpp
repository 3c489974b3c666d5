#include "dcf/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dcf {

namespace {

constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^(-1/4)

void check_order_and_arg(int n, double z, const char* who) {
    if (n < 0) throw std::invalid_argument(std::string(who) + ": order must be nonnegative");
    if (!std::isfinite(z)) throw std::invalid_argument(std::string(who) + ": non-finite argument");
}

// Shared recurrence: seed chooses between h_n (Gaussian included) and the
// polynomial part p_n.  h_{k+1} = z sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}.
double hermite_recurrence(int n, double z, double seed) {
    double prev = 0.0;
    double cur = seed;
    for (int k = 0; k < n; ++k) {
        double next = z * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(double(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

double hermite_function(int n, double z) {
    check_order_and_arg(n, z, "hermite_function");
    return hermite_recurrence(n, z, kPiQuarterInv * std::exp(-0.5 * z * z));
}

std::vector<double> hermite_function_series(int n_max, double z) {
    check_order_and_arg(n_max, z, "hermite_function_series");
    std::vector<double> h(n_max + 1);
    h[0] = kPiQuarterInv * std::exp(-0.5 * z * z);
    if (n_max == 0) return h;
    h[1] = z * std::sqrt(2.0) * h[0];
    for (int k = 1; k < n_max; ++k)
        h[k + 1] = z * std::sqrt(2.0 / (k + 1)) * h[k] - std::sqrt(double(k) / (k + 1)) * h[k - 1];
    return h;
}

double hermite_poly_normalized(int n, double z) {
    check_order_and_arg(n, z, "hermite_poly_normalized");
    return hermite_recurrence(n, z, kPiQuarterInv);
}

double pcf_d(int n, double z) {
    check_order_and_arg(n, z, "pcf_d");
    // D_n(z) = 2^(-n/2) e^(-z^2/4) H_n(z/sqrt(2)) = sqrt(n! sqrt(pi)) h_n(z/sqrt(2))
    double log_norm = 0.5 * std::lgamma(n + 1.0) + 0.25 * std::log(M_PI);
    return std::exp(log_norm) * hermite_function(n, z / std::sqrt(2.0));
}

int truncation_order(double alpha_mod, const TruncationPolicy& policy) {
    if (alpha_mod < 0 || !std::isfinite(alpha_mod))
        throw std::invalid_argument("truncation_order: |alpha| must be finite and nonnegative");
    if (!(policy.tol > 0 && policy.tol < 1) || policy.hard_cap < 1)
        throw std::invalid_argument("truncation_order: invalid policy");
    if (alpha_mod == 0) return 0;

    const double x = alpha_mod * alpha_mod;
    if (x > 700) throw std::invalid_argument("truncation_order: e^{|alpha|^2} overflows");
    const double full = std::exp(x);
    const double target = policy.tol * full;
    double term = 1.0, partial = 1.0;
    if (full - partial < target) return 0;
    for (int n = 1; n <= policy.hard_cap; ++n) {
        term *= x / n;
        partial += term;
        if (full - partial < target) return n;
    }
    throw CapExceeded("truncation_order: hard cap " + std::to_string(policy.hard_cap) +
                          " reached before tail tolerance was met",
                      policy.hard_cap);
}

std::vector<double> linear_grid(double x_min, double x_max, int points) {
    if (points < 2 || !(x_min < x_max))
        throw std::invalid_argument("linear_grid: need x_min < x_max and >= 2 points");
    std::vector<double> x(points);
    const double h = (x_max - x_min) / (points - 1);
    for (int i = 0; i < points; ++i) x[i] = x_min + h * i;
    x.back() = x_max;
    return x;
}

QuadratureRule trapezoid_rule(const std::vector<double>& x) {
    if (x.size() < 2) throw std::invalid_argument("trapezoid_rule: need at least 2 nodes");
    for (size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1])) throw std::invalid_argument("trapezoid_rule: nodes must increase");
    QuadratureRule rule;
    rule.kind = QuadKind::trapezoid;
    rule.nodes = x;
    rule.weights.resize(x.size());
    rule.weights.front() = 0.5 * (x[1] - x[0]);
    for (size_t i = 1; i + 1 < x.size(); ++i) rule.weights[i] = 0.5 * (x[i + 1] - x[i - 1]);
    rule.weights.back() = 0.5 * (x[x.size() - 1] - x[x.size() - 2]);
    return rule;
}

QuadratureRule gauss_hermite_rule(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite_rule: need n >= 1");

    // All n roots of p_n lie inside |z| < sqrt(2n+1); sample densely enough
    // that neighbouring roots (spacing ~ pi/sqrt(2n)) cannot share a cell.
    const double bound = std::sqrt(2.0 * n + 1.0) + 1.0;
    const int samples = 20 * n + 1;
    const double step = 2.0 * bound / (samples - 1);

    std::vector<double> roots;
    roots.reserve(n);
    double z_prev = -bound;
    double p_prev = hermite_poly_normalized(n, z_prev);
    for (int i = 1; i < samples; ++i) {
        const double z_cur = -bound + step * i;
        const double p_cur = hermite_poly_normalized(n, z_cur);
        if (p_prev == 0.0) roots.push_back(z_prev);
        if (p_prev * p_cur < 0.0) {
            // Newton from the midpoint; p_n' = sqrt(2n) p_{n-1}.
            double z = 0.5 * (z_prev + z_cur);
            for (int it = 0; it < 60; ++it) {
                const double p = hermite_poly_normalized(n, z);
                const double dp = std::sqrt(2.0 * n) * hermite_poly_normalized(n - 1, z);
                const double dz = p / dp;
                z -= dz;
                if (std::abs(dz) < 1e-15 * std::max(1.0, std::abs(z))) break;
            }
            roots.push_back(z);
        }
        z_prev = z_cur;
        p_prev = p_cur;
    }
    if ((int)roots.size() != n)
        throw std::logic_error("gauss_hermite_rule: bracketing found " +
                               std::to_string(roots.size()) + " of " + std::to_string(n) +
                               " roots");
    std::sort(roots.begin(), roots.end());

    QuadratureRule rule;
    rule.kind = QuadKind::gauss_hermite;
    rule.nodes = std::move(roots);
    rule.weights.resize(n);
    for (int k = 0; k < n; ++k) {
        const double p = hermite_poly_normalized(n - 1, rule.nodes[k]);
        rule.weights[k] = 1.0 / (n * p * p);
    }
    return rule;
}

double integrate(const RealProfile& profile, const QuadratureRule& rule) {
    if (profile.x.size() != rule.nodes.size() || profile.values.size() != rule.nodes.size())
        throw std::invalid_argument("integrate: profile/rule size mismatch");
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        if (std::abs(profile.x[i] - rule.nodes[i]) > 1e-12 * std::max(1.0, std::abs(rule.nodes[i])))
            throw std::invalid_argument("integrate: profile not sampled on the rule's nodes");
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * profile.values[i];
    return acc;
}

}  // namespace dcf
