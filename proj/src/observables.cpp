#include "dcf/observables.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace dcf {

namespace {

double bilinear_sigma_y(const Spinor2& s) { return 2.0 * std::imag(std::conj(s.up) * s.down); }
double bilinear_sigma_x(const Spinor2& s) { return 2.0 * std::real(std::conj(s.up) * s.down); }
double norm_sq(const Spinor2& s) { return std::norm(s.up) + std::norm(s.down); }

void check_grid_support(const RealProfile& rho, bool allow_partial_support) {
    const double miss = std::abs(1.0 - integrate(rho, trapezoid_rule(rho.x)));
    if (miss > 1e-6 && !allow_partial_support)
        throw GridSupportError("density support extends beyond the grid", miss);
}

// Terms r^{2n}/n! for n = 0..order, the building block of every closed-form
// observable series.
std::vector<double> poisson_terms(double r, int order) {
    std::vector<double> t(static_cast<std::size_t>(order) + 1);
    t[0] = 1.0;
    for (int n = 1; n <= order; ++n) t[n] = t[n - 1] * r * r / n;
    return t;
}

double s1_series(double r, int order) {
    const auto t = poisson_terms(r, order);
    double s = 0.0;
    for (int n = 0; n <= order; ++n) s += t[n] / std::sqrt(n + 1.0);
    return s;
}

double real_or_throw(cplx value, const char* label) {
    if (std::abs(value.imag()) > 1e-9 * (1.0 + std::abs(value.real()))) {
        std::ostringstream os;
        os << label << ": expectation has spurious imaginary part " << value.imag();
        throw SeriesMismatch(os.str());
    }
    return value.real();
}

cplx metric_pair(const KetSpinor& bra, const KetSpinor& ket) {
    return contract_levels(bra.up, ket.up) + contract_levels(bra.down, ket.down);
}

// <Phi| X Phi> - beta <Phi| X sigma_y Phi> for an already-applied operator
// image X Phi (and its sigma_y partner).
cplx beta_metric(const KetSpinor& phi, const KetSpinor& x_phi, const KetSpinor& x_sy_phi,
                 double beta) {
    return metric_pair(phi, x_phi) - beta * metric_pair(phi, x_sy_phi);
}

KetSpinor apply_s(const KetSpinor& s, int q) {
    return {s_q(s.up, q), s_q(s.down, q)};
}

}  // namespace

DensityPair density_eigen(int n, const FieldConfig& cfg, const std::vector<double>& grid,
                          bool allow_partial_support) {
    cfg.validate();
    if (n < 0) throw std::invalid_argument("density_eigen: level must be nonnegative");
    const double beta = cfg.beta;

    DensityPair out;
    out.rho = {grid, std::vector<double>(grid.size())};
    out.jy = {grid, std::vector<double>(grid.size())};
    double worst_route = 0.0, worst_jx = 0.0;

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Spinor2 phi = phi_n(n, grid[i], cfg);
        const double phi2 = norm_sq(phi);
        const double sy = bilinear_sigma_y(phi);
        out.rho.values[i] = phi2 - beta * sy;
        out.jy.values[i] = sy - beta * phi2;

        const Spinor2 psi = psi_spinor(n, grid[i], cfg);
        worst_route = std::max(worst_route, std::abs(out.rho.values[i] - norm_sq(psi)));
        worst_route = std::max(worst_route, std::abs(out.jy.values[i] - bilinear_sigma_y(psi)));
        worst_jx = std::max(worst_jx, std::abs(bilinear_sigma_x(psi)));
    }

    if (worst_route > 1e-10) {
        std::ostringstream os;
        os << "level density: spinor-metric and direct routes differ by " << worst_route;
        throw SeriesMismatch(os.str());
    }
    if (worst_jx > 1e-12) {
        std::ostringstream os;
        os << "level density: transverse current " << worst_jx << " on the direct route";
        throw SeriesMismatch(os.str());
    }
    check_grid_support(out.rho, allow_partial_support);
    return out;
}

CoherentDensityRoutes density_coherent_routes(const CoherentSpec& spec, const FieldConfig& cfg,
                                              const std::vector<double>& grid,
                                              bool allow_partial_support) {
    cfg.validate();
    const double beta = cfg.beta;
    const double eta = cfg.eta;
    const CoherentRender render = render_coherent(spec, cfg, grid, allow_partial_support);

    CoherentDensityRoutes out;
    out.direct.rho = {grid, std::vector<double>(grid.size())};
    out.direct.jy = {grid, std::vector<double>(grid.size())};
    out.closed.rho = {grid, std::vector<double>(grid.size())};
    out.closed.jy = {grid, std::vector<double>(grid.size())};

    // Direct route: densities of the sampled Psi, normalized on the grid.
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Spinor2& psi = render.psi.values[i];
        out.direct.rho.values[i] = norm_sq(psi);
        out.direct.jy.values[i] = bilinear_sigma_y(psi);
    }
    const double grid_norm = integrate(out.direct.rho, trapezoid_rule(grid));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out.direct.rho.values[i] /= grid_norm;
        out.direct.jy.values[i] /= grid_norm;
    }

    // Closed route: component sums U = sum alpha_tilde^n psi_{n-1}(zeta_n)/sqrt(n!)
    // and Lt = psi_0(zeta_0) + (same sum with psi_n), assembled into the
    // reduced brackets with the exact norm constant.
    const double nc2 = std::pow(coherent_norm_constant(spec.alpha_mod), 2);
    const cplx at = spec.alpha_tilde();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        cplx upper(0.0), lower(psi_level_at_center(0, 0, x, cfg));
        cplx term(1.0);
        for (int n = 1; n <= spec.trunc; ++n) {
            term *= at / std::sqrt(static_cast<double>(n));
            upper += term * psi_level_at_center(n - 1, n, x, cfg);
            lower += term * psi_level_at_center(n, n, x, cfg);
        }
        const double mod2 = std::norm(upper) + std::norm(lower);
        const double cross = 2.0 * std::real(std::conj(upper) * lower);
        out.closed.rho.values[i] = nc2 * (mod2 - beta * eta * cross);
        out.closed.jy.values[i] = nc2 * (eta * cross - beta * mod2);
    }

    out.max_rho_diff = 0.0;
    out.max_jy_diff = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out.max_rho_diff = std::max(
            out.max_rho_diff, std::abs(out.direct.rho.values[i] - out.closed.rho.values[i]));
        out.max_jy_diff = std::max(
            out.max_jy_diff, std::abs(out.direct.jy.values[i] - out.closed.jy.values[i]));
    }
    return out;
}

DensityPair density_coherent(const CoherentSpec& spec, const FieldConfig& cfg,
                             const std::vector<double>& grid, bool allow_partial_support) {
    const CoherentDensityRoutes routes =
        density_coherent_routes(spec, cfg, grid, allow_partial_support);
    double peak = 0.0;
    for (double v : routes.closed.rho.values) peak = std::max(peak, std::abs(v));
    const double limit = 1e-8 * peak;
    if (routes.max_rho_diff > limit || routes.max_jy_diff > limit) {
        std::ostringstream os;
        os << "coherent density: direct and closed routes differ by "
           << std::max(routes.max_rho_diff, routes.max_jy_diff) << " (limit " << limit << ")";
        throw SeriesMismatch(os.str());
    }
    return routes.closed;
}

double norm_denominator(const CoherentSpec& spec, double beta) {
    const double r = spec.alpha_mod;
    return 2.0 * std::exp(r * r) - 1.0 -
           2.0 * beta * spec.alpha_tilde().real() * s1_series(r, spec.trunc);
}

double variance_or_throw(double second_moment, double mean, const char* label, double tol) {
    const double var = second_moment - mean * mean;
    if (var < -tol) {
        std::ostringstream os;
        os << label << ": negative variance " << var;
        throw SeriesMismatch(os.str());
    }
    return std::max(var, 0.0);
}

HurResult hur_closed_form(const CoherentSpec& spec, const FieldConfig& cfg) {
    cfg.validate();
    const double beta = cfg.beta;
    const double r = spec.alpha_mod;
    const int order = spec.trunc;
    if (order < truncation_order(r))
        throw TruncationInsufficient("uncertainty series needs the full coefficient tail");

    const auto t = poisson_terms(r, order);
    const double er2 = std::exp(r * r);
    double a = 0.0, b = 0.0, c = 0.0, a2 = 0.0, b2 = 0.0, c2 = 0.0, e3 = 0.0;
    for (int n = 0; n <= order; ++n) {
        b += t[n] / std::sqrt(n + 2.0);
        b2 += t[n] * (2.0 * n + 1.0) / std::sqrt(n + 1.0);
        e3 += t[n] / std::sqrt(n + 3.0);
        if (n >= 1) {
            a += t[n] * std::sqrt(n / (n + 1.0));
            c += t[n] * std::sqrt(static_cast<double>(n));
            a2 += t[n] * std::sqrt(n / (n + 2.0));
            c2 += t[n] * std::sqrt(static_cast<double>(n));
        }
    }

    const double d = norm_denominator(spec, beta);
    const cplx at = spec.alpha_tilde();
    const cplx at_c = std::conj(at);

    HurResult res;
    double means[2], seconds[2];
    for (int q = 0; q <= 1; ++q) {
        const double sgn = q == 0 ? 1.0 : -1.0;
        const cplx pref = q == 0 ? cplx(1.0 / std::sqrt(2.0)) : cplx(0.0, -1.0 / std::sqrt(2.0));
        const cplx bracket = (at + sgn * at_c) * (er2 + a) -
                             beta * ((at * at + sgn * at_c * at_c) * b + (1.0 + sgn) * c);
        means[q] = real_or_throw(pref * bracket / d, "uncertainty mean");

        const double re2 = 2.0 * std::real(at * at);
        const double re1 = 2.0 * std::real(at);
        const double re3 = 2.0 * std::real(at * at * at);
        seconds[q] = 0.5 / d *
                     (1.0 + 4.0 * r * r * er2 + sgn * re2 * (er2 + a2) -
                      beta * (re1 * (b2 + sgn * c2) + sgn * re3 * e3));
    }

    res.mean_s0 = means[0];
    res.mean_s1 = means[1];
    res.var_s0 = variance_or_throw(seconds[0], means[0], "position quadrature");
    res.var_s1 = variance_or_throw(seconds[1], means[1], "momentum quadrature");
    res.product = std::sqrt(res.var_s0) * std::sqrt(res.var_s1);
    return res;
}

HurResult hur_oracle(const CoherentSpec& spec, const FieldConfig& cfg) {
    cfg.validate();
    const double beta = cfg.beta;
    const SpinorExpansion state = coherent_coefficients(spec);
    const KetSpinor phi = expansion_components(state, cfg.eta);
    const KetSpinor sy_phi = apply_sigma_y(phi);

    const double denom = real_or_throw(beta_metric(phi, phi, sy_phi, beta), "metric norm");

    HurResult res;
    double means[2], seconds[2];
    for (int q = 0; q <= 1; ++q) {
        const KetSpinor s_phi = apply_s(phi, q);
        const KetSpinor s_sy_phi = apply_s(sy_phi, q);
        means[q] =
            real_or_throw(beta_metric(phi, s_phi, s_sy_phi, beta), "quadrature mean") / denom;
        const KetSpinor ss_phi = apply_s(s_phi, q);
        const KetSpinor ss_sy_phi = apply_s(s_sy_phi, q);
        seconds[q] =
            real_or_throw(beta_metric(phi, ss_phi, ss_sy_phi, beta), "quadrature second moment") /
            denom;
    }

    res.mean_s0 = means[0];
    res.mean_s1 = means[1];
    res.var_s0 = variance_or_throw(seconds[0], means[0], "position quadrature");
    res.var_s1 = variance_or_throw(seconds[1], means[1], "momentum quadrature");
    res.product = std::sqrt(res.var_s0) * std::sqrt(res.var_s1);
    return res;
}

double mean_energy(const CoherentSpec& spec, const FieldConfig& cfg) {
    cfg.validate();
    const double r = spec.alpha_mod;
    const auto t = poisson_terms(r, spec.trunc);
    double level_sum = 0.0;
    for (int n = 1; n <= spec.trunc; ++n) level_sum += t[n] * std::sqrt(2.0 * n);
    const double root = std::pow(1.0 - cfg.beta * cfg.beta, 0.75);
    const double numer = cfg.k * cfg.beta * (1.0 - 2.0 * std::exp(r * r)) +
                         2.0 * root / cfg.l_B() * level_sum;
    return numer / norm_denominator(spec, cfg.beta);
}

double mean_energy_coefficient_route(const CoherentSpec& spec, const FieldConfig& cfg) {
    cfg.validate();
    const SpinorExpansion state = coherent_coefficients(spec);
    double sum = 0.0;
    for (std::size_t n = 0; n < state.coeffs.size(); ++n)
        sum += std::norm(state.coeffs[n]) * energy(static_cast<int>(n), cfg);
    const double r = spec.alpha_mod;
    return sum * (2.0 * std::exp(r * r) - 1.0) / norm_denominator(spec, cfg.beta);
}

double mean_velocity_coherent(const CoherentSpec& spec, const FieldConfig& cfg) {
    cfg.validate();
    const double r = spec.alpha_mod;
    return cfg.v_d() * (1.0 - 2.0 * std::exp(r * r)) / norm_denominator(spec, cfg.beta);
}

}  // namespace dcf
