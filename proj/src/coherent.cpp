#include "dcf/coherent.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace dcf {

namespace {

void validate_spec(const CoherentSpec& spec) {
    if (!(spec.alpha_mod >= 0.0) || !std::isfinite(spec.alpha_mod))
        throw std::invalid_argument("coherent spec: |alpha| must be finite and nonnegative");
    if (!std::isfinite(spec.phase) || !std::isfinite(spec.delta))
        throw std::invalid_argument("coherent spec: phases must be finite");
    if (spec.trunc < 0) throw std::invalid_argument("coherent spec: trunc must be nonnegative");
}

// |alpha| sqrt(2) N_c r^N / sqrt(N!), the trailing-coefficient bound that the
// annihilation-eigenvalue residual is controlled by.
double boundary_term(double alpha_mod, int order) {
    if (alpha_mod == 0.0) return 0.0;
    const double log_coeff =
        order * std::log(alpha_mod) - 0.5 * std::lgamma(static_cast<double>(order) + 1.0);
    return alpha_mod * std::sqrt(2.0) * coherent_norm_constant(alpha_mod) * std::exp(log_coeff);
}

}  // namespace

cplx CoherentSpec::alpha() const { return std::polar(alpha_mod, phase); }

cplx CoherentSpec::alpha_tilde() const { return std::polar(alpha_mod, phase - delta); }

double coherent_norm_constant(double alpha_mod) {
    const double r2 = alpha_mod * alpha_mod;
    if (r2 > 700.0) throw std::invalid_argument("coherent norm constant: |alpha|^2 too large");
    return 1.0 / std::sqrt(2.0 * std::exp(r2) - 1.0);
}

int default_trunc(double alpha_mod, const TruncationPolicy& policy) {
    int order = truncation_order(alpha_mod, policy);
    while (boundary_term(alpha_mod, order) >= 10.0 * policy.tol) {
        ++order;
        if (order > policy.hard_cap)
            throw CapExceeded("coherent series order exceeds policy cap", policy.hard_cap);
    }
    return order;
}

CoherentSpec make_coherent_spec(double alpha_mod, double phase, double delta,
                                const TruncationPolicy& policy) {
    CoherentSpec spec{alpha_mod, phase, delta, 0};
    validate_spec(spec);
    spec.trunc = default_trunc(alpha_mod, policy);
    return spec;
}

SpinorExpansion coherent_coefficients(const CoherentSpec& spec, const TruncationPolicy& policy) {
    validate_spec(spec);
    const int tail_order = truncation_order(spec.alpha_mod, policy);
    if (spec.trunc < tail_order)
        throw TruncationInsufficient("coherent series order " + std::to_string(spec.trunc) +
                                     " leaves a coefficient tail above tolerance (needs >= " +
                                     std::to_string(tail_order) + ")");

    SpinorExpansion state;
    state.delta = spec.delta;
    state.coeffs.resize(spec.trunc + 1);
    const double nc = coherent_norm_constant(spec.alpha_mod);
    state.coeffs[0] = nc;
    cplx term = nc * std::sqrt(2.0);
    const cplx at = spec.alpha_tilde();
    for (int n = 1; n <= spec.trunc; ++n) {
        term *= at / std::sqrt(static_cast<double>(n));
        state.coeffs[n] = term;
    }
    return state;
}

double eigenvalue_residual(const CoherentSpec& spec, const TruncationPolicy& policy) {
    const SpinorExpansion state = coherent_coefficients(spec, policy);
    const SpinorExpansion lowered = big_theta_minus(state);
    const cplx alpha = spec.alpha();
    double sum = 0.0;
    for (std::size_t n = 0; n < state.coeffs.size(); ++n) {
        const cplx lhs = n < lowered.coeffs.size() ? lowered.coeffs[n] : cplx(0.0);
        sum += std::norm(lhs - alpha * state.coeffs[n]);
    }
    return std::sqrt(sum) / norm(state);
}

CoherentRender render_coherent(const CoherentSpec& spec, const FieldConfig& cfg,
                               const std::vector<double>& grid_x, bool allow_partial_support) {
    cfg.validate();
    const SpinorExpansion state = coherent_coefficients(spec);
    const int order = spec.trunc;
    const Mat2 m = matrix_m(cfg.beta);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const cplx i_eta(0.0, static_cast<double>(cfg.eta));

    CoherentRender out;
    out.phi.x = grid_x;
    out.psi.x = grid_x;
    out.phi.values.resize(grid_x.size());
    out.psi.values.resize(grid_x.size());
    RealProfile rho_psi{grid_x, std::vector<double>(grid_x.size())};

    for (std::size_t i = 0; i < grid_x.size(); ++i) {
        const double x = grid_x[i];
        cplx up(0.0), down(0.0);
        // Level n pairs psi_{n-1} and psi_n, both displaced to the level-n
        // center, so the Hermite recurrence is rerun per component.
        for (int n = 0; n <= order; ++n) {
            const double pref_psi = psi_level_at_center(n, n, x, cfg);
            if (n == 0) {
                down += state.coeffs[0] * pref_psi;
                continue;
            }
            const double pref_psi_lower = psi_level_at_center(n - 1, n, x, cfg);
            up += state.coeffs[n] * inv_sqrt2 * pref_psi_lower;
            down += state.coeffs[n] * inv_sqrt2 * pref_psi;
        }
        Spinor2 phi{up, i_eta * down};
        out.phi.values[i] = phi;
        out.psi.values[i] = m * phi;
        rho_psi.values[i] = std::norm(out.psi.values[i].up) + std::norm(out.psi.values[i].down);
    }

    out.offgrid_mass = std::abs(1.0 - integrate(rho_psi, trapezoid_rule(grid_x)));
    if (out.offgrid_mass > 1e-6 && !allow_partial_support)
        throw GridSupportError("coherent state extends beyond the grid", out.offgrid_mass);
    return out;
}

std::vector<double> default_coherent_grid(const CoherentSpec& spec, const FieldConfig& cfg,
                                          int points) {
    return default_grid(cfg, truncation_order(spec.alpha_mod), points);
}

CompletenessResult completeness_check(int K, double r_max, int radial_points,
                                      int angular_points) {
    if (K < 0) throw std::invalid_argument("completeness check: K must be nonnegative");
    if (!(r_max > 0.0)) throw std::invalid_argument("completeness check: r_max must be positive");
    if (radial_points < 2) throw std::invalid_argument("completeness check: radial points < 2");
    if (angular_points < 2 * K + 2)
        throw std::invalid_argument("completeness check: angular points too few for K");

    const std::vector<double> r_nodes = linear_grid(0.0, r_max, radial_points);
    const QuadratureRule radial = trapezoid_rule(r_nodes);
    const int dim = K + 1;
    std::vector<cplx> gram(static_cast<std::size_t>(dim) * dim, cplx(0.0));
    std::vector<cplx> g(dim);

    // 1/sqrt(n!) ladder shared by every alpha on the circle of radius r.
    std::vector<double> inv_sqrt_fact(dim, 1.0);
    for (int n = 1; n < dim; ++n) inv_sqrt_fact[n] = inv_sqrt_fact[n - 1] / std::sqrt(double(n));

    for (int ir = 0; ir < radial_points; ++ir) {
        const double r = radial.nodes[ir];
        // The (2 e^{r^2} - 1) measure factor cancels the squared norm
        // constant, leaving weight r e^{-r^2} against bare g_n = sqrt(2) alpha^n/sqrt(n!).
        const double w = radial.weights[ir] * r * std::exp(-r * r) / angular_points;
        if (w == 0.0) continue;
        for (int ia = 0; ia < angular_points; ++ia) {
            const double theta = 2.0 * M_PI * ia / angular_points;
            const cplx alpha = std::polar(r, theta);
            cplx power(1.0);
            g[0] = 1.0;
            for (int n = 1; n < dim; ++n) {
                power *= alpha;
                g[n] = std::sqrt(2.0) * power * inv_sqrt_fact[n];
            }
            for (int n = 0; n < dim; ++n)
                for (int mcol = 0; mcol < dim; ++mcol)
                    gram[static_cast<std::size_t>(n) * dim + mcol] += w * g[n] * std::conj(g[mcol]);
        }
    }
    gram[0] += 0.5;  // the isolated n = 0 contribution

    CompletenessResult res{0.0, 0.0};
    for (int n = 0; n < dim; ++n)
        for (int mcol = 0; mcol < dim; ++mcol) {
            const cplx entry = gram[static_cast<std::size_t>(n) * dim + mcol];
            if (n == mcol)
                res.max_diag_err = std::max(res.max_diag_err, std::abs(entry - 1.0));
            else
                res.max_offdiag = std::max(res.max_offdiag, std::abs(entry));
        }
    return res;
}

}  // namespace dcf
