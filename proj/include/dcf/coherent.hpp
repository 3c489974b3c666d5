#pragma once

#include <vector>

#include "dcf/ladder.hpp"

namespace dcf {

// Annihilation-operator eigenstate parameters: alpha = |alpha| e^{i phase},
// operator phase delta (enters only through alpha_tilde = alpha e^{-i delta}),
// and the series order N.
struct CoherentSpec {
    double alpha_mod = 0.0;
    double phase = 0.0;
    double delta = 0.0;
    int trunc = 0;

    cplx alpha() const;
    cplx alpha_tilde() const;
};

// Series order that keeps both the coefficient tail and the trailing-term
// contribution to the annihilation-eigenvalue residual below the policy
// tolerance.  The tail rule alone leaves a boundary coefficient of order
// sqrt(tol), which the eigenvalue residual sees linearly, so the order is
// extended until |alpha| |a_N| < 10 tol.
int default_trunc(double alpha_mod, const TruncationPolicy& policy = {});

// Spec with trunc filled from default_trunc.
CoherentSpec make_coherent_spec(double alpha_mod, double phase, double delta = 0.0,
                                const TruncationPolicy& policy = {});

// Normalization (2 e^{|alpha|^2} - 1)^{-1/2}.
double coherent_norm_constant(double alpha_mod);

// a_0 = N, a_n = N sqrt(2) alpha_tilde^n / sqrt(n!); throws
// TruncationInsufficient when spec.trunc leaves a coefficient tail above the
// policy tolerance.
SpinorExpansion coherent_coefficients(const CoherentSpec& spec,
                                      const TruncationPolicy& policy = {});

// ||Theta^- Phi_alpha - alpha Phi_alpha|| / ||Phi_alpha|| in the coefficient
// inner product; zero for alpha = 0, and bounded by the trailing-coefficient
// rule otherwise.
double eigenvalue_residual(const CoherentSpec& spec, const TruncationPolicy& policy = {});

struct CoherentRender {
    GridProfile<Spinor2> phi;  // Phi_alpha(x)
    GridProfile<Spinor2> psi;  // Psi_alpha = M Phi_alpha
    double offgrid_mass;       // |1 - integral of Psi^dag Psi| over the grid
};

// Samples Phi_alpha and Psi_alpha on the grid.  Throws GridSupportError when
// more than 1e-6 of the norm is unaccounted for by the grid, unless
// allow_partial_support is set (the diagnostic is always filled in).
CoherentRender render_coherent(const CoherentSpec& spec, const FieldConfig& cfg,
                               const std::vector<double>& grid_x,
                               bool allow_partial_support = false);

// Default render grid for a coherent state: the level grid sized to the
// highest level that carries coefficient weight above the tail tolerance.
std::vector<double> default_coherent_grid(const CoherentSpec& spec, const FieldConfig& cfg,
                                          int points = 4001);

struct CompletenessResult {
    double max_diag_err;  // max |G_nn - 1| over n <= K
    double max_offdiag;   // max |G_nm|, n != m
};

// Resolution of identity over the coherent family:
// (1/2)|Phi_0><Phi_0| + integral dmu |Phi_alpha><Phi_alpha| = I on
// span{Phi_0..Phi_K}, with radial measure weight r e^{-r^2} (2 e^{r^2}-1)/(2 pi)
// in r = |alpha| (the variable change t = r^2 turns each diagonal entry into
// Gamma(n+1)/n!).  Radial integral by trapezoid on [0, r_max], angular by a
// uniform sum, exact for the harmonics involved.
CompletenessResult completeness_check(int K, double r_max = 8.0, int radial_points = 8001,
                                      int angular_points = 64);

}  // namespace dcf
