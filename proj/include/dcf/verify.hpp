#pragma once

#include <string>
#include <vector>

#include "dcf/observables.hpp"

namespace dcf {

// One named self-check: `measured` is the worst deviation found (or the
// quantity under test), compared against `tolerance` in the sense recorded in
// `note` (usually measured <= tolerance; trend checks invert this and say so).
struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string note;
};

struct VerifyOptions {
    // Fault-injection hook: perturb one entry of the similarity matrix before
    // running the identity checks, to prove the checks can fail loudly.
    bool corrupt_m = false;
    double corrupt_eps = 1e-6;
};

// Spectrum and eigensystem
CheckResult check_spectrum_values();
CheckResult check_spectrum_collapse_ratio();
CheckResult check_m_identities(const VerifyOptions& opts = {});
CheckResult check_k_matrix();
CheckResult check_weber();
CheckResult check_hamiltonian_residual();
CheckResult check_eigen_normalization();
CheckResult check_eigen_orthonormality();
CheckResult check_eigen_current_total();
CheckResult check_parity();

// Ladder algebra
CheckResult check_q_commutator();
CheckResult check_theta_matrix_forms();
CheckResult check_tilde_reconstruction();
CheckResult check_commutator_scalars();
CheckResult check_theta_functional();

// Coherent states and observables
CheckResult check_coherent_eigenvalue();
CheckResult check_coherent_normalization();
CheckResult check_density_dual_route();
CheckResult check_hur_dual_route();
CheckResult check_hur_bound();
CheckResult check_sigma_ordering();
CheckResult check_energy_dual_route();
CheckResult check_velocity_eigen();
CheckResult check_velocity_coherent();
CheckResult check_completeness();
CheckResult check_collapse_amplitude();
CheckResult check_collapse_maxima();
CheckResult check_classical_orbit();
CheckResult check_grid_coverage();
CheckResult check_truncation_orders();

// Every check above, in a stable order; exceptions inside a check are turned
// into a failing result carrying the message.
std::vector<CheckResult> run_all_checks(const VerifyOptions& opts = {});

}  // namespace dcf
