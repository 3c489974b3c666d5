// Acceptance gate: twelve pass/fail criteria covering the spectrum, the
// similarity transform, normalization, the ladder algebra, coherent-state
// construction, the closed-form series against their independent routes, the
// uncertainty relation, transport, completeness, symmetry, magnetic collapse,
// and the classical orbit geometry.  Each criterion prints exactly one line
// and carries a wall-clock budget; the binary exits nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dcf/verify.hpp"

namespace {

using dcf::CheckResult;

struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<std::vector<CheckResult>()> run;
};

std::vector<CheckResult> list(std::initializer_list<CheckResult> rs) { return rs; }

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;

    const std::vector<Criterion> criteria = {
        {"spectrum values and collapse ratio", 1.0,
         [] { return list({dcf::check_spectrum_values(), dcf::check_spectrum_collapse_ratio()}); }},
        {"similarity-matrix identities", 1.0, [] { return list({dcf::check_m_identities()}); }},
        {"state normalization (eigen + coherent)", 30.0,
         [] { return list({dcf::check_eigen_normalization(), dcf::check_coherent_normalization()}); }},
        {"ladder algebra and matrix forms", 1.0,
         [] {
             return list({dcf::check_q_commutator(), dcf::check_theta_matrix_forms(),
                          dcf::check_tilde_reconstruction(), dcf::check_commutator_scalars()});
         }},
        {"coherent annihilation eigenvalue", 5.0,
         [] { return list({dcf::check_coherent_eigenvalue()}); }},
        {"closed-form series vs independent routes", 60.0,
         [] {
             return list({dcf::check_density_dual_route(), dcf::check_hur_dual_route(),
                          dcf::check_energy_dual_route()});
         }},
        {"uncertainty bound and quadrature order", 60.0,
         [] { return list({dcf::check_hur_bound(), dcf::check_sigma_ordering()}); }},
        {"mean velocities (eigen + coherent)", 5.0,
         [] { return list({dcf::check_velocity_eigen(), dcf::check_velocity_coherent()}); }},
        {"coherent-family completeness", 30.0, [] { return list({dcf::check_completeness()}); }},
        {"density parity at zero drift", 5.0, [] { return list({dcf::check_parity()}); }},
        {"magnetic collapse of the densities", 30.0,
         [] { return list({dcf::check_collapse_amplitude(), dcf::check_collapse_maxima()}); }},
        {"classical orbit geometry", 1.0, [] { return list({dcf::check_classical_orbit()}); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        const auto t0 = clock::now();
        std::vector<CheckResult> results;
        std::string error;
        try {
            results = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed =
            std::chrono::duration_cast<std::chrono::duration<double>>(clock::now() - t0).count();

        bool pass = error.empty();
        double worst_measured = 0.0, worst_tolerance = 0.0;
        double worst_margin = -1.0;
        for (const CheckResult& r : results) {
            pass = pass && r.pass;
            // Track the sub-check closest to (or past) its tolerance.
            const double margin = r.tolerance > 0.0 ? r.measured / r.tolerance
                                                    : (r.pass ? 0.0 : 1e300);
            if (margin > worst_margin) {
                worst_margin = margin;
                worst_measured = r.measured;
                worst_tolerance = r.tolerance;
            }
        }
        const bool in_budget = elapsed <= c.budget_seconds;
        pass = pass && in_budget;

        std::printf("criterion %02zu  %-42s %s  (%.2fs/%.0fs budget; worst %.3e vs %.3e)\n",
                    i + 1, c.name, pass ? "PASS" : "FAIL", elapsed, c.budget_seconds,
                    worst_measured, worst_tolerance);
        if (!error.empty()) std::printf("              error: %s\n", error.c_str());
        if (!in_budget) std::printf("              over budget\n");
        for (const CheckResult& r : results)
            if (!r.pass)
                std::printf("              failed: %s measured=%.3e tolerance=%.3e %s\n",
                            r.name.c_str(), r.measured, r.tolerance, r.note.c_str());
        if (!pass) ++failures;
    }

    if (failures) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
