#pragma once

#include <optional>
#include <vector>

#include "dcf/eigensystem.hpp"

namespace dcf {

// coeff * psi_level(zeta_center): the level index and the coordinate-center
// index move independently, which is what lets theta and the shift operators
// T± act as exact symbolic rules instead of grid manipulations.
struct LadderKet {
    int level;
    int center;
    cplx coeff;
};

// Linear combination of kets; canonicalize() merges duplicate (level, center)
// pairs and drops zero terms.
struct KetSum {
    std::vector<LadderKet> terms;

    KetSum() = default;
    explicit KetSum(LadderKet k) : terms{k} {}

    KetSum& add(const LadderKet& k);
    KetSum& add(const KetSum& other);
    KetSum scaled(cplx s) const;
    void canonicalize(double drop_below = 0.0);
};

// theta-: (l, m, c) -> (l-1, m, c sqrt(l)); level 0 is annihilated.
std::optional<LadderKet> theta_minus(const LadderKet& ket);
// theta+: (l, m, c) -> (l+1, m, c sqrt(l+1)).
LadderKet theta_plus(const LadderKet& ket);
// T-/T+: unitary center shift m -> m∓1; T- on center 0 is a contract violation.
LadderKet shift_minus(const LadderKet& ket);
LadderKet shift_plus(const LadderKet& ket);
// Q- = T- theta-, Q+ = theta+ T+; ladder on both indices at once.
std::optional<LadderKet> q_minus(const LadderKet& ket);
LadderKet q_plus(const LadderKet& ket);

// Lifts to sums.
KetSum theta_minus(const KetSum& s);
KetSum theta_plus(const KetSum& s);
KetSum shift_minus(const KetSum& s);
KetSum shift_plus(const KetSum& s);
KetSum q_minus(const KetSum& s);
KetSum q_plus(const KetSum& s);

// Quadrature s_q = (Q- + (-1)^q Q+) / (sqrt(2) i^q), q = 0 (position-like)
// or 1 (momentum-like).
KetSum s_q(const KetSum& s, int q);

// Coefficient contraction sum_{matching level} conj(bra) ket.  This is the
// metric of the operator framework (each psi_l is unit-normalized and levels
// are orthogonal); center indices only relabel the argument.
cplx contract_levels(const KetSum& bra, const KetSum& ket);

// Sampled value sum_i c_i psi_{l_i}(zeta_{m_i}(x)).
cplx render_ket_sum(const KetSum& s, double x, const FieldConfig& cfg);

// State in the Phi_n basis: component n carries coefficient coeffs[n]; delta
// is the operator phase of the Theta family.
struct SpinorExpansion {
    std::vector<cplx> coeffs;
    double delta = 0.0;
};

cplx inner(const SpinorExpansion& bra, const SpinorExpansion& ket);
double norm(const SpinorExpansion& state);

// Theta- on the basis: a_n |n> -> e^{i delta} sqrt(n)/sqrt(2^{delta_1n}) a_n |n-1>.
SpinorExpansion big_theta_minus(const SpinorExpansion& state);
// Theta+ = (Theta-)^dagger in the orthonormal Phi basis:
// a_n |n> -> e^{-i delta} sqrt(n+1)/sqrt(2^{delta_{1,n+1}}) a_n |n+1>.
SpinorExpansion big_theta_plus(const SpinorExpansion& state);
// Modified raising operator:
// a_n |n> -> sqrt(2^{2-delta_0n}) e^{-i delta} sqrt(n+1) a_n |n+1>.
SpinorExpansion tilde_theta_plus(const SpinorExpansion& state);

// Scalar c(n) with [Theta-, tilde Theta+] |n> = c(n) |n>; evaluates both
// compositions and throws std::logic_error if the result is not a scalar
// multiple of |n>.  Expected: c(0) = 1, c(1) = 3, c(n>=2) = 2.
int commutator_c(int n);

// Two-component symbolic spinor over kets; realizes the matrix form of the
// Theta operators entry by entry so the closed-form basis actions above can
// be verified against the matrix realization.
struct KetSpinor {
    KetSum up, down;
};

// Components of Phi_n: ((1-delta_0n) psi_{n-1}(zeta_n), i eta psi_n(zeta_n))
// with the 2^{-(1-delta_0n)/2} weight folded into the coefficients.
KetSpinor phi_components(int n, int eta);
KetSpinor expansion_components(const SpinorExpansion& state, int eta);

// Matrix Theta-: entries [[cos d f_A theta-, eta sin d f_B (theta-)^2],
//                         [-eta sin d sqrt(N+1), cos d theta-]]
// with f_A = sqrt(N+2)/sqrt(N+1), f_B = 1/sqrt(N+1) applied after the theta
// factors (N = theta+ theta- reads the level of the ket it meets), followed
// by a global T-.
KetSpinor theta_matrix_minus(const KetSpinor& s, double delta, int eta);

// Matrix tilde Theta+: global T+ first, then
// e^{-i delta} [[theta+ f_A, -i eta sqrt(N+1)], [i eta (theta+)^2 f_B, theta+]]
// with f_A, f_B applied before the theta factors.
KetSpinor theta_matrix_tilde_plus(const KetSpinor& s, double delta, int eta);

// sigma_y on a symbolic spinor: (u, l) -> (-i l, i u).
KetSpinor apply_sigma_y(const KetSpinor& s);

}  // namespace dcf
