#pragma once

#include <complex>
#include <vector>

#include "dcf/numerics.hpp"

namespace dcf {

using cplx = std::complex<double>;

// Natural units throughout: hbar = v_F = c = e = 1, so l_B^2 = 1/B and
// omega_B = 2B (the figure-caption combination B = 1/2, omega_B = 1).
struct FieldConfig {
    double B = 0.5;
    double beta = 0.0;  // drift ratio v_d / v_F, valid on [0, 1)
    double k = 0.0;     // wave number along y
    int eta = +1;       // valley sign: +1 for K, -1 for K'

    double l_B() const;
    double omega_B() const { return 2.0 * B; }
    double v_d() const { return beta; }
    void validate() const;  // throws std::invalid_argument on violation
};

// Positive energies are conduction-band states; the valence branch flips the
// sign of the sqrt(2n) term for n >= 1 (sgn(0) = 1 in both bands).
enum class Band { conduction, valence };

struct Spinor2 {
    cplx up{0.0, 0.0}, down{0.0, 0.0};
};

// Row-major 2x2 complex matrix [[a, b], [c, d]].
struct Mat2 {
    cplx a, b, c, d;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 sigma_x() { return {0.0, 1.0, 1.0, 0.0}; }
    static Mat2 sigma_y() { return {0.0, cplx(0, -1), cplx(0, 1), 0.0}; }
    static Mat2 sigma_z() { return {1.0, 0.0, 0.0, -1.0}; }

    Mat2 adjoint() const;
    Mat2 operator*(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator*(cplx s) const;
    Spinor2 operator*(const Spinor2& v) const;
    double max_abs() const;  // entrywise sup norm
};

// E_n = sgn(n) (1 - beta^2)^(3/4) sqrt(2n) / l_B - k beta, with sgn(0) = 1.
double energy(int n, const FieldConfig& cfg, Band band = Band::conduction);

// Shifted dimensionless coordinate
// zeta_n(x) = (1-beta^2)^(1/4)/l_B [x + l_B^2 k + sgn(n) beta l_B sqrt(2n)/(1-beta^2)^(1/4)].
double zeta(int n, double x, const FieldConfig& cfg, Band band = Band::conduction);

// x at which zeta_n vanishes (the center the grid window tracks).
double zeta_center(int n, const FieldConfig& cfg, Band band = Band::conduction);

// Scalar eigenfunction psi_n(zeta_n):
//   (1-beta^2)^(1/8)/sqrt(n!) (omega_B/2pi)^(1/4) D_n(sqrt(2) zeta_n)
// which reduces to (1-beta^2)^(1/8) h_n(zeta_n) / sqrt(l_B); unit-normalized
// in x, the (1-beta^2)^(1/8) compensating the coordinate compression.
double psi_scalar(int n, double x, const FieldConfig& cfg);

// psi at level l evaluated around center index m, i.e. h_l(zeta_m(x)) with
// the same prefactor; the two-index object the ladder algebra renders to.
double psi_level_at_center(int level, int center, double x, const FieldConfig& cfg);

// M = sqrt(1/2) (sqrt(C+) I - sqrt(C-) sigma_y), C± = 1 ± sqrt(1-beta^2).
// Hermitian, non-unitary for beta > 0, det M = sqrt(1-beta^2).
Mat2 matrix_m(double beta);

// Auxiliary spinor Phi_n = 2^{-(1-delta_0n)/2} ((1-delta_0n) psi_{n-1}(zeta_n),
//                                               i eta psi_n(zeta_n)).
Spinor2 phi_n(int n, double x, const FieldConfig& cfg);

// Physical eigenspinor Psi_n = M Phi_n.
Spinor2 psi_spinor(int n, double x, const FieldConfig& cfg);

// dE_n/dk = -beta for every level (natural units: -v_F beta).
double mean_velocity_eigen(const FieldConfig& cfg);

// Eigensystem of K = i(beta sigma_x + sigma_x sigma_y) = [[-1, i beta], [i beta, 1]]:
// lambda_k = (-1)^k sqrt(1-beta^2) with normalized eigenvectors chi_k.
struct KMatrixEigensystem {
    Mat2 K;
    double lambda1, lambda2;
    Spinor2 chi1, chi2;
};
KMatrixEigensystem k_matrix_eigensystem(double beta);

// Residual of the Weber equation
//   [d^2/dzeta^2 - zeta^2 + eps0^2 l_B^2/(1-beta^2)^(3/2) + lambda/(1-beta^2)^(1/2)] psi = 0
// at the given zeta, with eps0 = E_n + k beta built from level n and
// lambda = lambda_2 (+sqrt(1-beta^2)), which pairs with the level-n scalar
// function; lambda_index = 1 selects the lambda_1 branch, which pairs with
// the level-(n-1) function at the same eps0.  The second derivative is a
// five-point finite difference, so the check is independent of the
// recurrence identities used to evaluate psi.
double weber_residual(int n, double zeta_value, const FieldConfig& cfg, int lambda_index = 2);

// Default sampling window: 12 Gaussian widths either side of the center of
// zeta_{n_max}, the width scaled by (1-beta^2)^(-1/4) to track the
// coordinate compression near collapse.
std::vector<double> default_grid(const FieldConfig& cfg, int n_max_occupied, int points = 4001);

}  // namespace dcf
