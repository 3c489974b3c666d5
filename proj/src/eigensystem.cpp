#include "dcf/eigensystem.hpp"

#include <cmath>
#include <stdexcept>

namespace dcf {

namespace {

int sign_of(int n, Band band) {
    if (n == 0) return 1;  // sgn(0) = 1 by convention
    return band == Band::conduction ? 1 : -1;
}

void check_level(int n) {
    if (n < 0) throw std::invalid_argument("eigensystem: level index must be nonnegative");
}

}  // namespace

double FieldConfig::l_B() const { return 1.0 / std::sqrt(B); }

void FieldConfig::validate() const {
    if (!(B > 0) || !std::isfinite(B)) throw std::invalid_argument("FieldConfig: B must be positive");
    if (!(beta >= 0 && beta < 1))
        throw std::invalid_argument("FieldConfig: beta must lie in [0, 1)");
    if (!std::isfinite(k)) throw std::invalid_argument("FieldConfig: non-finite k");
    if (eta != 1 && eta != -1) throw std::invalid_argument("FieldConfig: eta must be +1 or -1");
}

Mat2 Mat2::adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }

Mat2 Mat2::operator*(cplx s) const { return {a * s, b * s, c * s, d * s}; }

Spinor2 Mat2::operator*(const Spinor2& v) const {
    return {a * v.up + b * v.down, c * v.up + d * v.down};
}

double Mat2::max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
}

double energy(int n, const FieldConfig& cfg, Band band) {
    check_level(n);
    cfg.validate();
    const double collapse = std::pow(1.0 - cfg.beta * cfg.beta, 0.75);
    return sign_of(n, band) * collapse * std::sqrt(2.0 * n) / cfg.l_B() - cfg.k * cfg.beta;
}

double zeta(int n, double x, const FieldConfig& cfg, Band band) {
    check_level(n);
    cfg.validate();
    const double lb = cfg.l_B();
    const double q = std::pow(1.0 - cfg.beta * cfg.beta, 0.25);
    const double shift = sign_of(n, band) * cfg.beta * lb * std::sqrt(2.0 * n) / q;
    return q / lb * (x + lb * lb * cfg.k + shift);
}

double zeta_center(int n, const FieldConfig& cfg, Band band) {
    check_level(n);
    cfg.validate();
    const double lb = cfg.l_B();
    const double q = std::pow(1.0 - cfg.beta * cfg.beta, 0.25);
    return -lb * lb * cfg.k - sign_of(n, band) * cfg.beta * lb * std::sqrt(2.0 * n) / q;
}

double psi_level_at_center(int level, int center, double x, const FieldConfig& cfg) {
    check_level(level);
    check_level(center);
    // (1-b^2)^(1/8) (omega_B/2pi)^(1/4) D_l(sqrt2 z)/sqrt(l!) = (1-b^2)^(1/8) h_l(z)/sqrt(l_B)
    const double pref = std::pow(1.0 - cfg.beta * cfg.beta, 0.125) / std::sqrt(cfg.l_B());
    return pref * hermite_function(level, zeta(center, x, cfg));
}

double psi_scalar(int n, double x, const FieldConfig& cfg) {
    return psi_level_at_center(n, n, x, cfg);
}

Mat2 matrix_m(double beta) {
    if (!(beta >= 0 && beta < 1)) throw std::invalid_argument("matrix_m: beta must lie in [0, 1)");
    const double root = std::sqrt(1.0 - beta * beta);
    const double cp = std::sqrt(1.0 + root), cm = std::sqrt(1.0 - root);
    const double s = std::sqrt(0.5);
    return {s * cp, cplx(0, s * cm), cplx(0, -s * cm), s * cp};
}

Spinor2 phi_n(int n, double x, const FieldConfig& cfg) {
    check_level(n);
    cfg.validate();
    if (n == 0) return {0.0, cplx(0, cfg.eta) * psi_scalar(0, x, cfg)};
    const double w = std::sqrt(0.5);
    return {w * psi_level_at_center(n - 1, n, x, cfg),
            cplx(0, cfg.eta * w) * psi_scalar(n, x, cfg)};
}

Spinor2 psi_spinor(int n, double x, const FieldConfig& cfg) {
    return matrix_m(cfg.beta) * phi_n(n, x, cfg);
}

double mean_velocity_eigen(const FieldConfig& cfg) {
    cfg.validate();
    return -cfg.beta;
}

KMatrixEigensystem k_matrix_eigensystem(double beta) {
    if (!(beta >= 0 && beta < 1))
        throw std::invalid_argument("k_matrix_eigensystem: beta must lie in [0, 1)");
    const double root = std::sqrt(1.0 - beta * beta);
    const double cp = std::sqrt(1.0 + root), cm = std::sqrt(1.0 - root);
    const double s = std::sqrt(0.5);
    KMatrixEigensystem out;
    out.K = {-1.0, cplx(0, beta), cplx(0, beta), 1.0};
    out.lambda1 = -root;
    out.lambda2 = root;
    out.chi1 = {s * cp, cplx(0, -s * cm)};
    out.chi2 = {-s * cm, cplx(0, s * cp)};
    return out;
}

double weber_residual(int n, double zeta_value, const FieldConfig& cfg, int lambda_index) {
    check_level(n);
    cfg.validate();
    if (lambda_index != 1 && lambda_index != 2)
        throw std::invalid_argument("weber_residual: lambda_index must be 1 or 2");
    const int level = lambda_index == 2 ? n : n - 1;
    if (level < 0)
        throw std::invalid_argument("weber_residual: lambda_1 branch needs n >= 1");

    const double root = std::sqrt(1.0 - cfg.beta * cfg.beta);
    const double eps0 = energy(n, cfg) + cfg.k * cfg.beta;  // = sqrt(2n)(1-b^2)^(3/4)/l_B
    const double lambda = (lambda_index == 1 ? -1.0 : 1.0) * root;
    const double bracket =
        eps0 * eps0 * cfg.l_B() * cfg.l_B() / (root * root * root) + lambda / root;

    const double h = 1e-3;
    auto f = [&](double z) { return hermite_function(level, z); };
    const double d2 = (-f(zeta_value - 2 * h) + 16 * f(zeta_value - h) - 30 * f(zeta_value) +
                       16 * f(zeta_value + h) - f(zeta_value + 2 * h)) /
                      (12 * h * h);
    return std::abs(d2 + (bracket - zeta_value * zeta_value) * f(zeta_value));
}

std::vector<double> default_grid(const FieldConfig& cfg, int n_max_occupied, int points) {
    check_level(n_max_occupied);
    cfg.validate();
    const double xc = zeta_center(n_max_occupied, cfg);
    const double half = 12.0 * cfg.l_B() / std::pow(1.0 - cfg.beta * cfg.beta, 0.25);
    return linear_grid(xc - half, xc + half, points);
}

}  // namespace dcf
