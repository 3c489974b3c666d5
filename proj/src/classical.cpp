#include "dcf/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace dcf {

namespace {

void check(const ClassicalConfig& cfg, double t) {
    if (!(cfg.omega_B > 0)) throw std::invalid_argument("classical: omega_B must be positive");
    if (!std::isfinite(cfg.x0) || !std::isfinite(cfg.y0) || !std::isfinite(cfg.v0x) ||
        !std::isfinite(cfg.v0y) || !std::isfinite(cfg.v_d) || !std::isfinite(t))
        throw std::invalid_argument("classical: non-finite input");
}

}  // namespace

Point2 trajectory(const ClassicalConfig& cfg, double t) {
    check(cfg, t);
    const double c = std::cos(cfg.omega_B * t);
    const double s = std::sin(cfg.omega_B * t);
    const double vy = cfg.v0y + cfg.v_d;
    return {cfg.x0 + (vy * (c - 1.0) + cfg.v0x * s) / cfg.omega_B,
            cfg.y0 + (vy * s + cfg.v0x * (1.0 - c)) / cfg.omega_B - cfg.v_d * t};
}

Point2 guiding_center(const ClassicalConfig& cfg, double t) {
    check(cfg, t);
    return {cfg.x0 - (cfg.v0y + cfg.v_d) / cfg.omega_B,
            cfg.y0 - cfg.v_d * t + cfg.v0x / cfg.omega_B};
}

double orbit_radius_sq(const ClassicalConfig& cfg) {
    check(cfg, 0.0);
    const double vy = cfg.v0y + cfg.v_d;
    return (vy * vy + cfg.v0x * cfg.v0x) / (cfg.omega_B * cfg.omega_B);
}

double circle_residual(const ClassicalConfig& cfg, double t) {
    const Point2 p = trajectory(cfg, t);
    const double dx = p.x - cfg.x0 + (cfg.v0y + cfg.v_d) / cfg.omega_B;
    const double dy = p.y - cfg.y0 + cfg.v_d * t - cfg.v0x / cfg.omega_B;
    return dx * dx + dy * dy - orbit_radius_sq(cfg);
}

}  // namespace dcf
