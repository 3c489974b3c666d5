#pragma once

#include <utility>

namespace dcf {

// Classical electron (q = -e) in crossed fields: cyclotron frequency and
// drift speed enter directly, since the quantum side is massless and never
// shares a mass parameter with this module.
struct ClassicalConfig {
    double x0 = 0.0, y0 = 0.0;
    double v0x = 0.0, v0y = 0.0;
    double omega_B = 1.0;
    double v_d = 0.0;
};

struct Point2 {
    double x, y;
};

// Position at time t; reduces to (x0, y0) at t = 0.
Point2 trajectory(const ClassicalConfig& cfg, double t);

// Instantaneous circle center (h, k): h is constant, k drifts as -v_d t.
Point2 guiding_center(const ClassicalConfig& cfg, double t);

// Squared orbit radius R^2 = ((v0y + v_d)^2 + v0x^2) / omega_B^2.
double orbit_radius_sq(const ClassicalConfig& cfg);

// LHS - RHS of the circumference identity evaluated along the trajectory;
// vanishes identically for every config and time.
double circle_residual(const ClassicalConfig& cfg, double t);

}  // namespace dcf
