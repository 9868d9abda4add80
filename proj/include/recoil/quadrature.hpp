#pragma once

#include <vector>

#include "recoil/vec3.hpp"

namespace recoil {

// One node of a spherical product rule. theta is the polar angle measured
// from the rule's polar axis, phi the azimuth; weight is in steradians.
struct SphereNode {
    double theta = 0.0;
    double phi = 0.0;
    double weight = 0.0;
};

// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
// recurrence. Deterministic for fixed n.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Product rule: `order` Gauss-Legendre nodes in cos(theta) times 2*order
// uniform (trapezoid) nodes in phi. Spectrally accurate for smooth sphere
// integrands that are trigonometric polynomials in phi. Weights sum to 4 pi.
// Throws ValidationError for order < 2.
std::vector<SphereNode> sphere_quadrature(int order);

// Right-handed orthonormal frame with e1 = axis. e2 is the unit projection of
// zhat orthogonal to e1 (xhat when axis is within 1e-9 of +-zhat).
struct Frame {
    Vec3 e1, e2, e3;
};
Frame frame_for_axis(const Vec3& axis);

// Direction at (theta, phi) in a frame: cos(theta) e1 + sin(theta)(cos(phi) e2 + sin(phi) e3).
Vec3 direction(const Frame& f, double theta, double phi);

} // namespace recoil
