#include "recoil/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include "recoil/constants.hpp"
#include "recoil/errors.hpp"

namespace recoil {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw ValidationError("gauss_legendre: order must be >= 1");
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess for the i-th positive root
        double x = std::cos(constants::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence: (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}
            double p0 = 1.0;
            double p1 = x;
            for (int j = 1; j < n; ++j) {
                const double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

std::vector<SphereNode> sphere_quadrature(int order) {
    if (order < 2) throw ValidationError("sphere_quadrature: order must be >= 2");
    std::vector<double> u, w;
    gauss_legendre(order, u, w);
    const int m = 2 * order;
    const double dphi = 2.0 * constants::pi / static_cast<double>(m);
    std::vector<SphereNode> nodes;
    nodes.reserve(static_cast<std::size_t>(order) * static_cast<std::size_t>(m));
    for (int i = 0; i < order; ++i) {
        const double theta = std::acos(u[static_cast<std::size_t>(i)]);
        const double wt = w[static_cast<std::size_t>(i)] * dphi;
        for (int j = 0; j < m; ++j)
            nodes.push_back({theta, dphi * static_cast<double>(j), wt});
    }
    return nodes;
}

Frame frame_for_axis(const Vec3& axis) {
    require_unit(axis, "frame axis");
    Frame f;
    f.e1 = axis;
    const Vec3 zhat = {0.0, 0.0, 1.0};
    if (std::abs(dot(axis, zhat)) > 1.0 - 1e-9) {
        f.e2 = {1.0, 0.0, 0.0};
    } else {
        f.e2 = normalized(zhat - dot(zhat, axis) * axis);
    }
    f.e3 = cross(f.e1, f.e2);
    return f;
}

Vec3 direction(const Frame& f, double theta, double phi) {
    const double st = std::sin(theta);
    return std::cos(theta) * f.e1 + st * std::cos(phi) * f.e2 + st * std::sin(phi) * f.e3;
}

} // namespace recoil
