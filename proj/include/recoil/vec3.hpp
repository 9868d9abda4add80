#pragma once

#include <cmath>
#include <string>

#include "recoil/errors.hpp"

namespace recoil {

// Cartesian 3-vector. Units depend on use: position [m], dipole [C m],
// direction [1].
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
constexpr Vec3 operator*(Vec3 a, double s) { return s * a; }
constexpr Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

// Normalizes a; throws on (near-)zero input.
inline Vec3 normalized(Vec3 a) {
    const double n = norm(a);
    if (!(n > 0.0) || !std::isfinite(n))
        throw ValidationError("cannot normalize zero or non-finite vector");
    return a / n;
}

// Direction vectors used as axes must be unit to 1e-12.
inline void require_unit(Vec3 a, const std::string& what) {
    if (std::abs(norm(a) - 1.0) > 1e-12)
        throw ValidationError(what + " must be a unit vector (|v| - 1 exceeds 1e-12)");
}

} // namespace recoil
