#pragma once

#include <array>
#include <complex>

#include "recoil/vec3.hpp"

namespace recoil {

// Real 3x3 matrix, row-major.
struct Mat3 {
    std::array<double, 9> m{};

    double& operator()(int i, int j) { return m[static_cast<std::size_t>(3 * i + j)]; }
    double operator()(int i, int j) const { return m[static_cast<std::size_t>(3 * i + j)]; }

    static Mat3 identity() {
        Mat3 r;
        r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
        return r;
    }

    // outer product a b^T
    static Mat3 outer(Vec3 a, Vec3 b) {
        Mat3 r;
        const double av[3] = {a.x, a.y, a.z};
        const double bv[3] = {b.x, b.y, b.z};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = av[i] * bv[j];
        return r;
    }
};

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}

inline Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}

inline Mat3 operator*(double s, const Mat3& a) {
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i) r.m[i] = s * a.m[i];
    return r;
}

inline Mat3 mul(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline double trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

// u^T M v
inline double dot(Vec3 u, const Mat3& M, Vec3 v) {
    const Vec3 Mv = {M(0, 0) * v.x + M(0, 1) * v.y + M(0, 2) * v.z,
                     M(1, 0) * v.x + M(1, 1) * v.y + M(1, 2) * v.z,
                     M(2, 0) * v.x + M(2, 1) * v.y + M(2, 2) * v.z};
    return dot(u, Mv);
}

// Complex 3x3 matrix as a pair of real parts, row-major.
struct CMat3 {
    Mat3 re, im;

    std::complex<double> operator()(int i, int j) const { return {re(i, j), im(i, j)}; }
};

inline std::complex<double> dot(Vec3 u, const CMat3& M, Vec3 v) {
    return {dot(u, M.re, v), dot(u, M.im, v)};
}

} // namespace recoil
