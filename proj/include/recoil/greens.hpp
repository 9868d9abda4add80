#pragma once

#include <complex>
#include <utility>

#include "recoil/mat3.hpp"
#include "recoil/vec3.hpp"

namespace recoil {

// Free-space dyadic Green's function of the electric field,
//
//   G(R, w) = -(k e^{ikR} / 4 pi) [ alpha/(kR) + i beta/(kR)^2 - beta/(kR)^3 ],
//
// with k = w/c, alpha = I - rr^T (transverse projector), beta = I - 3 rr^T,
// r = R/|R|. Internals work in x = kR and the dimensionless tensor
// Gt = (4 pi / k) G = alpha_coeff(x) alpha + beta_coeff(x) beta; SI factors
// are applied at the boundaries. Im G(x -> 0) = -(k / 6 pi) I under this sign
// convention.

// Dimensionless radial coefficients.
std::complex<double> alpha_coeff(double x); // -e^{ix} / x
std::complex<double> beta_coeff(double x);  // -e^{ix} (i/x^2 - 1/x^3)

// Real and imaginary parts of the coefficients and the derivatives of the
// imaginary parts. Near x = 0 the imaginary parts suffer catastrophic
// cancellation; series evaluation keeps them accurate to machine precision.
double im_alpha(double x);       // -sin x / x
double im_beta(double x);        // sin x / x^3 - cos x / x^2
double re_alpha(double x);       // -cos x / x
double re_beta(double x);        // cos x / x^3 + sin x / x^2
double im_alpha_prime(double x); // = x * im_beta(x), exact identity
double im_beta_prime(double x);  // = -(3 im_beta(x) + im_alpha(x)) / x

// Projectors for a unit axis: alpha = I - rr^T (trace 2), beta = I - 3 rr^T
// (trace 0). Throws ValidationError for a non-unit axis.
std::pair<Mat3, Mat3> projectors(const Vec3& axis);

// G(Rvec, w = ck) in SI units [1/m]. Throws ValidationError for k <= 0 and
// for |Rvec| below the singularity threshold 1e-12 / k (use
// imgreen_origin_limit for the r -> 0 limit of the imaginary part).
CMat3 dyadic_green(double k, const Vec3& Rvec);

// lim_{r->0} Im G(r, w = ck) = -(k / 6 pi) I, units [1/m].
Mat3 imgreen_origin_limit(double k);

// Dimensionless contraction muhatA . Gt . muhatB for unit dipole directions:
//   s(x) = alpha_coeff(x) (c - a b) + beta_coeff(x) (c - 3 a b),
// with a = muhatA.rhat, b = muhatB.rhat, c = muhatA.muhatB.
std::complex<double> contracted_coeff(double x, double a, double b, double c);

// Gradient with respect to Rvec of [mu_A . Im G(R, ck) . mu_B]^2, SI units
// [1/m^3 x (C m)^4]. Analytic closed form; central finite differences are
// kept in the tests as the oracle. Has angular components for skew dipole
// orientations; purely radial when both dipoles are perpendicular or parallel
// to the axis.
Vec3 grad_imim_contraction(double k, const Vec3& Rvec, const Vec3& muA, const Vec3& muB);

// Trace contractions of the dimensionless tensor, used by the isotropic
// orientation mode (mu^i mu^j -> |mu|^2 delta_ij / 3 for both atoms).
double trace_imim(double x);       // Tr[(Im Gt)^2] = 2 A^2 + 4 A B + 6 B^2
double trace_imre(double x);       // Tr[Im Gt Re Gt]
double trace_gg_conj(double x);    // Tr[Gt Gt*] (real)
double trace_imim_prime(double x); // d/dx Tr[(Im Gt)^2]

// Isotropic counterpart of grad_imim_contraction: gradient of the
// orientation-averaged [Im G]^2 contraction, parallel to rhat. muA_mag and
// muB_mag are the dipole magnitudes [C m].
Vec3 grad_imim_isotropic(double k, const Vec3& Rvec, double muA_mag, double muB_mag);

} // namespace recoil
