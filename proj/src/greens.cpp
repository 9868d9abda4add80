#include "recoil/greens.hpp"

#include <cmath>

#include "recoil/constants.hpp"
#include "recoil/errors.hpp"

namespace recoil {

namespace {

// Below this x the direct forms of im_beta and its derivative lose digits to
// cancellation (sin x/x^3 and cos x/x^2 agree to O(x^-1)); the alternating
// series are exact to machine precision there.
constexpr double series_threshold = 0.1;

// x = kR below 1e-12 is treated as the coincidence-limit singularity.
constexpr double singular_x = 1e-12;

double im_beta_series(double x) {
    const double u = x * x;
    // sin x / x^3 - cos x / x^2 = 1/3 - x^2/30 + x^4/840 - x^6/45360 + ...
    return 1.0 / 3.0 +
           u * (-1.0 / 30.0 + u * (1.0 / 840.0 + u * (-1.0 / 45360.0 + u / 3991680.0)));
}

double im_beta_prime_series(double x) {
    const double u = x * x;
    // d/dx of the series above
    return x * (-1.0 / 15.0 + u * (1.0 / 210.0 + u * (-1.0 / 7560.0 + u / 498960.0)));
}

} // namespace

double im_alpha(double x) { return -std::sin(x) / x; }

double im_beta(double x) {
    if (std::abs(x) < series_threshold) return im_beta_series(x);
    return std::sin(x) / (x * x * x) - std::cos(x) / (x * x);
}

double re_alpha(double x) { return -std::cos(x) / x; }

double re_beta(double x) { return std::cos(x) / (x * x * x) + std::sin(x) / (x * x); }

double im_alpha_prime(double x) { return x * im_beta(x); }

double im_beta_prime(double x) {
    if (std::abs(x) < series_threshold) return im_beta_prime_series(x);
    return -(3.0 * im_beta(x) + im_alpha(x)) / x;
}

std::complex<double> alpha_coeff(double x) { return {re_alpha(x), im_alpha(x)}; }

std::complex<double> beta_coeff(double x) { return {re_beta(x), im_beta(x)}; }

std::pair<Mat3, Mat3> projectors(const Vec3& axis) {
    require_unit(axis, "projector axis");
    const Mat3 rr = Mat3::outer(axis, axis);
    const Mat3 id = Mat3::identity();
    return {id - rr, id - 3.0 * rr};
}

CMat3 dyadic_green(double k, const Vec3& Rvec) {
    if (!(k > 0.0)) throw ValidationError("dyadic_green: wavenumber must be positive");
    const double R = norm(Rvec);
    const double x = k * R;
    if (!(x >= singular_x))
        throw ValidationError("dyadic_green: separation is at the coincidence singularity "
                              "(k|R| < 1e-12); use imgreen_origin_limit for the r -> 0 limit");
    const auto [al, be] = projectors(Rvec / R);
    const double pref = k / (4.0 * constants::pi);
    CMat3 G;
    G.re = pref * (re_alpha(x) * al + re_beta(x) * be);
    G.im = pref * (im_alpha(x) * al + im_beta(x) * be);
    return G;
}

Mat3 imgreen_origin_limit(double k) {
    if (!(k > 0.0)) throw ValidationError("imgreen_origin_limit: wavenumber must be positive");
    return (-k / (6.0 * constants::pi)) * Mat3::identity();
}

std::complex<double> contracted_coeff(double x, double a, double b, double c) {
    return alpha_coeff(x) * (c - a * b) + beta_coeff(x) * (c - 3.0 * a * b);
}

Vec3 grad_imim_contraction(double k, const Vec3& Rvec, const Vec3& muA, const Vec3& muB) {
    if (!(k > 0.0)) throw ValidationError("grad_imim_contraction: wavenumber must be positive");
    const double R = norm(Rvec);
    const double x = k * R;
    if (!(x >= singular_x))
        throw ValidationError("grad_imim_contraction: separation is at the coincidence "
                              "singularity (k|R| < 1e-12)");
    const double mA = norm(muA);
    const double mB = norm(muB);
    if (mA == 0.0 || mB == 0.0) return {};

    const Vec3 rhat = Rvec / R;
    const Vec3 ma = muA / mA;
    const Vec3 mb = muB / mB;
    const double a = dot(ma, rhat);
    const double b = dot(mb, rhat);
    const double c = dot(ma, mb);

    // s = muhatA . Im Gt . muhatB in the dimensionless tensor; the SI
    // contraction is S = (k mA mB / 4 pi) s and the target is grad [S^2].
    const double A = im_alpha(x);
    const double B = im_beta(x);
    const double s = A * (c - a * b) + B * (c - 3.0 * a * b);
    const double s_x = im_alpha_prime(x) * (c - a * b) + im_beta_prime(x) * (c - 3.0 * a * b);
    const double s_a = -(A + 3.0 * B) * b;
    const double s_b = -(A + 3.0 * B) * a;

    // chain rule: grad x = k rhat; grad a = (ma - a rhat)/R, grad b likewise
    const Vec3 grad_s =
        s_x * k * rhat + (s_a * (ma - a * rhat) + s_b * (mb - b * rhat)) / R;

    const double pref = k * mA * mB / (4.0 * constants::pi);
    return (pref * pref * 2.0 * s) * grad_s;
}

double trace_imim(double x) {
    const double A = im_alpha(x);
    const double B = im_beta(x);
    return 2.0 * A * A + 4.0 * A * B + 6.0 * B * B;
}

double trace_imre(double x) {
    const double A = im_alpha(x);
    const double B = im_beta(x);
    const double Ar = re_alpha(x);
    const double Br = re_beta(x);
    return 2.0 * A * Ar + 2.0 * (A * Br + Ar * B) + 6.0 * B * Br;
}

double trace_gg_conj(double x) {
    const double A = im_alpha(x);
    const double B = im_beta(x);
    const double Ar = re_alpha(x);
    const double Br = re_beta(x);
    return 2.0 * (Ar * Ar + A * A) + 4.0 * (Ar * Br + A * B) + 6.0 * (Br * Br + B * B);
}

double trace_imim_prime(double x) {
    const double A = im_alpha(x);
    const double B = im_beta(x);
    const double Ap = im_alpha_prime(x);
    const double Bp = im_beta_prime(x);
    return 4.0 * A * Ap + 4.0 * (Ap * B + A * Bp) + 12.0 * B * Bp;
}

Vec3 grad_imim_isotropic(double k, const Vec3& Rvec, double muA_mag, double muB_mag) {
    if (!(k > 0.0)) throw ValidationError("grad_imim_isotropic: wavenumber must be positive");
    const double R = norm(Rvec);
    const double x = k * R;
    if (!(x >= singular_x))
        throw ValidationError("grad_imim_isotropic: separation is at the coincidence "
                              "singularity (k|R| < 1e-12)");
    // orientation average of [mu_A . Im G . mu_B]^2:
    //   (mA mB / 3)^2 (k / 4 pi)^2 Tr[(Im Gt)^2]; purely radial gradient
    const double pref = muA_mag * muB_mag / 3.0 * k / (4.0 * constants::pi);
    return (pref * pref * trace_imim_prime(x) * k) * (Rvec / R);
}

} // namespace recoil
