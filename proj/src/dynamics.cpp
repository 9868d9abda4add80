#include "recoil/dynamics.hpp"

#include <cmath>
#include <cstddef>

#include "recoil/constants.hpp"
#include "recoil/errors.hpp"
#include "recoil/greens.hpp"

namespace recoil {

namespace cn = constants;

namespace {

// (w_A^2 - w_B^2) evaluated as detuning * (w_A + w_B): the squares of two
// nearly equal frequencies would cancel ~5 digits for alkali pairs.
double freq_sq_diff(const AtomPair& pair) {
    return pair.detuning * (pair.excited.omega + pair.ground.omega);
}

Vec3 imim_gradient(const AtomPair& pair) {
    const double kA = pair.excited.k();
    if (pair.orientation == Orientation::isotropic)
        return grad_imim_isotropic(kA, pair.Rvec, pair.excited.mu_mag(), pair.ground.mu_mag());
    return grad_imim_contraction(kA, pair.Rvec, pair.excited.mu, pair.ground.mu);
}

ForceResult assemble(const AtomPair& pair, double kernel, double envelope) {
    const double kA = pair.excited.k();
    ForceResult r;
    r.F0 = (kernel / (kA * kA * kA) * envelope) * imim_gradient(pair);
    r.decay_rate = pair.excited.gamma;
    r.P_inf = (-1.0 / r.decay_rate) * r.F0;
    r.D = dot(pair.axis, r.P_inf) * cn::c0 / cn::planck_h;
    r.x = pair.x();
    return r;
}

} // namespace

double force_kernel(const AtomPair& pair) {
    const double kA = pair.excited.k();
    const double k7 = std::pow(kA, 7);
    return 4.0 * pair.ground.omega * k7 / (cn::eps0 * cn::eps0 * cn::hbar * freq_sq_diff(pair));
}

double force_kernel_rw(const AtomPair& pair) {
    const double kA = pair.excited.k();
    const double k7 = std::pow(kA, 7);
    return 4.0 * pair.ground.omega * k7 /
           (cn::eps0 * cn::eps0 * cn::hbar * 2.0 * pair.excited.omega * pair.detuning);
}

ForceResult resonant_force(const AtomPair& pair, double T) {
    if (!(T >= 0.0)) throw ValidationError("resonant_force: emission time must be >= 0");
    return assemble(pair, force_kernel(pair), std::exp(-pair.excited.gamma * T));
}

Vec3 p_inf_rotating_wave(const AtomPair& pair) {
    return assemble(pair, force_kernel_rw(pair), 1.0).P_inf;
}

double directionality(const AtomPair& pair) { return resonant_force(pair, 0.0).D; }

std::vector<ForceResult> scan_separation(const AtomPair& tmpl, double x_min, double x_max,
                                         int samples, Exec exec) {
    if (!(x_min > 0.0) || !(x_max > x_min))
        throw ValidationError("scan_separation: require 0 < x_min < x_max");
    if (samples < 2) throw ValidationError("scan_separation: require samples >= 2");

    const double h = (x_max - x_min) / static_cast<double>(samples - 1);
    std::vector<ForceResult> out(static_cast<std::size_t>(samples));
    // identical per-point arithmetic in both policies; results fill
    // independent slots, so the schedule cannot reorder anything observable
    const auto point = [&](int i) {
        const double xi = (i == samples - 1) ? x_max : x_min + h * static_cast<double>(i);
        out[static_cast<std::size_t>(i)] = resonant_force(with_x(tmpl, xi), 0.0);
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < samples; ++i) point(i);
    } else {
        for (int i = 0; i < samples; ++i) point(i);
    }
    return out;
}

} // namespace recoil
