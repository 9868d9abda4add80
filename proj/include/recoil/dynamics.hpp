#pragma once

#include <vector>

#include "recoil/exec.hpp"
#include "recoil/pair.hpp"

namespace recoil {

// Total force on the pair and the derived vacuum-momentum observables.
struct ForceResult {
    Vec3 F0;                 // total force at the requested emission time [N];
                             // equals the initial force at the default T = 0
    double decay_rate = 0.0; // Gamma_A [rad/s]
    Vec3 P_inf;              // -F0 / Gamma_A, asymptotic field momentum [kg m/s]
    double D = 0.0;          // (axis . P_inf) c / h [Hz]
    double x = 0.0;          // dimensionless k_A R
};

// Scalar force kernel 4 w_B k_A^7 / (eps0^2 hbar (w_A^2 - w_B^2)).
double force_kernel(const AtomPair& pair);

// Rotating-wave-reduced kernel: (w_A^2 - w_B^2) replaced by 2 w_A dw.
double force_kernel_rw(const AtomPair& pair);

// Total force at emission time T >= 0: F(T) = F(0) e^{-Gamma_A T}, with
// F(0) = kernel * grad[ (mu_A . Im G . mu_B)^2 ] / k_A^3.
ForceResult resonant_force(const AtomPair& pair, double T = 0.0);

// Asymptotic field momentum computed with the rotating-wave-reduced kernel.
Vec3 p_inf_rotating_wave(const AtomPair& pair);

// Axis-projected average photon momentum in frequency units:
// D = (axis . P_inf) c / h [Hz].
double directionality(const AtomPair& pair);

// Uniform grid in x = k_A R, endpoints included; one ForceResult per point at
// T = 0, ordered by grid index regardless of execution policy.
std::vector<ForceResult> scan_separation(const AtomPair& tmpl, double x_min, double x_max,
                                         int samples, Exec exec = Exec::parallel);

} // namespace recoil
