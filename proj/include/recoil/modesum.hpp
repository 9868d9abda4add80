#pragma once

#include <complex>
#include <cstdint>
#include <utility>

#include "recoil/exec.hpp"
#include "recoil/pair.hpp"

namespace recoil {

// Finite quantization box of volume V = L^3 with discrete plane-wave modes
// kvec = (2 pi / L)(n1, n2, n3), 0 < |kvec| <= k_cutoff, two transverse
// polarizations each. The atoms sit at R_A = +Rvec/2 and R_B = -Rvec/2.
// Modes are enumerated lazily (a stored list would not fit in memory for the
// doubled-box convergence runs); sums are sliced by n1 and reduced in slice
// order for bitwise reproducibility.
struct ModeGrid {
    double L = 0.0;        // box side [m]
    double k_cutoff = 0.0; // [1/m]

    int nmax() const;                 // floor(k_cutoff L / 2 pi)
    std::int64_t mode_count() const;  // lattice points in the cutoff ball, origin excluded
};

// Validates L > 0, k_cutoff > 0.
ModeGrid make_mode_grid(double L, double k_cutoff);

// Two transverse polarization unit vectors for a propagation direction:
// orthonormal to each other and to khat within 1e-12.
std::pair<Vec3, Vec3> polarization_basis(const Vec3& khat);

// Closed form of the one-photon emission time integral
//   TF1(w, T) = int_0^T dt e^{-i w (T - t)} e^{-i w_A t - Gamma_A t / 2}  [s].
// The numerator is e^{-i w_A T - Gamma_A T/2} - e^{-i w T}; the denominator
// is i(w - w_A) - Gamma_A/2, i.e. the literal value of the integral (the
// conjugate path flips the sign of Gamma_A/2; moduli agree).
std::complex<double> amp1_time_factor(double omega, double omega_A, double gamma_A, double T);

// Closed form of the nested two-step integral
//   TF3(w, T) = int_0^T dt int_0^t dt' e^{-i w (T - t)} e^{b (t - t')} e^{a t'}  [s^2],
// a = -i w_A - Gamma_A/2, b = -i w_B - Gamma_B/2 (A excited until t', B
// excited until the photon leaves at t).
std::complex<double> amp3_time_factor(double omega, const AtomPair& pair, double T);

// Adaptive-Simpson references for the two time factors (test oracles).
std::complex<double> amp1_time_factor_quad(double omega, double omega_A, double gamma_A,
                                           double T, double tol);
std::complex<double> amp3_time_factor_quad(double omega, const AtomPair& pair, double T,
                                           double tol);

// Dipole-dipole coupling energy (k_A^2 / eps0) mu_B . G(Rvec, w_A) . mu_A [J].
std::complex<double> pair_coupling(const AtomPair& pair);

// First-order emission amplitude into mode (kvec, pol) at time T:
//   sqrt(c k / (2 hbar V eps0)) (mu_A . pol) e^{-i kvec . R_A} TF1(ck, T).
std::complex<double> amp1_closed(const Vec3& kvec, const Vec3& pol, const AtomPair& pair,
                                 double T, double volume);

// Third-order rotating-wave amplitude with the internal mode sum replaced by
// its Green's-function closed form:
//   -i sqrt(c k / (2 hbar V eps0)) (mu_B . pol) e^{-i kvec . R_B}
//      (pair_coupling / hbar) TF3(ck, T).
std::complex<double> amp3_closed(const Vec3& kvec, const Vec3& pol, const AtomPair& pair,
                                 double T, double volume);

// Sum of |amp1|^2 over all grid modes and polarizations; converges to 1 as L
// grows at fixed cutoff. Rejects k_cutoff < 1.5 k_A (Lorentzian mass not
// captured) and 0 < Gamma_A T < 20 (not asymptotic); T = 0 is the allowed
// empty-integral edge case and returns 0.
double modesum_pa(const ModeGrid& grid, const AtomPair& pair, double T,
                  Exec exec = Exec::parallel);

struct FwdBwd {
    double forward = 0.0;  // sum of |amp1 + amp3|^2 over modes with khat.axis > 0
    double backward = 0.0; // same with khat.axis < 0 (the khat.axis = 0 plane is excluded)
};

// Directional split of the one-photon probability. Same preconditions as
// modesum_pa. sign(forward - backward) matches sign(axis . P_inf).
FwdBwd asymmetry_check(const ModeGrid& grid, const AtomPair& pair, double T,
                       Exec exec = Exec::parallel);

// Continuum (lattice-free) interference density at direction khat for
// asymptotic T [1/sr]: the closed-form reduction of the 2 Re[amp1* amp3]
// cross term,
//   (k_A^3 / (8 pi^3 hbar^2 eps0)) T_AB(khat)
//     Re[-i e^{i x khat.axis} pair_coupling * Omega_int],
// Omega_int = (2 pi / (a - b)) [1 / (i dw - Gamma_mean) + 1 / Gamma_A].
// Matches dpdomega at leading order in linewidth/detuning.
double interference_density(const AtomPair& pair, const Vec3& khat);

} // namespace recoil
