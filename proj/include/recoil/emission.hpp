#pragma once

#include <vector>

#include "recoil/exec.hpp"
#include "recoil/pair.hpp"
#include "recoil/quadrature.hpp"

namespace recoil {

// One-photon emission channel probabilities (dimensionless) and the
// probability-conservation residual. The interference channels p_de and p_fg
// are exact negatives; the scattering channels p_b, p_c are suppressed by
// (linewidth / detuning)^2 relative to 1.
struct ProbabilityBudget {
    double p_a = 0.0;   // free-space emission; = 1 for linewidth-consistent species
    double p_b = 0.0;   // photon scattered off the ground atom
    double p_c = 0.0;   // photon rescattered off the excited atom
    double p_de = 0.0;  // interference channel, + sign
    double p_fg = 0.0;  // interference channel, - sign
    double residual_theorem = 0.0; // p_de + p_fg
    double order_check = 0.0;      // max(p_b, p_c) / |p_fg|
};

// -2 k_A^2 / (eps0 hbar Gamma_A) * mu_A . Im G(r -> 0) . mu_A; equals 1 for
// species whose dipole satisfies the linewidth identity.
double p_free_space(const AtomSpecies& A);

//  4 k_A^4 / (eps0^2 hbar^2 Gamma_A dw) * [mu_A . Im G . mu_B][mu_B . Re G . mu_A],
// G at (R, w_A).
double p_interference_de(const AtomPair& pair);

// Exact negative of p_interference_de; also equals the full-sphere integral
// of dpdomega.
double p_interference_fg(const AtomPair& pair);

// [ (|mu_B|^2/|mu_A|^2) k_A^4 |mu_A.G(R,w_A).mu_B|^2 + k_B^4 |mu_A.G(R,w_B).mu_B|^2 ]
// / (eps0^2 hbar^2 dw^2); strictly positive.
double p_scatter_b(const AtomPair& pair);

// 2 [ k_A^4 |mu_A.G(R,w_A).mu_B|^2 / (eps0^2 hbar^2 Gamma_A dw) ]^2; strictly
// positive.
double p_rescatter_c(const AtomPair& pair);

// All channels plus residual_theorem and order_check.
ProbabilityBudget budget(const AtomPair& pair);

// Angular probability density of the interference channel [1/sr]:
//   Re{ k_A^5 e^{i k_A R cos(theta)} / [(2 pi eps0 hbar)^2 Gamma_A dw]
//       * mu_A^i mu_B^j (delta_ij - khat_i khat_j) * mu_B^p mu_A^q G_pq(R, w_A) },
// cos(theta) = khat . axis. Throws for non-unit khat.
double dpdomega(const AtomPair& pair, const Vec3& khat);

// Sampled dP/dOmega over the sphere with the emitted photon momentum.
struct EmissionDistribution {
    std::vector<SphereNode> nodes;  // polar axis = pair axis
    std::vector<double> values;     // dP/dOmega at each node [1/sr]
    Vec3 total_momentum;            // integral of hbar k_A khat dP/dOmega [kg m/s]
    double sphere_integral = 0.0;   // integral of dP/dOmega [1]
};

// Quadrature of the angular density at the given order (order x 2*order
// nodes). Node evaluation may run in parallel; the reduction order is fixed,
// so results are bitwise independent of the policy.
EmissionDistribution emitted_momentum(const AtomPair& pair, int order = 64,
                                      Exec exec = Exec::parallel);

} // namespace recoil
