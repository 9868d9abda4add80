#include "recoil/emission.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>

#include "recoil/constants.hpp"
#include "recoil/errors.hpp"
#include "recoil/greens.hpp"

namespace recoil {

namespace cn = constants;

namespace {

struct PairGeometry {
    double a, b, c; // muhatA.axis, muhatB.axis, muhatA.muhatB
};

PairGeometry geometry(const AtomPair& p) {
    const Vec3 ma = p.excited.mu_hat();
    const Vec3 mb = p.ground.mu_hat();
    return {dot(ma, p.axis), dot(mb, p.axis), dot(ma, mb)};
}

// |muhatA . Gt . muhatB|^2 at x, or the trace average under isotropic
// orientations (mu^i mu^j -> |mu|^2 delta_ij / 3 on both atoms).
double coupling_sq(const AtomPair& p, double x) {
    if (p.orientation == Orientation::isotropic) return trace_gg_conj(x) / 9.0;
    const auto g = geometry(p);
    return std::norm(contracted_coeff(x, g.a, g.b, g.c));
}

// Im(s) Re(s) of the contraction, or its trace average.
double imre_product(const AtomPair& p, double x) {
    if (p.orientation == Orientation::isotropic) return trace_imre(x) / 9.0;
    const auto g = geometry(p);
    const std::complex<double> s = contracted_coeff(x, g.a, g.b, g.c);
    return s.imag() * s.real();
}

// Shared value of the two interference channels before they apply their own
// signs. Dimensionless form of
//   4 k_A^4 / (eps0^2 hbar^2 Gamma_A dw) [mu_A.Im G.mu_B][mu_B.Re G.mu_A]
// after substituting the linewidth identity for both dipole magnitudes.
double interference_core(const AtomPair& p) {
    const double r = p.excited.k() / p.ground.k();
    return (9.0 / 4.0) * (p.ground.gamma / p.detuning) * (r * r * r) *
           imre_product(p, p.x());
}

} // namespace

double p_free_space(const AtomSpecies& A) {
    const double k = A.k();
    return -2.0 * k * k / (cn::eps0 * cn::hbar * A.gamma) *
           dot(A.mu, imgreen_origin_limit(k), A.mu);
}

double p_interference_de(const AtomPair& pair) { return interference_core(pair); }

double p_interference_fg(const AtomPair& pair) { return -interference_core(pair); }

double p_scatter_b(const AtomPair& pair) {
    const double gA = pair.excited.gamma;
    const double gB = pair.ground.gamma;
    const double dw = pair.detuning;
    const double r = pair.excited.k() / pair.ground.k();
    const double r3 = r * r * r;
    // photon at w_A scattered by B, plus the B-resonant piece at w_B
    const double termA =
        (9.0 / 16.0) * (gB / dw) * (gB / dw) * r3 * r3 * coupling_sq(pair, pair.x());
    const double termB = (9.0 / 16.0) * (gA * gB / (dw * dw)) / r3 *
                         coupling_sq(pair, pair.ground.k() * pair.R);
    return termA + termB;
}

double p_rescatter_c(const AtomPair& pair) {
    const double r = pair.excited.k() / pair.ground.k();
    const double bracket = (9.0 / 16.0) * (pair.ground.gamma / pair.detuning) * (r * r * r) *
                           coupling_sq(pair, pair.x());
    return 2.0 * bracket * bracket;
}

ProbabilityBudget budget(const AtomPair& pair) {
    ProbabilityBudget b;
    b.p_a = p_free_space(pair.excited);
    b.p_b = p_scatter_b(pair);
    b.p_c = p_rescatter_c(pair);
    b.p_de = p_interference_de(pair);
    b.p_fg = p_interference_fg(pair);
    b.residual_theorem = b.p_de + b.p_fg;
    const double mx = std::max(b.p_b, b.p_c);
    b.order_check = b.p_fg == 0.0 ? std::numeric_limits<double>::infinity()
                                  : mx / std::abs(b.p_fg);
    return b;
}

double dpdomega(const AtomPair& pair, const Vec3& khat) {
    require_unit(khat, "emission direction");
    const double x = pair.x();
    const double cB = dot(khat, pair.axis);
    const double r = pair.excited.k() / pair.ground.k();
    const double pref = (pair.ground.gamma / pair.detuning) * (r * r * r);
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, x * cB));
    if (pair.orientation == Orientation::isotropic) {
        // orientation average of T_AB(khat) s: alpha -> (1 + c^2), beta -> (3 c^2 - 1)
        const std::complex<double> ang =
            alpha_coeff(x) * (1.0 + cB * cB) + beta_coeff(x) * (3.0 * cB * cB - 1.0);
        return pref / (16.0 * cn::pi) * (phase * ang).real();
    }
    const auto g = geometry(pair);
    const double transverse =
        g.c - dot(pair.excited.mu_hat(), khat) * dot(pair.ground.mu_hat(), khat);
    const std::complex<double> s = contracted_coeff(x, g.a, g.b, g.c);
    return 9.0 * pref / (16.0 * cn::pi) * transverse * (phase * s).real();
}

EmissionDistribution emitted_momentum(const AtomPair& pair, int order, Exec exec) {
    EmissionDistribution dist;
    dist.nodes = sphere_quadrature(order);
    const Frame frame = frame_for_axis(pair.axis);
    const int m = 2 * order;
    dist.values.assign(dist.nodes.size(), 0.0);

    const double hbar_kA = cn::hbar * pair.excited.k();
    std::vector<Vec3> mom_partial(static_cast<std::size_t>(order));
    std::vector<double> int_partial(static_cast<std::size_t>(order), 0.0);
    // one polar row per slice; slice-order reduction keeps the result
    // bitwise independent of the execution policy
    const auto row = [&](int i) {
        Vec3 mom{};
        double integ = 0.0;
        for (int j = 0; j < m; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i * m + j);
            const SphereNode& nd = dist.nodes[idx];
            const Vec3 khat = direction(frame, nd.theta, nd.phi);
            const double v = dpdomega(pair, khat);
            dist.values[idx] = v;
            integ += nd.weight * v;
            mom = mom + (nd.weight * v * hbar_kA) * khat;
        }
        int_partial[static_cast<std::size_t>(i)] = integ;
        mom_partial[static_cast<std::size_t>(i)] = mom;
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < order; ++i) row(i);
    } else {
        for (int i = 0; i < order; ++i) row(i);
    }
    for (int i = 0; i < order; ++i) {
        dist.sphere_integral += int_partial[static_cast<std::size_t>(i)];
        dist.total_momentum = dist.total_momentum + mom_partial[static_cast<std::size_t>(i)];
    }
    return dist;
}

} // namespace recoil
