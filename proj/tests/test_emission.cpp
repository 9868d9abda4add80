#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "recoil/constants.hpp"
#include "recoil/dynamics.hpp"
#include "recoil/emission.hpp"
#include "recoil/errors.hpp"
#include "recoil/greens.hpp"
#include "recoil/quadrature.hpp"
#include "recoil/rng.hpp"
#include "recoil/species.hpp"

using namespace recoil;
namespace cn = constants;

namespace {

const Vec3 xhat = {1.0, 0.0, 0.0};

AtomPair reference_pair(double x = 1.28, Orientation mode = Orientation::fixed) {
    static const SpeciesRegistry reg = load_species(RECOIL_SPECIES_FILE);
    const AtomSpecies& rb = find_species(reg, "RB87_5P12");
    const AtomSpecies& k40 = find_species(reg, "K40_GS");
    return make_pair(rb, k40, x / rb.k(), xhat, mode);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST_CASE("free-space channel is normalized for consistent species") {
    const AtomPair p = reference_pair();
    CHECK(std::abs(p_free_space(p.excited) - 1.0) < 1e-12);
    CHECK(std::abs(p_free_space(p.ground) - 1.0) < 1e-12);
}

TEST_CASE("interference channels cancel exactly and SI cross-check holds") {
    for (const double x : {0.8, 1.28, 3.0, 7.7}) {
        const AtomPair p = reference_pair(x);
        const double de = p_interference_de(p);
        const double fg = p_interference_fg(p);
        CHECK(de + fg == 0.0); // identical arithmetic, opposite signs

        // independent path: assemble from the SI Green tensor directly
        const double kA = p.excited.k();
        const CMat3 G = dyadic_green(kA, p.Rvec);
        const double s_im = dot(p.excited.mu, G.im, p.ground.mu);
        const double s_re = dot(p.excited.mu, G.re, p.ground.mu);
        const double direct = 4.0 * std::pow(kA, 4) /
                              (cn::eps0 * cn::eps0 * cn::hbar * cn::hbar * p.excited.gamma *
                               p.detuning) *
                              s_im * s_re;
        CHECK(rel(de, direct) < 1e-12);
    }
}

TEST_CASE("scattering channels match their SI closed forms") {
    for (const double x : {0.8, 1.28, 3.0}) {
        const AtomPair p = reference_pair(x);
        const double kA = p.excited.k();
        const double kB = p.ground.k();
        const Vec3 muA = p.excited.mu;
        const Vec3 muB = p.ground.mu;
        const double muA2 = dot(muA, muA);
        const double muB2 = dot(muB, muB);
        const double eh2 = cn::eps0 * cn::eps0 * cn::hbar * cn::hbar;
        const double cA = std::norm(dot(muA, dyadic_green(kA, p.Rvec), muB));
        const double cB = std::norm(dot(muA, dyadic_green(kB, p.Rvec), muB));
        const double direct_b = ((muB2 / muA2) * std::pow(kA, 4) * cA +
                                 std::pow(kB, 4) * cB) /
                                (eh2 * p.detuning * p.detuning);
        CHECK(rel(p_scatter_b(p), direct_b) < 1e-12);
        const double bracket =
            std::pow(kA, 4) * cA / (eh2 * p.excited.gamma * p.detuning);
        CHECK(rel(p_rescatter_c(p), 2.0 * bracket * bracket) < 1e-12);
        CHECK(p_scatter_b(p) > 0.0);
        CHECK(p_rescatter_c(p) > 0.0);
    }
}

TEST_CASE("budget assembles the channels with the conservation residual") {
    const AtomPair p = reference_pair();
    const ProbabilityBudget b = budget(p);
    CHECK(b.p_a == p_free_space(p.excited));
    CHECK(b.p_de == p_interference_de(p));
    CHECK(b.p_fg == -b.p_de);
    CHECK(b.residual_theorem == 0.0);
    CHECK(b.order_check < 1e-4);
    CHECK(b.order_check == std::max(b.p_b, b.p_c) / std::abs(b.p_fg));
}

TEST_CASE("interference channels decay away at large separation") {
    const AtomPair near = reference_pair();
    const ProbabilityBudget far = budget(with_x(near, 1e4));
    // coefficients fall off as 1/x, so the product channel drops ~8 orders
    CHECK(std::abs(far.p_de) < 1e-6 * std::abs(budget(near).p_de));
    CHECK(far.residual_theorem == 0.0);
}

TEST_CASE("angular density matches the SI closed form") {
    const AtomPair p = reference_pair();
    const double kA = p.excited.k();
    const CMat3 G = dyadic_green(kA, p.Rvec);
    const std::complex<double> gBA = dot(p.ground.mu, G, p.excited.mu);
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const Vec3 khat = rng.unit_vector();
        const double tAB = dot(p.excited.mu, p.ground.mu) -
                           dot(p.excited.mu, khat) * dot(p.ground.mu, khat);
        const std::complex<double> phase =
            std::exp(std::complex<double>(0.0, kA * p.R * dot(khat, p.axis)));
        const double pref2pi = 2.0 * cn::pi * cn::eps0 * cn::hbar;
        const double direct = std::pow(kA, 5) / (pref2pi * pref2pi * p.excited.gamma *
                                                 p.detuning) *
                              tAB * (phase * gBA).real();
        CHECK(std::abs(dpdomega(p, khat) - direct) / std::abs(direct) < 1e-12);
    }
    CHECK_THROWS_AS(dpdomega(p, {1.0, 1.0, 0.0}), ValidationError);
}

TEST_CASE("sphere integral of the angular density reproduces p_fg") {
    for (const Orientation mode : {Orientation::fixed, Orientation::isotropic}) {
        for (const double x : {0.8, 1.28, 3.0}) {
            const AtomPair p = reference_pair(x, mode);
            const EmissionDistribution dist = emitted_momentum(p, 64);
            const double fg = p_interference_fg(p);
            CHECK(std::abs(dist.sphere_integral - fg) / std::abs(fg) < 1e-10);
        }
    }
}

TEST_CASE("emitted momentum equals the rotating-wave vacuum momentum scaled by kA/kB") {
    const AtomPair p = reference_pair();
    const EmissionDistribution dist = emitted_momentum(p, 64);
    const Vec3 rw = p_inf_rotating_wave(p);
    const double kratio = p.excited.k() / p.ground.k();
    CHECK(rel(norm(dist.total_momentum), kratio * norm(rw)) < 1e-10);
    CHECK(dot(normalized(dist.total_momentum), normalized(rw)) > 1.0 - 1e-12);
    // transverse components vanish for z dipoles on the x axis
    CHECK(std::abs(dist.total_momentum.y) / norm(dist.total_momentum) < 1e-14);
}

TEST_CASE("isotropic density is azimuthally symmetric about the axis") {
    const AtomPair p = reference_pair(1.28, Orientation::isotropic);
    const Frame f = frame_for_axis(p.axis);
    for (const double theta : {0.4, 1.1, 2.6}) {
        const double v0 = dpdomega(p, direction(f, theta, 0.0));
        for (const double phi : {0.9, 2.2, 4.4}) {
            const double v = dpdomega(p, direction(f, theta, phi));
            CHECK(std::abs(v - v0) <= 1e-15 * std::abs(v0) + 1e-300);
        }
    }
}

TEST_CASE("density approaches the interference far-field law") {
    const double x = 300.0;
    const AtomPair p = reference_pair(x);
    const double r = p.excited.k() / p.ground.k();
    const double pref =
        9.0 / (16.0 * cn::pi) * (p.ground.gamma / p.detuning) * (r * r * r);
    const Frame f = frame_for_axis(p.axis);
    double scale = 0.0, worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double theta = cn::pi * i / 100.0;
        const Vec3 khat = direction(f, theta, 0.9);
        const double tAB = 1.0 - khat.z * khat.z; // z dipoles
        const double c = dot(khat, p.axis);
        const double val = dpdomega(p, khat);
        const double asym = pref * tAB * (-std::cos(x * (1.0 + c)) / x);
        scale = std::max(scale, std::abs(val));
        worst = std::max(worst, std::abs(val - asym));
    }
    CHECK(worst / scale < 1e-2);
}

TEST_CASE("gauss-legendre nodes match reference values") {
    std::vector<double> u, w;
    gauss_legendre(5, u, w);
    CHECK(std::abs(u[0] + 0.9061798459386640) < 1e-12);
    CHECK(std::abs(u[1] + 0.5384693101056831) < 1e-12);
    CHECK(std::abs(u[2]) < 1e-15);
    CHECK(std::abs(w[0] - 0.2369268850561891) < 1e-12);
    CHECK(std::abs(w[2] - 0.5688888888888889) < 1e-12);
    double sum = 0.0;
    for (double wi : w) sum += wi;
    CHECK(std::abs(sum - 2.0) < 1e-14);
    CHECK_THROWS_AS(gauss_legendre(0, u, w), ValidationError);
}

TEST_CASE("sphere quadrature weights sum to the full solid angle") {
    const auto nodes = sphere_quadrature(16);
    CHECK(nodes.size() == 16u * 32u);
    double sum = 0.0;
    for (const auto& n : nodes) sum += n.weight;
    CHECK(std::abs(sum - 4.0 * cn::pi) < 1e-12);
    CHECK_THROWS_AS(sphere_quadrature(1), ValidationError);
}

TEST_CASE("frames are right-handed and orthonormal") {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        const Vec3 axis = rng.unit_vector();
        const Frame f = frame_for_axis(axis);
        CHECK(std::abs(norm(f.e1) - 1.0) < 1e-14);
        CHECK(std::abs(norm(f.e2) - 1.0) < 1e-14);
        CHECK(std::abs(norm(f.e3) - 1.0) < 1e-14);
        CHECK(std::abs(dot(f.e1, f.e2)) < 1e-14);
        CHECK(std::abs(dot(f.e2, f.e3)) < 1e-14);
        CHECK(norm(cross(f.e1, f.e2) - f.e3) < 1e-14);
    }
    const Frame fz = frame_for_axis({0.0, 0.0, 1.0});
    CHECK(fz.e2.x == 1.0); // fallback when the axis is along z
    CHECK_THROWS_AS(frame_for_axis({0.0, 0.0, 2.0}), ValidationError);
}
