#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "recoil/constants.hpp"
#include "recoil/dynamics.hpp"
#include "recoil/emission.hpp"
#include "recoil/errors.hpp"
#include "recoil/greens.hpp"
#include "recoil/modesum.hpp"
#include "recoil/rng.hpp"
#include "recoil/species.hpp"

using namespace recoil;
namespace cn = constants;

namespace {

const Vec3 xhat = {1.0, 0.0, 0.0};
const Vec3 zhat = {0.0, 0.0, 1.0};

AtomSpecies synth(const std::string& label, double k) {
    return make_species(label, cn::c0 * k, 0.0065 * cn::c0 * k, zhat, "test fixture");
}

AtomPair synth_pair(double x = 1.28, double kB_over_kA = 1.13) {
    const double kA = 1e6;
    return make_pair(synth("SY_A", kA), synth("SY_B", kB_over_kA * kA), x / kA, xhat,
                     Orientation::fixed, 10.0);
}

} // namespace

TEST_CASE("one-photon time factor: edge cases and modulus identity") {
    const AtomPair p = synth_pair();
    const double wA = p.excited.omega;
    const double gA = p.excited.gamma;
    CHECK(std::abs(amp1_time_factor(wA * 1.01, wA, gA, 0.0)) == 0.0);
    CHECK_THROWS_AS(amp1_time_factor(wA, wA, gA, -1.0), ValidationError);
    for (const double gT : {0.7, 5.0, 25.0}) {
        const double T = gT / gA;
        const double w = wA * 1.003;
        const double dw = w - wA;
        const double closed = (1.0 + std::exp(-gA * T) -
                               2.0 * std::exp(-gA * T / 2.0) * std::cos(dw * T)) /
                              (dw * dw + gA * gA / 4.0);
        CHECK(std::abs(std::norm(amp1_time_factor(w, wA, gA, T)) - closed) / closed < 1e-12);
    }
}

TEST_CASE("closed-form time factors agree with adaptive quadrature") {
    const AtomPair p = synth_pair();
    const double wA = p.excited.omega;
    const double gA = p.excited.gamma;
    Rng rng(5);
    for (int t = 0; t < 3; ++t) {
        const double w = wA * (1.0 + 0.015 * (2.0 * rng.uniform() - 1.0));
        const double T = rng.uniform(0.5, 6.0) / gA;
        const auto closed = amp1_time_factor(w, wA, gA, T);
        const auto quad = amp1_time_factor_quad(w, wA, gA, T, std::abs(closed) * 1e-12);
        CHECK(std::abs(closed - quad) / std::abs(closed) < 1e-10);
    }
    for (int t = 0; t < 2; ++t) {
        const double w = rng.uniform(p.excited.omega * 0.99, p.ground.omega * 1.01);
        const double T = rng.uniform(0.5, 5.0) / gA;
        const auto closed = amp3_time_factor(w, p, T);
        const auto quad = amp3_time_factor_quad(w, p, T, std::abs(closed) * 1e-10);
        CHECK(std::abs(closed - quad) / std::abs(closed) < 1e-8);
    }
}

TEST_CASE("pair coupling is symmetric under exchanging the contraction") {
    const AtomPair p = synth_pair();
    const double kA = p.excited.k();
    const std::complex<double> direct = pair_coupling(p);
    const std::complex<double> swapped =
        kA * kA / cn::eps0 * dot(p.excited.mu, dyadic_green(kA, p.Rvec), p.ground.mu);
    CHECK(std::abs(direct - swapped) / std::abs(direct) < 1e-14);
    // weak-coupling sanity: |V| well below the detuning energy scale
    CHECK(std::abs(direct) / (cn::hbar * std::abs(p.detuning)) < 0.1);
}

TEST_CASE("explicit polarization sum equals the reduced per-mode probability") {
    const AtomPair p = synth_pair();
    const double kA = p.excited.k();
    const double T = 25.0 / p.excited.gamma;
    const double V = std::pow(200.0 / kA, 3);
    const std::complex<double> W = pair_coupling(p) / cn::hbar;
    Rng rng(9);
    for (int t = 0; t < 3; ++t) {
        const Vec3 khat = rng.unit_vector();
        const Vec3 kvec = rng.uniform(0.5 * kA, 3.0 * kA) * khat;
        const auto [e1, e2] = polarization_basis(khat);
        double direct = 0.0;
        for (const Vec3& pol : {e1, e2})
            direct += std::norm(amp1_closed(kvec, pol, p, T, V) +
                                amp3_closed(kvec, pol, p, T, V));
        const double w = cn::c0 * norm(kvec);
        const auto tf1 = amp1_time_factor(w, p.excited.omega, p.excited.gamma, T);
        const auto tf3 = amp3_time_factor(w, p, T);
        const double C = cn::c0 * norm(kvec) / (2.0 * cn::hbar * V * cn::eps0);
        const double mkA = dot(p.excited.mu, khat);
        const double mkB = dot(p.ground.mu, khat);
        const double tAB = dot(p.excited.mu, p.ground.mu) - mkA * mkB;
        const std::complex<double> phase =
            std::exp(std::complex<double>(0.0, dot(kvec, p.Rvec)));
        const double reduced =
            C * (dot(p.excited.mu, p.excited.mu) - mkA * mkA) * std::norm(tf1) +
            C * (dot(p.ground.mu, p.ground.mu) - mkB * mkB) * std::norm(W) * std::norm(tf3) +
            2.0 * C * tAB *
                (std::conj(tf1) * std::complex<double>(0.0, -1.0) * W * tf3 * phase).real();
        CHECK(std::abs(direct - reduced) / std::abs(reduced) < 1e-12);
    }
    CHECK_THROWS_AS(amp1_closed({0.0, 0.0, 0.0}, xhat, p, T, V), ValidationError);
}

TEST_CASE("polarization basis is transverse and orthonormal") {
    Rng rng(13);
    for (int t = 0; t < 10; ++t) {
        const Vec3 khat = rng.unit_vector();
        const auto [e1, e2] = polarization_basis(khat);
        CHECK(std::abs(dot(e1, khat)) < 1e-12);
        CHECK(std::abs(dot(e2, khat)) < 1e-12);
        CHECK(std::abs(dot(e1, e2)) < 1e-12);
        CHECK(std::abs(norm(e1) - 1.0) < 1e-12);
        CHECK(std::abs(norm(e2) - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(polarization_basis({1.0, 1.0, 0.0}), ValidationError);
}

TEST_CASE("mode grid counts lattice points exactly") {
    const double kA = 1e6;
    const ModeGrid g = make_mode_grid(20.0 / kA, 3.0 * kA);
    const int nm = g.nmax();
    CHECK(nm == 9); // floor(3e6 * 2e-5 / 2 pi) = floor(9.549)
    const double r2 = std::pow(g.k_cutoff * g.L / (2.0 * cn::pi), 2);
    std::int64_t brute = 0;
    for (int a = -nm; a <= nm; ++a)
        for (int b = -nm; b <= nm; ++b)
            for (int c = -nm; c <= nm; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                if (static_cast<double>(a) * a + static_cast<double>(b) * b +
                        static_cast<double>(c) * c <=
                    r2)
                    ++brute;
            }
    CHECK(g.mode_count() == brute);
    CHECK_THROWS_AS(make_mode_grid(0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(make_mode_grid(1.0, -1.0), ValidationError);
}

TEST_CASE("mode sum domain guards") {
    const AtomPair p = synth_pair();
    const double kA = p.excited.k();
    const ModeGrid g = make_mode_grid(200.0 / kA, 3.0 * kA);
    CHECK(modesum_pa(g, p, 0.0) == 0.0);
    CHECK_THROWS_AS(modesum_pa(g, p, 1.0 / p.excited.gamma), ValidationError);
    CHECK_THROWS_AS(modesum_pa(make_mode_grid(200.0 / kA, 1.2 * kA), p, 30.0 / p.excited.gamma),
                    ValidationError);
    const FwdBwd zero = asymmetry_check(g, p, 0.0);
    CHECK(zero.forward == 0.0);
    CHECK(zero.backward == 0.0);
}

TEST_CASE("box normalization approaches unity") {
    const AtomPair p = synth_pair();
    const double kA = p.excited.k();
    const ModeGrid g = make_mode_grid(200.0 / kA, 3.0 * kA);
    const double s = modesum_pa(g, p, 30.0 / p.excited.gamma);
    CHECK(std::abs(s - 1.0) <= 0.02);
}

TEST_CASE("lattice asymmetry sign matches the continuum recoil direction") {
    const AtomPair p = synth_pair();
    const double kA = p.excited.k();
    const ModeGrid g = make_mode_grid(200.0 / kA, 3.0 * kA);
    const FwdBwd fb = asymmetry_check(g, p, 30.0 / p.excited.gamma);
    const double continuum = dot(xhat, resonant_force(p).P_inf);
    CHECK((fb.forward - fb.backward > 0.0) == (continuum > 0.0));
    CHECK(fb.forward > 0.0);
    CHECK(fb.backward > 0.0);
}

TEST_CASE("interference density matches the angular distribution for the bundled pair") {
    const SpeciesRegistry reg = load_species(RECOIL_SPECIES_FILE);
    const AtomSpecies& rb = find_species(reg, "RB87_5P12");
    const AtomSpecies& k40 = find_species(reg, "K40_GS");
    const AtomPair p = make_pair(rb, k40, 1.28 / rb.k(), xhat);
    const double scale = std::abs(dpdomega(p, xhat));
    for (const Vec3& d : {xhat, -xhat, normalized({0.6, 0.5, 0.4})}) {
        const double dev = std::abs(interference_density(p, d) - dpdomega(p, d));
        CHECK(dev / scale < 1e-6);
    }
    const AtomPair iso = make_pair(rb, k40, 1.28 / rb.k(), xhat, Orientation::isotropic);
    CHECK_THROWS_AS(interference_density(iso, xhat), ValidationError);
}
