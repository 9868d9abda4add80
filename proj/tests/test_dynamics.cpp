#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "recoil/constants.hpp"
#include "recoil/dynamics.hpp"
#include "recoil/errors.hpp"
#include "recoil/species.hpp"

using namespace recoil;
namespace cn = constants;

namespace {

const Vec3 xhat = {1.0, 0.0, 0.0};

AtomPair reference_pair(Orientation mode = Orientation::fixed) {
    static const SpeciesRegistry reg = load_species(RECOIL_SPECIES_FILE);
    const AtomSpecies& rb = find_species(reg, "RB87_5P12");
    const AtomSpecies& k40 = find_species(reg, "K40_GS");
    return make_pair(rb, k40, 1.28 / rb.k(), xhat, mode);
}

} // namespace

TEST_CASE("force kernel matches its defining expression") {
    const AtomPair p = reference_pair();
    const double wA = p.excited.omega;
    const double wB = p.ground.omega;
    const double kA = p.excited.k();
    const double direct = 4.0 * wB * std::pow(kA, 7) /
                          (cn::eps0 * cn::eps0 * cn::hbar * (wA * wA - wB * wB));
    CHECK(std::abs(force_kernel(p) - direct) / std::abs(direct) < 1e-10);
    // rotating-wave reduction replaces (wA^2 - wB^2) by 2 wA (wA - wB)
    const double ratio = force_kernel(p) / force_kernel_rw(p);
    CHECK(std::abs(ratio - 2.0 * wA / (wA + wB)) < 1e-12);
}

TEST_CASE("force result wires the observables consistently") {
    const AtomPair p = reference_pair();
    const ForceResult r = resonant_force(p);
    CHECK(r.decay_rate == p.excited.gamma);
    CHECK(r.x == doctest::Approx(1.28).epsilon(1e-14));
    CHECK(r.P_inf.x == -r.F0.x / r.decay_rate);
    CHECK(r.P_inf.y == -r.F0.y / r.decay_rate);
    CHECK(r.P_inf.z == -r.F0.z / r.decay_rate);
    CHECK(r.D == dot(p.axis, r.P_inf) * cn::c0 / cn::planck_h);
    CHECK(directionality(p) == r.D);
    // z-aligned dipoles, x axis: the gradient is radial
    CHECK(r.F0.y == 0.0);
    CHECK(r.F0.z == 0.0);
    CHECK_THROWS_AS(resonant_force(p, -1.0), ValidationError);
}

TEST_CASE("decay envelope factorizes exactly") {
    const AtomPair p = reference_pair();
    const ForceResult base = resonant_force(p, 0.0);
    for (const double gT : {0.5, 2.0, 10.0}) {
        const double T = gT / p.excited.gamma;
        const ForceResult late = resonant_force(p, T);
        const Vec3 expected = std::exp(-p.excited.gamma * T) * base.F0;
        CHECK(late.F0.x == expected.x);
        CHECK(late.F0.y == expected.y);
        CHECK(late.F0.z == expected.z);
    }
}

TEST_CASE("rotating-wave momentum differs by the kernel ratio only") {
    const AtomPair p = reference_pair();
    const Vec3 full = resonant_force(p).P_inf;
    const Vec3 rw = p_inf_rotating_wave(p);
    const double expected = force_kernel(p) / force_kernel_rw(p);
    CHECK(std::abs(full.x / rw.x - expected) < 1e-12);
}

TEST_CASE("momentum is odd under axis flip, D invariant") {
    const AtomPair p = reference_pair();
    const AtomPair q = make_pair(p.excited, p.ground, p.R, -xhat);
    const ForceResult rp = resonant_force(p);
    const ForceResult rq = resonant_force(q);
    CHECK(rq.P_inf.x == -rp.P_inf.x);
    CHECK(rq.F0.x == -rp.F0.x);
    CHECK(rq.D == rp.D);
}

TEST_CASE("scan grid endpoints and validation") {
    const AtomPair p = reference_pair();
    const auto two = scan_separation(p, 0.5, 20.0, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].x == 0.5);
    CHECK(two[1].x == 20.0);
    CHECK_THROWS_AS(scan_separation(p, 0.0, 20.0, 10), ValidationError);
    CHECK_THROWS_AS(scan_separation(p, 5.0, 5.0, 10), ValidationError);
    CHECK_THROWS_AS(scan_separation(p, 0.5, 20.0, 1), ValidationError);
}

TEST_CASE("reference scan: peak location and magnitude for z dipoles") {
    const AtomPair p = reference_pair();
    const auto rows = scan_separation(p, 0.5, 20.0, 400);
    REQUIRE(rows.size() == 400);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (std::abs(rows[i].D) > std::abs(rows[arg].D)) arg = i;
    CHECK(arg == 14);
    CHECK(rows[arg].x == doctest::Approx(1.1842105263157894).epsilon(1e-14));
    CHECK(rows[arg].D == doctest::Approx(-5.117502e7).epsilon(1e-5));
    const double ratio = 2.0 * cn::pi * std::abs(rows[arg].D) / p.excited.gamma;
    CHECK(ratio == doctest::Approx(8.906200).epsilon(1e-5));
}

TEST_CASE("reference scan: isotropic orientation average") {
    const AtomPair p = reference_pair(Orientation::isotropic);
    const auto rows = scan_separation(p, 0.5, 20.0, 400);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (std::abs(rows[i].D) > std::abs(rows[arg].D)) arg = i;
    CHECK(arg == 16);
    CHECK(rows[arg].x == doctest::Approx(1.281954887218045).epsilon(1e-14));
    const double ratio = 2.0 * cn::pi * std::abs(rows[arg].D) / p.excited.gamma;
    CHECK(ratio > 2.55);
    CHECK(ratio < 2.66);
}
