#pragma once

#include "recoil/species.hpp"

namespace recoil {

// How dipole orientations enter contractions: fixed uses the species' dipole
// vectors as-is; isotropic replaces mu^i mu^j by |mu|^2 delta_ij / 3 for both
// atoms in every contraction.
enum class Orientation { fixed, isotropic };

// Dimensionless weak-coupling guard: |detuning| >= floor * max(gamma_A, gamma_B).
inline constexpr double default_detuning_floor = 100.0;

// Excited atom A plus ground atom B at fixed separation Rvec = R_A - R_B.
struct AtomPair {
    AtomSpecies excited; // atom A, initially excited
    AtomSpecies ground;  // atom B
    Vec3 Rvec;           // separation vector [m]
    double R = 0.0;      // |Rvec| [m]
    Vec3 axis;           // Rvec / R
    double detuning = 0.0; // w_A - w_B [rad/s]
    Orientation orientation = Orientation::fixed;

    double x() const; // dimensionless k_A * R
};

// Validates and assembles a pair. Throws ValidationError on zero separation,
// non-unit axis, or |detuning| below floor * max(gamma) (indistinguishable
// species).
AtomPair make_pair(const AtomSpecies& A, const AtomSpecies& B, double R, const Vec3& axis,
                   Orientation orientation = Orientation::fixed,
                   double detuning_floor = default_detuning_floor);

// Same pair at a different separation x = k_A R (no revalidation beyond R > 0).
AtomPair with_x(const AtomPair& pair, double x);

} // namespace recoil
