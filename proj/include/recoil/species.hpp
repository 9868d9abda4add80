#pragma once

#include <map>
#include <string>

#include "recoil/vec3.hpp"

namespace recoil {

// One strict two-level emitter. The dipole magnitude is never free data: it
// is always derived from the linewidth through the free-space emission rate
// identity gamma = w^3 |mu|^2 / (3 pi eps0 hbar c^3); species data files fix
// only (frequency, linewidth) and optionally the dipole orientation.
struct AtomSpecies {
    std::string label;
    double omega = 0.0; // transition angular frequency [rad/s]
    double gamma = 0.0; // free-space linewidth [rad/s]
    Vec3 mu;            // dipole matrix element [C m], real-valued
    std::string source; // literature citation for the line data

    double k() const;      // wavenumber omega / c [1/m]
    double mu_mag() const; // |mu| [C m]
    Vec3 mu_hat() const;   // dipole direction
};

// |mu| [C m] from the emission-rate identity. Throws on non-positive input.
double dipole_from_linewidth(double omega, double gamma);

// gamma [rad/s] from (omega, |mu|); algebraic inverse of the above.
double linewidth_from_dipole(double omega, double mu_mag);

// Builds and validates a species; the dipole vector is
// dipole_from_linewidth(omega, gamma) * normalized(dipole_axis).
AtomSpecies make_species(const std::string& label, double omega, double gamma,
                         Vec3 dipole_axis = {0.0, 0.0, 1.0}, const std::string& source = "");

// Relative residual of the gamma-mu-omega consistency identity; < 1e-6 for
// every valid species (machine-zero for species built by make_species).
double consistency_residual(const AtomSpecies& s);

// Registry of species keyed by label.
using SpeciesRegistry = std::map<std::string, AtomSpecies>;

// Loads a JSON species file: a top-level array of objects with fields
//   label (string), wavelength_nm OR omega_rad_s (number), gamma_rad_s
//   (number), optional dipole_axis ([x, y, z]), source (string, required).
// Unknown fields are rejected; errors name the offending field.
SpeciesRegistry load_species(const std::string& path);

// Lookup that throws ValidationError naming the label when missing.
const AtomSpecies& find_species(const SpeciesRegistry& reg, const std::string& label);

} // namespace recoil
