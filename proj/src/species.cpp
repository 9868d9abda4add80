#include "recoil/species.hpp"

#include <cmath>
#include <set>

#include "json.hpp"

#include "recoil/constants.hpp"
#include "recoil/errors.hpp"
#include "recoil/io.hpp"

namespace recoil {

namespace cn = constants;

double AtomSpecies::k() const { return omega / cn::c0; }

double AtomSpecies::mu_mag() const { return norm(mu); }

Vec3 AtomSpecies::mu_hat() const { return normalized(mu); }

double dipole_from_linewidth(double omega, double gamma) {
    if (!(omega > 0.0)) throw ValidationError("dipole_from_linewidth: omega must be positive");
    if (!(gamma > 0.0)) throw ValidationError("dipole_from_linewidth: gamma must be positive");
    return std::sqrt(3.0 * cn::pi * cn::eps0 * cn::hbar * cn::c0 * cn::c0 * cn::c0 * gamma /
                     (omega * omega * omega));
}

double linewidth_from_dipole(double omega, double mu_mag) {
    return omega * omega * omega * mu_mag * mu_mag /
           (3.0 * cn::pi * cn::eps0 * cn::hbar * cn::c0 * cn::c0 * cn::c0);
}

AtomSpecies make_species(const std::string& label, double omega, double gamma, Vec3 dipole_axis,
                         const std::string& source) {
    if (label.empty()) throw ValidationError("species label must be non-empty");
    if (!(omega > 0.0))
        throw ValidationError("species '" + label + "': omega must be positive");
    if (!(gamma > 0.0))
        throw ValidationError("species '" + label + "': gamma must be positive");
    Vec3 axis;
    try {
        axis = normalized(dipole_axis);
    } catch (const ValidationError&) {
        throw ValidationError("species '" + label + "': dipole_axis must be a nonzero vector");
    }
    AtomSpecies s;
    s.label = label;
    s.omega = omega;
    s.gamma = gamma;
    s.mu = dipole_from_linewidth(omega, gamma) * axis;
    s.source = source;
    return s;
}

double consistency_residual(const AtomSpecies& s) {
    return std::abs(s.gamma - linewidth_from_dipole(s.omega, s.mu_mag())) / s.gamma;
}

namespace {

double require_number(const nlohmann::json& entry, const std::string& field,
                      const std::string& where) {
    if (!entry.contains(field))
        throw ValidationError("species file: missing required field '" + field + "' in " + where);
    if (!entry[field].is_number())
        throw ValidationError("species file: field '" + field + "' must be a number in " + where);
    return entry[field].get<double>();
}

std::string require_string(const nlohmann::json& entry, const std::string& field,
                           const std::string& where) {
    if (!entry.contains(field))
        throw ValidationError("species file: missing required field '" + field + "' in " + where);
    if (!entry[field].is_string())
        throw ValidationError("species file: field '" + field + "' must be a string in " + where);
    return entry[field].get<std::string>();
}

} // namespace

SpeciesRegistry load_species(const std::string& path) {
    const std::string text = read_file(path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("species file '" + path + "': " + e.what());
    }
    if (!doc.is_array())
        throw ValidationError("species file '" + path + "': top level must be an array");

    static const std::set<std::string> known = {"label",      "wavelength_nm", "omega_rad_s",
                                                "gamma_rad_s", "dipole_axis",   "source"};
    SpeciesRegistry reg;
    int index = 0;
    for (const auto& entry : doc) {
        const std::string where = "entry " + std::to_string(index);
        ++index;
        if (!entry.is_object())
            throw ValidationError("species file: " + where + " must be an object");
        for (const auto& [key, value] : entry.items()) {
            (void)value;
            if (!known.count(key))
                throw ValidationError("species file: unknown field '" + key + "' in " + where);
        }
        const std::string label = require_string(entry, "label", where);
        const std::string source = require_string(entry, "source", where);

        const bool has_wl = entry.contains("wavelength_nm");
        const bool has_om = entry.contains("omega_rad_s");
        if (has_wl == has_om)
            throw ValidationError("species file: exactly one of 'wavelength_nm' and "
                                  "'omega_rad_s' is required in " +
                                  where + " (label '" + label + "')");
        double omega;
        if (has_wl) {
            const double wl = require_number(entry, "wavelength_nm", where);
            if (!(wl > 0.0))
                throw ValidationError("species file: 'wavelength_nm' must be positive in " +
                                      where + " (label '" + label + "')");
            omega = 2.0 * cn::pi * cn::c0 / (wl * 1e-9);
        } else {
            omega = require_number(entry, "omega_rad_s", where);
        }
        const double gamma = require_number(entry, "gamma_rad_s", where);

        Vec3 axis = {0.0, 0.0, 1.0};
        if (entry.contains("dipole_axis")) {
            const auto& ax = entry["dipole_axis"];
            if (!ax.is_array() || ax.size() != 3 || !ax[0].is_number() || !ax[1].is_number() ||
                !ax[2].is_number())
                throw ValidationError("species file: 'dipole_axis' must be an array of three "
                                      "numbers in " +
                                      where + " (label '" + label + "')");
            axis = {ax[0].get<double>(), ax[1].get<double>(), ax[2].get<double>()};
        }

        if (reg.count(label))
            throw ValidationError("species file: duplicate label '" + label + "'");
        reg.emplace(label, make_species(label, omega, gamma, axis, source));
    }
    return reg;
}

const AtomSpecies& find_species(const SpeciesRegistry& reg, const std::string& label) {
    const auto it = reg.find(label);
    if (it == reg.end()) throw ValidationError("unknown species label '" + label + "'");
    return it->second;
}

} // namespace recoil
