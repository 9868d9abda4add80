#include "recoil/pair.hpp"

#include <algorithm>
#include <cmath>

#include "recoil/errors.hpp"

namespace recoil {

double AtomPair::x() const { return excited.k() * R; }

AtomPair make_pair(const AtomSpecies& A, const AtomSpecies& B, double R, const Vec3& axis,
                   Orientation orientation, double detuning_floor) {
    if (!(R > 0.0)) throw ValidationError("pair separation must be positive");
    require_unit(axis, "pair axis");
    if (!(detuning_floor > 0.0)) throw ValidationError("detuning floor must be positive");

    const double detuning = A.omega - B.omega;
    const double gmax = std::max(A.gamma, B.gamma);
    if (std::abs(detuning) < detuning_floor * gmax)
        throw ValidationError("indistinguishable species: |omega_A - omega_B| for pair ('" +
                              A.label + "', '" + B.label + "') is below " +
                              std::to_string(detuning_floor) +
                              " x max linewidth; the perturbative channel expansion does not "
                              "apply");

    AtomPair p;
    p.excited = A;
    p.ground = B;
    p.R = R;
    p.axis = axis;
    p.Rvec = R * axis;
    p.detuning = detuning;
    p.orientation = orientation;
    return p;
}

AtomPair with_x(const AtomPair& pair, double x) {
    if (!(x > 0.0)) throw ValidationError("pair separation must be positive");
    AtomPair p = pair;
    p.R = x / pair.excited.k();
    p.Rvec = p.R * p.axis;
    return p;
}

} // namespace recoil
