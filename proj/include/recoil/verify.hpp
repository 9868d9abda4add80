#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "recoil/species.hpp"

namespace recoil {

// Result of one verification check. `measured` is the residual or observable
// the check bounds, `tolerance` the bound.
struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

using CheckSink = std::function<void(const CheckResult&)>;

// Closed-form invariant suite (sub-10-seconds): free-space normalization,
// interference-channel cancellation (closed form and quadrature), analytic
// gradient vs finite differences, suppression hierarchy, momentum
// bookkeeping, far-field differential peak location, envelope factorization,
// parity and symmetry relations, quadrature convergence, rescale invariance,
// scan determinism. Returns the number of failed checks.
int verify_fast(const SpeciesRegistry& reg, std::uint64_t seed, const CheckSink& sink);

// Finite-box mode-sum suite: closed-form amplitudes vs adaptive time
// quadrature, polarization completeness, interference density vs the angular
// distribution, probability normalization with box-size convergence, and the
// directional forward/backward split. Returns the number of failed checks.
int verify_oracle(const SpeciesRegistry& reg, std::uint64_t seed, const CheckSink& sink);

} // namespace recoil
