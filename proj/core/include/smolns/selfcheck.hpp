#pragma once

#include <string>
#include <vector>

#include "smolns/fluid.hpp"
#include "smolns/ladder.hpp"
#include "smolns/phase_field.hpp"

namespace smolns {

// Deterministic band-limited random fields for property checks. Gaussian
// coefficients with a smooth spectral decay, dealiased, Hermitian by
// construction; the solenoidal variant is Leray projected.
SpectralField2D make_random_field(const GridSpec2D& grid, unsigned seed,
                                  double decay = 4.0);
VelocityField make_random_solenoidal(const GridSpec2D& grid, unsigned seed,
                                     double decay = 4.0);
PhaseField make_random_phase(const GridSpec2D& grid, const FiberGrid& fiber, unsigned seed,
                             double decay = 4.0);

struct CheckResult {
    std::string name;
    double value = 0.0;  // measured residual / defect
    double limit = 0.0;
    bool pass = false;
};

// Exact-identity and invariant checks on synthetic fields: partition of
// unity, ring support disjointness, block orthogonality, transform round
// trip, the Bony identity, the heat multiplier bound, fiber calculus
// identities, the rest-term telescoping identities, Leray idempotence and
// the N_q Fubini identity.
std::vector<CheckResult> run_identity_suite(int nx, int nm, unsigned seed);

}  // namespace smolns
