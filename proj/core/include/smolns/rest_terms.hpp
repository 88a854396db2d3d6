#pragma once

#include <array>
#include <memory>

#include "smolns/kinetic.hpp"
#include "smolns/ladder.hpp"
#include "smolns/monitor.hpp"

namespace smolns {

// Block decomposition of the two nonlinear transport terms of the kinetic
// equation. For each ring q the six rest terms satisfy the telescoping
// identities
//
//   Delta_q(v . grad f)        = R1 + R2 + R3 + S_{q-1}v . grad f_q
//   Delta_q(div_g(G(v,f) f))   = R4 + R5 + R6 + div_g(G(S_{q-1}v, S_{q-1}f) f_q)
//
// with R1 = Delta_q T_{d_j f} v^j, R2 = [Delta_q, T_{v^j} d_j] f,
// R3 = Delta_q d_j R(v^j, f) + ring-neighbor corrections, and R4..R6 the
// analogous paraproduct / commutator / remainder pieces of div_g(G f),
// the drift entering through its S_{q-1} filtering (G is linear in (v,f)).
// Commutators are evaluated literally as differences of composed
// operators. v must be divergence free and both fields dealiased; the
// identities then hold to rounding error.
struct RestTermsResult {
    int q = 0;
    std::array<PhaseField, 6> r;  // R_q^1 .. R_q^6
    PhaseField transport_lhs, transport_main;
    PhaseField drift_lhs, drift_main;
    std::array<double, 6> term_norms{};       // L^2_x(L^2_theta) magnitudes
    double transport_residual = 0.0;          // absolute L^2_x(L^2_theta)
    double drift_residual = 0.0;
    double transport_residual_rel = 0.0;      // relative to the largest piece
    double drift_residual_rel = 0.0;
};

// Precomputes every q-independent block cache and paraproduct once, so a
// sweep over all rings costs little more than a single ring. Memory is
// around twenty spectral slices per theta point; intended for the
// analysis-scale grids the identity checks run at.
class RestTermEngine {
public:
    RestTermEngine(const VelocityField& v, const PhaseField& f, const KernelSpec& kernel,
                   const DriftCoefficients& coeffs, const DyadicLadder& ladder);
    ~RestTermEngine();

    RestTermsResult compute(int q) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

RestTermsResult rest_term_decomposition(const VelocityField& v, const PhaseField& f, int q,
                                        const KernelSpec& kernel,
                                        const DriftCoefficients& coeffs,
                                        const DyadicLadder& ladder);

}  // namespace smolns
