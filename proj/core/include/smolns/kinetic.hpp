#pragma once

#include <array>

#include "smolns/fiber.hpp"
#include "smolns/fluid.hpp"
#include "smolns/phase_field.hpp"

namespace smolns {

// Angular coefficients c^{ij}(theta) of the velocity-gradient drift
// W = c^{ij} d_j v_i; index c[2i+j]. The rod closure uses
// c^{ij} = mperp_i m_j with m = (cos,sin), mperp = (-sin,cos), which is
// the rate of rotation of a rigid rod advected by grad v.
struct DriftCoefficients {
    FiberGrid fiber;
    std::array<std::vector<double>, 4> c;
};
DriftCoefficients make_rod_drift(const FiberGrid& fiber);

// Stress profiles: gamma1 is the traceless one-particle table
// m_i m_j - delta_ij/2 by default; the two-particle term is the
// Maier-Saupe-consistent quadratic
//   gamma2_ij = -g (m1.m2)(m1_i m2_j + m2_i m1_j)/2,
// a finite trigonometric polynomial, so its double integral reduces to the
// site moments rho, integral f cos 2theta, integral f sin 2theta.
struct StressCoefficients {
    FiberGrid fiber;
    std::vector<double> gamma1_xx, gamma1_xy, gamma1_yy;
    double gamma2_intensity = 0.0;
};
StressCoefficients make_rod_stress(const FiberGrid& fiber, double gamma2_intensity);

struct KineticOptions {
    double diffusion_scale = 1.0;  // 0 disables fiber diffusion (diagnostics)
    double cfl_safety = 0.5;
    bool check_cfl = true;
};

// W(x,theta) from collocated velocity gradients.
PhaseField drift_w(const std::array<std::vector<double>, 4>& gradv_phys,
                   const DriftCoefficients& coeffs, const GridSpec2D& grid);
PhaseField drift_w(const VelocityField& v, const DriftCoefficients& coeffs);

// Mean-field potential U(x,.) = K f(x,.) applied site-wise.
PhaseField phase_potential(const PhaseField& f, const KernelSpec& kernel);
// grad_g U = d_theta (K f), one angular pass.
PhaseField drift_potential_gradient(const PhaseField& f, const KernelSpec& kernel);

// G(v,f) = grad_g U + W.
PhaseField drift_g(const VelocityField& v, const PhaseField& f, const KernelSpec& kernel,
                   const DriftCoefficients& coeffs);

// Explicit Fokker-Planck terms -v.grad_x f - div_g(G f), every product
// dealiased in x and theta; x-transport in divergence form (v is
// divergence free) so the total mass mode is exactly untouched.
PhaseField fp_explicit_rhs(const PhaseField& f, const VelocityField& v,
                           const KernelSpec& kernel, const DriftCoefficients& coeffs);

// Full right-hand side including fiber diffusion.
PhaseField fp_rhs(const PhaseField& f, const VelocityField& v, const KernelSpec& kernel,
                  const DriftCoefficients& coeffs, const KineticOptions& opts = {});

// scale * Lap_g f (exact angular multiplier).
PhaseField kinetic_diffusion(const PhaseField& f, double scale);
// (I - a Lap_g)^{-1} f, the exact substage multiplier 1/(1 + a m^2).
PhaseField kinetic_implicit_solve(const PhaseField& f, double a);

// IMEX-SSP2(2,2,2) step (Pareschi-Russo, gamma = 1 - 1/sqrt(2)): fiber
// diffusion through the implicit substage multipliers, transport and drift
// through the explicit Heun pair. v may differ per explicit stage; the
// coupled driver passes the fluid predictor to the second stage.
// stage2_out, when given, receives the second stage value (the natural
// first-order predictor of f at t+dt).
PhaseField step_kinetic_stages(const PhaseField& f, const VelocityField& v_stage1,
                               const VelocityField& v_stage2, const KernelSpec& kernel,
                               const DriftCoefficients& coeffs, double dt,
                               const KineticOptions& opts = {},
                               PhaseField* stage2_out = nullptr);
PhaseField step_kinetic(const PhaseField& f, const VelocityField& v,
                        const KernelSpec& kernel, const DriftCoefficients& coeffs,
                        double dt, const KineticOptions& opts = {});

// Kinetic stress tau(f): one-particle angular quadrature plus the moment
// form of the quadratic term; symmetric by storage, dealiased in x.
StressField stress_tau(const PhaseField& f, const StressCoefficients& coeffs);

// safety * min(dx/||v||_inf, dtheta/||G||_inf).
double kinetic_cfl_limit(const VelocityField& v, const PhaseField& drift, double safety);

}  // namespace smolns
