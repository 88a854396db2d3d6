#pragma once

#include <array>

#include "smolns/spectral_field.hpp"

namespace smolns {

// Divergence-free velocity, spectral components. Mode-wise k . v_hat = 0.
struct VelocityField {
    SpectralField2D x, y;

    VelocityField() = default;
    explicit VelocityField(const GridSpec2D& g) : x(g), y(g) {}
    VelocityField(SpectralField2D vx, SpectralField2D vy)
        : x(std::move(vx)), y(std::move(vy)) {}

    const GridSpec2D& grid() const { return x.grid(); }
    // max_k |k . v_hat(k)| (spectral divergence residual).
    double divergence_max() const;
};

// Symmetric kinetic stress, symmetry by storage (xy stored once).
struct StressField {
    SpectralField2D xx, xy, yy;

    StressField() = default;
    explicit StressField(const GridSpec2D& g) : xx(g), xy(g), yy(g) {}
    const GridSpec2D& grid() const { return xx.grid(); }
};

// Mode-wise projection v_hat = (I - k k^T/|k|^2) u_hat; the k = 0 mode
// passes through (mean flow is retained).
VelocityField leray_project(const SpectralField2D& u1, const SpectralField2D& u2);
VelocityField leray_project(const VelocityField& u);

// d_j v_i, i/j in {0,1}.
SpectralField2D velocity_gradient(const VelocityField& v, int i, int j);
// All four components to physical space, indexed c[2i+j].
std::array<std::vector<double>, 4> velocity_gradient_physical(const VelocityField& v);

// Explicit forcing P(-div(v x v) + div tau), dealiased. Advection is kept
// in divergence form so the mean (momentum) mode is exactly untouched.
VelocityField nse_explicit_rhs(const VelocityField& v, const StressField& tau);
// Full right-hand side: explicit part + nu Laplacian v.
VelocityField nse_rhs(const VelocityField& v, const StressField& tau, double nu);

struct FluidStepOptions {
    double cfl_safety = 0.5;
    bool check_cfl = true;
};

// One step of the integrating-factor Heun scheme: viscosity through the
// exact multiplier exp(-nu |k|^2 dt), explicit forcing through the
// two-stage second-order (Heun) rule; tau is held fixed across the step.
// Throws CflError when dt exceeds the advective limit.
VelocityField step_fluid(const VelocityField& v, const StressField& tau, double nu,
                         double dt, const FluidStepOptions& opts = {});

// Largest stable dt for the fluid advection, safety * dx / ||v||_inf.
double fluid_cfl_limit(const VelocityField& v, double safety);

struct EnergyBudget {
    double kinetic = 0.0;      // E  = 1/2 ||v||_L2^2
    double dissipation = 0.0;  // D  = nu ||grad v||_L2^2
    double stress_power = 0.0; // S  = integral v . (div tau)
};
EnergyBudget energy_budget(const VelocityField& v, const StressField& tau, double nu);

// Diagnostic only: p with -Lap p = div(v.grad v - div tau), zero mean.
SpectralField2D recover_pressure(const VelocityField& v, const StressField& tau);

// Taylor-Green vortex v = A (sin x cos y, -cos x sin y).
VelocityField taylor_green(const GridSpec2D& grid, double amplitude = 1.0);

}  // namespace smolns
