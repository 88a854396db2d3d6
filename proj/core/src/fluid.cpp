#include "smolns/fluid.hpp"

#include <cmath>

#include "smolns/errors.hpp"
#include "smolns/norms.hpp"

namespace smolns {

double VelocityField::divergence_max() const {
    const GridSpec2D& g = grid();
    double worst = 0.0;
    for (int iy = 0; iy < g.ny; ++iy) {
        const double ky = g.wavenumber_y(iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            const double kx = g.wavenumber_x(ix);
            worst = std::max(worst, std::abs(kx * x.at(ix, iy) + ky * y.at(ix, iy)));
        }
    }
    return worst;
}

VelocityField leray_project(const SpectralField2D& u1, const SpectralField2D& u2) {
    require_same_grid(u1, u2);
    const GridSpec2D& g = u1.grid();
    VelocityField v(g);
    for (int iy = 0; iy < g.ny; ++iy) {
        const double ky = g.wavenumber_y(iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            const double kx = g.wavenumber_x(ix);
            const double k2 = kx * kx + ky * ky;
            const std::complex<double> a = u1.at(ix, iy);
            const std::complex<double> b = u2.at(ix, iy);
            if (k2 == 0.0) {
                v.x.at(ix, iy) = a;
                v.y.at(ix, iy) = b;
            } else {
                const std::complex<double> kd = (kx * a + ky * b) / k2;
                v.x.at(ix, iy) = a - kx * kd;
                v.y.at(ix, iy) = b - ky * kd;
            }
        }
    }
    return v;
}

VelocityField leray_project(const VelocityField& u) { return leray_project(u.x, u.y); }

SpectralField2D velocity_gradient(const VelocityField& v, int i, int j) {
    const SpectralField2D& comp = (i == 0) ? v.x : v.y;
    return derivative(comp, j);
}

std::array<std::vector<double>, 4> velocity_gradient_physical(const VelocityField& v) {
    std::array<std::vector<double>, 4> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[2 * i + j] = velocity_gradient(v, i, j).to_physical();
    return out;
}

VelocityField nse_explicit_rhs(const VelocityField& v, const StressField& tau) {
    require_same_grid(v.x, tau.xx);
    // Advection in divergence form: -d_j (v_i v_j); products dealiased.
    SpectralField2D vxx = multiply(v.x, v.x);
    SpectralField2D vxy = multiply(v.x, v.y);
    SpectralField2D vyy = multiply(v.y, v.y);

    SpectralField2D fx = derivative(tau.xx, 0) + derivative(tau.xy, 1) -
                         derivative(vxx, 0) - derivative(vxy, 1);
    SpectralField2D fy = derivative(tau.xy, 0) + derivative(tau.yy, 1) -
                         derivative(vxy, 0) - derivative(vyy, 1);
    dealias_inplace(fx);
    dealias_inplace(fy);
    return leray_project(fx, fy);
}

VelocityField nse_rhs(const VelocityField& v, const StressField& tau, double nu) {
    VelocityField rhs = nse_explicit_rhs(v, tau);
    rhs.x += nu * laplacian(v.x);
    rhs.y += nu * laplacian(v.y);
    return rhs;
}

namespace {

VelocityField heat_apply(const VelocityField& v, double nu, double dt) {
    return {heat_propagate(v.x, dt, nu), heat_propagate(v.y, dt, nu)};
}

}  // namespace

double fluid_cfl_limit(const VelocityField& v, double safety) {
    const double vmax = std::max(lebesgue_norm(v.x, INFINITY), lebesgue_norm(v.y, INFINITY));
    if (vmax == 0.0) return INFINITY;
    return safety * v.grid().dx() / vmax;
}

VelocityField step_fluid(const VelocityField& v, const StressField& tau, double nu,
                         double dt, const FluidStepOptions& opts) {
    if (opts.check_cfl) {
        const double limit = fluid_cfl_limit(v, opts.cfl_safety);
        if (dt > limit)
            throw CflError("fluid step rejected: dt=" + std::to_string(dt) +
                           " exceeds CFL limit " + std::to_string(limit));
    }
    const VelocityField n0 = nse_explicit_rhs(v, tau);

    VelocityField pred(v.grid());
    pred.x = v.x + dt * n0.x;
    pred.y = v.y + dt * n0.y;
    pred = heat_apply(pred, nu, dt);

    const VelocityField n1 = nse_explicit_rhs(pred, tau);

    VelocityField half(v.grid());
    half.x = v.x + 0.5 * dt * n0.x;
    half.y = v.y + 0.5 * dt * n0.y;
    half = heat_apply(half, nu, dt);

    VelocityField out(v.grid());
    out.x = half.x + 0.5 * dt * n1.x;
    out.y = half.y + 0.5 * dt * n1.y;
    return leray_project(out);  // removes rounding-level divergence
}

EnergyBudget energy_budget(const VelocityField& v, const StressField& tau, double nu) {
    EnergyBudget b;
    const double e1 = lebesgue_norm(v.x, 2.0);
    const double e2 = lebesgue_norm(v.y, 2.0);
    b.kinetic = 0.5 * (e1 * e1 + e2 * e2);

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const double g = lebesgue_norm(velocity_gradient(v, i, j), 2.0);
            b.dissipation += nu * g * g;
        }

    // S = integral v . (div tau) over the box, collocation quadrature.
    SpectralField2D divx = derivative(tau.xx, 0) + derivative(tau.xy, 1);
    SpectralField2D divy = derivative(tau.xy, 0) + derivative(tau.yy, 1);
    const auto px = v.x.to_physical();
    const auto py = v.y.to_physical();
    const auto dx = divx.to_physical();
    const auto dy = divy.to_physical();
    double acc = 0.0;
    for (std::size_t i = 0; i < px.size(); ++i) acc += px[i] * dx[i] + py[i] * dy[i];
    b.stress_power = acc * v.grid().cell_area();
    return b;
}

SpectralField2D recover_pressure(const VelocityField& v, const StressField& tau) {
    // -Lap p = div(v.grad v - div tau)  =>  p_hat = div(w)_hat / (-|k|^2)
    // with w = -v.grad v + div tau (advection again in divergence form).
    SpectralField2D wx = derivative(tau.xx, 0) + derivative(tau.xy, 1) -
                         derivative(multiply(v.x, v.x), 0) - derivative(multiply(v.x, v.y), 1);
    SpectralField2D wy = derivative(tau.xy, 0) + derivative(tau.yy, 1) -
                         derivative(multiply(v.x, v.y), 0) - derivative(multiply(v.y, v.y), 1);
    const GridSpec2D& g = v.grid();
    SpectralField2D p(g);
    const std::complex<double> i_unit(0.0, 1.0);
    for (int iy = 0; iy < g.ny; ++iy) {
        const double ky = g.wavenumber_y(iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            const double kx = g.wavenumber_x(ix);
            const double k2 = kx * kx + ky * ky;
            if (k2 == 0.0) continue;
            const std::complex<double> divw =
                i_unit * (kx * wx.at(ix, iy) + ky * wy.at(ix, iy));
            p.at(ix, iy) = divw / (-k2);
        }
    }
    dealias_inplace(p);
    return p;
}

VelocityField taylor_green(const GridSpec2D& grid, double amplitude) {
    std::vector<double> vx(grid.size()), vy(grid.size());
    for (int iy = 0; iy < grid.ny; ++iy) {
        const double y = grid.dy() * iy;
        for (int ix = 0; ix < grid.nx; ++ix) {
            const double x = grid.dx() * ix;
            vx[static_cast<std::size_t>(iy) * grid.nx + ix] =
                amplitude * std::sin(x) * std::cos(y);
            vy[static_cast<std::size_t>(iy) * grid.nx + ix] =
                -amplitude * std::cos(x) * std::sin(y);
        }
    }
    return {SpectralField2D::from_physical(grid, vx),
            SpectralField2D::from_physical(grid, vy)};
}

}  // namespace smolns
