#include "smolns/kinetic.hpp"

#include <cmath>

#include "smolns/errors.hpp"
#include "smolns/fft.hpp"
#include "smolns/norms.hpp"
#include "smolns/parallel.hpp"

namespace smolns {

namespace {

constexpr double kImexGamma = 0.29289321881345247560;  // 1 - 1/sqrt(2)

}  // namespace

DriftCoefficients make_rod_drift(const FiberGrid& fiber) {
    DriftCoefficients d{fiber, {}};
    for (auto& v : d.c) v.resize(fiber.nm);
    for (int it = 0; it < fiber.nm; ++it) {
        const double th = fiber.theta(it);
        const double m0 = std::cos(th), m1 = std::sin(th);
        const double p0 = -m1, p1 = m0;  // mperp
        d.c[0][it] = p0 * m0;  // c^{00}
        d.c[1][it] = p0 * m1;  // c^{01}
        d.c[2][it] = p1 * m0;  // c^{10}
        d.c[3][it] = p1 * m1;  // c^{11}
    }
    return d;
}

StressCoefficients make_rod_stress(const FiberGrid& fiber, double gamma2_intensity) {
    StressCoefficients s{fiber, {}, {}, {}, gamma2_intensity};
    s.gamma1_xx.resize(fiber.nm);
    s.gamma1_xy.resize(fiber.nm);
    s.gamma1_yy.resize(fiber.nm);
    for (int it = 0; it < fiber.nm; ++it) {
        const double th = fiber.theta(it);
        const double c = std::cos(th), sn = std::sin(th);
        s.gamma1_xx[it] = c * c - 0.5;
        s.gamma1_xy[it] = c * sn;
        s.gamma1_yy[it] = sn * sn - 0.5;
    }
    return s;
}

PhaseField drift_w(const std::array<std::vector<double>, 4>& gradv_phys,
                   const DriftCoefficients& coeffs, const GridSpec2D& grid) {
    PhaseField w(grid, coeffs.fiber);
    parallel_for(coeffs.fiber.nm, [&](std::size_t ith) {
        auto out = w.slice(static_cast<int>(ith));
        for (int idx = 0; idx < 4; ++idx) {
            const double ci = coeffs.c[idx][ith];
            const auto& gv = gradv_phys[idx];
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += ci * gv[i];
        }
    });
    return w;
}

PhaseField drift_w(const VelocityField& v, const DriftCoefficients& coeffs) {
    return drift_w(velocity_gradient_physical(v), coeffs, v.grid());
}

PhaseField phase_potential(const PhaseField& f, const KernelSpec& kernel) {
    auto c = phase_theta_coeffs(f);
    const std::size_t nsites = f.grid().size();
    for (int im = 0; im < f.fiber().nm; ++im) {
        const double mult = kTwoPi * kernel.coeff(f.fiber().wavenumber(im));
        for (std::size_t j = 0; j < nsites; ++j) c[im * nsites + j] *= mult;
    }
    return phase_from_theta_coeffs(f.grid(), f.fiber(), std::move(c));
}

// grad_g U = d_theta (K f), evaluated in one angular pass.
PhaseField drift_potential_gradient(const PhaseField& f, const KernelSpec& kernel) {
    auto c = phase_theta_coeffs(f);
    const std::size_t nsites = f.grid().size();
    const int nm = f.fiber().nm;
    const std::complex<double> i_unit(0.0, 1.0);
    for (int im = 0; im < nm; ++im) {
        const double m = (im == nm / 2) ? 0.0 : f.fiber().wavenumber(im);
        const std::complex<double> mult =
            i_unit * m * kTwoPi * kernel.coeff(f.fiber().wavenumber(im));
        for (std::size_t j = 0; j < nsites; ++j) c[im * nsites + j] *= mult;
    }
    return phase_from_theta_coeffs(f.grid(), f.fiber(), std::move(c));
}

PhaseField drift_g(const VelocityField& v, const PhaseField& f, const KernelSpec& kernel,
                   const DriftCoefficients& coeffs) {
    PhaseField g = drift_potential_gradient(f, kernel);
    const auto gradv = velocity_gradient_physical(v);
    parallel_for(f.fiber().nm, [&](std::size_t ith) {
        auto out = g.slice(static_cast<int>(ith));
        for (int idx = 0; idx < 4; ++idx) {
            const double ci = coeffs.c[idx][ith];
            const auto& gv = gradv[idx];
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += ci * gv[i];
        }
    });
    return g;
}

PhaseField fp_explicit_rhs(const PhaseField& f, const VelocityField& v,
                           const KernelSpec& kernel, const DriftCoefficients& coeffs) {
    const GridSpec2D& grid = f.grid();
    const FiberGrid& fiber = f.fiber();
    const std::size_t nsites = grid.size();
    const int nm = fiber.nm;

    // Fiber part: -d_theta(G f), with the product cleaned in x first so the
    // 2/3 rule holds in both directions.
    PhaseField gf = drift_g(v, f, kernel, coeffs);
    {
        auto& gv = gf.values();
        const auto& fv = f.values();
        for (std::size_t i = 0; i < gv.size(); ++i) gv[i] *= fv[i];
    }
    std::vector<std::complex<double>> fiber_term(gf.size());
    parallel_for(nm, [&](std::size_t ith) {
        SpectralField2D s = slice_to_spectral(gf, static_cast<int>(ith));
        dealias_inplace(s);
        const auto& c = s.coeffs();
        std::complex<double>* dst = fiber_term.data() + ith * nsites;
        for (std::size_t i = 0; i < nsites; ++i) dst[i] = c[i];
    });
    // d_theta with the angular 2/3 mask, acting on the x-spectral pencils.
    fft::forward_many(nm, static_cast<int>(nsites), static_cast<int>(nsites), 1,
                      fiber_term.data());
    {
        const double scale = 1.0 / nm;
        const std::complex<double> i_unit(0.0, 1.0);
        for (int im = 0; im < nm; ++im) {
            const double m = (im == nm / 2) ? 0.0 : fiber.wavenumber(im);
            const double mask = std::abs(fiber.wavenumber(im)) <= fiber.dealias_k() ? 1.0 : 0.0;
            const std::complex<double> mult = i_unit * m * mask * scale;
            std::complex<double>* row = fiber_term.data() + static_cast<std::size_t>(im) * nsites;
            for (std::size_t j = 0; j < nsites; ++j) row[j] *= mult;
        }
        fft::backward_many(nm, static_cast<int>(nsites), static_cast<int>(nsites), 1,
                           fiber_term.data());
    }

    // Transport part: -div_x(v f) per slice, then invert together with the
    // fiber contribution in a single pass.
    const auto vx = v.x.to_physical();
    const auto vy = v.y.to_physical();
    PhaseField rhs(grid, fiber);
    parallel_for(nm, [&](std::size_t ith) {
        auto fs = f.slice(static_cast<int>(ith));
        std::vector<double> px(nsites), py(nsites);
        for (std::size_t i = 0; i < nsites; ++i) {
            px[i] = vx[i] * fs[i];
            py[i] = vy[i] * fs[i];
        }
        SpectralField2D sx = SpectralField2D::from_physical(grid, px);
        SpectralField2D sy = SpectralField2D::from_physical(grid, py);
        SpectralField2D div = derivative(sx, 0) + derivative(sy, 1);
        dealias_inplace(div);
        auto& c = div.coeffs();
        const std::complex<double>* fib = fiber_term.data() + ith * nsites;
        for (std::size_t i = 0; i < nsites; ++i) c[i] = -c[i] - fib[i];
        set_slice_from_spectral(rhs, static_cast<int>(ith), div);
    });
    return rhs;
}

PhaseField kinetic_diffusion(const PhaseField& f, double scale) {
    auto c = phase_theta_coeffs(f);
    const std::size_t nsites = f.grid().size();
    for (int im = 0; im < f.fiber().nm; ++im) {
        const double m = f.fiber().wavenumber(im);
        const double mult = -scale * m * m;
        std::complex<double>* row = c.data() + static_cast<std::size_t>(im) * nsites;
        for (std::size_t j = 0; j < nsites; ++j) row[j] *= mult;
    }
    return phase_from_theta_coeffs(f.grid(), f.fiber(), std::move(c));
}

PhaseField kinetic_implicit_solve(const PhaseField& f, double a) {
    auto c = phase_theta_coeffs(f);
    const std::size_t nsites = f.grid().size();
    for (int im = 0; im < f.fiber().nm; ++im) {
        const double m = f.fiber().wavenumber(im);
        const double mult = 1.0 / (1.0 + a * m * m);
        std::complex<double>* row = c.data() + static_cast<std::size_t>(im) * nsites;
        for (std::size_t j = 0; j < nsites; ++j) row[j] *= mult;
    }
    return phase_from_theta_coeffs(f.grid(), f.fiber(), std::move(c));
}

PhaseField fp_rhs(const PhaseField& f, const VelocityField& v, const KernelSpec& kernel,
                  const DriftCoefficients& coeffs, const KineticOptions& opts) {
    PhaseField rhs = fp_explicit_rhs(f, v, kernel, coeffs);
    if (opts.diffusion_scale != 0.0) rhs += kinetic_diffusion(f, opts.diffusion_scale);
    return rhs;
}

double kinetic_cfl_limit(const VelocityField& v, const PhaseField& drift, double safety) {
    const double vmax = std::max(lebesgue_norm(v.x, INFINITY), lebesgue_norm(v.y, INFINITY));
    double gmax = 0.0;
    for (double g : drift.values()) gmax = std::max(gmax, std::abs(g));
    double limit = INFINITY;
    if (vmax > 0.0) limit = std::min(limit, safety * v.grid().dx() / vmax);
    if (gmax > 0.0) limit = std::min(limit, safety * drift.fiber().dtheta() / gmax);
    return limit;
}

PhaseField step_kinetic_stages(const PhaseField& f, const VelocityField& v_stage1,
                               const VelocityField& v_stage2, const KernelSpec& kernel,
                               const DriftCoefficients& coeffs, double dt,
                               const KineticOptions& opts, PhaseField* stage2_out) {
    if (dt <= 0.0) throw std::domain_error("step_kinetic: dt must be > 0");
    if (opts.check_cfl) {
        const PhaseField g = drift_g(v_stage1, f, kernel, coeffs);
        const double limit = kinetic_cfl_limit(v_stage1, g, opts.cfl_safety);
        if (dt > limit)
            throw CflError("kinetic step rejected: dt=" + std::to_string(dt) +
                           " exceeds CFL limit " + std::to_string(limit));
    }
    const double gdt = kImexGamma * dt * opts.diffusion_scale;

    // U1 = (I - gamma dt L)^{-1} f^n
    PhaseField u1 = kinetic_implicit_solve(f, gdt);
    PhaseField lu1 = kinetic_diffusion(u1, opts.diffusion_scale);
    PhaseField n1 = fp_explicit_rhs(u1, v_stage1, kernel, coeffs);

    // U2 = (I - gamma dt L)^{-1} (f^n + dt N1 + (1-2gamma) dt L U1)
    PhaseField b = f;
    {
        auto& bv = b.values();
        const auto& n1v = n1.values();
        const auto& l1v = lu1.values();
        const double c1 = dt, c2 = (1.0 - 2.0 * kImexGamma) * dt;
        for (std::size_t i = 0; i < bv.size(); ++i) bv[i] += c1 * n1v[i] + c2 * l1v[i];
    }
    PhaseField u2 = kinetic_implicit_solve(b, gdt);
    PhaseField lu2 = kinetic_diffusion(u2, opts.diffusion_scale);
    if (stage2_out) *stage2_out = u2;
    PhaseField n2 = fp_explicit_rhs(u2, v_stage2, kernel, coeffs);

    // f^{n+1} = f^n + dt/2 (N1 + N2) + dt/2 (L U1 + L U2)
    PhaseField out = f;
    auto& ov = out.values();
    const auto& a1 = n1.values();
    const auto& a2 = n2.values();
    const auto& d1 = lu1.values();
    const auto& d2 = lu2.values();
    const double h = 0.5 * dt;
    for (std::size_t i = 0; i < ov.size(); ++i)
        ov[i] += h * (a1[i] + a2[i] + d1[i] + d2[i]);
    return out;
}

PhaseField step_kinetic(const PhaseField& f, const VelocityField& v,
                        const KernelSpec& kernel, const DriftCoefficients& coeffs,
                        double dt, const KineticOptions& opts) {
    return step_kinetic_stages(f, v, v, kernel, coeffs, dt, opts, nullptr);
}

StressField stress_tau(const PhaseField& f, const StressCoefficients& coeffs) {
    const GridSpec2D& grid = f.grid();
    const FiberGrid& fiber = f.fiber();
    const std::size_t nsites = grid.size();
    const double dtheta = fiber.dtheta();

    // One-particle term: site-wise angular quadrature against the tables.
    std::vector<double> txx(nsites, 0.0), txy(nsites, 0.0), tyy(nsites, 0.0);
    for (int ith = 0; ith < fiber.nm; ++ith) {
        auto fs = f.slice(ith);
        const double gxx = coeffs.gamma1_xx[ith] * dtheta;
        const double gxy = coeffs.gamma1_xy[ith] * dtheta;
        const double gyy = coeffs.gamma1_yy[ith] * dtheta;
        for (std::size_t i = 0; i < nsites; ++i) {
            txx[i] += gxx * fs[i];
            txy[i] += gxy * fs[i];
            tyy[i] += gyy * fs[i];
        }
    }

    // Two-particle term from the site moments.
    if (coeffs.gamma2_intensity != 0.0) {
        const double g = coeffs.gamma2_intensity;
        const auto rho = f.site_density();
        const auto a2 = f.angular_moment_cos(2);
        const auto b2 = f.angular_moment_sin(2);
        for (std::size_t i = 0; i < nsites; ++i) {
            const double plus = rho[i] + a2[i];
            const double minus = rho[i] - a2[i];
            txx[i] += -g * 0.25 * (plus * plus + b2[i] * b2[i]);
            tyy[i] += -g * 0.25 * (minus * minus + b2[i] * b2[i]);
            txy[i] += -g * 0.5 * rho[i] * b2[i];
        }
    }

    StressField tau(grid);
    tau.xx = SpectralField2D::from_physical(grid, txx);
    tau.xy = SpectralField2D::from_physical(grid, txy);
    tau.yy = SpectralField2D::from_physical(grid, tyy);
    dealias_inplace(tau.xx);
    dealias_inplace(tau.xy);
    dealias_inplace(tau.yy);
    return tau;
}

}  // namespace smolns
