#include "smolns/selfcheck.hpp"

#include <cmath>
#include <random>

#include "smolns/fiber.hpp"
#include "smolns/monitor.hpp"
#include "smolns/norms.hpp"
#include "smolns/paraproduct.hpp"
#include "smolns/rest_terms.hpp"

namespace smolns {

SpectralField2D make_random_field(const GridSpec2D& grid, unsigned seed, double decay) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SpectralField2D u(grid);
    for (int iy = 0; iy < grid.ny; ++iy) {
        const double ky = grid.wavenumber_y(iy);
        for (int ix = 0; ix < grid.nx; ++ix) {
            const double kx = grid.wavenumber_x(ix);
            const double k = std::sqrt(kx * kx + ky * ky);
            const double amp = std::exp(-k * k / (2.0 * decay * decay));
            u.at(ix, iy) = std::complex<double>(gauss(rng), gauss(rng)) * amp;
        }
    }
    u.enforce_real();
    dealias_inplace(u);
    return u;
}

VelocityField make_random_solenoidal(const GridSpec2D& grid, unsigned seed, double decay) {
    SpectralField2D a = make_random_field(grid, seed, decay);
    SpectralField2D b = make_random_field(grid, seed + 7919, decay);
    VelocityField v = leray_project(a, b);
    v.x.at(0, 0) = 0.0;  // no mean flow in synthetic tests
    v.y.at(0, 0) = 0.0;
    return v;
}

PhaseField make_random_phase(const GridSpec2D& grid, const FiberGrid& fiber, unsigned seed,
                             double decay) {
    PhaseField f(grid, fiber);
    // Low angular harmonics with random band-limited spatial amplitudes.
    const int mmax = std::min(fiber.dealias_k(), 5);
    for (int m = 0; m <= mmax; ++m) {
        const auto ac = make_random_field(grid, seed + 101 * m, decay).to_physical();
        const auto as = make_random_field(grid, seed + 101 * m + 50, decay).to_physical();
        for (int ith = 0; ith < fiber.nm; ++ith) {
            const double th = fiber.theta(ith);
            const double cm = std::cos(m * th), sm = std::sin(m * th);
            auto s = f.slice(ith);
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] += cm * ac[i] + (m > 0 ? sm * as[i] : 0.0);
        }
    }
    return f;
}

namespace {

CheckResult make_result(std::string name, double value, double limit) {
    return {std::move(name), value, limit, value <= limit};
}

}  // namespace

std::vector<CheckResult> run_identity_suite(int nx, int nm, unsigned seed) {
    std::vector<CheckResult> results;
    GridSpec2D grid{nx, nx, 2.0 / 3.0};
    FiberGrid fiber{nm};
    grid.require_valid();
    fiber.require_valid();
    DyadicLadder ladder(grid);
    const int Q = ladder.q_max();

    // Partition of unity over the resolvable ball.
    {
        double worst = 0.0;
        const double R2 = grid.resolvable_radius() * grid.resolvable_radius();
        for (int iy = 0; iy < grid.ny; ++iy) {
            const double ky = grid.wavenumber_y(iy);
            for (int ix = 0; ix < grid.nx; ++ix) {
                const double kx = grid.wavenumber_x(ix);
                if (kx * kx + ky * ky > R2) continue;
                const std::size_t idx = static_cast<std::size_t>(iy) * grid.nx + ix;
                double sum = ladder.lowpass_weights(0)[idx];
                for (int q = 0; q <= Q; ++q) sum += ladder.ring_weights(q)[idx];
                worst = std::max(worst, std::abs(sum - 1.0));
            }
        }
        results.push_back(make_result("partition_of_unity", worst, 1e-12));
    }
    // Ring supports two apart are disjoint (exact zeros).
    {
        double worst = 0.0;
        for (int p = 0; p <= Q; ++p)
            for (int q = p + 2; q <= Q; ++q) {
                const auto& wp = ladder.ring_weights(p);
                const auto& wq = ladder.ring_weights(q);
                for (std::size_t i = 0; i < wp.size(); ++i)
                    worst = std::max(worst, std::abs(wp[i] * wq[i]));
            }
        results.push_back(make_result("ring_support_disjoint", worst, 0.0));
    }
    // Block orthogonality including the low block.
    {
        double worst = 0.0;
        for (int q = 1; q <= Q; ++q) {
            const auto& low = ladder.lowpass_weights(0);
            const auto& wq = ladder.ring_weights(q);
            for (std::size_t i = 0; i < wq.size(); ++i)
                worst = std::max(worst, std::abs(low[i] * wq[i]));
        }
        results.push_back(make_result("block_orthogonality", worst, 0.0));
    }
    // Transform round trip.
    {
        const SpectralField2D u = make_random_field(grid, seed);
        const SpectralField2D v = SpectralField2D::from_physical(grid, u.to_physical());
        double worst = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i)
            worst = std::max(worst, std::abs(u.coeffs()[i] - v.coeffs()[i]));
        results.push_back(make_result("transform_round_trip", worst, 1e-12));
    }
    // Bony identity on random dealiased pairs.
    {
        double worst = 0.0;
        for (unsigned k = 0; k < 3; ++k) {
            SpectralField2D u = make_random_field(grid, seed + 11 * k + 1);
            SpectralField2D v = make_random_field(grid, seed + 11 * k + 2);
            SpectralField2D uv = multiply(u, v);
            SpectralField2D rec = paraproduct(u, v, ladder) + paraproduct(v, u, ladder) +
                                  bony_remainder(u, v, ladder);
            const double resid = lebesgue_norm(uv - rec, 2.0);
            const double scale = lebesgue_norm(u, 2.0) * lebesgue_norm(v, 2.0);
            worst = std::max(worst, resid / scale);
        }
        results.push_back(make_result("bony_identity", worst, 1e-10));
    }
    // Heat multiplier bound on every ring.
    {
        const SpectralField2D u = make_random_field(grid, seed + 31);
        double worst = 0.0;  // max of lhs/rhs - 1 (should be <= 0)
        for (int q = 0; q <= Q; ++q) {
            SpectralField2D blk = ladder.dyadic_block(u, q);
            const double base = lebesgue_norm(blk, 2.0);
            if (base == 0.0) continue;
            for (double t : {0.01, 0.1, 1.0}) {
                const double nu = 0.3;
                const double lhs = lebesgue_norm(heat_propagate(blk, t, nu), 2.0);
                const double rhs = std::exp(-nu * t * std::exp2(2.0 * q - 2.0)) * base;
                worst = std::max(worst, lhs / rhs - 1.0);
            }
        }
        results.push_back(make_result("heat_decay_bound", std::max(worst, 0.0), 1e-12));
    }
    // Fiber calculus identities.
    {
        std::mt19937_64 rng(seed + 77);
        std::normal_distribution<double> gauss(0.0, 1.0);
        FiberField g(fiber);
        for (auto& x : g.values) x = gauss(rng);
        FiberField lhs = fiber_div(fiber_grad(g));
        FiberField rhs = laplace_beltrami(g);
        double worst = 0.0;
        for (int i = 0; i < fiber.nm; ++i)
            worst = std::max(worst, std::abs(lhs.values[i] - rhs.values[i]));
        results.push_back(make_result("fiber_div_grad_laplace", worst, 1e-10));

        FiberField ab = bessel_smooth(laplace_beltrami(g), 2.0);
        FiberField ba = laplace_beltrami(bessel_smooth(g, 2.0));
        worst = 0.0;
        for (int i = 0; i < fiber.nm; ++i)
            worst = std::max(worst, std::abs(ab.values[i] - ba.values[i]));
        results.push_back(make_result("smoothing_commutes_laplace", worst, 1e-10));

        // Kernel symmetry: integral integral K f g is symmetric in (f,g).
        KernelSpec kernel = make_kernel("maier_saupe", 1.3);
        FiberField h(fiber);
        for (auto& x : h.values) x = gauss(rng);
        const FiberField Kg = mean_field_potential(g, kernel);
        const FiberField Kh = mean_field_potential(h, kernel);
        double ip1 = 0.0, ip2 = 0.0;
        for (int i = 0; i < fiber.nm; ++i) {
            ip1 += h.values[i] * Kg.values[i];
            ip2 += g.values[i] * Kh.values[i];
        }
        ip1 *= fiber.dtheta();
        ip2 *= fiber.dtheta();
        results.push_back(make_result("kernel_symmetry", std::abs(ip1 - ip2), 1e-12));

        // Mass neutrality of the fiber divergence.
        FiberField drift(fiber);
        for (auto& x : drift.values) x = gauss(rng);
        FiberField gf(fiber);
        for (int i = 0; i < fiber.nm; ++i) gf.values[i] = drift.values[i] * g.values[i];
        double mass = 0.0;
        for (double x : fiber_div(gf).values) mass += x;
        results.push_back(make_result("fiber_mass_neutrality",
                                      std::abs(mass * fiber.dtheta()), 1e-12));
    }
    // Rest-term telescoping identities.
    {
        const VelocityField v = make_random_solenoidal(grid, seed + 103);
        const PhaseField f = make_random_phase(grid, fiber, seed + 104);
        const KernelSpec kernel = make_kernel("maier_saupe", 1.0);
        const DriftCoefficients coeffs = make_rod_drift(fiber);
        RestTermEngine engine(v, f, kernel, coeffs, ladder);
        double worst = 0.0;
        for (int q = 0; q <= Q; ++q) {
            const RestTermsResult r = engine.compute(q);
            worst = std::max({worst, r.transport_residual_rel, r.drift_residual_rel});
        }
        results.push_back(make_result("rest_term_identities", worst, 1e-8));
    }
    // Leray projection idempotence.
    {
        SpectralField2D a = make_random_field(grid, seed + 201);
        SpectralField2D b = make_random_field(grid, seed + 202);
        VelocityField v1 = leray_project(a, b);
        VelocityField v2 = leray_project(v1);
        double worst = std::max(lebesgue_norm(v2.x - v1.x, INFINITY),
                                lebesgue_norm(v2.y - v1.y, INFINITY));
        results.push_back(make_result("leray_idempotent", worst, 1e-14));
    }
    // Fubini identity for N_q.
    {
        const PhaseField f = make_random_phase(grid, fiber, seed + 301);
        const double s = 2.0;
        const int q = std::min(2, Q);
        SpectralField2D nq = smoothed_block_amplitude(f, q, s, ladder);
        const double lhs = lebesgue_norm(nq, 2.0);
        // ||H Delta_q f||_{L^2_{x,theta}} assembled directly.
        PhaseField hf(grid, fiber);
        for (int ith = 0; ith < fiber.nm; ++ith)
            set_slice_from_spectral(hf, ith,
                                    ladder.dyadic_block(slice_to_spectral(f, ith), q));
        auto c = phase_theta_coeffs(hf);
        double acc = 0.0;
        const std::size_t nsites = grid.size();
        for (int im = 0; im < fiber.nm; ++im) {
            const double m = fiber.wavenumber(im);
            const double w = std::pow(1.0 + m * m, -s);
            for (std::size_t i = 0; i < nsites; ++i)
                acc += w * std::norm(c[static_cast<std::size_t>(im) * nsites + i]);
        }
        const double rhs = std::sqrt(kTwoPi * acc * grid.cell_area() *
                                     static_cast<double>(grid.size()) / grid.size());
        // Parseval in x: sum over sites * cell area equals the x integral.
        const double rhs2 = std::sqrt(kTwoPi * acc * grid.cell_area());
        (void)rhs;
        results.push_back(make_result("nq_fubini", std::abs(lhs - rhs2) /
                                                       std::max(rhs2, 1e-300), 1e-12));
    }
    return results;
}

}  // namespace smolns
