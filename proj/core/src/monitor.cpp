#include "smolns/monitor.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "smolns/fft.hpp"
#include "smolns/norms.hpp"
#include "smolns/parallel.hpp"

namespace smolns {

namespace {

constexpr double kTimeTol = 1e-12;

// Pointwise Frobenius magnitude of a 2x2 tensor given its four physical
// component arrays.
std::vector<double> tensor_magnitude(const std::array<std::vector<double>, 4>& comps) {
    std::vector<double> out(comps[0].size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        double acc = 0.0;
        for (int c = 0; c < 4; ++c) acc += comps[c][i] * comps[c][i];
        out[i] = std::sqrt(acc);
    }
    return out;
}

std::vector<double> vector_magnitude(const std::vector<double>& a,
                                     const std::vector<double>& b) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::sqrt(a[i] * a[i] + b[i] * b[i]);
    return out;
}

double sup_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

RegularityLedger::RegularityLedger(const GridSpec2D& grid, const FiberGrid& fiber,
                                   MonitorParams params)
    : grid_(grid), fiber_(fiber), params_(params), ladder_(grid) {
    fiber_.require_valid();
    if (params_.s <= 0.0) throw std::domain_error("monitor smoothing order s must be > 0");
}

void RegularityLedger::append_row(LedgerRow row) {
    const std::size_t nblocks = static_cast<std::size_t>(q_max()) + 2;
    const std::size_t nrings = static_cast<std::size_t>(q_max()) + 1;
    if (row.dq_gradv_linf.size() != nblocks || row.sq_gradv_linf.size() != nrings ||
        row.dq_v_lp.size() != nblocks || row.nq_lp.size() != nblocks ||
        row.phi_cum.size() != nrings)
        throw std::invalid_argument("ledger row has wrong block structure");
    if (!rows_.empty() && row.t <= rows_.back().t + kTimeTol)
        throw std::invalid_argument("ledger times must be strictly increasing");
    rows_.push_back(std::move(row));
}

void RegularityLedger::record(const VelocityField& v, const PhaseField& f,
                              const StressField& tau, double nu, double t) {
    if (!(v.grid() == grid_) || !(f.grid() == grid_) || !(f.fiber() == fiber_))
        throw std::invalid_argument("ledger record: field grids do not match");
    if (!rows_.empty() && t <= rows_.back().t + kTimeTol)
        throw std::invalid_argument("ledger times must be strictly increasing");

    const int Q = q_max();
    LedgerRow row;
    row.t = t;
    row.dq_gradv_linf.resize(Q + 2);
    row.sq_gradv_linf.resize(Q + 1);
    row.dq_v_lp.resize(Q + 2);
    row.nq_lp.resize(Q + 2);
    row.phi_cum.resize(Q + 1);

    std::array<SpectralField2D, 4> gradv;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) gradv[2 * i + j] = velocity_gradient(v, i, j);

    // Per-block norms of grad v and v.
    for (int q = -1; q <= Q; ++q) {
        std::array<std::vector<double>, 4> comps;
        for (int c = 0; c < 4; ++c) comps[c] = ladder_.dyadic_block(gradv[c], q).to_physical();
        row.dq_gradv_linf[q + 1] = sup_norm(tensor_magnitude(comps));

        const auto bx = ladder_.dyadic_block(v.x, q).to_physical();
        const auto by = ladder_.dyadic_block(v.y, q).to_physical();
        row.dq_v_lp[q + 1] = lebesgue_norm_physical(vector_magnitude(bx, by),
                                                    grid_.cell_area(), params_.p);

        SpectralField2D nq = smoothed_block_amplitude(f, q, params_.s, ladder_);
        row.nq_lp[q + 1] =
            lebesgue_norm_physical(nq.to_physical(), grid_.cell_area(), params_.p);
    }
    for (int q = 0; q <= Q; ++q) {
        std::array<std::vector<double>, 4> comps;
        for (int c = 0; c < 4; ++c) comps[c] = ladder_.low_pass(gradv[c], q - 1).to_physical();
        row.sq_gradv_linf[q] = sup_norm(tensor_magnitude(comps));
    }

    {
        std::array<std::vector<double>, 4> comps;
        for (int c = 0; c < 4; ++c) comps[c] = gradv[c].to_physical();
        row.gradv_linf = sup_norm(tensor_magnitude(comps));
    }

    // Phi accumulators: trapezoid of (||S_{q-1} grad v||_inf + 1) from t=0.
    if (rows_.empty()) {
        for (int q = 0; q <= Q; ++q) row.phi_cum[q] = 0.0;
    } else {
        const LedgerRow& prev = rows_.back();
        const double h = 0.5 * (t - prev.t);
        for (int q = 0; q <= Q; ++q)
            row.phi_cum[q] =
                prev.phi_cum[q] + h * ((prev.sq_gradv_linf[q] + 1.0) + (row.sq_gradv_linf[q] + 1.0));
    }

    const EnergyBudget budget = energy_budget(v, tau, nu);
    row.e_kin = budget.kinetic;
    row.dissipation = budget.dissipation;
    row.stress_power = budget.stress_power;
    row.mass = f.total_mass();
    row.min_f = f.min_value();
    const double hx = sobolev_norm(v.x, 0.5);
    const double hy = sobolev_norm(v.y, 0.5);
    row.v_h12 = std::sqrt(hx * hx + hy * hy);

    rows_.push_back(std::move(row));
}

SpectralField2D smoothed_block_amplitude(const PhaseField& f, int q, double s,
                                         const DyadicLadder& ladder) {
    if (s <= 0.0) throw std::domain_error("smoothed_block_amplitude: s must be > 0");
    const GridSpec2D& grid = f.grid();
    const FiberGrid& fiber = f.fiber();
    const std::size_t nsites = grid.size();
    const int nm = fiber.nm;

    // x-block each theta slice, then take the smoothed angular L^2 per site.
    std::vector<std::complex<double>> buf(f.size());
    parallel_for(nm, [&](std::size_t ith) {
        SpectralField2D slice = ladder.dyadic_block(
            slice_to_spectral(f, static_cast<int>(ith)), q);
        std::vector<double> phys = slice.to_physical();
        std::complex<double>* dst = buf.data() + ith * nsites;
        for (std::size_t i = 0; i < nsites; ++i) dst[i] = phys[i];
    });
    fft::forward_many(nm, static_cast<int>(nsites), static_cast<int>(nsites), 1, buf.data());

    std::vector<double> n2(nsites, 0.0);
    const double scale = 1.0 / nm;
    for (int im = 0; im < nm; ++im) {
        const double m = fiber.wavenumber(im);
        const double w = std::pow(1.0 + m * m, -s);  // bessel multiplier squared
        const std::complex<double>* row = buf.data() + static_cast<std::size_t>(im) * nsites;
        for (std::size_t i = 0; i < nsites; ++i) n2[i] += w * std::norm(row[i] * scale);
    }
    std::vector<double> n(nsites);
    for (std::size_t i = 0; i < nsites; ++i) n[i] = std::sqrt(kTwoPi * n2[i]);
    return SpectralField2D::from_physical(grid, n);
}

namespace {

// Linear interpolation of a per-row quantity at time t; throws outside the
// sampled range.
struct SampleLookup {
    const std::vector<LedgerRow>& rows;

    std::size_t lower_index(double t) const {
        if (rows.empty()) throw std::invalid_argument("ledger is empty");
        if (t < rows.front().t - kTimeTol || t > rows.back().t + kTimeTol)
            throw std::invalid_argument("time outside the sampled range");
        std::size_t i = 0;
        while (i + 1 < rows.size() && rows[i + 1].t <= t + kTimeTol) ++i;
        return i;
    }

    template <class F>
    double interp(double t, F&& value) const {
        const std::size_t i = lower_index(t);
        if (i + 1 >= rows.size() || std::abs(rows[i].t - t) <= kTimeTol) return value(rows[i]);
        const double w = (t - rows[i].t) / (rows[i + 1].t - rows[i].t);
        return (1.0 - w) * value(rows[i]) + w * value(rows[i + 1]);
    }

    // Trapezoid of value(row) over [t0, t1] with interpolated endpoints.
    template <class F>
    double trapezoid(double t0, double t1, F&& value) const {
        if (t1 < t0) throw std::invalid_argument("trapezoid: t1 < t0");
        const std::size_t i0 = lower_index(t0);
        const std::size_t i1 = lower_index(t1);
        if (i0 == i1) {
            const double a = interp(t0, value), b = interp(t1, value);
            return 0.5 * (a + b) * (t1 - t0);
        }
        double acc = 0.5 * (interp(t0, value) + value(rows[i0 + 1])) * (rows[i0 + 1].t - t0);
        for (std::size_t i = i0 + 1; i < i1; ++i)
            acc += 0.5 * (value(rows[i]) + value(rows[i + 1])) * (rows[i + 1].t - rows[i].t);
        acc += 0.5 * (value(rows[i1]) + interp(t1, value)) * (t1 - rows[i1].t);
        return acc;
    }
};

std::pair<std::size_t, std::size_t> window_indices(const RegularityLedger& ledger, double t0,
                                                   double t1) {
    const auto& rows = ledger.rows();
    if (rows.empty()) throw std::invalid_argument("ledger is empty");
    if (t1 < t0) throw std::invalid_argument("window: t1 < t0");
    std::size_t i0 = 0;
    while (i0 < rows.size() && rows[i0].t < t0 - kTimeTol) ++i0;
    std::size_t i1 = rows.size();
    while (i1 > 0 && rows[i1 - 1].t > t1 + kTimeTol) --i1;
    if (i0 >= i1) throw std::invalid_argument("window contains no samples");
    return {i0, i1 - 1};
}

}  // namespace

double phi_integral(const RegularityLedger& ledger, int q, double lambda, double t_hi,
                    double t_lo) {
    if (q < 0 || q > ledger.q_max()) throw std::out_of_range("phi_integral: ring index");
    if (t_hi < t_lo) throw std::invalid_argument("phi_integral: t_hi < t_lo");
    SampleLookup lookup{ledger.rows()};
    auto cum = [q](const LedgerRow& r) { return r.phi_cum[q]; };
    return lambda * (lookup.interp(t_hi, cum) - lookup.interp(t_lo, cum));
}

namespace {

double deteriorating_sup(const RegularityLedger& ledger, double sigma, double lambda,
                         double t0, double t1, bool kinetic) {
    const auto [i0, i1] = window_indices(ledger, t0, t1);
    const auto& rows = ledger.rows();
    double sup = 0.0;
    for (std::size_t i = i0; i <= i1; ++i) {
        for (int q = 0; q <= ledger.q_max(); ++q) {
            const double phi = lambda * (rows[i].phi_cum[q] - rows[i0].phi_cum[q]);
            const double norm = kinetic ? rows[i].nq_lp[q + 1] : rows[i].dq_v_lp[q + 1];
            sup = std::max(sup, std::exp2(q * sigma - phi) * norm);
        }
    }
    return sup;
}

}  // namespace

double deteriorating_sup_velocity(const RegularityLedger& ledger, double sigma,
                                  double lambda, double t0, double t1) {
    return deteriorating_sup(ledger, sigma, lambda, t0, t1, false);
}

double deteriorating_sup_kinetic(const RegularityLedger& ledger, double sigma,
                                 double lambda, double t0, double t1) {
    return deteriorating_sup(ledger, sigma, lambda, t0, t1, true);
}

double gradv_tilde_l1_c0(const RegularityLedger& ledger, double t0, double t1) {
    SampleLookup lookup{ledger.rows()};
    double sup = 0.0;
    for (int q = -1; q <= ledger.q_max(); ++q) {
        const double integral = lookup.trapezoid(
            t0, t1, [q](const LedgerRow& r) { return r.dq_gradv_linf[q + 1]; });
        sup = std::max(sup, integral);
    }
    return sup;
}

std::optional<double> find_smallness_time(const RegularityLedger& ledger, double eps,
                                          double t1) {
    if (eps <= 0.0) throw std::domain_error("find_smallness_time: eps must be > 0");
    for (const auto& row : ledger.rows()) {
        if (row.t > t1 + kTimeTol) break;
        if (gradv_tilde_l1_c0(ledger, row.t, t1) <= eps) return row.t;
    }
    return std::nullopt;
}

HeatHistory heat_history_functional(const RegularityLedger& ledger, int q, double nu,
                                    double t0, double t1) {
    constexpr double c = 0.25;
    const auto [i0, i1] = window_indices(ledger, t0, t1);
    const auto& rows = ledger.rows();
    const double rate = c * nu * std::exp2(2.0 * q);

    HeatHistory out;
    for (std::size_t i = i0; i <= i1; ++i) {
        const double t = rows[i].t;
        double acc = 0.0;
        for (std::size_t j = i0; j < i; ++j) {
            const double a = std::exp(-rate * (t - rows[j].t)) * rows[j].v_h12;
            const double b = std::exp(-rate * (t - rows[j + 1].t)) * rows[j + 1].v_h12;
            acc += 0.5 * (a + b) * (rows[j + 1].t - rows[j].t);
        }
        out.value = std::max(out.value, acc);
    }

    // Companion ratio against the Hoelder-type bound.
    double l4 = 0.0;
    for (std::size_t j = i0; j < i1; ++j) {
        const double a = std::pow(rows[j].v_h12, 4.0);
        const double b = std::pow(rows[j + 1].v_h12, 4.0);
        l4 += 0.5 * (a + b) * (rows[j + 1].t - rows[j].t);
    }
    l4 = std::pow(l4, 0.25);
    const double denom = std::exp2(-1.5 * q) * std::pow(nu, -0.75) * l4;
    out.bound_ratio = denom > 0.0 ? out.value / denom : 0.0;
    return out;
}

EstimateReport evaluate_estimate(const RegularityLedger& ledger, double sigma, double beta,
                                 double lambda, double t0, double t1) {
    if (!(beta > 0.0) || !(sigma > 0.0) || !(sigma + beta < 1.0))
        throw std::invalid_argument("evaluate_estimate: need 0 < beta, sigma and sigma+beta < 1");
    const auto [i0, i1] = window_indices(ledger, t0, t1);
    const auto& rows = ledger.rows();

    EstimateReport rep;
    rep.sigma = sigma;
    rep.beta = beta;
    rep.lambda = lambda;
    rep.s = ledger.params().s;
    rep.p = ledger.params().p;
    rep.t0 = rows[i0].t;
    rep.t1 = rows[i1].t;

    rep.gradv_tilde = gradv_tilde_l1_c0(ledger, rep.t0, rep.t1);
    rep.hyp_lower_margin = sigma - lambda * rep.gradv_tilde - beta;
    rep.hyp_upper_margin = 1.0 - beta - sigma - lambda * rep.gradv_tilde;
    rep.hypothesis_ok = rep.hyp_lower_margin >= 0.0 && rep.hyp_upper_margin >= 0.0;

    rep.m_sigma_f = deteriorating_sup_kinetic(ledger, sigma, lambda, rep.t0, rep.t1);
    rep.m_sigma_plus1_v = deteriorating_sup_velocity(ledger, sigma + 1.0, lambda, rep.t0, rep.t1);

    // ||f(t0)||_{B^sigma_{p,inf}(H^{-s})} over the grid-resolvable rings.
    rep.f0_besov = 0.0;
    for (int q = 0; q <= ledger.q_max(); ++q)
        rep.f0_besov = std::max(rep.f0_besov, std::exp2(q * sigma) * rows[i0].nq_lp[q + 1]);

    const double excess = std::max(0.0, rep.m_sigma_f - 3.0 * rep.f0_besov);
    if (rep.m_sigma_plus1_v > 0.0) {
        rep.c_fit = lambda * excess / (3.0 * rep.m_sigma_plus1_v);
        rep.degenerate_zero_velocity = false;
    } else {
        rep.c_fit = 0.0;
        rep.degenerate_zero_velocity = excess > 0.0;
    }
    const double bound = 3.0 * rep.f0_besov + (3.0 * rep.c_fit / lambda) * rep.m_sigma_plus1_v;
    rep.conclusion_ok = rep.m_sigma_f <= bound * (1.0 + 1e-12) + 1e-300;

    rep.slack_q.assign(ledger.q_max() + 1, 0.0);
    for (int q = 0; q <= ledger.q_max(); ++q) {
        double qsup = 0.0;
        for (std::size_t i = i0; i <= i1; ++i) {
            const double phi = lambda * (rows[i].phi_cum[q] - rows[i0].phi_cum[q]);
            qsup = std::max(qsup, std::exp2(q * sigma - phi) * rows[i].nq_lp[q + 1]);
        }
        rep.slack_q[q] = bound - qsup;
    }
    return rep;
}

CouplingForm fiber_coupling_form(const VelocityField& v, const PhaseField& h,
                                 const PhaseField& f_q, double s,
                                 const DriftCoefficients& coeffs) {
    require_same_shape(h, f_q);
    if (!(v.grid() == f_q.grid()))
        throw std::invalid_argument("fiber_coupling_form: grids do not match");
    const GridSpec2D& grid = f_q.grid();
    const FiberGrid& fiber = f_q.fiber();
    const std::size_t nsites = grid.size();
    const int nm = fiber.nm;
    const FiberMultipliers mult = make_fiber_multipliers(fiber, s);

    const auto fq_coeffs = phase_theta_coeffs(f_q);
    const auto h_coeffs = phase_theta_coeffs(h);
    const auto gradv = velocity_gradient_physical(v);

    // (H f_q)_m per site and N_q^2 per site.
    std::vector<double> n2(nsites, 0.0);
    std::vector<double> hnorm(nsites, 0.0);
    for (int im = 0; im < nm; ++im) {
        const double b = mult.bessel[im];
        const std::complex<double>* fr = fq_coeffs.data() + static_cast<std::size_t>(im) * nsites;
        const std::complex<double>* hr = h_coeffs.data() + static_cast<std::size_t>(im) * nsites;
        for (std::size_t i = 0; i < nsites; ++i) {
            n2[i] += kTwoPi * b * b * std::norm(fr[i]);
            hnorm[i] += kTwoPi * std::norm(hr[i]);
        }
    }
    for (auto& x : hnorm) x = std::sqrt(x);

    // integral (H d_theta(a(theta) f))(H f) dtheta for a given angular table.
    auto coupling_integral = [&](const std::vector<double>& a_theta,
                                 std::vector<double>& out) {
        // product a(theta) f in collocation, angular transform, then the
        // multiplier i m (1+m^2)^{-s/2} against conj(H f).
        std::vector<std::complex<double>> prod(f_q.size());
        for (int ith = 0; ith < nm; ++ith) {
            const double a = a_theta[ith];
            auto fs = f_q.slice(ith);
            std::complex<double>* dst = prod.data() + static_cast<std::size_t>(ith) * nsites;
            for (std::size_t i = 0; i < nsites; ++i) dst[i] = a * fs[i];
        }
        fft::forward_many(nm, static_cast<int>(nsites), static_cast<int>(nsites), 1, prod.data());
        const double scale = 1.0 / nm;
        out.assign(nsites, 0.0);
        for (int im = 0; im < nm; ++im) {
            const double b = mult.bessel[im];
            const double m = mult.deriv_m[im];
            const std::complex<double>* pr = prod.data() + static_cast<std::size_t>(im) * nsites;
            const std::complex<double>* fr =
                fq_coeffs.data() + static_cast<std::size_t>(im) * nsites;
            for (std::size_t i = 0; i < nsites; ++i) {
                // Re[(i m b prod_m) conj(b f_m)] * 2 pi
                const std::complex<double> lhs(0.0, m);
                out[i] += kTwoPi * b * b *
                          (lhs * (pr[i] * scale) * std::conj(fr[i])).real();
            }
        }
    };

    std::vector<double> V(nsites, 0.0);
    std::vector<double> integral(nsites);
    for (int idx = 0; idx < 4; ++idx) {
        coupling_integral(coeffs.c[idx], integral);
        const auto& gv = gradv[idx];
        for (std::size_t i = 0; i < nsites; ++i) V[i] += gv[i] * integral[i];
    }

    // Second term: drift grad_g h. The angular profile varies per site, so
    // build (d_theta h) f in collocation directly.
    {
        auto dh_coeffs = h_coeffs;
        for (int im = 0; im < nm; ++im) {
            const std::complex<double> im_mult(0.0, mult.deriv_m[im]);
            std::complex<double>* row = dh_coeffs.data() + static_cast<std::size_t>(im) * nsites;
            for (std::size_t i = 0; i < nsites; ++i) row[i] *= im_mult;
        }
        PhaseField dh = phase_from_theta_coeffs(grid, fiber, std::move(dh_coeffs));
        std::vector<std::complex<double>> prod(f_q.size());
        for (int ith = 0; ith < nm; ++ith) {
            auto ds = dh.slice(ith);
            auto fs = f_q.slice(ith);
            std::complex<double>* dst = prod.data() + static_cast<std::size_t>(ith) * nsites;
            for (std::size_t i = 0; i < nsites; ++i) dst[i] = ds[i] * fs[i];
        }
        fft::forward_many(nm, static_cast<int>(nsites), static_cast<int>(nsites), 1, prod.data());
        const double scale = 1.0 / nm;
        for (int im = 0; im < nm; ++im) {
            const double b = mult.bessel[im];
            const double m = mult.deriv_m[im];
            const std::complex<double>* pr = prod.data() + static_cast<std::size_t>(im) * nsites;
            const std::complex<double>* fr =
                fq_coeffs.data() + static_cast<std::size_t>(im) * nsites;
            const std::complex<double> lhs(0.0, m);
            for (std::size_t i = 0; i < nsites; ++i)
                V[i] += kTwoPi * b * b * (lhs * (pr[i] * scale) * std::conj(fr[i])).real();
        }
    }

    const std::vector<double> gmag = tensor_magnitude(gradv);
    double n2max = 0.0;
    for (double x : n2) n2max = std::max(n2max, x);
    double ratio = 0.0;
    for (std::size_t i = 0; i < nsites; ++i) {
        if (n2[i] <= 1e-14 * n2max || n2[i] == 0.0) continue;
        const double denom = (gmag[i] + hnorm[i]) * n2[i];
        if (denom > 0.0) ratio = std::max(ratio, std::abs(V[i]) / denom);
    }

    CouplingForm out{SpectralField2D::from_physical(grid, V), ratio};
    return out;
}

namespace {

void write_kv(std::ostream& os, const char* key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << key << " = " << buf << "\n";
}

}  // namespace

void write_report(std::ostream& os, const EstimateReport& r) {
    os << "smolns estimate report v1\n";
    write_kv(os, "sigma", r.sigma);
    write_kv(os, "beta", r.beta);
    write_kv(os, "lambda", r.lambda);
    write_kv(os, "s", r.s);
    write_kv(os, "p", r.p);
    write_kv(os, "window_t0", r.t0);
    write_kv(os, "window_t1", r.t1);
    write_kv(os, "gradv_tilde_l1_c0", r.gradv_tilde);
    write_kv(os, "hypothesis_lower_margin", r.hyp_lower_margin);
    write_kv(os, "hypothesis_upper_margin", r.hyp_upper_margin);
    os << "hypothesis_ok = " << (r.hypothesis_ok ? "yes" : "no") << "\n";
    write_kv(os, "m_sigma_f", r.m_sigma_f);
    write_kv(os, "m_sigma_plus1_v", r.m_sigma_plus1_v);
    write_kv(os, "f0_besov_sigma", r.f0_besov);
    write_kv(os, "c_fit", r.c_fit);
    os << "degenerate_zero_velocity = " << (r.degenerate_zero_velocity ? "yes" : "no") << "\n";
    os << "conclusion_ok = " << (r.conclusion_ok ? "yes" : "no") << "\n";
    for (std::size_t q = 0; q < r.slack_q.size(); ++q) {
        char key[32];
        std::snprintf(key, sizeof key, "slack_q_%zu", q);
        write_kv(os, key, r.slack_q[q]);
    }
}

EstimateReport read_report(std::istream& is) {
    EstimateReport r;
    std::string line;
    if (!std::getline(is, line) || line != "smolns estimate report v1")
        throw std::runtime_error("not a smolns estimate report");
    while (std::getline(is, line)) {
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) continue;
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 3);
        auto num = [&]() { return std::stod(val); };
        auto flag = [&]() { return val == "yes"; };
        if (key == "sigma") r.sigma = num();
        else if (key == "beta") r.beta = num();
        else if (key == "lambda") r.lambda = num();
        else if (key == "s") r.s = num();
        else if (key == "p") r.p = num();
        else if (key == "window_t0") r.t0 = num();
        else if (key == "window_t1") r.t1 = num();
        else if (key == "gradv_tilde_l1_c0") r.gradv_tilde = num();
        else if (key == "hypothesis_lower_margin") r.hyp_lower_margin = num();
        else if (key == "hypothesis_upper_margin") r.hyp_upper_margin = num();
        else if (key == "hypothesis_ok") r.hypothesis_ok = flag();
        else if (key == "m_sigma_f") r.m_sigma_f = num();
        else if (key == "m_sigma_plus1_v") r.m_sigma_plus1_v = num();
        else if (key == "f0_besov_sigma") r.f0_besov = num();
        else if (key == "c_fit") r.c_fit = num();
        else if (key == "degenerate_zero_velocity") r.degenerate_zero_velocity = flag();
        else if (key == "conclusion_ok") r.conclusion_ok = flag();
        else if (key.rfind("slack_q_", 0) == 0) r.slack_q.push_back(num());
    }
    return r;
}

}  // namespace smolns
