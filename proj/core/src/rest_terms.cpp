#include "smolns/rest_terms.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "smolns/fft.hpp"
#include "smolns/norms.hpp"
#include "smolns/parallel.hpp"

namespace smolns {

namespace {

using Cvec = std::vector<std::complex<double>>;
using Rvec = std::vector<double>;

}  // namespace

struct RestTermEngine::Impl {
    Impl(const GridSpec2D& g, const FiberGrid& fb, const DyadicLadder& lad,
         const DriftCoefficients& dc)
        : grid(g), fiber(fb), ladder(lad), coeffs(dc), Q(lad.q_max()),
          nsites(g.size()), nm(fb.nm), zero_phys(g.size(), 0.0) {}

    GridSpec2D grid;
    FiberGrid fiber;
    const DyadicLadder& ladder;
    DriftCoefficients coeffs;
    int Q;
    std::size_t nsites;
    int nm;

    Rvec zero_phys;

    // Global (theta-independent) caches: physical blocks of v and of the
    // velocity gradients a_idx = d_j v_i. Index [q+1] holds block q, with
    // block -1 the chi low pass; S-caches are indexed by q directly.
    std::array<std::vector<Rvec>, 2> dv;   // Delta_q v^j
    std::array<std::vector<Rvec>, 2> sv;   // S_q v^j
    std::array<std::vector<Rvec>, 4> da;   // Delta_q a_idx
    std::array<std::vector<Rvec>, 4> sa;   // S_q a_idx
    std::array<Rvec, 2> v_phys;

    // Per-slice spectral caches.
    std::vector<SpectralField2D> fhat, Ahat, Ghat;
    std::vector<SpectralField2D> vgradf;   // sum_j v^j d_j f, dealiased
    std::vector<SpectralField2D> divGf;    // d_theta(G f), x-cleaned
    std::vector<SpectralField2D> P1, P2, R3R;
    std::vector<std::array<SpectralField2D, 4>> P4a, P5a, R6a;
    std::vector<SpectralField2D> P4b, P5b, R6b;

    // ---- small helpers -------------------------------------------------

    const Rvec& dv_phys(int j, int q) const {
        if (q < -1 || q > Q) return zero_phys;
        return dv[j][q + 1];
    }
    const Rvec& sv_phys(int j, int q) const {
        if (q < 0) return zero_phys;
        return sv[j][std::min(q, Q)];
    }
    const Rvec& da_phys(int idx, int q) const {
        if (q < -1 || q > Q) return zero_phys;
        return da[idx][q + 1];
    }
    const Rvec& sa_phys(int idx, int q) const {
        if (q < 0) return zero_phys;
        return sa[idx][std::min(q, Q)];
    }

    SpectralField2D ring(const SpectralField2D& u, int q) const {
        if (q == -1) return apply_mode_weights(u, ladder.lowpass_weights(0));
        if (q < -1 || q > Q) return SpectralField2D(grid);
        return apply_mode_weights(u, ladder.ring_weights(q));
    }
    SpectralField2D lowpass(const SpectralField2D& u, int q) const {
        if (q < 0) return SpectralField2D(grid);
        return apply_mode_weights(u, ladder.lowpass_weights(std::min(q, Q + 2)));
    }

    SpectralField2D from_phys_dealiased(const Rvec& p) const {
        SpectralField2D s = SpectralField2D::from_physical(grid, p);
        dealias_inplace(s);
        return s;
    }

    // d_theta with the angular 2/3 mask across slice-major complex data.
    void theta_derivative(Cvec& buf) const {
        fft::forward_many(nm, static_cast<int>(nsites), static_cast<int>(nsites), 1,
                          buf.data());
        const double scale = 1.0 / nm;
        const std::complex<double> i_unit(0.0, 1.0);
        for (int im = 0; im < nm; ++im) {
            const double m = (im == nm / 2) ? 0.0 : fiber.wavenumber(im);
            const double mask = std::abs(fiber.wavenumber(im)) <= fiber.dealias_k() ? 1.0 : 0.0;
            const std::complex<double> mult = i_unit * m * mask * scale;
            std::complex<double>* row = buf.data() + static_cast<std::size_t>(im) * nsites;
            for (std::size_t i = 0; i < nsites; ++i) row[i] *= mult;
        }
        fft::backward_many(nm, static_cast<int>(nsites), static_cast<int>(nsites), 1,
                           buf.data());
    }

    // L^2_x(L^2_theta) norm of slice-major spectral data via Parseval.
    double phase_norm(const std::vector<SpectralField2D>& slices) const {
        double acc = 0.0;
        for (const auto& s : slices)
            for (const auto& z : s.coeffs()) acc += std::norm(z);
        return std::sqrt(acc * kTwoPi * kTwoPi * fiber.dtheta());
    }

    PhaseField materialize(const std::vector<SpectralField2D>& slices) const {
        PhaseField out(grid, fiber);
        parallel_for(nm, [&](std::size_t ith) {
            set_slice_from_spectral(out, static_cast<int>(ith), slices[ith]);
        });
        return out;
    }
};

RestTermEngine::~RestTermEngine() = default;

RestTermEngine::RestTermEngine(const VelocityField& v, const PhaseField& f,
                               const KernelSpec& kernel, const DriftCoefficients& coeffs,
                               const DyadicLadder& ladder)
    : impl_(std::make_unique<Impl>(f.grid(), f.fiber(), ladder, coeffs)) {
    Impl& im = *impl_;
    if (!(v.grid() == f.grid()))
        throw std::invalid_argument("rest terms: v and f grids differ");
    {
        // The transport identity folds R(v^j, d_j f) into d_j R(v^j, f),
        // which uses div v = 0.
        double scale = std::max(lebesgue_norm(v.x, INFINITY), 1e-30);
        if (v.divergence_max() > 1e-8 * scale)
            throw std::invalid_argument("rest terms: v must be divergence free");
    }
    const int Q = im.Q;

    // Global velocity caches.
    std::array<SpectralField2D, 2> vc{v.x, v.y};
    for (int j = 0; j < 2; ++j) {
        im.v_phys[j] = vc[j].to_physical();
        im.dv[j].resize(Q + 2);
        im.sv[j].resize(Q + 1);
        for (int q = -1; q <= Q; ++q) im.dv[j][q + 1] = im.ring(vc[j], q).to_physical();
        for (int q = 0; q <= Q; ++q) im.sv[j][q] = im.lowpass(vc[j], q).to_physical();
    }
    std::array<SpectralField2D, 4> a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) a[2 * i + j] = velocity_gradient(v, i, j);
    for (int idx = 0; idx < 4; ++idx) {
        im.da[idx].resize(Q + 2);
        im.sa[idx].resize(Q + 1);
        for (int q = -1; q <= Q; ++q) im.da[idx][q + 1] = im.ring(a[idx], q).to_physical();
        for (int q = 0; q <= Q; ++q) im.sa[idx][q] = im.lowpass(a[idx], q).to_physical();
    }

    // Drift fields: A = grad_g(K f), G = A + c^{ij} d_j v_i.
    PhaseField A = drift_potential_gradient(f, kernel);
    PhaseField G = A;
    {
        std::array<Rvec, 4> gradv;
        for (int idx = 0; idx < 4; ++idx) gradv[idx] = a[idx].to_physical();
        parallel_for(im.nm, [&](std::size_t ith) {
            auto out = G.slice(static_cast<int>(ith));
            for (int idx = 0; idx < 4; ++idx) {
                const double ci = coeffs.c[idx][ith];
                const auto& gv = gradv[idx];
                for (std::size_t i = 0; i < out.size(); ++i) out[i] += ci * gv[i];
            }
        });
    }

    const int nm = im.nm;
    const std::size_t nsites = im.nsites;
    im.fhat.resize(nm);
    im.Ahat.resize(nm);
    im.Ghat.resize(nm);
    im.vgradf.resize(nm);
    im.divGf.resize(nm);
    im.P1.resize(nm);
    im.P2.resize(nm);
    im.R3R.resize(nm);
    im.P4a.resize(nm);
    im.P5a.resize(nm);
    im.R6a.resize(nm);
    im.P4b.resize(nm);
    im.P5b.resize(nm);
    im.R6b.resize(nm);

    Cvec divgf_buf(f.size());

    parallel_for(nm, [&](std::size_t ith_s) {
        const int ith = static_cast<int>(ith_s);
        Impl& w = im;
        w.fhat[ith] = slice_to_spectral(f, ith);
        w.Ahat[ith] = slice_to_spectral(A, ith);
        w.Ghat[ith] = slice_to_spectral(G, ith);
        const SpectralField2D& fh = w.fhat[ith];
        const SpectralField2D& Ah = w.Ahat[ith];

        std::array<SpectralField2D, 2> dfh{derivative(fh, 0), derivative(fh, 1)};

        // Transient physical block tables for this slice.
        std::vector<Rvec> f_blk(Q + 2), f_low(Q + 1), A_blk(Q + 2), A_low(Q + 1);
        std::array<std::vector<Rvec>, 2> df_blk, df_low;
        for (int q = -1; q <= Q; ++q) {
            f_blk[q + 1] = w.ring(fh, q).to_physical();
            A_blk[q + 1] = w.ring(Ah, q).to_physical();
        }
        for (int q = 0; q <= Q; ++q) {
            f_low[q] = w.lowpass(fh, q).to_physical();
            A_low[q] = w.lowpass(Ah, q).to_physical();
        }
        for (int j = 0; j < 2; ++j) {
            df_blk[j].resize(Q + 2);
            df_low[j].resize(Q + 1);
            for (int q = -1; q <= Q; ++q) df_blk[j][q + 1] = w.ring(dfh[j], q).to_physical();
            for (int q = 0; q <= Q; ++q) df_low[j][q] = w.lowpass(dfh[j], q).to_physical();
        }

        // v . grad f (literal convective form, dealiased).
        {
            Rvec acc(nsites, 0.0);
            for (int j = 0; j < 2; ++j) {
                Rvec dfp = dfh[j].to_physical();
                const Rvec& vp = w.v_phys[j];
                for (std::size_t i = 0; i < nsites; ++i) acc[i] += vp[i] * dfp[i];
            }
            w.vgradf[ith] = w.from_phys_dealiased(acc);
        }

        // P1 = sum_j T_{d_j f} v^j.
        {
            Rvec acc(nsites, 0.0);
            for (int qp = 1; qp <= Q; ++qp)
                for (int j = 0; j < 2; ++j) {
                    const Rvec& low = df_low[j][qp - 1];
                    const Rvec& blk = w.dv_phys(j, qp);
                    for (std::size_t i = 0; i < nsites; ++i) acc[i] += low[i] * blk[i];
                }
            w.P1[ith] = w.from_phys_dealiased(acc);
        }
        // P2 = sum_j T_{v^j}(d_j f).
        {
            Rvec acc(nsites, 0.0);
            for (int qp = 1; qp <= Q; ++qp)
                for (int j = 0; j < 2; ++j) {
                    const Rvec& low = w.sv_phys(j, qp - 1);
                    const Rvec& blk = df_blk[j][qp + 1];
                    for (std::size_t i = 0; i < nsites; ++i) acc[i] += low[i] * blk[i];
                }
            w.P2[ith] = w.from_phys_dealiased(acc);
        }
        // R3R = sum_j d_j R(v^j, f).
        {
            SpectralField2D sum(w.grid);
            for (int j = 0; j < 2; ++j) {
                Rvec acc(nsites, 0.0);
                for (int qa = -1; qa <= Q; ++qa)
                    for (int qb = std::max(-1, qa - 1); qb <= std::min(Q, qa + 1); ++qb) {
                        const Rvec& bv = w.dv_phys(j, qa);
                        const Rvec& bf = f_blk[qb + 1];
                        for (std::size_t i = 0; i < nsites; ++i) acc[i] += bv[i] * bf[i];
                    }
                sum += derivative(w.from_phys_dealiased(acc), j);
            }
            dealias_inplace(sum);
            w.R3R[ith] = sum;
        }
        // Drift-side paraproducts and remainders.
        for (int idx = 0; idx < 4; ++idx) {
            Rvec acc4(nsites, 0.0), acc5(nsites, 0.0), acc6(nsites, 0.0);
            for (int qp = 1; qp <= Q; ++qp) {
                const Rvec& f_low_q = f_low[qp - 1];
                const Rvec& a_blk_q = w.da_phys(idx, qp);
                const Rvec& a_low_q = w.sa_phys(idx, qp - 1);
                const Rvec& f_blk_q = f_blk[qp + 1];
                for (std::size_t i = 0; i < nsites; ++i) {
                    acc4[i] += f_low_q[i] * a_blk_q[i];  // T_f a
                    acc5[i] += a_low_q[i] * f_blk_q[i];  // T_a f
                }
            }
            for (int qa = -1; qa <= Q; ++qa)
                for (int qb = std::max(-1, qa - 1); qb <= std::min(Q, qa + 1); ++qb) {
                    const Rvec& ba = w.da_phys(idx, qa);
                    const Rvec& bf = f_blk[qb + 1];
                    for (std::size_t i = 0; i < nsites; ++i) acc6[i] += ba[i] * bf[i];
                }
            w.P4a[ith][idx] = w.from_phys_dealiased(acc4);
            w.P5a[ith][idx] = w.from_phys_dealiased(acc5);
            w.R6a[ith][idx] = w.from_phys_dealiased(acc6);
        }
        {
            Rvec acc4(nsites, 0.0), acc5(nsites, 0.0), acc6(nsites, 0.0);
            for (int qp = 1; qp <= Q; ++qp) {
                const Rvec& f_low_q = f_low[qp - 1];
                const Rvec& A_blk_q = A_blk[qp + 1];
                const Rvec& A_low_q = A_low[qp - 1];
                const Rvec& f_blk_q = f_blk[qp + 1];
                for (std::size_t i = 0; i < nsites; ++i) {
                    acc4[i] += f_low_q[i] * A_blk_q[i];  // T_f A
                    acc5[i] += A_low_q[i] * f_blk_q[i];  // T_A f
                }
            }
            for (int qa = -1; qa <= Q; ++qa)
                for (int qb = std::max(-1, qa - 1); qb <= std::min(Q, qa + 1); ++qb) {
                    const Rvec& bA = A_blk[qa + 1];
                    const Rvec& bf = f_blk[qb + 1];
                    for (std::size_t i = 0; i < nsites; ++i) acc6[i] += bA[i] * bf[i];
                }
            w.P4b[ith] = w.from_phys_dealiased(acc4);
            w.P5b[ith] = w.from_phys_dealiased(acc5);
            w.R6b[ith] = w.from_phys_dealiased(acc6);
        }
        // G f, x-cleaned, into the theta-derivative staging buffer.
        {
            Rvec prod(nsites);
            auto gs = G.slice(ith);
            auto fs = f.slice(ith);
            for (std::size_t i = 0; i < nsites; ++i) prod[i] = gs[i] * fs[i];
            SpectralField2D s = w.from_phys_dealiased(prod);
            std::complex<double>* dst = divgf_buf.data() + ith_s * nsites;
            const auto& c = s.coeffs();
            for (std::size_t i = 0; i < nsites; ++i) dst[i] = c[i];
        }
    });

    // div_g(G f): one angular pass over the staged x-spectral slices.
    im.theta_derivative(divgf_buf);
    for (int ith = 0; ith < nm; ++ith) {
        SpectralField2D s(im.grid);
        auto& c = s.coeffs();
        const std::complex<double>* src = divgf_buf.data() + static_cast<std::size_t>(ith) * nsites;
        for (std::size_t i = 0; i < nsites; ++i) c[i] = src[i];
        im.divGf[ith] = std::move(s);
    }
}

RestTermsResult RestTermEngine::compute(int q) const {
    const Impl& im = *impl_;
    if (q < 0 || q > im.Q) throw std::out_of_range("rest terms: q outside ring range");
    const int nm = im.nm;
    const std::size_t nsites = im.nsites;

    std::vector<SpectralField2D> lhs1(nm), main1(nm), r1(nm), r2(nm), r3(nm);
    std::vector<SpectralField2D> lhs2(nm);
    // Pre-divergence stages for the drift side; theta pass applied after.
    Cvec main2_buf(static_cast<std::size_t>(nm) * nsites);
    Cvec r4_buf(main2_buf.size()), r5_buf(main2_buf.size()), r6_buf(main2_buf.size());

    parallel_for(nm, [&](std::size_t ith_s) {
        const int ith = static_cast<int>(ith_s);
        const Impl& w = im;
        const SpectralField2D& fh = w.fhat[ith];

        SpectralField2D fq = w.ring(fh, q);

        // ---- transport side ----
        lhs1[ith] = w.ring(w.vgradf[ith], q);
        r1[ith] = w.ring(w.P1[ith], q);

        // main = S_{q-1} v . grad f_q
        std::array<SpectralField2D, 2> dfq{derivative(fq, 0), derivative(fq, 1)};
        {
            Rvec acc(nsites, 0.0);
            for (int j = 0; j < 2; ++j) {
                Rvec dp = dfq[j].to_physical();
                const Rvec& low = w.sv_phys(j, q - 1);
                for (std::size_t i = 0; i < nsites; ++i) acc[i] += low[i] * dp[i];
            }
            main1[ith] = w.from_phys_dealiased(acc);
        }
        // R2 = ring_q(P2) - sum_j T_{v^j}(d_j f_q); the subtracted
        // paraproduct collapses to the three neighbor rings of f_q.
        {
            Rvec acc(nsites, 0.0);
            for (int qp = std::max(1, q - 1); qp <= std::min(im.Q, q + 1); ++qp)
                for (int j = 0; j < 2; ++j) {
                    Rvec blk = w.ring(dfq[j], qp).to_physical();
                    const Rvec& low = w.sv_phys(j, qp - 1);
                    for (std::size_t i = 0; i < nsites; ++i) acc[i] += low[i] * blk[i];
                }
            r2[ith] = w.ring(w.P2[ith], q) - w.from_phys_dealiased(acc);
        }
        // R3 = ring_q(R3R) + Delta_{q-1}v^j d_j Delta_{q+1}f_q
        //                  - Delta_{q-2}v^j d_j Delta_{q-1}f_q.
        {
            Rvec acc(nsites, 0.0);
            for (int j = 0; j < 2; ++j) {
                if (q + 1 <= im.Q) {
                    Rvec hi = derivative(w.ring(fq, q + 1), j).to_physical();
                    const Rvec& bv = w.dv_phys(j, q - 1);
                    for (std::size_t i = 0; i < nsites; ++i) acc[i] += bv[i] * hi[i];
                }
                if (q - 1 >= -1) {
                    Rvec lo = derivative(w.ring(fq, q - 1), j).to_physical();
                    const Rvec& bv = w.dv_phys(j, q - 2);
                    for (std::size_t i = 0; i < nsites; ++i) acc[i] -= bv[i] * lo[i];
                }
            }
            r3[ith] = w.ring(w.R3R[ith], q) + w.from_phys_dealiased(acc);
        }

        // ---- drift side (pre-divergence stages) ----
        lhs2[ith] = w.ring(w.divGf[ith], q);

        Rvec fq_phys = fq.to_physical();
        std::array<Rvec, 3> fq_nb;  // Delta_{q-1} f_q, Delta_q f_q, Delta_{q+1} f_q
        for (int d = -1; d <= 1; ++d) fq_nb[d + 1] = w.ring(fq, q + d).to_physical();

        // main2 pre-stage: S_{q-1}G . f_q
        {
            Rvec low = w.lowpass(w.Ghat[ith], q - 1).to_physical();
            Rvec prod(nsites);
            for (std::size_t i = 0; i < nsites; ++i) prod[i] = low[i] * fq_phys[i];
            SpectralField2D s = w.from_phys_dealiased(prod);
            std::complex<double>* dst = main2_buf.data() + ith_s * nsites;
            const auto& c = s.coeffs();
            for (std::size_t i = 0; i < nsites; ++i) dst[i] = c[i];
        }
        // R4 pre-stage: sum_idx c_idx ring_q(T_f a_idx) + ring_q(T_f A).
        {
            SpectralField2D s = w.ring(w.P4b[ith], q);
            for (int idx = 0; idx < 4; ++idx) {
                SpectralField2D piece = w.ring(w.P4a[ith][idx], q);
                piece *= w.coeffs.c[idx][ith];
                s += piece;
            }
            std::complex<double>* dst = r4_buf.data() + ith_s * nsites;
            const auto& c = s.coeffs();
            for (std::size_t i = 0; i < nsites; ++i) dst[i] = c[i];
        }
        // R5 pre-stage: commutators [Delta_q, T_a] f and [Delta_q, T_A] f.
        {
            auto t_low_fq = [&](auto&& low_at) {
                Rvec acc(nsites, 0.0);
                for (int qp = std::max(1, q - 1); qp <= std::min(im.Q, q + 1); ++qp) {
                    const Rvec& blk = fq_nb[qp - q + 1];
                    const Rvec& low = low_at(qp - 1);
                    for (std::size_t i = 0; i < nsites; ++i) acc[i] += low[i] * blk[i];
                }
                return w.from_phys_dealiased(acc);
            };
            std::vector<Rvec> A_low(3);
            for (int d = 0; d < 3; ++d) {
                const int qp = q - 1 + d;  // S_{qp-1} A needed for qp in q-1..q+1
                A_low[d] = w.lowpass(w.Ahat[ith], qp - 1).to_physical();
            }
            SpectralField2D s = w.ring(w.P5b[ith], q) -
                                t_low_fq([&](int ql) -> const Rvec& {
                                    return A_low[ql - (q - 2)];
                                });
            for (int idx = 0; idx < 4; ++idx) {
                SpectralField2D piece = w.ring(w.P5a[ith][idx], q) -
                                        t_low_fq([&](int ql) -> const Rvec& {
                                            return w.sa_phys(idx, ql);
                                        });
                piece *= w.coeffs.c[idx][ith];
                s += piece;
            }
            std::complex<double>* dst = r5_buf.data() + ith_s * nsites;
            const auto& c = s.coeffs();
            for (std::size_t i = 0; i < nsites; ++i) dst[i] = c[i];
        }
        // R6 pre-stage: remainders with their neighbor-ring corrections.
        {
            SpectralField2D s = w.ring(w.R6b[ith], q);
            {
                Rvec accA(nsites, 0.0);
                Rvec hiA = w.ring(w.Ahat[ith], q - 1).to_physical();
                Rvec loA = w.ring(w.Ahat[ith], q - 2).to_physical();
                for (std::size_t i = 0; i < nsites; ++i)
                    accA[i] = hiA[i] * fq_nb[2][i] - loA[i] * fq_nb[0][i];
                s += w.from_phys_dealiased(accA);
            }
            for (int idx = 0; idx < 4; ++idx) {
                SpectralField2D piece = w.ring(w.R6a[ith][idx], q);
                Rvec acc(nsites, 0.0);
                const Rvec& hi = w.da_phys(idx, q - 1);
                const Rvec& lo = w.da_phys(idx, q - 2);
                for (std::size_t i = 0; i < nsites; ++i)
                    acc[i] = hi[i] * fq_nb[2][i] - lo[i] * fq_nb[0][i];
                piece += w.from_phys_dealiased(acc);
                piece *= w.coeffs.c[idx][ith];
                s += piece;
            }
            std::complex<double>* dst = r6_buf.data() + ith_s * nsites;
            const auto& c = s.coeffs();
            for (std::size_t i = 0; i < nsites; ++i) dst[i] = c[i];
        }
    });

    // Angular divergence of the staged drift-side pieces.
    im.theta_derivative(main2_buf);
    im.theta_derivative(r4_buf);
    im.theta_derivative(r5_buf);
    im.theta_derivative(r6_buf);

    auto unstage = [&](const Cvec& buf) {
        std::vector<SpectralField2D> out(nm);
        for (int ith = 0; ith < nm; ++ith) {
            SpectralField2D s(im.grid);
            auto& c = s.coeffs();
            const std::complex<double>* src =
                buf.data() + static_cast<std::size_t>(ith) * nsites;
            for (std::size_t i = 0; i < nsites; ++i) c[i] = src[i];
            out[ith] = std::move(s);
        }
        return out;
    };
    std::vector<SpectralField2D> main2 = unstage(main2_buf);
    std::vector<SpectralField2D> r4 = unstage(r4_buf);
    std::vector<SpectralField2D> r5 = unstage(r5_buf);
    std::vector<SpectralField2D> r6 = unstage(r6_buf);

    std::vector<SpectralField2D> resid1(nm), resid2(nm);
    for (int ith = 0; ith < nm; ++ith) {
        resid1[ith] = lhs1[ith] - r1[ith] - r2[ith] - r3[ith] - main1[ith];
        resid2[ith] = lhs2[ith] - r4[ith] - r5[ith] - r6[ith] - main2[ith];
    }

    RestTermsResult out;
    out.q = q;
    out.r = {im.materialize(r1), im.materialize(r2), im.materialize(r3),
             im.materialize(r4), im.materialize(r5), im.materialize(r6)};
    out.transport_lhs = im.materialize(lhs1);
    out.transport_main = im.materialize(main1);
    out.drift_lhs = im.materialize(lhs2);
    out.drift_main = im.materialize(main2);
    out.term_norms = {im.phase_norm(r1), im.phase_norm(r2), im.phase_norm(r3),
                      im.phase_norm(r4), im.phase_norm(r5), im.phase_norm(r6)};
    out.transport_residual = im.phase_norm(resid1);
    out.drift_residual = im.phase_norm(resid2);

    double d1 = std::max({im.phase_norm(lhs1), im.phase_norm(main1), out.term_norms[0],
                          out.term_norms[1], out.term_norms[2]});
    double d2 = std::max({im.phase_norm(lhs2), im.phase_norm(main2), out.term_norms[3],
                          out.term_norms[4], out.term_norms[5]});
    out.transport_residual_rel = d1 > 0.0 ? out.transport_residual / d1 : 0.0;
    out.drift_residual_rel = d2 > 0.0 ? out.drift_residual / d2 : 0.0;
    return out;
}

RestTermsResult rest_term_decomposition(const VelocityField& v, const PhaseField& f, int q,
                                        const KernelSpec& kernel,
                                        const DriftCoefficients& coeffs,
                                        const DyadicLadder& ladder) {
    RestTermEngine engine(v, f, kernel, coeffs, ladder);
    return engine.compute(q);
}

}  // namespace smolns
