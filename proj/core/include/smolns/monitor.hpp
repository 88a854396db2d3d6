#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "smolns/kinetic.hpp"
#include "smolns/ladder.hpp"

namespace smolns {

struct MonitorParams {
    double s = 2.0;       // smoothing order of H = (I - Lap_g)^{-s/2}
    double p = INFINITY;  // Lebesgue exponent of the block norms
};

// One sampled row of per-block norms. Vector indices: entries indexed by
// block run over q = -1 .. q_max (offset +1); entries indexed by ring run
// over q = 0 .. q_max. Tensor fields use the pointwise Frobenius norm
// before taking L^p.
struct LedgerRow {
    double t = 0.0;
    std::vector<double> dq_gradv_linf;  // ||Delta_q grad v||_inf, block-indexed
    std::vector<double> sq_gradv_linf;  // ||S_{q-1} grad v||_inf, ring-indexed
    std::vector<double> dq_v_lp;        // ||Delta_q v||_p, block-indexed
    std::vector<double> nq_lp;          // ||N_q||_{L^p_x}, block-indexed
    std::vector<double> phi_cum;        // int_0^t (||S_{q-1} grad v||+1), ring-indexed
    double e_kin = 0.0, dissipation = 0.0, stress_power = 0.0;
    double mass = 0.0, min_f = 0.0, gradv_linf = 0.0, v_h12 = 0.0;
};

// Append-only time series of the per-block norms feeding every functional
// of the regularity analysis. Recording is single-threaded; the analysis
// functions below only read.
class RegularityLedger {
public:
    RegularityLedger(const GridSpec2D& grid, const FiberGrid& fiber, MonitorParams params);

    // Appends one sample. Throws std::invalid_argument on non-monotone time.
    void record(const VelocityField& v, const PhaseField& f, const StressField& tau,
                double nu, double t);
    // Raw-row append used by offline (CSV-driven) analysis; the row must
    // carry the same block structure and nondecreasing time.
    void append_row(LedgerRow row);

    const std::vector<LedgerRow>& rows() const { return rows_; }
    const GridSpec2D& grid() const { return grid_; }
    const FiberGrid& fiber() const { return fiber_; }
    const DyadicLadder& ladder() const { return ladder_; }
    const MonitorParams& params() const { return params_; }
    int q_max() const { return ladder_.q_max(); }
    bool empty() const { return rows_.empty(); }
    double t_front() const { return rows_.front().t; }
    double t_back() const { return rows_.back().t; }

private:
    GridSpec2D grid_;
    FiberGrid fiber_;
    MonitorParams params_;
    DyadicLadder ladder_;
    std::vector<LedgerRow> rows_;
};

// N_q(x) = sqrt( integral |H Delta_q f|^2 dtheta ): per-site L^2(M) size of
// the smoothed dyadic block. q = -1 selects the low block.
SpectralField2D smoothed_block_amplitude(const PhaseField& f, int q, double s,
                                         const DyadicLadder& ladder);

// Phi_{q,lambda}(t_hi, t_lo) = lambda int_{t_lo}^{t_hi} (||S_{q-1} grad v||_inf + 1),
// trapezoidal on the recorded samples (linear interpolation inside
// intervals). Throws when the range leaves the sampled window.
double phi_integral(const RegularityLedger& ledger, int q, double lambda, double t_hi,
                    double t_lo);

// M^sigma_lambda functionals: sup over sampled t in [t0,t1] and rings q of
// 2^{q sigma - Phi_{q,lambda}(t,t0)} times the recorded block norm.
double deteriorating_sup_velocity(const RegularityLedger& ledger, double sigma,
                                  double lambda, double t0, double t1);
double deteriorating_sup_kinetic(const RegularityLedger& ledger, double sigma,
                                 double lambda, double t0, double t1);

// ||grad v|| in tilde-L^1_{[t0,t1]}(C^0): sup_q of the time integral of the
// per-block sup norms.
double gradv_tilde_l1_c0(const RegularityLedger& ledger, double t0, double t1);

// Smallest sampled T0 with gradv_tilde_l1_c0(T0, t1) <= eps; nullopt when
// even the last sample fails.
std::optional<double> find_smallness_time(const RegularityLedger& ledger, double eps,
                                          double t1);

struct HeatHistory {
    double value = 0.0;       // sup_t int_{t0}^t exp(-c nu 2^{2q}(t-t')) ||v(t')||_{H^{1/2}}
    double bound_ratio = 0.0; // value / (2^{-3q/2} nu^{-3/4} ||v||_{L^4(H^{1/2})})
};
// Heat-kernel-weighted velocity history with c = 1/4, trapezoidal in time.
HeatHistory heat_history_functional(const RegularityLedger& ledger, int q, double nu,
                                    double t0, double t1);

struct EstimateReport {
    double sigma = 0.0, beta = 0.0, lambda = 0.0, s = 0.0, p = 0.0;
    double t0 = 0.0, t1 = 0.0;
    double gradv_tilde = 0.0;
    double hyp_lower_margin = 0.0;  // sigma - lambda ||grad v|| - beta
    double hyp_upper_margin = 0.0;  // 1 - beta - sigma - lambda ||grad v||
    bool hypothesis_ok = false;
    double m_sigma_f = 0.0;
    double m_sigma_plus1_v = 0.0;
    double f0_besov = 0.0;          // ||f(t0)||_{B^sigma_{p,inf}(H^{-s})}
    double c_fit = 0.0;
    bool degenerate_zero_velocity = false;
    bool conclusion_ok = false;     // m_sigma_f <= 3 f0 + (3 c_fit/lambda) m_v
    std::vector<double> slack_q;    // per-ring conclusion slack at c_fit
};

// Evaluates the hypothesis margins and the smallest constant making the
// deteriorating estimate's conclusion hold on the window [t0, t1].
EstimateReport evaluate_estimate(const RegularityLedger& ledger, double sigma, double beta,
                                 double lambda, double t0, double t1);

void write_report(std::ostream& os, const EstimateReport& report);
EstimateReport read_report(std::istream& is);

struct CouplingForm {
    SpectralField2D field;   // V(v, h, f_q) per site
    double ratio_sup = 0.0;  // sup_x |V| / ((|grad v| + ||h||_{L^2(M)}) N_q^2)
};
// The bilinear fiber coupling form: V = d_j v_i int (H div_g(c^{ij} f))(H f)
// + int (H div_g((grad_g h) f))(H f), evaluated per site.
CouplingForm fiber_coupling_form(const VelocityField& v, const PhaseField& h,
                                 const PhaseField& f_q, double s,
                                 const DriftCoefficients& coeffs);

}  // namespace smolns
