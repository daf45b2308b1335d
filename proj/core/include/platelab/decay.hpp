#pragma once

// The decay laboratory: regime classification over the (n, l) plane,
// measured decay of residual and solution norms along geometric time grids,
// and log-log slope fits against the predicted exponents.

#include <iosfwd>
#include <vector>

#include "platelab/data.hpp"
#include "platelab/profiles.hpp"
#include "platelab/quadrature.hpp"

namespace platelab {

// Decay bands over the (n, l) plane (l = velocity-data regularity index).
enum class DecayBand { RegularityLoss, WaveBand, EdgeBand, HeatBand, Threshold };

const char* band_name(DecayBand b);

struct Regime {
    DecayBand band = DecayBand::HeatBand;
    ProfileKind profile = ProfileKind::HeatLike;
    double residual_exponent = 0.0; // predicted t-exponent of ||u - profile||
    double solution_exponent = 0.0; // predicted t-exponent of ||u||
    bool valid = false;
    std::string reason; // which classification row fired
};

// Classification table (pre: n >= 1, l >= 2; throws std::invalid_argument):
//   regularity loss : n >= 10, 2 <= l <= n/2 - 3    wave   -(l+3)/2, -(l+1)/2
//   wave band       : n in {7,8,9}, 2 <= l < n/2-1, wave   -n/4,     -(l+1)/2
//                     or n >= 10, n/2-3 < l < n/2-1
//   threshold       : n >= 6, l = n/2 - 1           both   -(n+2)/4, -n/4
//   edge band       : (n=4, l=2) or (n=5, l <= 5/2) heat   -(l+1)/2, -n/4
//                     or n >= 6, n/2-1 < l <= n/2
//   heat band       : l > n/2 (n >= 4) or n <= 3    heat   -(n+2)/4, -n/4
// The rows are checked exhaustively; overlapping rows raise logic_error.
Regime classify_regime(int n, double l);

// Geometric time grid 10 * 1.25^k, capped at t_max (pre: t_max >= 10).
std::vector<double> default_time_grid(double t_max);

struct SlopeFit {
    double slope = 0.0;
    double se = 0.0; // standard error of the slope
    double r2 = 0.0;
    bool ok = false;    // enough points, a decade of span, positive norms
    bool low_r2 = false; // r2 < 0.98: plateau/tie, not a clean power law
    int first = 0;      // index of the first fitted point
    int count = 0;
};

// OLS of ln(norm) on ln(t) over the last >= 10 points spanning at least one
// decade of t (the fit window grows backwards from the end until both hold).
SlopeFit fit_loglog_slope(const std::vector<double>& times,
                          const std::vector<double>& norms);

struct DecaySeries {
    std::vector<double> times;
    std::vector<double> norms;
    Zone zone = Zone::Full;
    ProfileKind profile = ProfileKind::HeatLike;
    bool is_residual = true; // false: plain solution norms
    double predicted_exponent = 0.0;
    SlopeFit fit;
    long long evals = 0; // total integrand evaluations spent
};

// Norms of u - profile (residual_series) or of u itself
// (solution_norm_series) over `times` (ascending, all >= 1).  The tail
// cutoff for High/Full regions is certified per time step from the data
// tail bounds and kernel envelopes; the per-step quadrature tolerance is
// max(tol, norm(previous step)/100) so late, small norms are resolved
// relatively.  max_evals is the budget per norm evaluation.
DecaySeries residual_series(const DataPair& p, ProfileKind profile, Zone zone,
                            const std::vector<double>& times,
                            double predicted_exponent, double tol = 1e-8,
                            long long max_evals = 50'000'000);
DecaySeries solution_norm_series(const DataPair& p, Zone zone,
                                 const std::vector<double>& times,
                                 double predicted_exponent, double tol = 1e-8,
                                 long long max_evals = 50'000'000);

struct MidRate {
    double eta = 0.0; // fitted exponential rate: norm ~ e^{-eta t}
    double se = 0.0;  // standard error of eta
    double r2 = 0.0;
    std::vector<double> times;
    std::vector<double> norms;
};

// Mid-region norms decay exponentially (the spectral gap at r in
// [delta, 1]); fits ln(norm) against t on times 10,20,...,200 by default.
// Throws NonConvergent if norms underflow before a decade of usable data.
MidRate mid_region_rate(const DataPair& p,
                        const std::vector<double>& times = {},
                        double tol = 1e-10, long long max_evals = 10'000'000);

// CSV: t,norm,region,profile,predicted_exponent,fitted_slope
// (header written once per stream by the caller passing with_header).
void write_series_csv(std::ostream& os, const DecaySeries& s,
                      bool with_header = true);

} // namespace platelab
