#include "platelab/decay.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "platelab/csv.hpp"
#include "platelab/symbol.hpp"

namespace platelab {

const char* band_name(DecayBand b) {
    switch (b) {
        case DecayBand::RegularityLoss: return "regularity-loss";
        case DecayBand::WaveBand: return "wave-band";
        case DecayBand::EdgeBand: return "edge-band";
        case DecayBand::HeatBand: return "heat-band";
        case DecayBand::Threshold: default: return "threshold";
    }
}

Regime classify_regime(int n, double l) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (!(l >= 2.0))
        throw std::invalid_argument("regularity index must be >= 2");
    double half = 0.5 * n;

    std::vector<Regime> hits;
    auto add = [&hits](DecayBand b, ProfileKind k, double re, double se,
                       const char* why) {
        Regime r;
        r.band = b;
        r.profile = k;
        r.residual_exponent = re;
        r.solution_exponent = se;
        r.valid = true;
        r.reason = why;
        hits.push_back(r);
    };

    if (n >= 10 && l <= half - 3.0)
        add(DecayBand::RegularityLoss, ProfileKind::WaveLike, -0.5 * (l + 3.0),
            -0.5 * (l + 1.0),
            "n >= 10 and 2 <= l <= n/2-3: wave approximation with "
            "regularity-loss rate");
    if ((n >= 7 && n <= 9 && l < half - 1.0) ||
        (n >= 10 && l > half - 3.0 && l < half - 1.0))
        add(DecayBand::WaveBand, ProfileKind::WaveLike, -0.25 * n,
            -0.5 * (l + 1.0),
            "2 <= l < n/2-1 with moderate n: wave approximation at the "
            "dimension-limited rate");
    if (n >= 6 && l == half - 1.0)
        add(DecayBand::Threshold, ProfileKind::Combined, -0.25 * (n + 2.0),
            -0.25 * n,
            "l = n/2-1: threshold line, wave and heat contributions balance");
    if ((n == 4 && l == 2.0) || (n == 5 && l <= 2.5) ||
        (n >= 6 && l > half - 1.0 && l <= half))
        add(DecayBand::EdgeBand, ProfileKind::HeatLike, -0.5 * (l + 1.0),
            -0.25 * n,
            "n/2-1 < l <= n/2: heat approximation, rate still limited by l");
    if ((n >= 4 && l > half) || n <= 3)
        add(DecayBand::HeatBand, ProfileKind::HeatLike, -0.25 * (n + 2.0),
            -0.25 * n,
            "l > n/2 (or n <= 3): heat approximation at the full "
            "dimension rate");

    if (hits.size() > 1)
        throw std::logic_error("classification rows overlap at n=" +
                               std::to_string(n) + ", l=" + std::to_string(l));
    if (hits.empty()) {
        Regime r;
        r.valid = false;
        r.reason = "no classification row covers this (n, l)";
        return r;
    }
    return hits.front();
}

std::vector<double> default_time_grid(double t_max) {
    if (!(t_max >= 10.0))
        throw std::invalid_argument("t_max must be >= 10");
    std::vector<double> ts;
    for (double t = 10.0; t <= t_max * (1.0 + 1e-9); t *= 1.25)
        ts.push_back(t);
    return ts;
}

SlopeFit fit_loglog_slope(const std::vector<double>& times,
                          const std::vector<double>& norms) {
    SlopeFit f;
    if (times.size() != norms.size() || times.size() < 3) return f;
    int n = (int)times.size();

    // fit window: grow backwards from the end until >= 10 points spanning
    // at least a decade of t (or the whole series if it never does)
    int first = n - 1;
    while (first > 0) {
        int count = n - first;
        if (count >= 10 && times[(size_t)n - 1] / times[(size_t)first] >= 10.0)
            break;
        --first;
    }
    int count = n - first;
    bool decade = times[(size_t)n - 1] / times[(size_t)first] >= 10.0;

    for (int i = first; i < n; ++i)
        if (!(norms[(size_t)i] > 0.0) || !std::isfinite(norms[(size_t)i]))
            return f; // ok stays false: dead or broken series

    double sx = 0.0, sy = 0.0;
    for (int i = first; i < n; ++i) {
        sx += std::log(times[(size_t)i]);
        sy += std::log(norms[(size_t)i]);
    }
    double mx = sx / count, my = sy / count;
    double sxx = 0.0, sxy = 0.0;
    for (int i = first; i < n; ++i) {
        double dx = std::log(times[(size_t)i]) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(norms[(size_t)i]) - my);
    }
    if (!(sxx > 0.0)) return f;
    f.slope = sxy / sxx;
    double ss_res = 0.0, ss_tot = 0.0;
    for (int i = first; i < n; ++i) {
        double dx = std::log(times[(size_t)i]) - mx;
        double dy = std::log(norms[(size_t)i]) - my;
        double resid = dy - f.slope * dx;
        ss_res += resid * resid;
        ss_tot += dy * dy;
    }
    f.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    f.se = count > 2 ? std::sqrt(std::max(ss_res, 0.0) / (count - 2) / sxx)
                     : 0.0;
    f.first = first;
    f.count = count;
    f.ok = count >= 10 && decade;
    f.low_r2 = f.r2 < 0.98;
    return f;
}

namespace {

constexpr double kRelRefine = 1e-2;  // per-step tol = prev norm / 100
constexpr double kTolFloor = 1e-15;  // absolute floor for the adapted tol

// Kernel envelopes for r >= 1: the modal frequency omega(r) =
// sqrt(4 r^2 (1+r^2)^2 - 1) / (2(1+r^2)) is increasing with omega(1) =
// sqrt(15)/4, so |E0| <= 1, |E1| <= 1/omega(1) < 1.04, and a = 1/(2(1+r^2))
// <= 1/4.  Hence |u| <= |u0|(1 + 1.04/4) + 1.04|u1| <= 1.3|u0| + 1.04|u1|
// and |u|^2 <= 3.4|u0|^2 + 2.2|u1|^2.
std::vector<TailBound> scaled_data_tails(const DataPair& p, double c0,
                                         double c1) {
    auto scale = [](TailBound b, double c) {
        if (b.kind == TailBound::Kind::Gaussian ||
            b.kind == TailBound::Kind::Power)
            b.coeff *= c;
        return b;
    };
    return {scale(p.u0.tail, c0), scale(p.u1.tail, c1)};
}

std::vector<TailBound> solution_tails(const DataPair& p) {
    return scaled_data_tails(p, 3.4, 2.2);
}

// push a data tail multiplied by factor / r^extra_power (r >= 1)
void push_shifted(std::vector<TailBound>& out, TailBound b, double factor,
                  double extra_power) {
    switch (b.kind) {
        case TailBound::Kind::Gaussian:
            b.coeff *= factor; // r^{-k} <= 1 for r >= 1
            out.push_back(b);
            break;
        case TailBound::Kind::Power:
            b.coeff *= factor;
            b.rate += extra_power;
            out.push_back(b);
            break;
        default:
            out.push_back(b);
            break;
    }
}

// Wave-profile residual envelope for r >= 1.  Writing a = 1/(2(1+r^2)) and
// omega for the modal frequency:
//   |e^{-a t} - e^{-t/(2r^2)}| <= t (1/(2r^2) - a) <= t/(2 r^4)
//   |omega - r| = 1/(2 alpha (omega + ... )) <= 1/(4 (1+r^2)^2 r) <= 1/(4 r^5)
// so matching E0 against e^{-t/(2r^2)} cos(t r) and E1 against
// e^{-t/(2r^2)} sin(t r)/r term by term gives
//   |u - wave| <= (|u0|+|u1|)(t+1)/r^4 + 0.6 |u0| / r^2
// (the last term is the a u0 E1 remainder).  Squaring:
//   |u - wave|^2 <= 4 (t+1)^2 (|u0|^2+|u1|^2)/r^8 + 0.72 |u0|^2 / r^4.
std::vector<TailBound> wave_residual_tails(const DataPair& p, double t) {
    double c = 4.0 * (t + 1.0) * (t + 1.0);
    std::vector<TailBound> out;
    push_shifted(out, p.u0.tail, c, 8.0);
    push_shifted(out, p.u1.tail, c, 8.0);
    push_shifted(out, p.u0.tail, 0.72, 4.0);
    return out;
}

std::vector<TailBound> residual_tails(const DataPair& p, ProfileKind k,
                                      double t) {
    switch (k) {
        case ProfileKind::WaveLike:
            return wave_residual_tails(p, t);
        case ProfileKind::HeatLike:
            // |u - heat|^2 <= 2|u|^2 + 2|heat|^2 and |heat|^2 <=
            // 2(|u0|^2+|u1|^2) e^{-2tr^2} <= 2(|u0|^2+|u1|^2)
            return scaled_data_tails(p, 10.8, 8.4);
        case ProfileKind::Combined:
        default: {
            // |u - wave - heat|^2 <= 2|u - wave|^2 + 2|heat|^2
            std::vector<TailBound> out = wave_residual_tails(p, t);
            for (TailBound& b : out) b.coeff *= 2.0;
            for (TailBound& b : scaled_data_tails(p, 4.0, 4.0))
                out.push_back(b);
            return out;
        }
    }
}

DecaySeries run_series(const DataPair& p, ProfileKind k, bool residual,
                       Zone zone, const std::vector<double>& times,
                       double predicted, double tol, long long max_evals) {
    if (times.empty()) throw std::invalid_argument("empty time grid");
    if (!(times.front() >= 1.0))
        throw std::invalid_argument(
            "time grid must start at t >= 1 (tail envelopes assume it)");
    if (!std::is_sorted(times.begin(), times.end()))
        throw std::invalid_argument("time grid must be ascending");
    if (!p.u0.uhat || !p.u1.uhat)
        throw std::invalid_argument("data pair not initialized");

    DecaySeries s;
    s.zone = zone;
    s.profile = k;
    s.is_residual = residual;
    s.predicted_exponent = predicted;

    double prev_norm = -1.0;
    for (double t : times) {
        double tol_t = (prev_norm > 0.0)
                           ? std::max(kTolFloor, kRelRefine * prev_norm)
                           : tol;
        Region reg;
        if (zone == Zone::High || zone == Zone::Full) {
            auto bounds =
                residual ? residual_tails(p, k, t) : solution_tails(p);
            double xi = tail_cutoff(bounds, tol_t, p.dim);
            reg = make_region(zone, std::max(xi, 1.0 + 1e-9));
        } else {
            reg = make_region(zone);
        }
        auto f = [&p, k, residual, t](double r) {
            double u0v = p.u0.uhat(r), u1v = p.u1.uhat(r);
            KernelPair kp = kernel_pair(t, r);
            double a = 0.5 / (1.0 + r * r);
            double u = u0v * kp.e0 + (u1v + a * u0v) * kp.e1;
            return residual ? u - profile_value(k, t, r, p) : u;
        };
        QuadratureResult q = l2_region_norm(f, reg, p.dim, t, tol_t, max_evals);
        s.times.push_back(t);
        s.norms.push_back(q.value);
        s.evals += q.evals;
        prev_norm = q.value;
    }
    s.fit = fit_loglog_slope(s.times, s.norms);
    return s;
}

} // namespace

DecaySeries residual_series(const DataPair& p, ProfileKind profile, Zone zone,
                            const std::vector<double>& times,
                            double predicted_exponent, double tol,
                            long long max_evals) {
    return run_series(p, profile, true, zone, times, predicted_exponent, tol,
                      max_evals);
}

DecaySeries solution_norm_series(const DataPair& p, Zone zone,
                                 const std::vector<double>& times,
                                 double predicted_exponent, double tol,
                                 long long max_evals) {
    return run_series(p, ProfileKind::HeatLike, false, zone, times,
                      predicted_exponent, tol, max_evals);
}

MidRate mid_region_rate(const DataPair& p, const std::vector<double>& times_in,
                        double tol, long long max_evals) {
    std::vector<double> times = times_in;
    if (times.empty())
        for (int t = 10; t <= 200; t += 10) times.push_back((double)t);
    if (!p.u0.uhat || !p.u1.uhat)
        throw std::invalid_argument("data pair not initialized");

    Region reg = make_region(Zone::Mid);
    MidRate m;
    double prev = -1.0;
    for (double t : times) {
        double tol_t =
            (prev > 0.0) ? std::max(kTolFloor, kRelRefine * prev) : tol;
        auto f = [&p, t](double r) {
            double u0v = p.u0.uhat(r), u1v = p.u1.uhat(r);
            KernelPair kp = kernel_pair(t, r);
            double a = 0.5 / (1.0 + r * r);
            return u0v * kp.e0 + (u1v + a * u0v) * kp.e1;
        };
        QuadratureResult q = l2_region_norm(f, reg, p.dim, t, tol_t, max_evals);
        if (q.value <= 1e-290) break; // exponential decay hit the floor
        m.times.push_back(t);
        m.norms.push_back(q.value);
        prev = q.value;
    }
    if (m.times.size() < 10 ||
        m.times.back() / m.times.front() < 10.0)
        throw NonConvergent(
            "mid-region norms underflow before a decade of usable data");

    // OLS of ln(norm) on t: norm ~ e^{-eta t}
    int n = (int)m.times.size();
    double sx = 0.0, sy = 0.0;
    for (int i = 0; i < n; ++i) {
        sx += m.times[(size_t)i];
        sy += std::log(m.norms[(size_t)i]);
    }
    double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        double dx = m.times[(size_t)i] - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(m.norms[(size_t)i]) - my);
    }
    double slope = sxy / sxx;
    double ss_res = 0.0, ss_tot = 0.0;
    for (int i = 0; i < n; ++i) {
        double dx = m.times[(size_t)i] - mx;
        double dy = std::log(m.norms[(size_t)i]) - my;
        double resid = dy - slope * dx;
        ss_res += resid * resid;
        ss_tot += dy * dy;
    }
    m.eta = -slope;
    m.se = n > 2 ? std::sqrt(std::max(ss_res, 0.0) / (n - 2) / sxx) : 0.0;
    m.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return m;
}

void write_series_csv(std::ostream& os, const DecaySeries& s,
                      bool with_header) {
    if (with_header)
        os << "t,norm,region,profile,predicted_exponent,fitted_slope\n";
    const char* prof = s.is_residual ? profile_name(s.profile) : "none";
    for (size_t i = 0; i < s.times.size(); ++i) {
        CsvRow(os)
            .col(s.times[i])
            .col(s.norms[i])
            .col(zone_name(s.zone))
            .col(prof)
            .col(s.predicted_exponent)
            .col(s.fit.slope);
    }
}

} // namespace platelab
