#include "platelab/symbol.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace platelab {
namespace {

constexpr double kBandTol = 1e-6;

// 4 z^2 (1+z^2)^2 is strictly increasing on [0, inf), so bisection on [0, 1]
// is safe; 200 halvings are far past double resolution.
double solve_branch_constant(double target) {
    auto residual = [target](double z) {
        double a = 1.0 + z * z;
        return 4.0 * z * z * a * a - target;
    };
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (residual(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Entire-series forms of the kernels in y = D (a t)^2:
//   coshc(y) = sum_k y^k/(2k)!    (= cosh(sqrt y), or cos(sqrt -y))
//   sinhc(y) = sum_k y^k/(2k+1)!  (= sinh(sqrt y)/sqrt y)
// Converge fast for the |y| <= 25 range they are used on.
double coshc(double y) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 80; ++k) {
        term *= y / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::max(1.0, std::abs(sum))) break;
    }
    return sum;
}

double sinhc(double y) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 80; ++k) {
        term *= y / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::max(1.0, std::abs(sum))) break;
    }
    return sum;
}

void require_nonneg(double v, const char* what) {
    if (!(v >= 0.0))
        throw std::invalid_argument(std::string(what) + " must be >= 0");
}

} // namespace

const BranchConstants& branch_constants() {
    static const BranchConstants bc{solve_branch_constant(1.0),
                                    solve_branch_constant(0.5), kBandTol};
    return bc;
}

double zeta_root() { return branch_constants().zeta; }
double delta_cutoff() { return branch_constants().delta; }

ModeState characteristic_roots(double r) {
    require_nonneg(r, "radius");
    double alpha = 1.0 + r * r;
    double disc = 1.0 - 4.0 * r * r * alpha * alpha;
    ModeState m;
    m.r = r;
    m.discriminant = disc;
    if (disc >= 0.0) {
        double sq = std::sqrt(disc);
        double lam2 = (-1.0 - sq) / (2.0 * alpha);
        // product identity lambda1*lambda2 = r^2 avoids the cancellation in
        // (-1 + sq)/(2 alpha) at small r
        double lam1 = (r == 0.0) ? 0.0 : (r * r) / lam2;
        m.lambda1 = lam1;
        m.lambda2 = lam2;
    } else {
        double re = -1.0 / (2.0 * alpha);
        double im = std::sqrt(-disc) / (2.0 * alpha);
        m.lambda1 = {re, im};
        m.lambda2 = {re, -im};
    }
    m.branch = std::abs(disc) <= branch_constants().critical_band_tol
                   ? Branch::Critical
                   : (disc > 0.0 ? Branch::Overdamped : Branch::Oscillatory);
    return m;
}

KernelPair kernel_pair(double t, double r) {
    require_nonneg(t, "time");
    require_nonneg(r, "radius");
    double alpha = 1.0 + r * r;
    double a = 0.5 / alpha;
    double disc = 1.0 - 4.0 * r * r * alpha * alpha;
    double at = a * t;
    double y = disc * at * at;

    KernelPair kp;
    // Series region: all small phases plus the whole critical band (where
    // sqrt(disc) in the closed forms cancels catastrophically).  Using one
    // series on both sides of disc = 0 makes E0/E1 exactly continuous
    // across the branch change.
    bool in_band = std::abs(disc) <= branch_constants().critical_band_tol;
    if (std::abs(y) <= 0.25 || (in_band && std::abs(y) <= 25.0)) {
        double damp = std::exp(-at);
        kp.e0 = damp * coshc(y);
        kp.e1 = damp * t * sinhc(y);
    } else if (disc > 0.0) {
        double om = std::sqrt(disc) * a; // om < a since disc < 1
        double x = om * t;
        if (x <= 1.0) {
            double damp = std::exp(-at);
            kp.e0 = damp * std::cosh(x);
            kp.e1 = damp * t * (std::sinh(x) / x);
        } else {
            // split exponents: both om - a < 0 and -(om + a) < 0, so this
            // never overflows no matter how large t gets
            double ep = std::exp((om - a) * t);
            double em = std::exp(-(om + a) * t);
            kp.e0 = 0.5 * (ep + em);
            kp.e1 = (ep - em) / (2.0 * om);
        }
    } else {
        double om = std::sqrt(-disc) * a;
        double damp = std::exp(-at);
        kp.e0 = damp * std::cos(om * t);
        kp.e1 = damp * (std::sin(om * t) / om);
    }
    return kp;
}

double e0_kernel(double t, double r) { return kernel_pair(t, r).e0; }
double e1_kernel(double t, double r) { return kernel_pair(t, r).e1; }

std::complex<double> uhat_solution(double t, double r, std::complex<double> u0_hat,
                                   std::complex<double> u1_hat) {
    KernelPair kp = kernel_pair(t, r);
    double a = 0.5 / (1.0 + r * r);
    return u0_hat * kp.e0 + (u1_hat + a * u0_hat) * kp.e1;
}

std::complex<double> uhat_time_derivative(double t, double r,
                                          std::complex<double> u0_hat,
                                          std::complex<double> u1_hat) {
    KernelPair kp = kernel_pair(t, r);
    double a = 0.5 / (1.0 + r * r);
    return u1_hat * (kp.e0 - a * kp.e1) - (r * r) * u0_hat * kp.e1;
}

} // namespace platelab
