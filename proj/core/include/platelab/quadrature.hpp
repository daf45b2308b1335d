#pragma once

// Adaptive radial quadrature for L2 norms of radial functions on R^n:
//   ||f||^2 = omega_{n-1} * integral_0^inf |f(r)|^2 r^{n-1} dr
// restricted to one of the frequency regions Low/Mid/High/Full.  Panels are
// Gauss-Legendre of order 10; the error estimate per panel compares the
// parent rule against the sum over its two halves, and refinement always
// splits the panel with the largest estimate.  Evaluation order is fixed, so
// results are bit-deterministic for a given build.

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace platelab {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Budget exhausted before the requested tolerance was certified.
struct NonConvergent : QuadratureError {
    using QuadratureError::QuadratureError;
};
// The integral diverges (or no usable tail bound exists to truncate it).
struct NonIntegrable : QuadratureError {
    using QuadratureError::QuadratureError;
};

// Frequency zones: Low = [0, delta], Mid = [delta, 1], High = [1, Xi],
// Full = [0, Xi], with delta the low-frequency branch cutoff and Xi a
// certified tail truncation radius.
enum class Zone { Low, Mid, High, Full };

struct Region {
    Zone zone = Zone::Full;
    double lo = 0.0;
    double hi = 0.0;
};

// xi_max is used only for High/Full (pre: xi_max > 1 there); Low/Mid ignore it.
Region make_region(Zone zone, double xi_max = 0.0);

const char* zone_name(Zone z);

// Certified bound on |f(r)|^2 for r >= 1 (or r >= support radius for Zero).
//   Zero:     |f|^2 = 0 for r >= radius          (param = radius)
//   Gaussian: |f(r)|^2 <= coeff * e^{-rate r^2}
//   Power:    |f(r)|^2 <= coeff * r^{-exponent}
struct TailBound {
    enum class Kind { None, Zero, Gaussian, Power } kind = Kind::None;
    double coeff = 0.0;
    double rate = 0.0; // Gaussian rate, Power exponent, Zero support radius

    static TailBound none() { return {}; }
    static TailBound zero_beyond(double radius) {
        return {Kind::Zero, 0.0, radius};
    }
    static TailBound gaussian(double coeff, double rate) {
        return {Kind::Gaussian, coeff, rate};
    }
    static TailBound power(double coeff, double exponent) {
        return {Kind::Power, coeff, exponent};
    }
};

// Smallest grid radius Xi >= 1 (geometric scan, 5% steps) such that the sum
// of the certified tail integrals  omega_{n-1} int_Xi^inf bound(r) r^{n-1} dr
// is < tol^2/4 -- i.e. truncation moves the norm by less than tol/2 even in
// the worst case.  Throws NonIntegrable for Power exponents <= n, for
// Kind::None entries, or when no finite Xi can meet the target.
double tail_cutoff(const std::vector<TailBound>& bounds, double tol, int n);
double tail_cutoff(const TailBound& bound, double tol, int n);

// Surface area of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2).
double unit_sphere_area(int n);

struct QuadratureResult {
    double value = 0.0;     // the norm itself, not its square
    double est_error = 0.0; // certified-estimate for |value - true|
    int panels_used = 0;    // leaf panels in the final partition
    long long evals = 0;    // integrand evaluations consumed
};

// L2 norm of f over a region.  t_hint bounds the oscillation frequency of f
// (panel width is capped at pi/(2 max(t_hint, 1)) so each half-period gets a
// full order-10 panel); panels are also capped at width 1/4 and split at the
// branch radii delta and zeta when those fall inside the region.
// Throws NonConvergent when max_evals is exhausted, NonIntegrable when
// refinement collapses onto a point without converging.
QuadratureResult l2_region_norm(const std::function<double(double)>& f,
                                const Region& region, int n, double t_hint,
                                double tol, long long max_evals = 1'000'000);
// complex-valued integrand (|f|^2 = norm); separate name because a lambda
// returning double would convert to either std::function signature
QuadratureResult l2_region_norm_complex(
    const std::function<std::complex<double>(double)>& f, const Region& region,
    int n, double t_hint, double tol, long long max_evals = 1'000'000);

} // namespace platelab
