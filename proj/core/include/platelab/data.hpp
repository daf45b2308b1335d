#pragma once

// Radial initial-data catalog on the Fourier side.  A DataSpec carries the
// radial profile u_hat(r) together with the analytic metadata the decay lab
// needs: the zero-frequency moment P = u_hat(0), a grid-certified Lipschitz
// surrogate K with |u_hat(r) - P| <= K r near 0, the Sobolev regularity
// ceiling, and a certified tail bound on |u_hat|^2.

#include <functional>
#include <string>

#include "platelab/quadrature.hpp"

namespace platelab {

struct DataSpec {
    std::string label;
    std::function<double(double)> uhat; // radial Fourier profile, r >= 0
    double moment = 0.0;                // u_hat(0) = integral of the data
    double l11_surrogate = 0.0;         // K: |u_hat(r) - moment| <= K r
    double sobolev_limit = 0.0;         // sup{ s : H^s norm finite }
    TailBound tail;                     // bound on |u_hat(r)|^2 for r >= 1
    int dim = 0;
};

struct DataPair {
    DataSpec u0; // position data (one order smoother in the catalog)
    DataSpec u1; // velocity data
    int dim = 0;
    double l = 0.0; // regularity index the pair was built for
};

// Gaussian bump with integral-normalized profile u_hat(r) = (pi/a)^{n/2}
// e^{-r^2/(4a)} (the transform of e^{-a|x|^2}); smooth, all H^s finite.
// (pre: a > 0, n >= 1)
DataSpec gaussian_datum(double a, int n);

// Sobolev-edge profile u_hat(r) = (1+r^2)^{-sigma/2}: H^s finite exactly for
// s < sigma - n/2.  (pre: sigma > n/2 so the L2 norm itself is finite, n >= 1)
DataSpec sobolev_edge_datum(double sigma, int n);

// Split u_hat(r) = moment + A(r) + i B(r); for the real catalog B = 0.
struct ABParts {
    double a_part = 0.0;
    double b_part = 0.0;
};
ABParts ab_decomposition(const DataSpec& d, double r);

// H^s norm by radial quadrature of (1+r^2)^s |u_hat|^2.  Throws
// NonIntegrable when s >= sobolev_limit.  Default tolerance is coarse
// because near-edge norms converge like Xi^{-1/4} in the tail cutoff.
double h_norm(const DataSpec& d, double s, double tol = 1e-3,
              long long max_evals = 20'000'000);

// Scale prefactor I0 = ||u1||_{H^l} + ||u0||_{H^{l+1}} + K1 + K0.  Coarse by
// construction (see h_norm); only finiteness and order of magnitude matter.
double i0_norm(const DataPair& p, double tol = 1.0);

// Build a data pair from a catalog label:
//   "gaussian"            -> u0 = u1 = gaussian_datum(1, n)
//   "gaussian:a=2.5"      -> u0 = u1 = gaussian_datum(2.5, n)
//   "edge"                -> sigma = l + n/2 + 1/4 (just inside H^l)
//   "edge:sigma=7.25"     -> u1 = edge(sigma), u0 = edge(sigma + 1)
// Edge pairs stagger sigma so that u0 sits in H^{l+1} with the same margin
// u1 has in H^l.  Throws std::invalid_argument on malformed labels or
// parameters out of range.
DataPair make_pair(const std::string& label, int n, double l);

} // namespace platelab
