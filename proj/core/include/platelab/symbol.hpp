#pragma once

// Fourier-side machinery for the damped plate equation with rotational
// inertia,  u_tt - lap u_tt + lap^2 u - lap u + u_t = 0.  Writing r = |xi|
// and alpha = 1 + r^2, each Fourier mode solves
//
//     alpha * w'' + w' + r^2 * alpha * w = 0,
//
// with characteristic roots lambda = (-1 +- sqrt(D)) / (2 alpha),
// D = 1 - 4 r^2 alpha^2.  Everything here is the exact modal solution and
// the numerically safe evaluation of its two fundamental kernels.

#include <complex>

namespace platelab {

// Sign of the discriminant decides the character of a mode; Critical means
// |D| is inside the near-double-root band where series evaluation is used.
enum class Branch { Overdamped, Critical, Oscillatory };

struct ModeState {
    double r = 0.0;                  // radial frequency |xi|
    std::complex<double> lambda1;    // root that vanishes as r -> 0
    std::complex<double> lambda2;    // root near -1/alpha at small r
    double discriminant = 0.0;       // 1 - 4 r^2 (1+r^2)^2
    Branch branch = Branch::Overdamped;
};

struct BranchConstants {
    double zeta;              // oscillation threshold: 4 z^2 (1+z^2)^2 = 1
    double delta;             // low-frequency cutoff: 4 d^2 (1+d^2)^2 = 1/2
    double critical_band_tol; // |D| below this switches kernels to series form
};

// Solved once to |residual| < 1e-12 and cached.
const BranchConstants& branch_constants();
double zeta_root();
double delta_cutoff();

// Characteristic roots at radial frequency r (pre: r >= 0).  Real roots are
// ordered lambda2 <= lambda1 <= 0; complex roots come as the conjugate pair
// lambda1 = conj(lambda2) with Im(lambda1) > 0.  lambda1 is computed through
// the product identity lambda1*lambda2 = r^2, which keeps it accurate when
// the two roots have very different magnitudes (small r).
ModeState characteristic_roots(double r);

// Fundamental kernel pair for the modal ODE, a = 1/(2 alpha):
//   E0(t) = e^{-a t} cosh(sqrt(D) a t)            E0(0) = 1, E0'(0) = -a
//   E1(t) = e^{-a t} sinh(sqrt(D) a t)/(sqrt(D) a) E1(0) = 0, E1'(0) = 1
// Both are real-analytic in D across the double root; inside the critical
// band they are evaluated by the entire-series form in y = D (a t)^2, and
// for large arguments by overflow-free split exponentials.
// (pre: t >= 0, r >= 0.)
struct KernelPair {
    double e0 = 0.0;
    double e1 = 0.0;
};
KernelPair kernel_pair(double t, double r);
double e0_kernel(double t, double r);
double e1_kernel(double t, double r);

// Modal solution with data (u0_hat, u1_hat) at frequency r:
//   u_hat(t) = u0_hat E0(t) + (u1_hat + a u0_hat) E1(t),  a = 1/(2(1+r^2)),
// and its exact time derivative
//   u_hat'(t) = u1_hat (E0(t) - a E1(t)) - r^2 u0_hat E1(t),
// which follows from E0' = -a E0 + D a^2 E1 and E1' = E0 - a E1.
std::complex<double> uhat_solution(double t, double r,
                                   std::complex<double> u0_hat,
                                   std::complex<double> u1_hat);
std::complex<double> uhat_time_derivative(double t, double r,
                                          std::complex<double> u0_hat,
                                          std::complex<double> u1_hat);

} // namespace platelab
