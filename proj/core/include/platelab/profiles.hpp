#pragma once

// Asymptotic profiles the modal solution is compared against.  On the
// Fourier side, with data pair (u0_hat, u1_hat) evaluated at radius r:
//
//   wave:  e^{-t/(2 r^2)} ( u1_hat(r) sin(t r)/r + u0_hat(r) cos(t r) )
//   heat:  ( u0_hat(r) + u1_hat(r) ) e^{-t r^2}
//
// The wave profile is the high-frequency reference (note the 1/(2r^2)
// damping exponent, not 1/(2(1+r^2))), the heat profile the low-frequency
// one; Combined is their sum and serves the threshold regime.

#include "platelab/data.hpp"

namespace platelab {

enum class ProfileKind { WaveLike, HeatLike, Combined };

const char* profile_name(ProfileKind k);

// pre: t > 0 (the damping exponent diverges at t = 0).  Returns exact 0 at
// r = 0 and whenever t/(2r^2) underflows e^{-x} to zero.
double wave_profile(double t, double r, const DataPair& p);

// pre: t >= 0.  At t = 0 this is the constant u0_hat + u1_hat pointwise;
// its Full-region norm is divergent there (the quadrature layer signals
// NonIntegrable through the missing tail decay).
double heat_profile(double t, double r, const DataPair& p);

// wave + heat.  pre: t > 0.
double combined_profile(double t, double r, const DataPair& p);

double profile_value(ProfileKind k, double t, double r, const DataPair& p);

// Closed-form Full-region L2 norm of the heat profile when both data
// profiles are constant-at-origin dominated:  |P0 + P1| (pi/(2t))^{n/4}.
// Exact for the leading heat asymptote; used as the quadrature cross-check.
// pre: t > 0.
double heat_l2_norm(double t, const DataPair& p);

} // namespace platelab
