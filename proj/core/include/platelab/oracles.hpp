#pragma once

// Independent cross-checks for the closed-form layer: a fixed-step RK4
// integration of the modal ODE (no characteristic-root algebra shared with
// symbol.cpp), plus grid verifications of the analytic envelope bounds the
// decay predictions rest on.  Each check emits OracleReport rows suitable
// for CSV output; `check` ids are the catalog names used by the CLI
// (`4.4`, `4.6`, `4.7`, `lowfreq`, `mode`).

#include <complex>
#include <string>
#include <vector>

namespace platelab {

struct OdeTrace {
    std::vector<double> times;
    std::vector<std::complex<double>> values; // u_hat(t_k)
    std::vector<std::complex<double>> derivs; // u_hat'(t_k)
    double step = 0.0;                        // actual uniform step used
};

// Classical RK4 on  alpha u'' + u' + r^2 alpha u = 0,  alpha = 1 + r^2,
// recording every `record_stride`-th point plus the endpoint.
// (pre: r >= 0, t_end > 0, step > 0)
OdeTrace integrate_mode(double r, std::complex<double> u0,
                        std::complex<double> u1, double t_end, double step,
                        int record_stride = 1);

// sup over the recorded trace of |closed - rk4| / sup |closed|, taking the
// worse of the value and derivative traces.
double mode_agreement(double r, std::complex<double> u0,
                      std::complex<double> u1, double t_end, double step);

struct OracleReport {
    std::string check;     // catalog id, e.g. "4.4"
    std::string parameter; // human-readable parameter slice, e.g. "l=2,t=10"
    double bound = 0.0;    // claimed bound at those parameters
    double measured = 0.0; // measured value
    bool pass = false;
};

// "4.4": the damped-envelope supremum  sup_{x>=1} e^{-t/x} x^{-l}  equals
// e^{-l}(l/t)^l for t >= l (else e^{-t}), so sup * (1+t)^l stays bounded in
// t.  Each row reports the grid-measured sup against the closed form.
std::vector<OracleReport> envelope_sup_check(double l,
                                             const std::vector<double>& t_grid);

// "4.6": sup_{x>0} |sin(t x)/x| = t, measured on a log grid to rel 1e-3.
std::vector<OracleReport> sinc_sup_check(const std::vector<double>& t_grid);

// "4.7": sinh(t x)/(x e^{t x}) <= t  uniformly, i.e. sinh(y)/(y e^y) <= 1;
// reports the measured constant (attained in the limit y -> 0).
std::vector<OracleReport> sinh_bound_check();

// "lowfreq": structure of the slow root for r <= delta.  With
// g(beta) = 2(1+beta) / (1 + sqrt(1 - 4 beta (1+beta)^2)):
//   * g is bounded below by a positive constant on [0, delta^2],
//   * |g'| is bounded,
//   * lambda1(r) = -r^2 g(r^2) to machine precision,
//   * f(r) = (1 - 4r^2(1+r^2)^2)^{-1/2} - 1 obeys |f| <= C r^2.
// A final informational row reports the divergence from the variant that
// reads the inner weight as (1+r)^2; the implemented reading is the one
// consistent with the lambda1 identity.
std::vector<OracleReport> lowfreq_structure_check(int grid_points = 257);

// "mode": closed form vs RK4 on a standard radius grid spanning all three
// branches; measured = worst relative sup error, bound = tol.
std::vector<OracleReport> mode_oracle_check(double t_end = 50.0,
                                            double step = 2.5e-4,
                                            double tol = 1e-6);

// The whole suite, in catalog order, with default grids.
std::vector<OracleReport> run_oracle_suite();

} // namespace platelab
