#include "doctest.h"

#include "platelab/symbol.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

using namespace platelab;
using cplx = std::complex<double>;

TEST_CASE("branch constants solve their defining equations") {
    const BranchConstants& bc = branch_constants();
    auto q = [](double z) {
        double a = 1.0 + z * z;
        return 4.0 * z * z * a * a;
    };
    CHECK(std::abs(q(bc.zeta) - 1.0) < 1e-12);
    CHECK(std::abs(q(bc.delta) - 0.5) < 1e-12);
    CHECK(bc.delta < bc.zeta);
    CHECK(bc.critical_band_tol == 1e-6);

    // frozen reference values (independent bisection, 200 steps)
    CHECK(std::abs(bc.zeta - 0.42385379906978327) < 5e-16);
    CHECK(std::abs(bc.delta - 0.32060055396130421) < 5e-16);

    CHECK(zeta_root() == bc.zeta);
    CHECK(delta_cutoff() == bc.delta);

    // the double root -1/(2(1+zeta^2)) collapses to -zeta
    CHECK(std::abs(1.0 / (2.0 * (1.0 + bc.zeta * bc.zeta)) - bc.zeta) < 1e-15);
}

TEST_CASE("characteristic roots per branch") {
    ModeState m0 = characteristic_roots(0.0);
    CHECK(m0.branch == Branch::Overdamped);
    CHECK(m0.discriminant == doctest::Approx(1.0));
    CHECK(std::abs(m0.lambda1) == 0.0);
    CHECK(m0.lambda2.real() == doctest::Approx(-1.0));
    CHECK(m0.lambda2.imag() == 0.0);

    ModeState m1 = characteristic_roots(1.0);
    CHECK(m1.branch == Branch::Oscillatory);
    CHECK(m1.lambda1.real() == doctest::Approx(-0.25));
    CHECK(m1.lambda1.imag() == doctest::Approx(std::sqrt(15.0) / 4.0));
    CHECK(m1.lambda2.real() == doctest::Approx(-0.25));
    CHECK(m1.lambda2.imag() == doctest::Approx(-std::sqrt(15.0) / 4.0));

    ModeState mc = characteristic_roots(zeta_root());
    CHECK(mc.branch == Branch::Critical);
    // both roots sit on the double root, up to sqrt(|D|) splitting
    CHECK(std::abs(mc.lambda1 - cplx(-zeta_root(), 0.0)) < 1e-6);
    CHECK(std::abs(mc.lambda2 - cplx(-zeta_root(), 0.0)) < 1e-6);

    // off-band radii classify by sign of the discriminant
    CHECK(characteristic_roots(0.1).branch == Branch::Overdamped);
    CHECK(characteristic_roots(0.42).branch == Branch::Overdamped);
    CHECK(characteristic_roots(0.43).branch == Branch::Oscillatory);
    CHECK(characteristic_roots(10.0).branch == Branch::Oscillatory);
}

TEST_CASE("vieta identities across a radius sweep") {
    std::vector<double> rs;
    for (int i = 0; i <= 300; ++i) rs.push_back(0.1 * i);
    rs.push_back(zeta_root());
    rs.push_back(zeta_root() * (1.0 + 1e-9));
    rs.push_back(delta_cutoff());
    for (double r : rs) {
        ModeState m = characteristic_roots(r);
        double alpha = 1.0 + r * r;
        cplx sum = m.lambda1 + m.lambda2;
        cplx prod = m.lambda1 * m.lambda2;
        double scale = std::max(1.0, r * r);
        CHECK(std::abs(sum + 1.0 / alpha) < 1e-12);
        CHECK(std::abs(prod - r * r) < 1e-12 * scale);
        CHECK(m.lambda1.real() <= 0.0);
        CHECK(m.lambda2.real() <= 0.0);
        if (m.branch == Branch::Overdamped) {
            CHECK(m.lambda1.imag() == 0.0);
            CHECK(m.lambda2.imag() == 0.0);
            CHECK(m.lambda2.real() <= m.lambda1.real());
        }
    }
}

TEST_CASE("kernel closed forms at r = 0") {
    for (double t : {0.0, 0.1, 1.0, 3.7, 10.0, 50.0}) {
        KernelPair k = kernel_pair(t, 0.0);
        CHECK(std::abs(k.e0 - 0.5 * (1.0 + std::exp(-t))) < 1e-14);
        CHECK(std::abs(k.e1 - (1.0 - std::exp(-t))) < 1e-14);
    }
}

TEST_CASE("kernel initial conditions at t = 0") {
    for (double r : {0.0, 0.2, delta_cutoff(), zeta_root(), 1.0, 5.0, 40.0}) {
        KernelPair k = kernel_pair(0.0, r);
        CHECK(k.e0 == 1.0);
        CHECK(k.e1 == 0.0);
    }
}

TEST_CASE("kernel at the critical radius matches the double-root form") {
    double z = zeta_root();
    double a = 0.5 / (1.0 + z * z);
    CHECK(std::abs(e0_kernel(2.0, z) - std::exp(-2.0 * a)) < 1e-13);
    CHECK(std::abs(e1_kernel(2.0, z) - 2.0 * std::exp(-2.0 * a)) < 1e-13);
    // a == zeta/2 at the double root, so e1(2,zeta) = 2 e^{-1/(1+zeta^2)}
    CHECK(std::abs(e1_kernel(2.0, z) - 2.0 * std::exp(-1.0 / (1.0 + z * z))) < 1e-13);
}

TEST_CASE("kernels are continuous across the critical band") {
    double z = zeta_root();
    for (double t : {0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0}) {
        KernelPair lo = kernel_pair(t, z * (1.0 - 1e-8));
        KernelPair mid = kernel_pair(t, z);
        KernelPair hi = kernel_pair(t, z * (1.0 + 1e-8));
        CHECK(std::abs(lo.e0 - mid.e0) < 1e-6);
        CHECK(std::abs(hi.e0 - mid.e0) < 1e-6);
        CHECK(std::abs(lo.e1 - mid.e1) < 1e-6);
        CHECK(std::abs(hi.e1 - mid.e1) < 1e-6);
    }
}

TEST_CASE("modal solution matches frozen reference values") {
    struct Row {
        double t, r, u0part, u1part, dt0part;
    };
    // generated by an independent closed-form prototype, t in {1,2,5}
    const Row rows[] = {
        {2.0, 0.1, 0.98862533605175429, 0.86513148715086707, -0.0086513148715086727},
        {2.0, 0.32060055396130421, 0.88150322772088296, 0.86412289478207693, -0.088818625638230383},
        {2.0, 0.42, 0.79536367298047828, 0.85720832305010364, -0.15121154818603827},
        {2.0, 0.6, 0.58145323748276034, 0.82134992742817203, -0.29568597387414192},
        {2.0, 1.0, -0.070644550919464089, 0.58500021359668353, -0.58500021359668353},
        {5.0, 3.0, -0.58212664528129732, 0.16924892826940624, -1.5232403544246562},
        {1.0, 10.0, -0.83519662469424882, -0.05413336355952543, 5.4133363559525431},
    };
    for (const Row& w : rows) {
        cplx u0p = uhat_solution(w.t, w.r, 1.0, 0.0);
        cplx u1p = uhat_solution(w.t, w.r, 0.0, 1.0);
        cplx d0p = uhat_time_derivative(w.t, w.r, 1.0, 0.0);
        CHECK(u0p.imag() == 0.0);
        CHECK(u0p.real() == doctest::Approx(w.u0part).epsilon(1e-12));
        CHECK(u1p.real() == doctest::Approx(w.u1part).epsilon(1e-12));
        CHECK(d0p.real() == doctest::Approx(w.dt0part).epsilon(1e-12));
    }
    // on the double root the prototype used complex arithmetic and only
    // carries ~1e-9; pin loosely there
    double z = zeta_root();
    CHECK(uhat_solution(2.0, z, 1.0, 0.0).real() ==
          doctest::Approx(0.79155028952699558).epsilon(5e-9));
    CHECK(uhat_solution(2.0, z, 0.0, 1.0).real() ==
          doctest::Approx(0.85679172317433305).epsilon(5e-9));
    CHECK(uhat_time_derivative(2.0, z, 1.0, 0.0).real() ==
          doctest::Approx(-0.15392438348166851).epsilon(5e-9));
}

TEST_CASE("solution identities at the frequency origin") {
    cplx u0(0.3, -1.1), u1(-0.7, 0.25);
    for (double t : {0.2, 1.0, 4.0, 20.0}) {
        cplx u = uhat_solution(t, 0.0, u0, u1);
        cplx du = uhat_time_derivative(t, 0.0, u0, u1);
        cplx expect = u0 + u1 * (1.0 - std::exp(-t));
        CHECK(std::abs(u - expect) < 1e-14);
        CHECK(std::abs(du - u1 * std::exp(-t)) < 1e-14);
    }
    for (double r : {0.0, 0.3, zeta_root(), 2.0}) {
        CHECK(std::abs(uhat_solution(0.0, r, u0, u1) - u0) == 0.0);
        CHECK(std::abs(uhat_time_derivative(0.0, r, u0, u1) - u1) == 0.0);
    }
}

TEST_CASE("time derivative agrees with a centered difference") {
    const double h = 1e-5;
    cplx u0(1.0, 0.0), u1(0.4, 0.0);
    for (double t : {0.5, 2.0, 10.0}) {
        for (double r : {0.0, 0.1, delta_cutoff(), zeta_root(), 0.7, 1.0, 3.0}) {
            cplx fd = (uhat_solution(t + h, r, u0, u1) - uhat_solution(t - h, r, u0, u1)) / (2.0 * h);
            cplx du = uhat_time_derivative(t, r, u0, u1);
            CHECK(std::abs(fd - du) < 1e-8 * std::max(1.0, std::abs(du)));
        }
    }
}

TEST_CASE("negative arguments are rejected") {
    CHECK_THROWS_AS(characteristic_roots(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(kernel_pair(-0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(kernel_pair(1.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(e0_kernel(-2.0, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(e1_kernel(1.0, -3.0), std::invalid_argument);
    CHECK_THROWS_AS(uhat_solution(-1.0, 0.5, 1.0, 0.0), std::invalid_argument);
}
