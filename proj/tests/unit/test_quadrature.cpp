#include "doctest.h"

#include "platelab/quadrature.hpp"
#include "platelab/symbol.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

using namespace platelab;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("unit sphere areas") {
    CHECK(unit_sphere_area(1) == doctest::Approx(2.0));
    CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * kPi));
    CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * kPi));
    CHECK(unit_sphere_area(6) == doctest::Approx(kPi * kPi * kPi));
}

TEST_CASE("region construction") {
    Region full = make_region(Zone::Full, 2.5);
    CHECK(full.lo == 0.0);
    CHECK(full.hi == 2.5);
    Region low = make_region(Zone::Low);
    CHECK(low.lo == 0.0);
    CHECK(low.hi == delta_cutoff());
    Region mid = make_region(Zone::Mid);
    CHECK(mid.lo == delta_cutoff());
    CHECK(mid.hi == 1.0);
    Region high = make_region(Zone::High, 7.0);
    CHECK(high.lo == 1.0);
    CHECK(high.hi == 7.0);
    CHECK_THROWS_AS(make_region(Zone::High, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_region(Zone::Full, 0.5), std::invalid_argument);
    CHECK(zone_name(Zone::Low) == std::string("low"));
    CHECK(zone_name(Zone::Mid) == std::string("mid"));
    CHECK(zone_name(Zone::High) == std::string("high"));
    CHECK(zone_name(Zone::Full) == std::string("full"));
}

TEST_CASE("constant profile on the unit interval") {
    auto q = l2_region_norm([](double) { return 1.0; }, make_region(Zone::Full, 1.0), 1,
                            0.0, 1e-12);
    CHECK(q.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(q.est_error <= 1e-12);
    CHECK(q.evals > 0);
    CHECK(q.panels_used > 0);
}

TEST_CASE("planar gaussian matches the closed form") {
    // || e^{-r^2} ||_{L^2(R^2)}^2 = 2 pi int_0^inf e^{-2r^2} r dr = pi/2
    double xi = tail_cutoff(TailBound::gaussian(1.0, 2.0), 1e-9, 2);
    auto q = l2_region_norm([](double r) { return std::exp(-r * r); },
                            make_region(Zone::Full, xi), 2, 0.0, 1e-9);
    CHECK(q.value == doctest::Approx(std::sqrt(kPi / 2.0)).epsilon(1e-9));
    CHECK(q.est_error <= 1e-9);
}

TEST_CASE("linear scaling of the integrand") {
    auto f = [](double r) { return std::exp(-0.5 * r * r) * (1.0 + r); };
    auto g = [](double r) { return 2.0 * std::exp(-0.5 * r * r) * (1.0 + r); };
    Region reg = make_region(Zone::Full, 6.0);
    auto qf = l2_region_norm(f, reg, 3, 0.0, 1e-11);
    auto qg = l2_region_norm(g, reg, 3, 0.0, 1e-11);
    CHECK(qg.value == doctest::Approx(2.0 * qf.value).epsilon(1e-10));
}

TEST_CASE("complex integrand with constant modulus matches the real path") {
    auto fc = [](double r) { return std::polar(std::exp(-r * r), 3.0 * r); };
    auto fr = [](double r) { return std::exp(-r * r); };
    Region reg = make_region(Zone::Full, 5.0);
    auto qc = l2_region_norm_complex(fc, reg, 2, 0.0, 1e-11);
    auto qr = l2_region_norm(fr, reg, 2, 0.0, 1e-11);
    CHECK(qc.value == doctest::Approx(qr.value).epsilon(1e-12));
}

TEST_CASE("full region equals the three pieces") {
    auto f = [](double r) { return std::exp(-r * r / 2.0) * (1.0 + 0.3 * std::cos(7.0 * r)); };
    double tol = 1e-10;
    double xi = tail_cutoff(TailBound::gaussian(1.69, 1.0), tol, 3);
    auto qf = l2_region_norm(f, make_region(Zone::Full, xi), 3, 7.0, tol);
    auto ql = l2_region_norm(f, make_region(Zone::Low), 3, 7.0, tol);
    auto qm = l2_region_norm(f, make_region(Zone::Mid), 3, 7.0, tol);
    auto qh = l2_region_norm(f, make_region(Zone::High, xi), 3, 7.0, tol);
    double pieces = std::sqrt(ql.value * ql.value + qm.value * qm.value + qh.value * qh.value);
    CHECK(std::abs(qf.value - pieces) < 1e-9);
}

TEST_CASE("oscillatory integrand is stable under panel doubling") {
    auto f = [](double r) { return std::sin(40.0 * r) * std::exp(-r * r / 4.0); };
    double xi = tail_cutoff(TailBound::gaussian(1.0, 0.5), 1e-10, 2);
    auto q1 = l2_region_norm(f, make_region(Zone::Full, xi), 2, 40.0, 1e-10);
    auto q2 = l2_region_norm(f, make_region(Zone::Full, xi), 2, 80.0, 1e-10);
    CHECK(std::abs(q1.value - q2.value) < 1e-8);
    CHECK(q2.panels_used > q1.panels_used);
}

TEST_CASE("identical calls are bit-identical") {
    auto f = [](double r) { return std::exp(-r) * std::cos(3.0 * r); };
    Region reg = make_region(Zone::Full, 30.0);
    auto q1 = l2_region_norm(f, reg, 3, 10.0, 1e-9);
    auto q2 = l2_region_norm(f, reg, 3, 10.0, 1e-9);
    CHECK(q1.value == q2.value);
    CHECK(q1.est_error == q2.est_error);
    CHECK(q1.panels_used == q2.panels_used);
    CHECK(q1.evals == q2.evals);
}

TEST_CASE("budget exhaustion raises NonConvergent") {
    auto f = [](double r) { return std::sin(40.0 * r) + 1.5; };
    // base grid alone wants ~32k panels at this oscillation hint
    CHECK_THROWS_AS(l2_region_norm(f, make_region(Zone::Full, 50.0), 3, 1000.0, 1e-14, 5000),
                    NonConvergent);
    // kink keeps the refinement queue busy past a tiny budget
    auto g = [](double r) { return std::pow(std::fabs(r - 1.0 / 3.0), 0.26); };
    CHECK_THROWS_AS(l2_region_norm(g, make_region(Zone::Full, 1.0), 1, 0.0, 1e-15, 1000),
                    NonConvergent);
}

TEST_CASE("divergent integrand raises NonIntegrable") {
    auto f = [](double r) { return 1.0 / r; };
    CHECK_THROWS_AS(l2_region_norm(f, make_region(Zone::Full, 1.0), 1, 0.0, 1e-6, 100000000),
                    NonIntegrable);
}

TEST_CASE("NonConvergent and NonIntegrable derive from QuadratureError") {
    auto f = [](double r) { return 1.0 / r; };
    CHECK_THROWS_AS(l2_region_norm(f, make_region(Zone::Full, 1.0), 1, 0.0, 1e-6, 100000000),
                    QuadratureError);
}

TEST_CASE("tail cutoff certificates") {
    CHECK(tail_cutoff(TailBound::zero_beyond(3.5), 1e-8, 5) == doctest::Approx(3.5));

    // power tail: compare against the closed-form minimal cutoff
    TailBound pw = TailBound::power(1.0, 16.0);
    double tol = 1e-6;
    double xi = tail_cutoff(pw, tol, 10);
    double target = tol * tol / 4.0;
    double xi_min = std::pow(unit_sphere_area(10) * pw.coeff / (6.0 * target), 1.0 / 6.0);
    CHECK(xi >= 0.999 * xi_min);
    CHECK(xi <= 1.06 * xi_min);

    // gaussian tail: certified remainder shrinks as tol shrinks
    TailBound gs = TailBound::gaussian(2.0, 0.5);
    double x1 = tail_cutoff(gs, 1e-3, 3);
    double x2 = tail_cutoff(gs, 1e-9, 3);
    CHECK(x2 > x1);
    CHECK(x1 >= 1.0);

    CHECK_THROWS_AS(tail_cutoff(TailBound::power(1.0, 3.0), 1e-6, 3), NonIntegrable);
    CHECK_THROWS_AS(tail_cutoff(TailBound::power(1.0, 2.0), 1e-6, 3), NonIntegrable);
    CHECK_THROWS_AS(tail_cutoff(TailBound::gaussian(1.0, 0.0), 1e-6, 3), NonIntegrable);
    CHECK_THROWS_AS(tail_cutoff(TailBound::none(), 1e-6, 3), NonIntegrable);
}

TEST_CASE("tail cutoff over a list takes the worst term") {
    std::vector<TailBound> terms = {TailBound::gaussian(1.0, 2.0), TailBound::power(1.0, 16.0)};
    double xi = tail_cutoff(terms, 1e-6, 10);
    double solo = tail_cutoff(TailBound::power(1.0, 16.0), 1e-6, 10);
    CHECK(xi >= solo * 0.95);
}
