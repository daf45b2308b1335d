#include "doctest.h"

#include "platelab/data.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace platelab;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("gaussian datum: profile, moment, tail metadata") {
    DataSpec d = gaussian_datum(0.25, 1);
    CHECK(d.dim == 1);
    CHECK(d.moment == doctest::Approx(2.0 * std::sqrt(kPi)).epsilon(1e-14));
    CHECK(d.uhat(0.0) == doctest::Approx(d.moment));
    CHECK(d.uhat(1.0) == doctest::Approx(2.0 * std::sqrt(kPi) * std::exp(-1.0)).epsilon(1e-14));
    CHECK(std::isinf(d.sobolev_limit));
    CHECK(d.tail.kind == TailBound::Kind::Gaussian);
    CHECK(d.tail.rate == doctest::Approx(2.0)); // 1/(2a)
    CHECK_THROWS_AS(gaussian_datum(0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_datum(1.0, 0), std::invalid_argument);
}

TEST_CASE("sobolev edge datum: ceiling and tail") {
    DataSpec d = sobolev_edge_datum(8.0, 10);
    CHECK(d.moment == doctest::Approx(1.0));
    CHECK(d.sobolev_limit == doctest::Approx(3.0)); // sigma - n/2
    CHECK(d.uhat(1.0) == doctest::Approx(std::pow(2.0, -4.0)).epsilon(1e-14));
    CHECK(d.tail.kind == TailBound::Kind::Power);
    CHECK(d.tail.rate == doctest::Approx(16.0)); // 2 sigma
    CHECK_THROWS_AS(sobolev_edge_datum(5.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(sobolev_edge_datum(2.0, 4), std::invalid_argument);
}

TEST_CASE("lipschitz surrogate: frozen values and the bound it certifies") {
    DataSpec g = gaussian_datum(1.0, 1);
    CHECK(g.l11_surrogate == doctest::Approx(0.56556538692143288).epsilon(1e-9));
    DataSpec e = sobolev_edge_datum(8.0, 10);
    CHECK(e.l11_surrogate == doctest::Approx(1.1865113549923196).epsilon(1e-9));

    for (const DataSpec& d : {g, e}) {
        for (int i = 0; i < 100; ++i) {
            double r = std::pow(10.0, -6.0 + 9.0 * i / 99.0);
            ABParts ab = ab_decomposition(d, r);
            CHECK(std::abs(ab.a_part) <= d.l11_surrogate * r * (1.0 + 1e-12));
            CHECK(ab.b_part == 0.0);
        }
    }
}

TEST_CASE("ab decomposition recovers the profile") {
    DataSpec g = gaussian_datum(1.0, 1);
    ABParts ab = ab_decomposition(g, 1.0);
    CHECK(ab.a_part == doctest::Approx(std::sqrt(kPi) * (std::exp(-0.25) - 1.0)).epsilon(1e-12));
    CHECK(ab.a_part == doctest::Approx(-0.39206540386237299).epsilon(1e-12));
    CHECK(g.moment + ab.a_part == doctest::Approx(g.uhat(1.0)).epsilon(1e-12));
}

TEST_CASE("sobolev norms match closed forms") {
    DataSpec g = gaussian_datum(1.0, 3);
    double h0 = h_norm(g, 0.0, 1e-8);
    CHECK(h0 * h0 == doctest::Approx(488.33676358387112).epsilon(1e-8));
    double h2 = h_norm(g, 2.0, 1e-8);
    CHECK(h2 * h2 == doctest::Approx(10743.408798845163).epsilon(1e-8));

    DataSpec e = sobolev_edge_datum(8.0, 10);
    double v = h_norm(e, 2.0); // coarse default tolerance
    CHECK(v == doctest::Approx(std::sqrt(2.5501640398773451)).epsilon(2e-3));
}

TEST_CASE("h_norm refuses the regularity ceiling") {
    DataSpec e = sobolev_edge_datum(8.0, 10);
    CHECK_THROWS_AS(h_norm(e, 3.0), NonIntegrable);
    CHECK_THROWS_AS(h_norm(e, 4.5), NonIntegrable);
}

TEST_CASE("past the ceiling the truncated integrals grow without bound") {
    DataSpec e = sobolev_edge_datum(8.0, 10);
    double s = 3.5; // limit is 3.0
    auto f = [&](double r) { return e.uhat(r) * std::pow(1.0 + r * r, s / 2.0); };
    auto partial = [&](double xi) {
        auto q = l2_region_norm(f, make_region(Zone::High, xi), e.dim, 0.0, 1e-3);
        return q.value * q.value;
    };
    double i10 = partial(10.0), i100 = partial(100.0), i1000 = partial(1000.0);
    CHECK(i100 > 2.0 * i10);
    CHECK(i1000 > 2.0 * i100);
}

TEST_CASE("scale prefactor is finite for admissible pairs") {
    DataPair pg = make_pair("gaussian", 3, 2.0);
    double ig = i0_norm(pg, 0.01);
    CHECK(std::isfinite(ig));
    CHECK(ig > 0.0);

    DataPair pe = make_pair("edge:sigma=9", 7, 2.0);
    double ie = i0_norm(pe, 0.01);
    CHECK(std::isfinite(ie));
    CHECK(ie > 0.0);
}

TEST_CASE("pair construction from catalog labels") {
    DataPair p1 = make_pair("gaussian:a=2.5", 3, 2.0);
    CHECK(p1.dim == 3);
    CHECK(p1.l == 2.0);
    CHECK(p1.u0.moment == doctest::Approx(std::pow(kPi / 2.5, 1.5)).epsilon(1e-14));
    CHECK(p1.u1.moment == p1.u0.moment);

    DataPair p2 = make_pair("edge:sigma=7.25", 10, 2.0);
    CHECK(p2.u1.sobolev_limit == doctest::Approx(2.25));
    CHECK(p2.u0.sobolev_limit == doctest::Approx(3.25)); // staggered sigma + 1

    // default edge sits just inside H^l: sigma = l + n/2 + 1/4
    DataPair p3 = make_pair("edge", 7, 2.0);
    CHECK(p3.u1.sobolev_limit == doctest::Approx(2.25));
    CHECK(p3.u0.sobolev_limit == doctest::Approx(3.25));

    DataPair p4 = make_pair("gaussian", 5, 3.0);
    CHECK(p4.u0.moment == doctest::Approx(std::pow(kPi, 2.5)).epsilon(1e-14));
}

TEST_CASE("malformed labels are rejected") {
    CHECK_THROWS_AS(make_pair("weird", 3, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_pair("gaussian:b=1", 3, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_pair("gaussian:a=abc", 3, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_pair("gaussian:a=-1", 3, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_pair("gaussian:a=1.5junk", 3, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_pair("edge:sigma=", 3, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_pair("edge:sigma=3", 10, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_pair("gaussian", 0, 2.0), std::invalid_argument);
}
