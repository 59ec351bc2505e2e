#include "doctest.h"
#include "helpers.hpp"
#include "pants/flags.hpp"

using namespace pants;
using testing_util::rel;
using testing_util::Rng;

using testing_util::random_flags;
using testing_util::random_sl3;

TEST_CASE("cross ratio convention cr(inf, -1, 0, x) = x") {
    // pencil through the origin of the chart z = 1, transversal y = 1 in that chart:
    // the line through (0,0) and (u,1) is u*y - x = 0, i.e. coefficients (-1, u, 0)
    const ProjPoint origin{{0, 0, 1}};
    const ProjLine transversal{{0, 1, -1}};
    auto through = [](double u) { return ProjLine{{-1.0, u, 0.0}}; };
    const ProjLine at_inf{{0, 1, 0}};  // y = 0 meets y = 1 at infinity
    const double x = 5.0;
    CHECK(cross_ratio_concurrent(at_inf, through(-1), through(0), through(x), origin, transversal) ==
          doctest::Approx(5.0).epsilon(1e-14));
    CHECK(cross_ratio_concurrent(at_inf, through(-1), through(0), through(x), origin) ==
          doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("degenerate and non-concurrent pencils") {
    const ProjPoint origin{{0, 0, 1}};
    const ProjLine a{{1, 0, 0}}, b{{0, 1, 0}}, c{{1, 1, 0}};
    CHECK_THROWS_WITH(cross_ratio_concurrent(a, b, c, b, origin), "degenerate pencil");
    const ProjLine off{{1, 0, 1}};
    CHECK_THROWS_WITH(cross_ratio_concurrent(a, b, c, off, origin), "lines not concurrent");
}

TEST_CASE("standard configuration values") {
    auto f = standard_configuration(1.0, 1.0, 1.0, 0.7);
    for (const Flag& fl : f) CHECK(is_flag(fl));
    CHECK(cr1(f[0], f[1], f[2], f[3]) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(cr2(f[0], f[1], f[2], f[3]) == doctest::Approx(-2.0).epsilon(1e-15));
    const ProjPoint p1 = f[0].point;
    const double geo = cross_ratio_concurrent(f[0].line, line_through(p1, f[1].point), line_through(p1, f[2].point),
                                              line_through(p1, f[3].point), p1);
    CHECK(geo == doctest::Approx(-0.5).epsilon(1e-14));

    Rng r(21);
    for (int i = 0; i < 100; ++i) {
        const double x = r.uniform(0.1, 5), y = r.uniform(0.1, 5), z = r.uniform(0.1, 5), w = r.uniform(0.1, 5);
        auto g = standard_configuration(x, y, z, w);
        CHECK(rel(cr1(g[0], g[1], g[2], g[3]), -y / (y + z)) < 1e-12);
        CHECK(rel(cr2(g[0], g[1], g[2], g[3]), -(1 + x * y) / (x * y)) < 1e-12);
    }
}

TEST_CASE("triple ratio of the coordinate flags") {
    const Flag f1{{{1, 0, 0}}, {{0, 1, 1}}}, f2{{{0, 1, 0}}, {{1, 0, 1}}}, f3{{{0, 0, 1}}, {{1, 1, 0}}};
    CHECK(triple_ratio(f1, f2, f3) == 1.0);
    const Flag bad{{{0, 1, 0}}, {{0, 0, 1}}};  // line through p1 = e1
    CHECK_THROWS_WITH(triple_ratio(f1, bad, f3), "non-generic flags");
}

TEST_CASE("projective invariance of cr1, cr2 and triple ratio") {
    Rng r(7);
    for (int i = 0; i < 1000; ++i) {
        const auto f = random_flags(r);
        const Mat3 g = random_sl3(r);
        std::array<Flag, 4> gf;
        for (int k = 0; k < 4; ++k) gf[k] = act(g, f[k]);
        CHECK(rel(cr1(gf[0], gf[1], gf[2], gf[3]), cr1(f[0], f[1], f[2], f[3])) <= 1e-9);
        CHECK(rel(cr2(gf[0], gf[1], gf[2], gf[3]), cr2(f[0], f[1], f[2], f[3])) <= 1e-9);
        CHECK(rel(triple_ratio(gf[0], gf[1], gf[2]), triple_ratio(f[0], f[1], f[2])) <= 1e-9);
    }
}

TEST_CASE("geometric and algebraic cross ratios agree") {
    Rng r(8);
    for (int i = 0; i < 1000; ++i) {
        const auto f = random_flags(r);
        const ProjPoint p1 = f[0].point, p3 = f[2].point;
        const double g1 = cross_ratio_concurrent(f[0].line, line_through(p1, f[1].point),
                                                 line_through(p1, f[2].point), line_through(p1, f[3].point), p1);
        CHECK(rel(g1, cr1(f[0], f[1], f[2], f[3])) <= 1e-9);
        const double g2 = cross_ratio_concurrent(f[2].line, line_through(p3, f[3].point),
                                                 line_through(p3, f[0].point), line_through(p3, f[1].point), p3);
        CHECK(rel(g2, cr2(f[0], f[1], f[2], f[3])) <= 1e-9);
    }
}

TEST_CASE("cross ratio does not depend on the transversal") {
    Rng r(9);
    for (int i = 0; i < 300; ++i) {
        const auto f = random_flags(r);
        const ProjPoint p1 = f[0].point;
        const ProjLine l2 = line_through(p1, f[1].point), l3 = line_through(p1, f[2].point),
                       l4 = line_through(p1, f[3].point);
        const ProjLine m1{{r.normal(), r.normal(), r.normal()}}, m2{{r.normal(), r.normal(), r.normal()}};
        if (normalized_pairing(m1, p1) < 1e-2 || normalized_pairing(m2, p1) < 1e-2) continue;
        const double a = cross_ratio_concurrent(f[0].line, l2, l3, l4, p1, m1);
        const double b = cross_ratio_concurrent(f[0].line, l2, l3, l4, p1, m2);
        CHECK(rel(a, b) <= 1e-9);
    }
}

TEST_CASE("canonical representatives") {
    const Vec3 v = canonical({0, -3, 4});
    CHECK(v[0] == 0.0);
    CHECK(v[1] == doctest::Approx(0.6));
    CHECK(v[2] == doctest::Approx(-0.8));
    CHECK_THROWS(canonical({0, 0, 0}));
}
