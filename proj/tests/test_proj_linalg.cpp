#include "doctest.h"
#include "helpers.hpp"
#include "pants/proj_linalg.hpp"

using namespace pants;
using testing_util::rel;
using testing_util::Rng;

TEST_CASE("det3 examples") {
    CHECK(det3(identity3()) == 1.0);
    Mat3 rep{{{1, 2, 3}, {1, 2, 3}, {4, 5, 6}}};
    CHECK(det3(rep) == 0.0);
    const double x = 5.0;
    Mat3 t{{{0, 0, 1}, {0, -1, -1}, {x, 1 + x, 1}}};
    CHECK(det3(t) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("normalize_sl3 examples") {
    Mat3 two{{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}};
    CHECK(testing_util::max_entry_diff(normalize_sl3(two), identity3()) == 0.0);
    CHECK(testing_util::max_entry_diff(normalize_sl3(identity3()), identity3()) == 0.0);
    Mat3 flip{{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}};
    Mat3 want{{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
    CHECK(testing_util::max_entry_diff(normalize_sl3(flip), want) == 0.0);
    Mat3 zero{};
    CHECK_THROWS_WITH(normalize_sl3(zero), "singular matrix");
}

TEST_CASE("normalize_sl3 gives det 1 and is idempotent on random matrices") {
    Rng r(11);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        Mat3 m;
        for (auto& row : m)
            for (double& x : row) x = r.uniform(-10, 10);
        if (std::abs(det3(m)) < 1e-3) continue;
        const Mat3 n = normalize_sl3(m);
        CHECK(std::abs(det3(n) - 1.0) <= 1e-12);
        double big = 0.0;
        for (const auto& row : n)
            for (double x : row) big = std::max(big, std::abs(x));
        CHECK(testing_util::max_entry_diff(normalize_sl3(n), n) <= 1e-14 * big);
        ++checked;
    }
    CHECK(checked > 990);
}

TEST_CASE("eigenvalues_real3") {
    Mat3 d{{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}};
    auto e = eigenvalues_real3(d);
    CHECK(e[0] == 1.0);
    CHECK(e[1] == 2.0);
    CHECK(e[2] == 3.0);
    e = eigenvalues_real3(identity3());
    CHECK(e == std::array<double, 3>{1, 1, 1});
    Mat3 a{{{1, 4, 4}, {0, 1, 2}, {0, 0, 1}}};
    e = eigenvalues_real3(a);
    CHECK(e == std::array<double, 3>{1, 1, 1});

    // diagonal input returns the sorted triple exactly
    Rng r(3);
    for (int i = 0; i < 200; ++i) {
        const double x = r.uniform(-5, 5), y = r.uniform(-5, 5), z = r.uniform(-5, 5);
        Mat3 m{{{x, 0, 0}, {0, y, 0}, {0, 0, z}}};
        std::array<double, 3> want{x, y, z};
        std::sort(want.begin(), want.end());
        CHECK(eigenvalues_real3(m) == want);
    }
}

TEST_CASE("eigenvalues_real3 on a conjugated diagonal matrix") {
    Rng r(5);
    for (int i = 0; i < 200; ++i) {
        Mat3 g;
        for (auto& row : g)
            for (double& x : row) x = r.uniform(-2, 2);
        if (std::abs(det3(g)) < 0.1) continue;
        const double x = r.log_uniform(0.1, 10), y = r.log_uniform(0.1, 10), z = r.log_uniform(0.1, 10);
        Mat3 d{{{x, 0, 0}, {0, y, 0}, {0, 0, z}}};
        const Mat3 m = mul(mul(g, d), inverse3(g));
        const auto e = eigenvalues_real3(m);
        std::array<double, 3> want{x, y, z};
        std::sort(want.begin(), want.end());
        double prod = e[0] * e[1] * e[2];
        CHECK(testing_util::rel(prod, det3(m)) < 1e-8);
        for (int k = 0; k < 3; ++k) CHECK(std::abs(e[k] - want[k]) < 1e-6 * (1 + want[k]));
    }
}

TEST_CASE("eigenvalues_real3 rejects a rotation") {
    const double c = std::cos(1.0), s = std::sin(1.0);
    Mat3 rot{{{c, -s, 0}, {s, c, 0}, {0, 0, 1}}};
    CHECK_THROWS_WITH(eigenvalues_real3(rot), "complex spectrum");
}

TEST_CASE("projectively_equal") {
    Rng r(9);
    Mat3 m;
    for (auto& row : m)
        for (double& x : row) x = r.uniform(-3, 3);
    CHECK(projectively_equal(m, scaled(m, 7.0)));
    CHECK(projectively_equal(m, m));
    Mat3 n = scaled(m, -2.5);
    CHECK(projectively_equal(m, n) == projectively_equal(n, m));
    CHECK(projectively_equal(m, n));
    Mat3 d{{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}};
    CHECK_FALSE(projectively_equal(identity3(), d));
}

TEST_CASE("binary128 eigenvalues separate a close pair") {
    Rng r(13);
    for (int i = 0; i < 100; ++i) {
        Mat3T<Quad> g;
        for (auto& row : g)
            for (Quad& x : row) x = Quad(r.uniform(-2, 2));
        if (std::abs(value_of(det3_raw(g))) < 0.1) continue;
        const double lo = r.log_uniform(0.2, 2), gap = 1e-6 * lo, hi = r.log_uniform(3, 10);
        Mat3T<Quad> d{};
        d[0][0] = Quad(lo);
        d[1][1] = Quad(lo + gap);
        d[2][2] = Quad(hi);
        const auto e = eigenvalues_real3(mul(mul(g, d), inverse3(g)));
        CHECK(rel(e[0], lo) <= 1e-14);
        CHECK(rel(e[1], lo + gap) <= 1e-14);
        CHECK(rel(e[2], hi) <= 1e-14);
    }
}
