#include "doctest.h"
#include "helpers.hpp"
#include "pants/coords.hpp"
#include "pants/poisson.hpp"

using namespace pants;
using testing_util::rel;
using testing_util::Rng;

namespace {

void check_all(const std::array<double, 6>& got, const std::array<double, 6>& want, double tol) {
    for (int i = 0; i < 6; ++i) CHECK(rel(got[i], want[i]) <= tol);
}

}  // namespace

TEST_CASE("casimir examples") {
    check_all(casimirs(make_coords({1, 1, 1, 1, 1, 1, 1, 1})), {1, 1, 1, 1, 1, 1}, 0.0);
    check_all(casimirs(make_coords({2, 2, 1.5, 1.5, 4, 4, 1, 1})), {3, 1.0 / 3, 6, 1.0 / 6, 8, 1.0 / 8}, 1e-15);
    check_all(casimirs(make_coords({1, 2, 3, 4, 5, 6, 7, 8})), {4, 28.0 / 3, 18, 14.0 / 5, 10, 28.0 / 3}, 1e-15);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(validate(make_coords({1, 0, 1, 1, 1, 1, 1, 1})), DomainError);
    CHECK_THROWS_AS(validate(make_coords({1, 1, 1, 1, 1, 1, -1, 1})), DomainError);
    CHECK_THROWS_AS(validate(make_coords({1, 1, 1, 1, 1, 1, 1, std::nan("")})), DomainError);
    CHECK_THROWS_AS(validate(LengthVector{1, 1, 1, 1, 1, 0}), DomainError);
    CHECK_THROWS_AS(validate(LeafPoint{unipotent_leaf(), 1.0, -2.0}), DomainError);
    CHECK_NOTHROW(validate(LengthVector{1e300, 1, 1, 1, 1, 1e-300}));
}

TEST_CASE("leaf_embed examples") {
    const FGCoords u = leaf_embed(LeafPoint{unipotent_leaf(), 1.7, 0.4});
    const std::array<double, 8> want{1.7, 1 / 1.7, 1.7, 1 / 1.7, 1.7, 1 / 1.7, 0.4, 1 / 0.4};
    for (int i = 0; i < 8; ++i) CHECK(rel(u.x[i], want[i]) <= 1e-15);

    const FGCoords f = leaf_embed(LeafPoint{{3, 1.0 / 3, 6, 1.0 / 6, 8, 1.0 / 8}, 2.0, 1.0});
    const std::array<double, 8> wf{2, 2, 1.5, 1.5, 4, 4, 1, 1};
    for (int i = 0; i < 8; ++i) CHECK(rel(f.x[i], wf[i]) <= 1e-14);

    const FGCoords one = leaf_embed(LeafPoint{unipotent_leaf(), 1.0, 1.0});
    for (double x : one.x) CHECK(x == 1.0);
}

TEST_CASE("casimirs of leaf_embed recover the leaf") {
    Rng r(101);
    for (int i = 0; i < 1000; ++i) {
        const LengthVector L = testing_util::random_leaf(r);
        const double s = r.log_uniform(0.1, 10), t = r.log_uniform(0.1, 10);
        check_all(casimirs(leaf_embed<double>(L, s, t)), L, 1e-12);
    }
}

TEST_CASE("fuchsian point") {
    const FGCoords c = fuchsian_point(3, 6, 8);
    const std::array<double, 8> want{2, 2, 1.5, 1.5, 4, 4, 1, 1};
    for (int i = 0; i < 8; ++i) CHECK(rel(c.x[i], want[i]) <= 1e-15);
    const LeafPoint p = fuchsian_chart_point(3, 6, 8);
    CHECK(rel(p.sigma1, 2.0) <= 1e-15);
    CHECK(p.tau1 == 1.0);
    for (double x : fuchsian_point(1, 1, 1).x) CHECK(x == 1.0);

    // Casimirs on the Fuchsian locus pair up as l and 1/l
    check_all(casimirs(c), {3, 1.0 / 3, 6, 1.0 / 6, 8, 1.0 / 8}, 1e-15);
    check_all(casimirs(c), fuchsian_leaf(3, 6, 8), 1e-15);
}

TEST_CASE("fuchsian point structure on random data") {
    Rng r(102);
    for (int i = 0; i < 500; ++i) {
        const double a = r.log_uniform(0.1, 10), b = r.log_uniform(0.1, 10), g = r.log_uniform(0.1, 10);
        const FGCoords c = fuchsian_point(a, b, g);
        CHECK(c.sigma(1) == c.sigma(2));
        CHECK(c.sigma(3) == c.sigma(4));
        CHECK(c.sigma(5) == c.sigma(6));
        CHECK(c.tau(1) == 1.0);
        CHECK(c.tau(2) == 1.0);
        const auto k = casimirs(c);
        for (int j = 0; j < 3; ++j) CHECK(std::abs(k[2 * j] * k[2 * j + 1] - 1.0) <= 1e-12);
        check_all(k, fuchsian_leaf(a, b, g), 1e-12);
        const LeafPoint p = fuchsian_chart_point(a, b, g);
        const FGCoords back = leaf_embed(p);
        for (int j = 0; j < 8; ++j) CHECK(rel(back.x[j], c.x[j]) <= 1e-12);
    }
}

TEST_CASE("flows preserve casimirs") {
    Rng r(103);
    for (int i = 0; i < 300; ++i) {
        const FGCoords c = testing_util::random_coords(r);
        const auto k0 = casimirs(c);
        const double t = r.uniform(-2, 2), a = r.uniform(-2, 2);
        check_all(casimirs(eruption_flow(c, t)), k0, 1e-14);
        check_all(casimirs(hexagon_flow(c, t)), k0, 1e-14);
        check_all(casimirs(mixed_flow(c, a, t, MixedVariant::I_aE)), k0, 1e-14);
        check_all(casimirs(mixed_flow(c, a, t, MixedVariant::aI_E)), k0, 1e-14);
    }
}

TEST_CASE("unipotent detection") {
    CHECK(is_unipotent(unipotent_leaf()));
    CHECK_FALSE(is_unipotent(fuchsian_leaf(3, 6, 8)));
}
