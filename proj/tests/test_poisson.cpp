#include "doctest.h"
#include "helpers.hpp"
#include "pants/poisson.hpp"
#include "pants/traces.hpp"

using namespace pants;
using testing_util::rel;
using testing_util::Rng;

TEST_CASE("coordinate brackets") {
    Rng r(301);
    const FGCoords ones = make_coords({1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(bracket_coordinates(1, 2, testing_util::random_coords(r)) == 0.0);
    CHECK(bracket_coordinates(1, 7, ones) == 2.0);
    CHECK(bracket_coordinates(7, 2, ones) == 2.0);
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) CHECK(epsilon()[i - 1][j - 1] == -epsilon()[j - 1][i - 1]);
    CHECK_THROWS_AS(bracket_coordinates(0, 1, ones), DomainError);
}

TEST_CASE("structure constants") {
    CHECK(bracket_log_linear(hamiltonian_I(), hamiltonian_E()) == 0.5);
    CHECK(bracket_log_linear(hamiltonian_E(), hamiltonian_I()) == -0.5);
    LogLinearFunction la1 = log_coordinate(1);
    la1.coeff[3] = 1.0;
    CHECK(bracket_log_linear(la1, hamiltonian_I()) == 0.0);
    CHECK(bracket_log_linear(hamiltonian_I(), hamiltonian_I()) == 0.0);
    for (int k = 0; k < 6; ++k) {
        for (int i = 1; i <= 8; ++i) CHECK(bracket_log_linear(log_casimir(k), log_coordinate(i)) == 0.0);
        // 1/12 is not a binary fraction, so these vanish only to rounding
        CHECK(std::abs(bracket_log_linear(log_casimir(k), hamiltonian_I())) <= 1e-15);
        CHECK(std::abs(bracket_log_linear(log_casimir(k), hamiltonian_E())) <= 1e-15);
    }
}

TEST_CASE("log casimirs evaluate to the casimirs") {
    Rng r(302);
    const FGCoords c = testing_util::random_coords(r);
    const auto k = casimirs(c);
    for (int i = 0; i < 6; ++i) CHECK(rel(std::exp(log_casimir(i)(c)), k[i]) <= 1e-13);
}

TEST_CASE("eruption and hexagon flows") {
    const FGCoords ones = make_coords({1, 1, 1, 1, 1, 1, 1, 1});
    const FGCoords e = eruption_flow(ones, std::log(2.0));
    CHECK(e.tau(1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(e.tau(2) == doctest::Approx(0.5).epsilon(1e-15));
    for (int i = 1; i <= 6; ++i) CHECK(e.sigma(i) == 1.0);

    Rng r(303);
    for (int i = 0; i < 300; ++i) {
        const FGCoords c = testing_util::random_coords(r);
        CHECK(eruption_flow(c, 0.0).x == c.x);
        CHECK(hexagon_flow(c, 0.0).x == c.x);
        const double s = r.uniform(-2, 2), t = r.uniform(-2, 2);
        CHECK(hexagon_flow(eruption_flow(c, t), s).x == eruption_flow(hexagon_flow(c, s), t).x);
        const FGCoords a = eruption_flow(eruption_flow(c, s), t), b = eruption_flow(c, s + t);
        const FGCoords h1 = hexagon_flow(hexagon_flow(c, s), t), h2 = hexagon_flow(c, s + t);
        for (int j = 0; j < 8; ++j) {
            CHECK(rel(a.x[j], b.x[j]) <= 1e-15 * 4);
            CHECK(rel(h1.x[j], h2.x[j]) <= 1e-15 * 4);
        }
    }
}

TEST_CASE("mixed flows") {
    Rng r(304);
    const FGCoords c = testing_util::random_coords(r);
    CHECK(mixed_flow(c, 0.0, 0.7, MixedVariant::I_aE).x == hexagon_flow(c, 0.7).x);
    // (1,1) to (e, e^2) on the unipotent leaf
    const LeafPoint p{unipotent_leaf(), 1.0, 1.0};
    const LeafPoint q = mixed_flow(p, 0.5, 2.0, MixedVariant::aI_E);
    CHECK(q.sigma1 == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK(q.tau1 == doctest::Approx(std::exp(2.0)).epsilon(1e-14));
    const FGCoords full = mixed_flow(leaf_embed(p), 0.5, 2.0, MixedVariant::aI_E);
    const FGCoords via_chart = leaf_embed(q);
    for (int j = 0; j < 8; ++j) CHECK(rel(full.x[j], via_chart.x[j]) <= 1e-14);
}

TEST_CASE("coordinate flows") {
    const FGCoords ones = make_coords({1, 1, 1, 1, 1, 1, 1, 1});
    const FGCoords a = coordinate_flow(ones, 2, 1.0);
    CHECK(a.tau(1) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(a.tau(2) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(coordinate_flow(ones, 3, 0.0).x == ones.x);
    FGCoords c = ones;
    c.tau(1) = 2.0;
    const FGCoords b = coordinate_flow(c, 7, 1.0);
    CHECK(b.sigma(1) == doctest::Approx(std::exp(2.0)).epsilon(1e-15));

    Rng r(305);
    for (int i = 0; i < 200; ++i) {
        const FGCoords x = testing_util::random_coords(r);
        const auto k0 = casimirs(x);
        for (int w = 1; w <= 8; ++w) {
            const auto k = casimirs(coordinate_flow(x, w, r.uniform(-1, 1)));
            for (int j = 0; j < 6; ++j) CHECK(rel(k[j], k0[j]) <= 1e-14);
        }
    }
}

TEST_CASE("symplectic form on a leaf") {
    const LeafPoint p{unipotent_leaf(), 2.0, 0.5};
    CHECK(symplectic_form_leaf(p, {1, 0}, {0, 1}) == 0.5);
    CHECK(symplectic_form_leaf(p, {0.3, 0.2}, {0.3, 0.2}) == 0.0);

    // chart fields of I and E pair to 1/2 everywhere
    auto on_leaf = [](const LengthVector& L, const LogLinearFunction& h) -> ChartFunction {
        return [L, h](const Dual<double, 2>& s, const Dual<double, 2>& t) {
            const FGCoordsT<Dual<double, 2>> c = leaf_embed(L, s, t);
            Dual<double, 2> acc(h.constant);
            for (int i = 0; i < 8; ++i)
                if (h.coeff[i] != 0.0) acc = acc + h.coeff[i] * log(c.x[i]);
            return acc;
        };
    };
    Rng r(306);
    for (int i = 0; i < 100; ++i) {
        const LeafPoint q{testing_util::random_leaf(r), r.log_uniform(0.1, 10), r.log_uniform(0.1, 10)};
        const auto hI = hamiltonian_vf_leaf(q, on_leaf(q.leaf, hamiltonian_I()));
        const auto hE = hamiltonian_vf_leaf(q, on_leaf(q.leaf, hamiltonian_E()));
        CHECK(symplectic_form_leaf(q, hI, hE) == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("hamiltonian vector fields") {
    const LeafPoint p{unipotent_leaf(), 1.3, 0.7};
    const ChartFunction constant = [](const Dual<double, 2>&, const Dual<double, 2>&) { return Dual<double, 2>(4.0); };
    const auto z = hamiltonian_vf_leaf(p, constant);
    CHECK(z[0] == 0.0);
    CHECK(z[1] == 0.0);

    const LengthVector LF{3, 1.0 / 3, 6, 1.0 / 6, 8, 1.0 / 8};
    const ChartFunction fig8 = [LF](const Dual<double, 2>& s, const Dual<double, 2>& t) {
        return trace_closed_form(LF, s, t, CurveId::fig8());
    };
    const auto h = hamiltonian_vf_leaf(LeafPoint{LF, 2.0, 1.0}, fig8);
    CHECK(rel(h[0], -137.5) <= 1e-12);
    CHECK(rel(h[1], 10.0 / 3.0) <= 1e-12);

    for (int k = 1; k <= 5; ++k) {
        const ChartFunction pw = [k](const Dual<double, 2>& s, const Dual<double, 2>& t) {
            return trace_closed_form(unipotent_leaf(), s, t, CurveId::power(k));
        };
        const auto v = hamiltonian_vf_leaf(LeafPoint{unipotent_leaf(), 0.5, 1.0}, pw);
        CHECK(std::abs(v[0]) <= 1e-12);
        CHECK(std::abs(v[1]) <= 1e-12);
    }

    // tangent to level sets
    Rng r(307);
    for (int i = 0; i < 200; ++i) {
        const LengthVector L = testing_util::random_leaf(r);
        const LeafPoint q{L, r.log_uniform(0.2, 5), r.log_uniform(0.2, 5)};
        const ChartFunction f = [L](const Dual<double, 2>& s, const Dual<double, 2>& t) {
            return trace_closed_form(L, s, t, CurveId::fig8());
        };
        const Dual<double, 2> g = f(Dual<double, 2>::variable(q.sigma1, 0), Dual<double, 2>::variable(q.tau1, 1));
        const auto v = hamiltonian_vf_leaf(q, f);
        const double gn = std::hypot(g.d[0], g.d[1]);
        CHECK(std::abs(g.d[0] * v[0] + g.d[1] * v[1]) <= 1e-10 * gn * std::hypot(v[0], v[1]) + 1e-300);
    }
}
