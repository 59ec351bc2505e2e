import math

import pytest

import pants

U = [1, 1, 1, 1, 1, 1]


def test_casimirs_of_embedded_point():
    L = [3, 1 / 3, 6, 1 / 6, 8, 1 / 8]
    x = pants.leaf_embed(L, 2.0, 0.7)
    assert x[0] == pytest.approx(2.0) and x[6] == pytest.approx(0.7)
    for got, want in zip(pants.casimirs(x), L):
        assert got == pytest.approx(want, rel=1e-14)


def test_unipotent_traces():
    assert pants.trace(U, 1, 1, "fig8") == pytest.approx(35)
    assert pants.trace(U, 1, 1, "power:3") == pytest.approx(195)
    assert pants.trace(U, 1, 1, "commutator") == pytest.approx(323)
    assert pants.trace(U, 1, 1, "theta") == pytest.approx(-26)
    closed = pants.trace(U, 1.7, 0.4, "commutator", "closed")
    oracle = pants.trace(U, 1.7, 0.4, "commutator", "oracle")
    assert closed == pytest.approx(oracle, rel=1e-12)


def test_peripherals_at_ones():
    A, B, C = pants.peripherals([1] * 8)
    assert A == [[1, 4, 4], [0, 1, 2], [0, 0, 1]]
    assert pants.eigenvalue_ratios([2, 1, 3, 0.5, 1.5, 4, 0.7, 2.2])["all_match"]


def test_commutator_minimum():
    r = pants.find_minimum(U, "commutator")
    assert r["sigma1"] == pytest.approx(1, abs=1e-8)
    assert r["tau1"] == pytest.approx((math.sqrt(33) - 1) / 16, abs=1e-8)


def test_flow_conserves_level():
    L = [3, 1 / 3, 6, 1 / 6, 8, 1 / 8]
    traj = pants.integrate(L, 2.0, 1.0, "fig8", 0.2)
    f0 = traj[0]["f"]
    assert max(abs(s["f"] - f0) for s in traj) <= 1e-8 * f0
    assert pants.detect_period(L, 2.0, 1.0, "fig8")["period"] > 0


def test_domain_errors():
    with pytest.raises(ValueError):
        pants.casimirs([1, 0, 1, 1, 1, 1, 1, 1])
    with pytest.raises(ValueError):
        pants.trace(U, 1, 1, "nope")
    with pytest.raises(ValueError):
        pants.level_set(U, "fig8", 29.0)


def test_verify_suites():
    reports = pants.run_suite(seed=42, samples=10, threads=2)
    assert {r["suite"] for r in reports} == set(pants.suite_names())
    assert all(r["failed"] == 0 for r in reports)
