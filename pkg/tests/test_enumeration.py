from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apollonian.descartes import descartes_holds
from apollonian.enumeration import (
    BendQuintet,
    GasketKey,
    MasterEquationViolation,
    SymmetryClass,
    classify,
    enumerate_gaskets,
    key_from_quintet,
    quintet,
    shift,
    solve_master,
)
from oracles import brute_force_keys, root_quadruple_quintets

K = GasketKey


def as_tuples(keys):
    return [(k.B, k.mu, k.k, k.n) for k in keys]


def test_solve_master_b6():
    keys = solve_master(6)
    assert len(keys) == 3
    assert as_tuples(keys) == [(6, 0, 1, 36), (6, 0, 4, 9), (6, 2, 5, 8)]


def test_solve_master_small():
    assert as_tuples(solve_master(1)) == [(1, 0, 1, 1)]
    assert as_tuples(solve_master(0)) == [(0, 0, 0, 1)]


@pytest.mark.parametrize("B", range(1, 13))
def test_solve_master_matches_exhaustive_search(B):
    assert as_tuples(solve_master(B)) == brute_force_keys(B)


@pytest.mark.parametrize("B", range(1, 15))
def test_quintets_match_root_quadruples(B):
    """Keys and primitive root quadruples with a = -B are in bijection."""
    ours = sorted(quintet(k).as_tuple() for k in solve_master(B))
    assert ours == root_quadruple_quintets(B)


def test_solve_master_rejects_negative():
    with pytest.raises(ValueError):
        solve_master(-1)


@pytest.mark.parametrize(
    "key, expected",
    [
        (K(1, 0, 1, 1), (-1, 2, 2, 3, 3)),
        (K(0, 0, 0, 1), (0, 0, 1, 1, 1)),
        (K(6, 2, 5, 8), (-6, 11, 14, 15, 23)),
        (K(2, 0, 1, 4), (-2, 3, 6, 7, 7)),
    ],
)
def test_quintet(key, expected):
    assert quintet(key).as_tuple() == expected


def test_key_from_quintet():
    assert key_from_quintet((-1, 2, 2, 3, 3)) == K(1, 0, 1, 1)
    assert key_from_quintet(BendQuintet(-6, 11, 14, 15, 23)) == K(6, 2, 5, 8)
    assert K(6, 2, 5, 8) in solve_master(6)
    with pytest.raises(MasterEquationViolation):
        key_from_quintet((-1, 2, 2, 3, 4))


def test_key_validation_messages():
    with pytest.raises(MasterEquationViolation, match="B\\^2\\+mu\\^2"):
        K(1, 0, 1, 2)
    with pytest.raises(MasterEquationViolation, match="3mu\\^2"):
        K(1, 1, 1, 2)
    with pytest.raises(MasterEquationViolation, match="2mu <= k <= n"):
        K(2, 1, 1, 5)
    assert GasketKey.parse("6, 2, 5, 8") == K(6, 2, 5, 8)
    with pytest.raises(MasterEquationViolation):
        GasketKey.parse("1,2,3")


def test_derived_accessors():
    key = K(6, 2, 5, 8)
    assert key.rho == Fraction(5, 36)
    assert key.h == Fraction(4, 36)
    assert key.m == 4
    # master equation in geometric form: 4nk = 4B^2 + m^2
    assert 4 * key.n * key.k == 4 * key.B ** 2 + key.m ** 2


def test_enumerate_small():
    assert [r.key for r in enumerate_gaskets(0)] == [K(0, 0, 0, 1)]
    assert [r.key for r in enumerate_gaskets(2)] == [K(0, 0, 0, 1), K(1, 0, 1, 1), K(2, 0, 1, 4)]


def test_enumerate_through_six():
    records = enumerate_gaskets(6)
    expected = [(0, 0, 0, 1)] + [t for B in range(1, 7) for t in brute_force_keys(B)]
    assert as_tuples(r.key for r in records) == expected
    assert len(records) == 12


def test_enumerate_with_reducible_multiples():
    records = enumerate_gaskets(6, irreducible_only=False)
    reducible = {r.key for r in records if r.reducible}
    every = {t for B in range(1, 7) for t in brute_force_keys(B, primitive=False)}
    primitive = {t for B in range(1, 7) for t in brute_force_keys(B)}
    assert set(as_tuples(reducible)) == every - primitive
    for r in records:
        assert r.quintet == quintet(r.key)
    order = [(r.key.B, r.key.mu, r.key.k) for r in records]
    assert order == sorted(order)


def test_enumerate_parallel_matches_sequential():
    assert enumerate_gaskets(20, workers=2) == enumerate_gaskets(20)


@pytest.mark.parametrize(
    "key, expected",
    [
        (K(0, 0, 0, 1), SymmetryClass.STRIP),
        (K(1, 0, 1, 1), SymmetryClass.WINDOW),
        (K(2, 0, 1, 4), SymmetryClass.ODD),
        (K(3, 1, 2, 5), SymmetryClass.EVEN),
        (K(6, 2, 5, 8), SymmetryClass.SKEW),
    ],
)
def test_classify(key, expected):
    assert classify(key) is expected


def test_first_even_star():
    stars = [r.key for r in enumerate_gaskets(32) if r.symmetry is SymmetryClass.EVEN_STAR]
    assert stars, "expected accidental even symmetry below B = 32"
    for key in stars:
        q = quintet(key)
        assert q.b1 == q.b2


@pytest.mark.parametrize(
    "key, expected", [(K(6, 2, 5, 8), Fraction(4, 5)), (K(2, 0, 1, 4), 0), (K(3, 1, 2, 5), 1), (K(0, 0, 0, 1), 0)]
)
def test_shift(key, expected):
    assert shift(key) == expected


def test_symmetry_precedence_is_unambiguous():
    """mu = 0 together with k = n only happens at the window."""
    for r in enumerate_gaskets(64):
        if r.key.B and r.key.mu == 0 and r.key.k == r.key.n:
            assert r.key == K(1, 0, 1, 1)
        if r.key.B and 2 * r.key.mu == r.key.k and r.key.k == r.key.n:
            pytest.fail(f"even and even* overlap at {r.key}")


@pytest.fixture(scope="module")
def records64():
    return enumerate_gaskets(64)


def test_key_invariants(records64):
    for r in records64:
        B, mu, k, n = r.key.B, r.key.mu, r.key.k, r.key.n
        assert B * B + mu * mu == k * n
        assert 3 * mu * mu <= B * B
        assert 2 * mu <= k <= n
        assert gcd(gcd(B, k), n) == 1
        assert Fraction(0) <= r.shift <= 1


def test_round_trip_and_uniqueness(records64):
    seen = set()
    for r in records64:
        assert key_from_quintet(r.quintet) == r.key
        assert r.quintet not in seen
        seen.add(r.quintet)


def test_quintet_descartes(records64):
    for r in records64:
        b0, b1, b2, b3, b4 = r.quintet
        assert descartes_holds(b0, b1, b2, b3)
        assert descartes_holds(b0, b1, b2, b4)
        assert b3 + b4 == 2 * (b0 + b1 + b2)
        assert b0 <= 0 and b1 <= b2 <= b3 <= b4


def test_every_root_bend_has_a_gasket():
    for B in range(1, 33):
        assert solve_master(B)


@given(st.integers(1, 400))
def test_solve_master_keys_valid(B):
    keys = solve_master(B)
    assert keys
    assert keys == sorted(keys, key=lambda k: (k.mu, k.k))
    for key in keys:
        assert key.is_irreducible
