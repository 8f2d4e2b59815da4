"""Smoke tests for the python bindings: exactness across the boundary,
determinism, and a couple of verification rows."""

from fractions import Fraction

import pytest

import weingarten as wg


def test_catalan_and_moebius():
    assert wg.catalan(0) == 1
    assert wg.catalan(3) == 5
    assert wg.catalan(10) == 16796
    assert isinstance(wg.catalan(60), int)  # arbitrary precision survives
    assert wg.catalan(60) > 10**30
    assert wg.moebius([1, 1, 1]) == 1
    assert wg.moebius([3]) == 2
    assert wg.moebius([3, 2]) == -2
    assert wg.catalan_quotient_max(3) == Fraction(2)


def test_permutation_helpers():
    assert wg.norm("(1 2 3)") == 2
    assert wg.cycle_type([2, 1, 3]) == [2, 1]
    assert wg.compose("(1 2)", "(2 3)") == [2, 3, 1]
    with pytest.raises(ValueError):
        wg.norm([1, 1, 2])


def test_coset_types():
    assert wg.coset_type("{1-2, 3-7, 4-6, 5-8}") == [3, 1]
    assert wg.coset_type([(1, 2), (3, 4), (6, 7), (5, 8)]) == [2, 1, 1]


def test_path_counts():
    assert wg.count_paths_unitary("(1 2 3)", 0) == 2
    assert wg.count_paths_unitary([1, 2], 1) == 1
    assert wg.count_paths_unitary_class([4], 0) == 5
    assert wg.count_paths_orthogonal("{1-2, 3-4}", 0, 0) == 1


def test_exact_values_are_fractions():
    table = wg.wg_unitary(2, 10)
    assert table[(1, 1)] == Fraction(1, 99)
    assert table[(2,)] == Fraction(-1, 990)
    assert wg.wg_unitary(3, "10", method="gram")[(3,)] == wg.wg_full_cycle(3, 10)
    assert wg.wg_full_cycle(2, 3) == Fraction(-1, 24)
    assert wg.wg_full_cycle(2, Fraction(7, 2)) == Fraction(-8, 315)

    orth = wg.wg_orthogonal(2, 10)
    assert orth[(1, 1)] == Fraction(11, 1080)
    sp = wg.wg_symplectic_magnitudes(2, 10)
    assert sp[(1, 1)] == abs(wg.wg_orthogonal(2, 20)[(1, 1)])

    partial, tail = wg.wg_unitary_series([1, 2], 10, g_max=3)
    assert partial == Fraction(1010101, 1000000)
    assert abs(Fraction(100, 99) - partial) <= tail


def test_trace_determinism():
    t1 = wg.sample_trace("U", [1, 1, 1], seed=1)
    t2 = wg.sample_trace("U", [1, 1, 1], seed=1)
    assert t1 == t2
    assert len(t1) == 4  # three dashed steps
    assert t1[-1]["n"] == 0
    t3 = wg.sample_trace("O", [3, 1], seed=5)
    assert t3[0]["n"] == 4


def test_estimators_and_verify():
    rep = wg.estimate("Lsum", [1, 1, 1, 1], samples=50, seed=3)
    assert rep["estimate"] == 4.0
    assert rep["std_error"] == 0.0

    rows = wg.verify("main", n=2, N="100000")
    assert rows and all(r["satisfied"] for r in rows)
    rows = wg.verify("log", n=5, N="10000")
    assert rows and all(r["satisfied"] for r in rows)

    with pytest.raises(OverflowError):
        wg.count_paths_unitary_class([9], 0)
    with pytest.raises(ArithmeticError):
        wg.wg_unitary(2, 1)
