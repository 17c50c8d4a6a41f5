from fractions import Fraction
from math import comb

import pytest

import slitwalk as sw


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_counts_match_generating_function():
    S = sw.complete_gf("square", 6)
    for n in range(7):
        table = sw.count_walks("square", n)
        from_gf = {(i, j): c for (m, i, j), c in S.items() if m == n}
        assert table == from_gf
    assert sw.count_totals("square", 3) == [1, 3, 9, 34]


def test_endpoint_catalan():
    a = sw.endpoint("square", 1, 0, 9)
    assert [a[2 * n + 1] for n in range(5)] == [catalan(2 * n + 1) for n in range(5)]
    assert all(isinstance(c, Fraction) for c in a)


def test_closed_form_and_factorization():
    assert sw.closed_form("square_S", 8) == sw.complete_gf("square", 8)
    f = sw.factorize("diagonal", 6)
    assert f["Delta"][(2, 2)] == -4
    assert "diagonal_point_0_2" in sw.closed_form_names()


def test_probabilities():
    assert sw.hitting_point(0, 1)["exact"] == (Fraction(1, 2), 0)
    rows = sw.transience(2)
    assert rows[0][1] == (2, -1)
    assert rows[1][1] == (Fraction(95, 34), Fraction(-55, 34))
    assert sw.limit_moments()["E(Y^2)/n"] == pytest.approx(2 / 3)
    assert sw.density(0, 0) == 0


def test_verify_and_errors():
    assert all(c["passed"] for c in sw.verify("diagonal", 8))
    assert all(n == f for _, n, f in [(r[0], r[1], r[2]) for r in sw.conjecture(2, 6)])
    with pytest.raises(sw.SlitwalkError):
        sw.complete_gf("hexagonal", 3)
    sw.set_guard_n(5)
    try:
        with pytest.raises(sw.ResourceGuardExceeded):
            sw.count_walks("square", 6)
    finally:
        sw.set_guard_n(0)
