from fractions import Fraction

import pytest

from gainforest.gaingraph import GainGraph, linial, make_interval_gain_graph
from gainforest.oracle import (
    CharPoly,
    admissible_primes,
    char_poly,
    count_points_mod_q,
    lagrange_coefficients,
    linial_formula,
    region_count,
    validate_char_poly,
)


def test_point_counts():
    assert count_points_mod_q(linial(2), 5) == 20
    assert count_points_mod_q(linial(3), 7) == 217
    assert count_points_mod_q(make_interval_gain_graph(1, 1, 1), 5) == 5


def test_point_count_rejects_bad_modulus():
    with pytest.raises(ValueError):
        count_points_mod_q(linial(3), 9)
    with pytest.raises(ValueError):
        count_points_mod_q(linial(4), 5)


def test_char_poly_examples():
    assert char_poly(linial(2)).descending() == [1, -1, 0]
    assert str(char_poly(linial(3))) == "q^3 - 3q^2 + 3q"
    edgeless = GainGraph(frozenset({1, 2}), frozenset())
    assert char_poly(edgeless).descending() == [1, 0, 0]


def test_char_poly_prime_invariance():
    g = make_interval_gain_graph(3, -1, 1)
    base = char_poly(g)
    other = char_poly(g, admissible_primes(g, g.n + 1, skip=g.n + 3))
    assert base == other
    assert validate_char_poly(g, base)


def test_region_examples():
    assert region_count(linial(2)) == 2
    assert region_count(linial(3)) == 7
    assert region_count(make_interval_gain_graph(2, 0, 2)) == 4
    assert region_count(make_interval_gain_graph(2, 1, 2)) == 3


def test_lagrange_exact():
    pts = [(x, 2 * x * x - 3 * x + 1) for x in (2, 3, 5)]
    assert lagrange_coefficients(pts) == [Fraction(1), Fraction(-3), Fraction(2)]


def test_charpoly_str_and_eval():
    p = CharPoly((0, -14, 15, -6, 1))
    assert str(p) == "q^4 - 6q^3 + 15q^2 - 14q"
    assert p(-1) == 36


def test_formula_values():
    assert [linial_formula(n) for n in (1, 2, 3)] == [1, 1, 2]
    with pytest.raises(ValueError):
        linial_formula(0)
