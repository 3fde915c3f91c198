"""Exact integer routes, combinatorial oracles, and the log table."""

import math

import pytest

from catalan_integrals.exact import (
    ENUMERATION_LIMIT,
    TRIANGULATION_MAX_SIDES,
    CatalanTable,
    catalan_exact,
    catalan_hypergeometric,
    catalan_segner,
    count_balanced_parentheses,
    count_polygon_triangulations,
    ln_exact,
)
from catalan_integrals.kernels import log_gamma_reference

# The classical sequence; everything below anchors to these integers.
FIRST_VALUES = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796)

# ln C_100, frozen from a 40-digit evaluation of the exact integer.
LN_C100 = 131.1381155644372337566624


@pytest.mark.parametrize("n, expected", list(enumerate(FIRST_VALUES)))
def test_closed_form_small_values(n, expected):
    assert catalan_exact(n) == expected


def test_small_value_anchors():
    # The two values every derivation in the package keeps coming back to.
    assert catalan_exact(3) == 5
    assert catalan_exact(5) == 42


@pytest.mark.parametrize("n, expected", [(0, 1), (4, 14), (10, 16796)])
def test_segner_values(n, expected):
    assert catalan_segner(n) == expected


@pytest.mark.parametrize("n, expected", [(0, 1), (3, 5), (7, 429)])
def test_hypergeometric_values(n, expected):
    assert catalan_hypergeometric(n) == expected


def test_routes_agree_through_200():
    # Triple equality of the closed form, the convolution recurrence,
    # and the terminating hypergeometric sum, all in exact integers.
    for n in range(201):
        c = catalan_exact(n)
        assert catalan_segner(n) == c
        assert catalan_hypergeometric(n) == c


@pytest.mark.parametrize("route", [catalan_exact, catalan_segner, catalan_hypergeometric])
def test_negative_index_rejected(route):
    with pytest.raises(ValueError):
        route(-1)


def test_balanced_parentheses_matches_closed_form():
    for n in range(ENUMERATION_LIMIT + 1):
        assert count_balanced_parentheses(n) == catalan_exact(n)


def test_balanced_parentheses_anchor():
    assert count_balanced_parentheses(3) == 5


def test_triangulations_match_closed_form():
    # An s-gon has C_{s-2} triangulations; s = 7 gives 42.
    for sides in range(3, TRIANGULATION_MAX_SIDES + 1):
        assert count_polygon_triangulations(sides) == catalan_exact(sides - 2)
    assert count_polygon_triangulations(7) == 42


def test_enumeration_guards():
    with pytest.raises(ValueError):
        count_balanced_parentheses(ENUMERATION_LIMIT + 1)
    with pytest.raises(ValueError):
        count_balanced_parentheses(-1)
    with pytest.raises(ValueError):
        count_polygon_triangulations(2)
    with pytest.raises(ValueError):
        count_polygon_triangulations(TRIANGULATION_MAX_SIDES + 1)


def test_table_matches_closed_form():
    table = CatalanTable.build(300)
    for n in (0, 1, 7, 100, 300):
        assert table.values[n] == catalan_exact(n)


def test_table_ratio_recurrence():
    # (n + 2) C_{n+1} = 2 (2n + 1) C_n, exactly, at every index.
    table = CatalanTable.build(300)
    for n in range(300):
        assert (n + 2) * table.values[n + 1] == 2 * (2 * n + 1) * table.values[n]


def test_table_reaches_deep_indices():
    table = CatalanTable.build(10_000)
    assert table.values[10_000] == catalan_exact(10_000)


def test_ln_exact_basics():
    assert ln_exact(0) == 0.0
    assert ln_exact(1) == 0.0
    assert abs(ln_exact(5) - math.log(42.0)) <= 1e-15
    assert abs(ln_exact(100) - LN_C100) <= 1e-12


def test_ln_exact_matches_float_log():
    # Wherever the integer still fits in a double, the top-bits splitting
    # must agree with log(float(C_n)) to full precision.
    n = 0
    while True:
        c = catalan_exact(n)
        try:
            as_float = float(c)
        except OverflowError:
            break
        assert abs(ln_exact(n) - math.log(as_float)) <= 1e-12 * max(1.0, ln_exact(n))
        n += 1
    assert n > 400  # the sequence outgrows doubles only past n ~ 510


def test_ln_exact_cross_checks_stirling():
    # ln C_n = 2n ln 2 - (1/2) ln pi + ln Gamma(n + 1/2) - ln Gamma(n + 2).
    for n in (10, 100):
        via_gamma = (
            2.0 * n * math.log(2.0)
            - 0.5 * math.log(math.pi)
            + log_gamma_reference(n + 0.5)
            - log_gamma_reference(n + 2.0)
        )
        assert abs(ln_exact(n) - via_gamma) <= 1e-10


def test_ln_exact_negative_rejected():
    with pytest.raises(ValueError):
        ln_exact(-3)
