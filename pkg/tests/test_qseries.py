import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from qmetallic.cfrac import q_rational
from qmetallic.qpoly import IntPoly, RatFunc, euler_q_integer
from qmetallic.qseries import (
    NotStabilizedError,
    PowerSeries,
    convergent_series,
    metallic_equation_residual,
    metallic_series,
    series_of_ratfunc,
    stabilized_series,
)

Q = sympy.Symbol("q")

# regression fixture produced by the stabilization route
GOLDEN_8 = [1, 0, 1, -1, 2, -4, 8, -17]

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
series = st.lists(fracs, min_size=1, max_size=10).map(PowerSeries)
unit_series = st.lists(fracs, max_size=9).map(lambda cs: PowerSeries([1] + cs))


# --- PowerSeries ------------------------------------------------------------

def test_geometric_series():
    f = RatFunc(IntPoly([1]), IntPoly([1, -1]))
    assert series_of_ratfunc(f, 4).coeffs == (1, 1, 1, 1)


def test_five_halves_series():
    assert series_of_ratfunc(q_rational(Fraction(5, 2)), 4).coeffs == (1, 1, 0, 1)


def test_polynomial_is_its_own_series():
    assert series_of_ratfunc(RatFunc(euler_q_integer(3)), 5).coeffs == (1, 1, 1, 0, 0)


def test_no_expansion_when_denominator_vanishes_at_zero():
    with pytest.raises(ValueError):
        series_of_ratfunc(RatFunc(IntPoly([1]), IntPoly([0, 1])), 3)


@given(series, series)
def test_binary_ops_truncate_to_smaller_order(a, b):
    assert (a + b).order == min(a.order, b.order)
    assert (a * b).order == min(a.order, b.order)


@given(unit_series)
def test_inverse(a):
    one = PowerSeries([1], a.order)
    assert a * a.inverse() == one


@given(unit_series)
def test_sqrt_squares_back(a):
    r = a.sqrt()
    assert r.coeffs[0] == 1
    assert r * r == a


def test_sqrt_needs_unit_constant_term():
    with pytest.raises(ValueError):
        PowerSeries([4, 1]).sqrt()


def test_inverse_needs_nonzero_constant():
    with pytest.raises(ZeroDivisionError):
        PowerSeries([0, 1]).inverse()


@given(series)
def test_json_roundtrip(a):
    data = a.to_json()
    assert data["order"] == a.order
    assert all(isinstance(c, str) for c in data["coeffs"])
    assert PowerSeries.from_json(json.dumps(data)) == a


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5),
       st.lists(st.integers(-9, 9), min_size=1, max_size=4).filter(lambda c: c[0] != 0))
def test_ratfunc_series_matches_sympy(num, den):
    f = RatFunc(IntPoly(num), IntPoly(den))
    expr = sum(c * Q**t for t, c in enumerate(num)) / sum(c * Q**t for t, c in enumerate(den))
    want = sympy.Poly(sympy.series(expr, Q, 0, 8).removeO(), Q).all_coeffs()[::-1]
    want = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in want]
    want += [Fraction(0)] * (8 - len(want))
    assert list(series_of_ratfunc(f, 8).coeffs) == want


# --- q-irrationals --------------------------------------------------------

def test_stabilized_order_one():
    assert stabilized_series(1, 1).coeffs == (1,)


def test_golden_regression():
    assert stabilized_series(1, 8).integer_coeffs() == GOLDEN_8


@pytest.mark.parametrize("n", range(1, 9))
def test_metallic_constant_term_is_one(n):
    # every q-integer, and so every convergent numerator and denominator, is 1 at q = 0
    assert metallic_series(n, 4).coeffs[0] == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_cross_oracle_all_orders(n):
    full = metallic_series(n, 24)
    assert full.is_integral()
    for order in (1, 2, 5, 8, 13, 24):
        assert stabilized_series(n, order) == full.truncate(order)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_quadratic_formula_matches_sympy(n):
    qn = sum(Q**t for t in range(n))
    b = (Q - 1) * (Q**n + 1) + Q * qn
    expr = (b + sympy.sqrt(sympy.expand(b * b + 4 * Q))) / (2 * Q)
    want = sympy.Poly(sympy.series(expr, Q, 0, 12).removeO(), Q).all_coeffs()[::-1]
    assert [int(c) for c in want] == metallic_series(n, 12).integer_coeffs()[:len(want)]


@pytest.mark.parametrize("n", range(1, 9))
def test_residual_vanishes(n):
    x = metallic_series(n, 24)
    res = metallic_equation_residual(n, x)
    assert all(c == 0 for c in res.coeffs)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("order", [4, 12, 24])
def test_stabilization_persists(n, order):
    value, k = stabilized_series(n, order, return_index=True)
    for j in range(k + 1, k + 4):
        assert convergent_series(n, j, order) == value


def test_descriptor_callable_and_translation():
    # [1, 2, 2, ...] is sqrt(2) and [2, 2, ...] is sqrt(2) + 1; [x + 1]_q = q [x]_q + 1
    root2 = stabilized_series(lambda i: 1 if i == 1 else 2, 12)
    silver = stabilized_series(2, 12)
    q = PowerSeries([0, 1], 12)
    assert silver == q * root2 + 1


def test_stabilization_cap():
    with pytest.raises(NotStabilizedError):
        stabilized_series(1, 30, max_convergents=5)
