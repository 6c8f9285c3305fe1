from fractions import Fraction

import pytest
import sympy

from qmetallic.cfrac import q_rational
from qmetallic.metallic import (
    QUOTED_DISCRIMINANT_2,
    UNIT_FACTOR,
    classical_A,
    discriminant,
    discriminant_closed_form,
    discriminant_symbolic,
    f_poly,
    m_seq,
    m_tilde_seq,
    p_factor,
    p_factor_closed_form,
)
from qmetallic.qpoly import IntPoly, RatFunc, euler_q_integer, exact_divide, is_palindrome

Q, X = sympy.symbols("q X")
NS = range(1, 51)


def from_sympy(expr) -> IntPoly:
    return IntPoly([int(c) for c in reversed(sympy.Poly(sympy.expand(expr), Q).all_coeffs())])


def sympy_discriminant(n):
    qn = sum(Q**t for t in range(n))
    b = (Q - 1) * (Q**n + 1) + Q * qn
    return from_sympy(sympy.discriminant(Q * X**2 - b * X - 1, X))


# --- discriminant -------------------------------------------------------------

def test_discriminant_n1():
    assert discriminant(1) == IntPoly([1, 2, -1, 2, 1])


def test_discriminant_n2():
    assert discriminant(2) == IntPoly([1, 0, 4, -2, 4, 0, 1])
    # the often-quoted sextic is not b^2 - 4ac: at q = 1 it gives 12, not 8
    assert QUOTED_DISCRIMINANT_2 != discriminant_symbolic(2)
    assert QUOTED_DISCRIMINANT_2(1) == 12


def test_discriminant_n3_empty_sum():
    assert discriminant_closed_form(3) == discriminant_symbolic(3)
    assert discriminant(3) == IntPoly([1, 0, 2, 4, -1, 4, 2, 0, 1])


@pytest.mark.parametrize("n", [1, 2, 3, 4, 7, 12, 25])
def test_discriminant_matches_sympy(n):
    assert discriminant(n) == sympy_discriminant(n)


def test_discriminant_properties():
    for n in NS:
        d = discriminant(n)
        assert d == discriminant_closed_form(n) == discriminant_symbolic(n)
        assert d(1) == n * n + 4
        assert d(0) == 1
        assert is_palindrome(d)
        assert d == UNIT_FACTOR * p_factor(n)
        half = d.coeffs[: len(d.coeffs) // 2]
        assert max(abs(c) for c in half) >= abs(d.coeffs[len(d.coeffs) // 2])


def test_coefficients_nonnegative_from_four():
    for n in range(4, 51):
        cs = discriminant(n).coeffs
        assert all(c >= 0 for c in cs)
        zeros = {t for t, c in enumerate(cs) if c == 0}
        # q^1 and q^(2n+1) always vanish; for n = 4 so does the q^(n+1) term
        assert zeros == ({1, 5, 9} if n == 4 else {1, 2 * n + 1})


def test_coefficients_not_all_nonnegative_below_four():
    for n in (1, 2, 3):
        assert min(discriminant(n).coeffs) < 0


def test_rejects_bad_index():
    for bad in (0, -1, True, 2.0):
        with pytest.raises(ValueError):
            discriminant_closed_form(bad)


# --- P_n and f ---------------------------------------------------------------

@pytest.mark.parametrize("n, coeffs", [
    (1, [1, 3, 1]),
    (2, [1, 1, 4, 1, 1]),
    (3, [1, 1, 2, 5, 2, 1, 1]),
])
def test_p_factor_examples(n, coeffs):
    assert p_factor(n) == IntPoly(coeffs)


def test_p_factor_is_exact_quotient():
    for n in NS:
        assert exact_divide(discriminant(n), UNIT_FACTOR) == p_factor_closed_form(n)
        assert is_palindrome(p_factor(n))


@pytest.mark.parametrize("n, coeffs", [(1, [1, 1, 1]), (3, [1, 1, 2, 3, 2, 1, 1])])
def test_f_examples(n, coeffs):
    assert f_poly(n) == IntPoly(coeffs)


def test_f_relations():
    for n in NS:
        f = f_poly(n)
        qn = euler_q_integer(n)
        assert f == 1 + (qn * qn).shift(1) + IntPoly.monomial(2 * n)
        assert f + IntPoly.monomial(n, 2) == p_factor(n)
        assert is_palindrome(f)


# --- sequences ----------------------------------------------------------------

def test_classical_examples():
    assert [classical_A(1, k) for k in range(7)] == [0, 1, 1, 2, 3, 5, 8]
    assert [classical_A(2, k) for k in range(6)] == [0, 1, 2, 5, 12, 29]
    assert classical_A(3, 4) == 33


def test_classical_four_term_recurrence():
    for n in range(1, 11):
        for k in range(0, 30):
            assert classical_A(n, k + 4) == (n * n + 2) * classical_A(n, k + 2) - classical_A(n, k)


def test_m_examples():
    assert m_seq(2, 3) == IntPoly([1, 1, 2, 1])
    assert m_seq(1, 4) == IntPoly([1, 1, 1])
    for n in range(1, 8):
        qn = euler_q_integer(n)
        assert m_seq(n, 0).is_zero and m_tilde_seq(n, 0).is_zero
        assert m_seq(n, 4) == (IntPoly.monomial(2 * n) + 1) * qn + (qn * qn * qn).shift(1)
        assert m_tilde_seq(n, 3) == qn * qn + IntPoly.monomial(2 * n - 1)


def test_q_equals_one_recovers_classical():
    for n in range(1, 11):
        for k in range(0, 21):
            assert m_seq(n, k)(1) == classical_A(n, k)
            assert m_tilde_seq(n, k)(1) == classical_A(n, k)


def test_four_term_recurrence():
    for n in range(1, 11):
        f, q2n = f_poly(n), IntPoly.monomial(2 * n)
        for k in range(1, 17):
            assert m_seq(n, k + 4) == f * m_seq(n, k + 2) - q2n * m_seq(n, k)


def test_tilde_four_term_recurrence_from_two():
    # the tilde sequence obeys the same recurrence once k >= 2, but not at k = 1
    for n in range(1, 8):
        f, q2n = f_poly(n), IntPoly.monomial(2 * n)
        for k in range(2, 15):
            assert m_tilde_seq(n, k + 4) == f * m_tilde_seq(n, k + 2) - q2n * m_tilde_seq(n, k)
        assert m_tilde_seq(n, 5) != f * m_tilde_seq(n, 3) - q2n * m_tilde_seq(n, 1)


def test_convergent_identity():
    for n in range(1, 7):
        for k in range(1, 13):
            x = Fraction(classical_A(n, k + 1), classical_A(n, k))
            if x <= 1:
                continue
            assert q_rational(x) == RatFunc(m_tilde_seq(n, k + 1), m_seq(n, k))


def test_convergent_identity_with_sympy_oracle():
    # independent arithmetic: build [n, ..., n]_q from its deformed continued fraction in sympy
    def qint(a, var):
        return sum(var**t for t in range(a))

    for n in (2, 3):
        for k in (2, 4, 6):
            value = qint(n, 1 / Q)
            for i in range(k - 2, -1, -1):
                if i % 2 == 0:
                    value = sympy.cancel(qint(n, Q) + Q**n / value)
                else:
                    value = sympy.cancel(qint(n, 1 / Q) + Q**(-n) / value)
            num, den = sympy.fraction(sympy.cancel(value))
            assert sympy.expand(num * sum(c * Q**t for t, c in enumerate(m_seq(n, k).coeffs))
                                - den * sum(c * Q**t for t, c in enumerate(m_tilde_seq(n, k + 1).coeffs))) == 0
