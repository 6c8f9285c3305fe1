"""Polynomial families attached to the q-metallic numbers ``[n, n, n, ...]_q``.

The discriminant of the quadratic equation of ``[n, n, ...]_q`` is built two
ways (closed form and ``b^2 - 4ac`` of the equation) and the two are required
to agree.  ``p_factor(n)`` is the cofactor of ``1 - q + q^2`` in it, and its
smallest root modulus is the radius of convergence of the q-metallic number.
"""
from __future__ import annotations

from functools import lru_cache

from .qpoly import IntPoly, euler_q_integer

__all__ = [
    "QUOTED_DISCRIMINANT_2",
    "UNIT_FACTOR",
    "classical_A",
    "discriminant",
    "discriminant_closed_form",
    "discriminant_symbolic",
    "f_poly",
    "m_seq",
    "m_tilde_seq",
    "p_factor",
    "p_factor_closed_form",
]

#: The factor ``1 - q + q^2`` shared by every metallic discriminant.
UNIT_FACTOR = IntPoly([1, -1, 1])

#: The n = 2 discriminant as it is often quoted, ``1+2q+3q^2+3q^4+2q^5+q^6``.
#: It is not ``b^2 - 4ac`` (its value at q = 1 is 12, not 2^2 + 4), so it is
#: kept only for reference; :func:`discriminant` never returns it.
QUOTED_DISCRIMINANT_2 = IntPoly([1, 2, 3, 0, 3, 2, 1])


def _check_index(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"metallic index must be a positive integer, got {n!r}")


def _from_terms(terms: dict[int, int]) -> IntPoly:
    top = max(terms)
    cs = [0] * (top + 1)
    for e, c in terms.items():
        cs[e] += c
    return IntPoly(cs)


def discriminant_closed_form(n: int) -> IntPoly:
    """Cased closed form of the discriminant (explicit for n = 1, 2).

    For n = 2 this is ``1 + 4q^2 - 2q^3 + 4q^4 + q^6``, see
    :data:`QUOTED_DISCRIMINANT_2`.
    """
    _check_index(n)
    if n == 1:
        return IntPoly([1, 2, -1, 2, 1])
    if n == 2:
        return IntPoly([1, 0, 4, -2, 4, 0, 1])
    terms = {0: 1, 2: 2}
    for t in range(3, n):  # empty when n = 3
        terms[t] = terms.get(t, 0) + (t - 1)
    terms[n] = terms.get(n, 0) + (n + 1)
    terms[n + 1] = terms.get(n + 1, 0) + (n - 4)
    terms[n + 2] = terms.get(n + 2, 0) + (n + 1)
    for t in range(n + 3, 2 * n):
        terms[t] = terms.get(t, 0) + (2 * n - t + 1)
    terms[2 * n] = terms.get(2 * n, 0) + 2
    terms[2 * n + 2] = terms.get(2 * n + 2, 0) + 1
    return _from_terms(terms)


def quadratic_b(n: int) -> IntPoly:
    """Linear coefficient ``(q - 1)(q^n + 1) + q [n]_q`` (up to sign)."""
    _check_index(n)
    return IntPoly([-1, 1]) * (IntPoly.monomial(n) + 1) + euler_q_integer(n).shift(1)


def discriminant_symbolic(n: int) -> IntPoly:
    """``b^2 - 4ac`` for ``q X^2 - b X - 1``, i.e. ``b^2 + 4q``."""
    b = quadratic_b(n)
    return b * b + IntPoly([0, 4])


@lru_cache(maxsize=None)
def discriminant(n: int) -> IntPoly:
    """Discriminant of the quadratic equation of ``[n, n, ...]_q``."""
    closed = discriminant_closed_form(n)
    symbolic = discriminant_symbolic(n)
    if closed != symbolic:
        raise AssertionError(f"closed-form discriminant disagrees with b^2-4ac at n={n}")
    return closed


def p_factor_closed_form(n: int) -> IntPoly:
    """Cased closed form of the palindromic cofactor ``P_n``."""
    _check_index(n)
    if n == 1:
        return IntPoly([1, 3, 1])
    if n == 2:
        return IntPoly([1, 1, 4, 1, 1])
    cs = [1] + list(range(1, n)) + [n + 2] + [2 * n - t for t in range(n + 1, 2 * n)] + [1]
    return IntPoly(cs)


@lru_cache(maxsize=None)
def p_factor(n: int) -> IntPoly:
    """``P_n`` with ``discriminant(n) == (1 - q + q^2) * P_n`` checked exactly."""
    p = p_factor_closed_form(n)
    if UNIT_FACTOR * p != discriminant(n):
        raise AssertionError(f"(1 - q + q^2) * P_{n} differs from the discriminant")
    return p


@lru_cache(maxsize=None)
def f_poly(n: int) -> IntPoly:
    """``f(q, n) = 1 + q [n]_q^2 + q^(2n)``, equal to ``P_n - 2 q^n``."""
    _check_index(n)
    qn = euler_q_integer(n)
    f = 1 + (qn * qn).shift(1) + IntPoly.monomial(2 * n)
    expanded = IntPoly([1] + list(range(1, n + 1)) + [2 * n - t for t in range(n + 1, 2 * n)] + [1])
    if f != expanded:
        raise AssertionError(f"f(q, {n}) expansion mismatch")
    if f + IntPoly.monomial(n, 2) != p_factor(n):
        raise AssertionError(f"f(q, {n}) + 2q^{n} != P_{n}")
    return f


def classical_A(n: int, k: int) -> int:
    """``A_0 = 0, A_1 = 1, A_{k+2} = n A_{k+1} + A_k``."""
    _check_index(n)
    if k < 0:
        raise ValueError("index must be >= 0")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, n * b + a
    return a


@lru_cache(maxsize=None)
def _m_pair(n: int, k: int) -> tuple[IntPoly, IntPoly]:
    # (M_k, M~_k) from the parity-split recurrences; M~_3 is initial data,
    # so the odd M~ recurrence is first used at k = 5.
    qn = euler_q_integer(n)
    if k == 0:
        return IntPoly(), IntPoly()
    if k == 1:
        return IntPoly([1]), IntPoly([1])
    if k == 2:
        return qn, qn
    if k == 3:
        return 1 + (qn * qn).shift(1), qn * qn + IntPoly.monomial(2 * n - 1)
    m1, t1 = _m_pair(n, k - 1)
    m2, t2 = _m_pair(n, k - 2)
    q2n = IntPoly.monomial(2 * n)
    if k % 2:
        m = qn.shift(1) * m1 + m2
        t = qn * t1 + q2n * t2
    else:
        m = qn * m1 + q2n * m2
        t = qn.shift(1) * t1 + t2
    return m, t


def _check_f_recurrence(n: int, k: int, seq) -> None:
    # M_{j+4} = f M_{j+2} - q^{2n} M_j for j >= 1
    if k >= 5:
        j = k - 4
        lhs = seq(n, k)
        rhs = f_poly(n) * seq(n, j + 2) - IntPoly.monomial(2 * n) * seq(n, j)
        if lhs != rhs:
            raise AssertionError(f"four-term recurrence fails at n={n}, k={k}")


@lru_cache(maxsize=None)
def m_seq(n: int, k: int) -> IntPoly:
    """The denominators ``M_k(n)`` of ``[A_{k+1}/A_k]_q``."""
    _check_index(n)
    if k < 0:
        raise ValueError("index must be >= 0")
    m = _m_pair(n, k)[0]
    _check_f_recurrence(n, k, _m_only)
    return m


@lru_cache(maxsize=None)
def m_tilde_seq(n: int, k: int) -> IntPoly:
    """The numerators ``M~_k(n)``: ``[A_{k}/A_{k-1}]_q = M~_k / M_{k-1}``."""
    _check_index(n)
    if k < 0:
        raise ValueError("index must be >= 0")
    return _m_pair(n, k)[1]


def _m_only(n: int, k: int) -> IntPoly:
    return _m_pair(n, k)[0]
