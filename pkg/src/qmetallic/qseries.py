"""Truncated power series in q and the q-irrational constructions.

A q-irrational ``[x]_q`` is the coefficient-wise limit of the Taylor series
of the q-rational convergents of ``x``.  :func:`stabilized_series` builds it
that way; :func:`metallic_series` solves the quadratic equation obeyed by the
q-metallic numbers directly.  The two routes are independent of each other.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable, Union

from .cfrac import q_rational
from .qpoly import IntPoly, RatFunc, euler_q_integer

__all__ = [
    "NotStabilizedError",
    "PowerSeries",
    "metallic_equation_residual",
    "metallic_series",
    "series_of_ratfunc",
    "stabilized_series",
]


class NotStabilizedError(RuntimeError):
    """Successive convergents never agreed within the convergent cap."""


class PowerSeries:
    """Power series ``sum c_s q^s`` known modulo ``q**order``.

    Coefficients are exact Fractions.  Binary operations truncate to the
    smaller of the two orders.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            cs = (cs + [Fraction(0)] * order)[:order]
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_poly(cls, p: IntPoly, order: int) -> "PowerSeries":
        return cls(p.coeffs, order)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order}")
        return PowerSeries(self.coeffs[:order])

    def __getitem__(self, s):
        return self.coeffs[s]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _pair(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            return self.coeffs[:n], other.coeffs[:n], n
        if isinstance(other, IntPoly):
            other = PowerSeries.from_poly(other, self.order)
            return self.coeffs, other.coeffs, self.order
        if isinstance(other, (int, Fraction)):
            o = [Fraction(0)] * self.order
            if self.order:
                o[0] = Fraction(other)
            return self.coeffs, tuple(o), self.order
        raise TypeError(f"cannot combine PowerSeries with {other!r}")

    def __add__(self, other):
        a, b, _ = self._pair(other)
        return PowerSeries(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        a, b, _ = self._pair(other)
        return PowerSeries(x - y for x, y in zip(a, b))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b, n = self._pair(other)
        out = [Fraction(0)] * n
        for i, x in enumerate(a):
            if x:
                for j in range(n - i):
                    out[i + j] += x * b[j]
        return PowerSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        a = self.coeffs
        if not a or a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [Fraction(0)] * len(a)
        inv[0] = 1 / a[0]
        for s in range(1, len(a)):
            acc = sum((a[t] * inv[s - t] for t in range(1, s + 1)), Fraction(0))
            inv[s] = -acc * inv[0]
        return PowerSeries(inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(c / other for c in self.coeffs)
        if isinstance(other, IntPoly):
            other = PowerSeries.from_poly(other, self.order)
        return self * other.inverse()

    def sqrt(self) -> "PowerSeries":
        """Square root with constant term ``+1``; requires ``self[0] == 1``."""
        a = self.coeffs
        if not a:
            return self
        if a[0] != 1:
            raise ValueError("sqrt is implemented for series with constant term 1")
        b = [Fraction(0)] * len(a)
        b[0] = Fraction(1)
        # (sum b)^2 = sum a  =>  2 b_0 b_s = a_s - sum_{0<t<s} b_t b_{s-t}
        for s in range(1, len(a)):
            acc = sum((b[t] * b[s - t] for t in range(1, s)), Fraction(0))
            b[s] = (a[s] - acc) / 2
        return PowerSeries(b)

    def shift_down(self, k: int) -> "PowerSeries":
        """Divide by ``q**k``; the first ``k`` coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValueError(f"series is not divisible by q^{k}")
        return PowerSeries(self.coeffs[k:])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"PowerSeries([{body}])"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "PowerSeries":
        if isinstance(data, str):
            data = json.loads(data)
        return cls((Fraction(c) for c in data["coeffs"]), data["order"])


def series_of_ratfunc(f: RatFunc, order: int) -> PowerSeries:
    """First ``order`` Taylor coefficients of ``f`` at ``q = 0``.

    Exact long division by the denominator, which must not vanish at 0.
    """
    den = f.den
    if den[0] == 0:
        raise ValueError(f"denominator {den} vanishes at q = 0; no Taylor expansion")
    d0 = den[0]
    out = []
    num = [Fraction(c) for c in f.num.coeffs[:order]]
    num += [Fraction(0)] * (order - len(num))
    for s in range(order):
        c = num[s] / d0
        out.append(c)
        if c:
            for j in range(1, min(len(den), order - s)):
                num[s + j] -= c * den[j]
    return PowerSeries(out)


Descriptor = Union[int, Callable[[int], int]]


def _term_source(descriptor: Descriptor) -> Callable[[int], int]:
    if isinstance(descriptor, int):
        if descriptor < 1:
            raise ValueError("continued fraction terms must be positive")
        return lambda i: descriptor
    return descriptor


def _convergent(term: Callable[[int], int], k: int) -> Fraction:
    terms = [term(i) for i in range(1, k + 1)]
    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        value = a + 1 / value
    return value


def convergent_series(descriptor: Descriptor, k: int, order: int) -> PowerSeries | None:
    """Taylor series of the ``k``-th convergent, or None when it is <= 1."""
    x = _convergent(_term_source(descriptor), k)
    if x <= 1:
        return None
    return series_of_ratfunc(q_rational(x), order)


def stabilized_series(descriptor: Descriptor, order: int, max_convergents: int = 400,
                      return_index: bool = False):
    """``[x]_q`` modulo ``q**order`` for ``x = [a_1, a_2, ...]``.

    ``descriptor`` is either an integer ``n`` (the metallic number
    ``[n, n, n, ...]``) or a callable ``i -> a_i`` with ``i`` starting at 1.
    Convergents ``x_k = [a_1, ..., a_k]`` are deformed and expanded until two
    successive ones agree in their first ``order`` coefficients.  With
    ``return_index`` the index of the accepted convergent is also returned.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    previous = None
    for k in range(1, max_convergents + 1):
        current = convergent_series(descriptor, k, order)
        if current is None:
            continue
        if previous is not None and current == previous:
            if not current.is_integral():
                raise ArithmeticError(f"stabilized coefficients are not integers: {current}")
            return (current, k) if return_index else current
        previous = current
    raise NotStabilizedError(
        f"series did not stabilize to order {order} within {max_convergents} convergents")


def _metallic_b(n: int) -> IntPoly:
    # (q - 1)(q^n + 1) + q [n]_q
    return IntPoly([-1, 1]) * (IntPoly.monomial(n) + 1) + euler_q_integer(n).shift(1)


def metallic_series(n: int, order: int) -> PowerSeries:
    """Power-series root of ``q X^2 - ((q-1)(q^n+1) + q[n]_q) X - 1 = 0``.

    Quadratic formula with the square root of the discriminant taken on the
    branch with constant term ``+1``; the other branch has a pole at 0.
    """
    if n < 1 or order < 1:
        raise ValueError("need n >= 1 and order >= 1")
    b = _metallic_b(n)
    disc = b * b + IntPoly([0, 4])
    root = PowerSeries.from_poly(disc, order + 1).sqrt()
    numerator = PowerSeries.from_poly(b, order + 1) + root
    x = numerator.shift_down(1) / 2
    if not x.is_integral():
        raise ArithmeticError(f"metallic series has non-integer coefficients: {x}")
    return x


def metallic_equation_residual(n: int, x: PowerSeries) -> PowerSeries:
    """``q X^2 - b X - 1`` evaluated on ``x``; vanishes for the true root."""
    b = PowerSeries.from_poly(_metallic_b(n), x.order)
    q = PowerSeries.from_poly(IntPoly([0, 1]), x.order)
    return q * x * x - b * x - 1
