"""Exact integer polynomials, Laurent polynomials and rational functions in q.

All three types are immutable.  Coefficient lists are ascending: index ``t``
holds the coefficient of ``q**t``.

>>> p = IntPoly([1, 1]) * IntPoly([1, -1])
>>> p
IntPoly('1 - q^2')
>>> RatFunc(IntPoly([0, 0, 1]), IntPoly([1, 1])) / RatFunc(1, IntPoly([1, 1]))
RatFunc('q^2')
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

__all__ = [
    "NEG_INF",
    "InexactDivisionError",
    "IntPoly",
    "LaurentPoly",
    "RatFunc",
    "euler_q_integer",
    "exact_divide",
    "is_palindrome",
    "poly_gcd",
    "squarefree_decomposition",
    "ratfunc_div",
]

#: Degree of the zero polynomial.
NEG_INF = -math.inf


class InexactDivisionError(ArithmeticError):
    """Raised by :func:`exact_divide` when the divisor leaves a remainder."""

    def __init__(self, dividend, divisor, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{divisor} does not divide {dividend}: remainder {remainder}")


def _trim(coeffs: Sequence) -> tuple:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _format_terms(pairs: Iterable[tuple[int, int]], var: str = "q") -> str:
    out = []
    for e, c in pairs:
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out) if out else "0"


class IntPoly:
    """Dense polynomial in q with arbitrary-precision integer coefficients.

    The zero polynomial stores an empty coefficient tuple and has degree
    :data:`NEG_INF`.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                else:
                    raise TypeError(f"IntPoly coefficients must be integers, got {c!r}")
            cs.append(int(c))
        object.__setattr__(self, "coeffs", _trim(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        if k < 0:
            raise ValueError("monomial exponent must be non-negative")
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls([c])

    @classmethod
    def coerce(cls, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return cls([other])
        raise TypeError(f"cannot interpret {other!r} as IntPoly")

    # -- basic properties ---------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no valuation")
        return next(i for i, c in enumerate(self.coeffs) if c)

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive(self) -> "IntPoly":
        """Divide out the content; the leading coefficient is made positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly([t * c for t, c in enumerate(self.coeffs)][1:])

    def reverse(self) -> "IntPoly":
        """Coefficient reversal, i.e. ``q**deg * p(1/q)``."""
        return IntPoly(self.coeffs[::-1])

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, t: int) -> int:
        return self.coeffs[t] if 0 <= t < len(self.coeffs) else 0

    def __call__(self, x):
        """Evaluate by Horner's rule at any ring element ``x``."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        if isinstance(other, (RatFunc, LaurentPoly)):
            return NotImplemented
        try:
            o = IntPoly.coerce(other).coeffs
        except TypeError:
            return NotImplemented
        a = self.coeffs
        if len(a) < len(o):
            a, o = o, a
        return IntPoly([x + (o[i] if i < len(o) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (RatFunc, LaurentPoly)):
            return NotImplemented
        try:
            return self + (-IntPoly.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (RatFunc, LaurentPoly)):
            return NotImplemented
        try:
            o = IntPoly.coerce(other).coeffs
        except TypeError:
            return NotImplemented
        a = self.coeffs
        if not a or not o:
            return IntPoly()
        out = [0] * (len(a) + len(o) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(o):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __repr__(self):
        return f"IntPoly({str(self)!r})"

    def __str__(self):
        return _format_terms(enumerate(self.coeffs))

    # -- division -----------------------------------------------------
    def divmod_rational(self, d: "IntPoly") -> tuple[list[Fraction], list[Fraction]]:
        """Quotient and remainder over the rationals, as Fraction lists."""
        if d.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dd = d.coeffs
        ld = dd[-1]
        quo = [Fraction(0)] * max(len(rem) - len(dd) + 1, 0)
        for k in range(len(rem) - len(dd), -1, -1):
            c = rem[k + len(dd) - 1] / ld
            if c:
                quo[k] = c
                for j, y in enumerate(dd):
                    rem[k + j] -= c * y
        return quo, list(_trim(rem))

    def pseudo_rem(self, d: "IntPoly") -> "IntPoly":
        """Pseudo-remainder ``prem(self, d)`` computed in Z[q]."""
        if d.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = d.coeffs
        ld = dd[-1]
        m = len(dd)
        while len(rem) >= m:
            lr = rem[-1]
            shift = len(rem) - m
            rem = [c * ld for c in rem]
            for j, y in enumerate(dd):
                rem[shift + j] -= lr * y
            rem = list(_trim(rem))
        return IntPoly(rem)

    # -- serialization ------------------------------------------------
    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "IntPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(c) for c in data)


def euler_q_integer(n: int) -> IntPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``; zero for ``n = 0``."""
    if n < 0:
        raise ValueError("q-integer needs n >= 0")
    return IntPoly([1] * n)


def is_palindrome(p: IntPoly) -> bool:
    """True iff ``q**deg * p(1/q) == p``."""
    if p.is_zero:
        raise ValueError("palindromy is undefined for the zero polynomial")
    return p.coeffs == p.coeffs[::-1]


def exact_divide(p: IntPoly, d: IntPoly) -> IntPoly:
    """Quotient ``p / d`` when ``d`` divides ``p`` in Z[q].

    Raises :class:`InexactDivisionError` carrying the remainder otherwise.
    """
    quo, rem = p.divmod_rational(d)
    if rem or any(c.denominator != 1 for c in quo):
        remainder = IntPoly(c.numerator for c in rem) if all(
            c.denominator == 1 for c in rem) else rem
        raise InexactDivisionError(p, d, remainder)
    return IntPoly(c.numerator for c in quo)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd in Z[q] (positive leading coefficient), via primitive PRS."""
    if a.is_zero:
        return b.primitive()
    if b.is_zero:
        return a.primitive()
    ca, cb = a.content(), b.content()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = a.pseudo_rem(b)
        a, b = b, (r.primitive() if not r.is_zero else r)
    g = a.primitive()
    c = math.gcd(ca, cb)
    return g * c if c > 1 else g


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Primitive squarefree factors ``(s_i, i)`` with ``p = c * prod s_i**i``.

    Musser's repeated-gcd scheme; only factors of positive degree are listed,
    so the content and unit ``c`` are dropped.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no squarefree decomposition")
    p = p.primitive()
    if p.degree < 1:
        return []
    a = poly_gcd(p, p.derivative()).primitive()
    b = exact_divide(p, a).primitive()
    out = []
    i = 1
    while b.degree > 0:
        c = poly_gcd(a, b).primitive()
        a = exact_divide(a, c)
        factor = exact_divide(b, c).primitive()
        if factor.degree > 0:
            out.append((factor, i))
        b = c
        i += 1
    return out


class LaurentPoly:
    """Integer Laurent polynomial ``q**valuation * (c_0 + c_1 q + ...)``."""

    __slots__ = ("valuation", "coeffs")

    def __init__(self, valuation: int, coeffs: Iterable[int]):
        cs = list(coeffs)
        if any(isinstance(c, bool) or not isinstance(c, int) for c in cs):
            raise TypeError("LaurentPoly coefficients must be integers")
        cs = list(_trim(cs))
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        cs = cs[lead:]
        object.__setattr__(self, "valuation", valuation + lead if cs else 0)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "LaurentPoly":
        return cls(k, [c])

    @classmethod
    def from_intpoly(cls, p: IntPoly) -> "LaurentPoly":
        return cls(0, p.coeffs)

    @classmethod
    def coerce(cls, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, IntPoly):
            return cls.from_intpoly(other)
        if isinstance(other, int) and not isinstance(other, bool):
            return cls(0, [other])
        raise TypeError(f"cannot interpret {other!r} as LaurentPoly")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def to_intpoly(self) -> IntPoly:
        if self.valuation < 0 and self.coeffs:
            raise ValueError("Laurent polynomial has negative powers")
        return IntPoly(self.coeffs).shift(self.valuation)

    def to_ratfunc(self) -> "RatFunc":
        if self.valuation >= 0:
            return RatFunc(self.to_intpoly())
        return RatFunc(IntPoly(self.coeffs), IntPoly.monomial(-self.valuation))

    def invert_variable(self) -> "LaurentPoly":
        """Substitute ``q -> 1/q``."""
        if not self.coeffs:
            return self
        top = self.valuation + len(self.coeffs) - 1
        return LaurentPoly(-top, self.coeffs[::-1])

    def _terms(self):
        return enumerate(self.coeffs, start=self.valuation)

    def __add__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        try:
            o = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero:
            return o
        if o.is_zero:
            return self
        lo = min(self.valuation, o.valuation)
        hi = max(self.valuation + len(self.coeffs), o.valuation + len(o.coeffs))
        out = [0] * (hi - lo)
        for e, c in self._terms():
            out[e - lo] += c
        for e, c in o._terms():
            out[e - lo] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.valuation, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        try:
            return self + (-LaurentPoly.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        try:
            o = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        prod = IntPoly(self.coeffs) * IntPoly(o.coeffs)
        return LaurentPoly(self.valuation + o.valuation, prod.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            o = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return (self.valuation, self.coeffs) == (o.valuation, o.coeffs)

    def __hash__(self):
        if self.valuation >= 0:
            return hash(self.to_intpoly())
        return hash(("LaurentPoly", self.valuation, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def __str__(self):
        return _format_terms(self._terms())


class RatFunc:
    """Quotient of integer polynomials in canonical form.

    Canonical means: no common polynomial factor, no common integer content,
    and a positive leading coefficient in the denominator.  Zero is ``0/1``.
    Equality is therefore a structural comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_laurent_or_poly(num)
        den = _as_laurent_or_poly(den)
        # clear negative powers by multiplying through
        shift = 0
        if isinstance(num, LaurentPoly) and num.valuation < 0:
            shift = max(shift, -num.valuation)
        if isinstance(den, LaurentPoly) and den.valuation < 0:
            shift = max(shift, -den.valuation)
        num = (LaurentPoly.coerce(num) * LaurentPoly.monomial(shift)).to_intpoly()
        den = (LaurentPoly.coerce(den) * LaurentPoly.monomial(shift)).to_intpoly()
        if den.is_zero:
            raise ZeroDivisionError("RatFunc with zero denominator")
        if num.is_zero:
            num, den = IntPoly(), IntPoly([1])
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = exact_divide(num, g)
                den = exact_divide(den, g)
            c = math.gcd(num.content(), den.content())
            if den.leading < 0:
                c = -c
            if c != 1:
                num = IntPoly(x // c for x in num.coeffs)
                den = IntPoly(x // c for x in den.coeffs)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def coerce(cls, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        return cls(other)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0 and self.den.coeffs == (1,)

    def __call__(self, x):
        """Evaluate at ``x``; integer or Fraction points give an exact Fraction."""
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {x!r}")
        n = self.num(x)
        if isinstance(n, (int, Fraction)) and isinstance(d, (int, Fraction)):
            return Fraction(n) / Fraction(d)
        return n / d

    def __add__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return ratfunc_div(self, o)

    def __rtruediv__(self, other):
        return ratfunc_div(RatFunc.coerce(other), self)

    def __eq__(self, other):
        try:
            o = RatFunc.coerce(other)
        except (TypeError, ZeroDivisionError):
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_polynomial:
            return hash(self.num)
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RatFunc({str(self)!r})"

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        n = str(self.num)
        if len(self.num) > 1:
            n = f"({n})"
        return f"{n}/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RatFunc":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(IntPoly.from_json(data["num"]), IntPoly.from_json(data["den"]))


Scalar = Union[int, IntPoly, LaurentPoly]


def _as_laurent_or_poly(x):
    if isinstance(x, (IntPoly, LaurentPoly)):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return IntPoly([x])
    if isinstance(x, RatFunc):
        raise TypeError("nest RatFunc values with arithmetic, not the constructor")
    raise TypeError(f"cannot build a RatFunc from {x!r}")


def ratfunc_div(a: RatFunc, b: RatFunc) -> RatFunc:
    """Quotient ``a / b`` in canonical form."""
    a, b = RatFunc.coerce(a), RatFunc.coerce(b)
    if b.is_zero:
        raise ZeroDivisionError("division by the zero rational function")
    return RatFunc(a.num * b.den, a.den * b.num)
