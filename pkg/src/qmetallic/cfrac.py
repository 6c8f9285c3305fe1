"""Continued fractions of rationals > 1 and their q-deformations.

Regular expansions are normalized to even length, negative (minus-sign)
expansions have every term >= 2.  Both q-deformations are evaluated
innermost-first with exact :class:`~qmetallic.qpoly.RatFunc` intermediates.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .qpoly import IntPoly, LaurentPoly, RatFunc, euler_q_integer

__all__ = [
    "NegativeCF",
    "RegularCF",
    "eval_negative",
    "eval_q_negative",
    "eval_q_regular",
    "eval_regular",
    "negative_expand",
    "q_rational",
    "regular_expand",
]


@dataclass(frozen=True)
class RegularCF:
    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(int(a) for a in self.terms))
        if not self.terms or len(self.terms) % 2:
            raise ValueError(f"regular expansion must have even length, got {list(self.terms)}")
        if any(a < 1 for a in self.terms):
            raise ValueError(f"regular terms must be >= 1, got {list(self.terms)}")

    def to_json(self) -> dict:
        return {"kind": "regular", "terms": list(self.terms)}

    def __str__(self):
        return "[" + ", ".join(map(str, self.terms)) + "]"


@dataclass(frozen=True)
class NegativeCF:
    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(int(c) for c in self.terms))
        if not self.terms:
            raise ValueError("negative expansion needs at least one term")
        if any(c < 2 for c in self.terms):
            raise ValueError(f"negative terms must be >= 2, got {list(self.terms)}")

    def to_json(self) -> dict:
        return {"kind": "negative", "terms": list(self.terms)}

    def __str__(self):
        return "[[" + ", ".join(map(str, self.terms)) + "]]"


def cf_from_json(data) -> RegularCF | NegativeCF:
    if isinstance(data, str):
        data = json.loads(data)
    kind = data.get("kind")
    if kind == "regular":
        return RegularCF(tuple(data["terms"]))
    if kind == "negative":
        return NegativeCF(tuple(data["terms"]))
    raise ValueError(f"unknown continued fraction kind {kind!r}")


def _as_rational(x) -> Fraction:
    if isinstance(x, tuple):
        r, s = x
        x = Fraction(r, s)
    elif isinstance(x, Rational):
        x = Fraction(x)
    else:
        raise TypeError(f"expected an exact rational, got {x!r}")
    if x <= 1:
        raise ValueError(f"expansions are defined for rationals > 1, got {x}")
    return x


def regular_expand(x) -> RegularCF:
    """Euclidean expansion ``[a_1, ..., a_2m]`` of ``x > 1``.

    An odd-length expansion is made even by rewriting its tail as
    ``a_n - 1, 1``.

    >>> regular_expand(Fraction(5, 2))
    RegularCF(terms=(2, 2))
    >>> regular_expand(2)
    RegularCF(terms=(1, 1))
    """
    x = _as_rational(x)
    r, s = x.numerator, x.denominator
    terms = []
    while s:
        a, rem = divmod(r, s)
        terms.append(a)
        r, s = s, rem
    if len(terms) % 2:
        terms[-1] -= 1
        terms.append(1)
    return RegularCF(tuple(terms))


def negative_expand(x) -> NegativeCF:
    """Minus-sign expansion ``[[c_1, ..., c_k]]`` of ``x > 1``, all ``c_j >= 2``.

    >>> negative_expand(Fraction(7, 5))
    NegativeCF(terms=(2, 2, 3))
    """
    x = _as_rational(x)
    r, s = x.numerator, x.denominator
    terms = []
    while s:
        c = -(-r // s)  # ceil
        terms.append(c)
        # x = c - 1/x'  =>  x' = s / (c s - r)
        r, s = s, c * s - r
    return NegativeCF(tuple(terms))


def eval_regular(cf: RegularCF) -> Fraction:
    """Classical value of a regular continued fraction."""
    value = Fraction(cf.terms[-1])
    for a in reversed(cf.terms[:-1]):
        value = a + 1 / value
    return value


def eval_negative(cf: NegativeCF) -> Fraction:
    """Classical value of a negative continued fraction."""
    value = Fraction(cf.terms[-1])
    for c in reversed(cf.terms[:-1]):
        value = c - 1 / value
    return value


def _q_int_inverted(a: int) -> LaurentPoly:
    # [a]_{q^{-1}} = 1 + q^{-1} + ... + q^{1-a}
    return LaurentPoly(1 - a, [1] * a)


def eval_q_regular(cf: RegularCF) -> RatFunc:
    """q-deformed regular continued fraction.

    Odd levels contribute ``[a]_q + q^a / (...)``, even levels
    ``[a]_{q^-1} + q^-a / (...)``; the innermost term is ``[a_2m]_{q^-1}``.
    """
    terms = cf.terms
    value = _q_int_inverted(terms[-1]).to_ratfunc()
    for i in range(len(terms) - 2, -1, -1):
        a = terms[i]
        if i % 2 == 0:
            head = RatFunc(euler_q_integer(a))
            weight = RatFunc(IntPoly.monomial(a))
        else:
            head = _q_int_inverted(a).to_ratfunc()
            weight = LaurentPoly.monomial(-a).to_ratfunc()
        value = head + weight / value
    return value


def eval_q_negative(cf: NegativeCF) -> RatFunc:
    """q-deformed negative continued fraction, ``[c]_q - q^(c-1) / (...)`` per level."""
    terms = cf.terms
    value = RatFunc(euler_q_integer(terms[-1]))
    for c in reversed(terms[:-1]):
        value = RatFunc(euler_q_integer(c)) - RatFunc(IntPoly.monomial(c - 1)) / value
    return value


class TheoremViolation(AssertionError):
    """The two q-deformations of one rational disagreed."""


def q_rational(x) -> RatFunc:
    """``[r/s]_q`` for a rational ``r/s > 1``.

    Evaluates both the regular and the negative q-expansion and requires them
    to coincide exactly.  Accepts a Fraction, an int, or an ``(r, s)`` pair.

    >>> q_rational(Fraction(5, 2))
    RatFunc('(1 + 2q + q^2 + q^3)/(1 + q)')
    """
    x = _as_rational(x)
    via_regular = eval_q_regular(regular_expand(x))
    via_negative = eval_q_negative(negative_expand(x))
    if via_regular != via_negative:
        raise TheoremViolation(
            f"q-expansions of {x} disagree: {via_regular} != {via_negative}")
    return via_regular
