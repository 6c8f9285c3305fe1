"""Named property suites behind ``qr verify``.

Each suite sweeps one family of identities or radius bounds at desk-scale
limits and returns a :class:`SuiteResult`.  Sweeps over independent cases
can fan out across processes; results always come back in case order.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .cfrac import TheoremViolation, q_rational
from .metallic import (
    classical_A,
    discriminant_closed_form,
    discriminant_symbolic,
    f_poly,
    m_seq,
    m_tilde_seq,
    p_factor,
    p_factor_closed_form,
    UNIT_FACTOR,
)
from .qpoly import IntPoly, RatFunc, is_palindrome
from .qseries import metallic_series, stabilized_series
from .reference import REFERENCE_DECIMALS, REFERENCE_RADII
from .roots import (
    certify_annulus,
    check_inequality_lemmas,
    find_roots,
    fixed,
    metallic_radius,
    truncated_radius,
)

# desk-scale limits
RATIONAL_LIMIT = 60
PALINDROME_LIMIT = 50
TABLE_LIMIT = 48
TRUNCATED_N = 10
TRUNCATED_K = (3, 20)
TIGHT_N = (3, 4)
SERIES_N = 8
SERIES_ORDER = 24
RECURRENCE_N = 10
RECURRENCE_K = 20
RATIO_N = 6
RATIO_K = 12
TOLERANCE = mpmath.mpf("1e-10")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        bad = len(self.failures)
        verdict = "pass" if not bad else f"FAIL ({bad} of {len(self.checks)})"
        return f"{self.suite}: {len(self.checks)} checks, {verdict}"


def pmap(func, items, jobs: int = 1) -> list:
    """Order-preserving map, in worker processes when ``jobs > 1``."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * jobs))))


def _golden_radius():
    return metallic_radius(1).value


# ---------------------------------------------------------------------------
# exact identities

def _rational_case(pair) -> Check:
    r, s = pair
    try:
        q_rational(Fraction(r, s))
    except TheoremViolation as exc:
        return Check(f"{r}/{s}", False, str(exc))
    return Check(f"{r}/{s}", True)


def rational_pairs(limit: int = RATIONAL_LIMIT):
    return [(r, s) for s in range(1, limit + 1) for r in range(s + 1, limit + 1) if math.gcd(r, s) == 1]


def suite_theorem11(jobs: int = 1) -> SuiteResult:
    """Regular and negative q-expansions agree for coprime ``r/s > 1``, ``r, s <= 60``."""
    return SuiteResult("theorem11", pmap(_rational_case, rational_pairs(), jobs))


def suite_palindrome(jobs: int = 1) -> SuiteResult:
    res = SuiteResult("palindrome")
    for n in range(1, PALINDROME_LIMIT + 1):
        d = discriminant_symbolic(n)
        res.checks.append(Check(f"D_{n} palindromic", is_palindrome(d)))
        res.checks.append(Check(f"P_{n} palindromic", is_palindrome(p_factor_closed_form(n))))
        res.checks.append(Check(f"f(q,{n}) palindromic", is_palindrome(f_poly(n))))
    return res


def suite_factor(jobs: int = 1) -> SuiteResult:
    res = SuiteResult("factor")
    for n in range(1, PALINDROME_LIMIT + 1):
        d = discriminant_symbolic(n)
        res.checks.append(Check(f"closed form D_{n} = b^2 + 4q", discriminant_closed_form(n) == d))
        res.checks.append(Check(f"D_{n} = (1-q+q^2) P_{n}", UNIT_FACTOR * p_factor_closed_form(n) == d))
        res.checks.append(Check(f"D_{n}(1) = n^2 + 4", d(1) == n * n + 4))
        half = d.coeffs[: len(d.coeffs) // 2]
        middle = d.coeffs[len(d.coeffs) // 2]
        res.checks.append(Check(f"D_{n} unit-circle criterion", max(abs(c) for c in half) >= abs(middle)))
    return res


def suite_recurrences(jobs: int = 1) -> SuiteResult:
    """q-deformed recurrences, their classical limits, and the convergent identity."""
    res = SuiteResult("recurrences")
    for n in range(1, RECURRENCE_N + 1):
        f, q2n = f_poly(n), IntPoly.monomial(2 * n)
        for k in range(0, RECURRENCE_K + 1):
            a = classical_A(n, k)
            res.checks.append(Check(f"A_{k}({n}) four-term", k < 4 or a == (n * n + 2) * classical_A(n, k - 2)
                                    - classical_A(n, k - 4)))
            res.checks.append(Check(f"M_{k}({n})(1) = A_{k}", m_seq(n, k)(1) == a))
            res.checks.append(Check(f"M~_{k}({n})(1) = A_{k}", m_tilde_seq(n, k)(1) == a))
            if k >= 5:
                ok = m_seq(n, k) == f * m_seq(n, k - 2) - q2n * m_seq(n, k - 4)
                res.checks.append(Check(f"M_{k}({n}) = f M_{k-2} - q^2n M_{k-4}", ok))
    for n in range(1, RATIO_N + 1):
        for k in range(1, RATIO_K + 1):
            x = Fraction(classical_A(n, k + 1), classical_A(n, k))
            if x <= 1:
                continue
            ok = q_rational(x) == RatFunc(m_tilde_seq(n, k + 1), m_seq(n, k))
            res.checks.append(Check(f"[A_{k+1}/A_{k}]_q = M~_{k+1}/M_{k} (n={n})", ok))
    return res


# ---------------------------------------------------------------------------
# radii

def _table_row(n: int) -> tuple[int, str]:
    return n, fixed(metallic_radius(n).value, REFERENCE_DECIMALS)


def suite_table1(jobs: int = 1) -> SuiteResult:
    res = SuiteResult("table1")
    for n, got in pmap(_table_row, range(1, TABLE_LIMIT + 1), jobs):
        want = REFERENCE_RADII[n]
        res.checks.append(Check(f"R_({n})", got == want, f"computed {got}, reference {want}"))
    return res


def _p_annulus(n: int) -> tuple[bool, bool, str]:
    R1 = _golden_radius()
    r = metallic_radius(n)
    inner = (3 - mpmath.sqrt(5)) / 2 - TOLERANCE
    outer = (3 + mpmath.sqrt(5)) / 2 + TOLERANCE
    return r.value >= R1 - TOLERANCE, certify_annulus(p_factor(n), inner, outer), mpmath.nstr(r.value, 12)


def suite_thm12(jobs: int = 1) -> SuiteResult:
    res = SuiteResult("thm12")
    out = pmap(_p_annulus, range(1, TABLE_LIMIT + 1), jobs)
    for n, (bound, annulus, value) in zip(range(1, TABLE_LIMIT + 1), out):
        if n >= 3:
            res.checks.append(Check(f"R_({n}) >= R_(1)", bound, value))
        res.checks.append(Check(f"zeros of P_{n} in A_1", annulus))
    return res


def _truncated_case(nk) -> str:
    n, k = nk
    r = truncated_radius(n, k)
    return "inf" if r.is_infinite else mpmath.nstr(r.value, 20)


def suite_thm13(jobs: int = 1) -> SuiteResult:
    res = SuiteResult("thm13")
    R1 = _golden_radius()
    cases = [(n, k) for n in range(1, TRUNCATED_N + 1) for k in range(TRUNCATED_K[0], TRUNCATED_K[1] + 1)]
    for (n, k), value in zip(cases, pmap(_truncated_case, cases, jobs)):
        ok = value == "inf" or mpmath.mpf(value) >= R1 - TOLERANCE
        res.checks.append(Check(f"radius of M_{k}({n}) >= R_(1)", ok, value))
    return res


def _tight_case(nk) -> tuple[bool, bool, bool, str]:
    n, k = nk
    Rn = metallic_radius(n)
    r = truncated_radius(n, k)
    above = r.is_infinite or r.value - r.error > Rn.value + Rn.error
    outer = 1 / Rn.value
    in_m = certify_annulus(m_seq(n, k), Rn.value, outer)
    t = m_tilde_seq(n, k)
    in_t = t.degree < 1 or certify_annulus(t, Rn.value, outer)
    return above, in_m, in_t, "inf" if r.is_infinite else mpmath.nstr(r.value - Rn.value, 8)


def suite_thm14(jobs: int = 1) -> SuiteResult:
    res = SuiteResult("thm14")
    cases = [(n, k) for n in TIGHT_N for k in range(TRUNCATED_K[0], TRUNCATED_K[1] + 1)]
    for (n, k), (above, in_m, in_t, margin) in zip(cases, pmap(_tight_case, cases, jobs)):
        res.checks.append(Check(f"radius of M_{k}({n}) > R_({n})", above, f"margin {margin}"))
        res.checks.append(Check(f"zeros of M_{k}({n}) in A_{n}", in_m))
        res.checks.append(Check(f"zeros of M~_{k}({n}) in A_{n}", in_t))
    return res


def suite_lemmas(jobs: int = 1) -> SuiteResult:
    """Point inequalities at ``-R``; the sampled circle minima are reported only."""
    res = SuiteResult("lemmas")
    for n in range(1, TABLE_LIMIT + 1):
        report = check_inequality_lemmas(n)
        c = report["f(-R1) > 1 - R1"]
        res.checks.append(Check(f"n={n}: {c.name}", c.holds, f"margin {mpmath.nstr(c.margin, 6)}"))
        if n in TIGHT_N:
            c = report[f"f(-R{n}) > sum R{n}^t, t=2..{2 * n - 2}"]
            res.checks.append(Check(f"n={n}: {c.name}", c.holds, f"margin {mpmath.nstr(c.margin, 6)}"))
    return res


def _series_case(n: int) -> Check:
    a = stabilized_series(n, SERIES_ORDER)
    b = metallic_series(n, SERIES_ORDER)
    return Check(f"n={n} to order {SERIES_ORDER}", a == b and a.is_integral(),
                 ", ".join(str(c) for c in b.coeffs[:8]))


def suite_series(jobs: int = 1) -> SuiteResult:
    return SuiteResult("series", pmap(_series_case, range(1, SERIES_N + 1), jobs))


SUITES = {
    "theorem11": suite_theorem11,
    "palindrome": suite_palindrome,
    "factor": suite_factor,
    "recurrences": suite_recurrences,
    "table1": suite_table1,
    "thm12": suite_thm12,
    "thm13": suite_thm13,
    "thm14": suite_thm14,
    "lemmas": suite_lemmas,
    "series": suite_series,
}


def run_suites(name: str, jobs: int = 1) -> list[SuiteResult]:
    if name == "all":
        return [suite(jobs) for suite in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return [SUITES[name](jobs)]
