"""Certified complex roots of integer polynomials and radius computations.

Roots come from Aberth-Ehrlich simultaneous iteration: a float64 pass to get
close, then refinement in gmpy2 multiprecision.  Every returned root carries
an error radius from Smith's inclusion theorem (the disks
``|z - z_i| <= d |p(z_i)| / |a_d prod_{j != i} (z_i - z_j)|`` cover all
zeros, and a connected group of ``m`` disks holds exactly ``m`` zeros).

:func:`count_zeros_in_disk` is an independent oracle: it winds the image of a
circle around the origin, with steps controlled by a Taylor bound so no
half-turn can be missed.  It does not use the root finder.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from functools import lru_cache
from typing import Iterator, Sequence

import gmpy2
import mpmath
import numpy as np
from scipy.optimize import minimize_scalar

from .metallic import f_poly, m_seq, m_tilde_seq, p_factor
from .qpoly import IntPoly, squarefree_decomposition

__all__ = [
    "ComplexRootSet",
    "ConvergenceError",
    "InequalityCheck",
    "InequalityReport",
    "Radius",
    "RootTooCloseError",
    "certify_annulus",
    "check_inequality_lemmas",
    "count_zeros_in_disk",
    "discriminant_roots",
    "find_roots",
    "metallic_radius",
    "min_modulus",
    "product_residual",
    "truncated_radius",
]

DEFAULT_DIGITS = 64
MAX_DIGITS = 1024
_LOG2_10 = math.log2(10)
_GUARD_DIGITS = 24


class ConvergenceError(ArithmeticError):
    """Root iteration did not converge; ``diagnostics`` has the details."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class RootTooCloseError(ArithmeticError):
    """A zero lies too close to the counting contour to decide the winding."""

    def __init__(self, modulus: float, detail: str = ""):
        self.modulus = modulus
        super().__init__(f"root too close to the contour |q| = {modulus!r}" + (f": {detail}" if detail else ""))


def _to_mpf(x: gmpy2.mpfr) -> mpmath.mpf:
    if gmpy2.is_zero(x):
        return mpmath.mpf(0)
    if gmpy2.is_infinite(x):
        return mpmath.inf if x > 0 else -mpmath.inf
    man, exp = x.as_mantissa_exp()
    return mpmath.mpf((int(man), int(exp)))


def _to_mpc(z: gmpy2.mpc) -> mpmath.mpc:
    return mpmath.mpc(_to_mpf(z.real), _to_mpf(z.imag))


def _bits(digits: int) -> int:
    return int(math.ceil((digits + _GUARD_DIGITS) * _LOG2_10))


def _certified_digits(err, scale, cap: int) -> int:
    if err == 0:
        return cap
    if not mpmath.isfinite(err):
        return 0
    rel = err / max(mpmath.mpf(1), scale)
    return max(0, min(cap, int(mpmath.floor(-mpmath.log10(rel)))))


def fixed(value, decimals: int) -> str:
    """Round a real to exactly ``decimals`` places (half-even) as a string."""
    with mpmath.workdps(decimals + 30):
        text = mpmath.nstr(mpmath.mpf(value), decimals + 25, strip_zeros=False,
                           min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
    with localcontext() as ctx:
        ctx.prec = decimals + 40
        return str(Decimal(text).quantize(Decimal(1).scaleb(-decimals), rounding=ROUND_HALF_EVEN))


@dataclass(frozen=True)
class ComplexRootSet:
    """Zeros of a polynomial, with multiplicity, each with an error radius."""

    roots: tuple
    errors: tuple
    source_degree: int
    working_digits: int = DEFAULT_DIGITS

    def __post_init__(self):
        if len(self.roots) != self.source_degree or len(self.errors) != self.source_degree:
            raise ValueError("root count must equal the polynomial degree")

    def __len__(self):
        return len(self.roots)

    def __iter__(self) -> Iterator[tuple]:
        return iter(zip(self.roots, self.errors))

    def moduli(self) -> list:
        with mpmath.workprec(_bits(self.working_digits)):
            return [abs(z) for z in self.roots]

    @property
    def max_error(self):
        return max(self.errors, default=mpmath.mpf(0))

    @property
    def certified_digits(self) -> int:
        with mpmath.workdps(self.working_digits + 10):
            return min((_certified_digits(e, abs(z), self.working_digits) for z, e in self),
                       default=self.working_digits)

    def to_json(self) -> list[dict]:
        digits = self.working_digits
        return [
            {"re": mpmath.nstr(z.real, digits), "im": mpmath.nstr(z.imag, digits),
             "err": mpmath.nstr(e, 5)}
            for z, e in self
        ]


@dataclass(frozen=True)
class Radius:
    """A root-modulus radius, or the infinite radius of a pole-free function."""

    value: mpmath.mpf | None
    error: mpmath.mpf = field(default_factory=lambda: mpmath.mpf(0))
    digits: int = 0

    @classmethod
    def infinite(cls) -> "Radius":
        return cls(value=None, error=mpmath.mpf(0), digits=0)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __float__(self):
        return math.inf if self.value is None else float(self.value)

    def format(self, decimals: int) -> str:
        if self.is_infinite:
            return "inf"
        if decimals > self.digits:
            raise ValueError(f"only {self.digits} digits are certified, {decimals} requested")
        return fixed(self.value, decimals)

    def to_json(self) -> dict:
        if self.is_infinite:
            return {"value": None, "infinite": True, "digits": 0}
        return {"value": mpmath.nstr(self.value, self.digits), "digits": self.digits}


# ---------------------------------------------------------------------------
# Aberth-Ehrlich iteration

def _float_coeffs(coeffs: Sequence[int]) -> np.ndarray:
    top = max(abs(c) for c in coeffs).bit_length()
    shift = max(0, top - 900)
    return np.array([float(c >> shift) if c >= 0 else -float((-c) >> shift) for c in coeffs])


def _initial_guesses(coeffs: Sequence[int]) -> np.ndarray:
    d = len(coeffs) - 1
    lead, const = abs(coeffs[-1]), abs(coeffs[0])
    upper = 1 + max(abs(c) for c in coeffs[:-1]) / lead
    lower = 1 / (1 + max(abs(c) for c in coeffs[1:]) / const)
    rho = math.sqrt(upper * lower)
    # irrational offset breaks the conjugate symmetry of real polynomials
    offset = 2 * math.pi * (math.sqrt(5) - 1) / 2 / d + 0.4
    return rho * np.exp(1j * (2 * math.pi * np.arange(d) / d + offset))


def _float_aberth(coeffs: Sequence[int], maxiter: int = 500) -> np.ndarray:
    a = _float_coeffs(coeffs)[::-1]  # descending
    da = (a[:-1] * np.arange(len(a) - 1, 0, -1))
    z = _initial_guesses(coeffs)
    d = len(z)
    with np.errstate(all="ignore"):
        for _ in range(maxiter):
            p = np.polyval(a, z)
            dp = np.polyval(da, z)
            ratio = p / dp
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            s = (1 / diff).sum(axis=1)
            w = ratio / (1 - ratio * s)
            bad = ~np.isfinite(w)
            if bad.any():
                w[bad] = 0
            z = z - w
            if not np.isfinite(z).all():
                z = _initial_guesses(coeffs)
                break
            if np.max(np.abs(w) / np.maximum(1, np.abs(z))) < 1e-14:
                break
    if d > 1:
        # separate exact coincidences, which the Aberth correction cannot split
        order = np.argsort(z.real + 1e-3 * z.imag)
        zs = z[order]
        for i in range(1, d):
            if zs[i] == zs[i - 1]:
                zs[i] += 1e-8 * (1 + 1j) * (1 + abs(zs[i]))
        z[order] = zs
    return z


def _horner_pair(a, z):
    p = a[-1]
    dp = 0
    for c in a[-2::-1]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _mp_aberth(coeffs: Sequence[int], start: np.ndarray, digits: int, maxiter: int = 200):
    bits = _bits(digits)
    with gmpy2.context(gmpy2.get_context(), precision=bits):
        a = [gmpy2.mpfr(c) for c in coeffs]
        z = [gmpy2.mpc(complex(x)) for x in start]
        d = len(z)
        done = gmpy2.mpfr(10) ** (-(digits + _GUARD_DIGITS // 2))
        # below this a correction that stops shrinking is rounding noise
        noisy = gmpy2.mpfr(10) ** (-(digits // 2))
        last = [None] * d
        frozen = [False] * d
        for it in range(1, maxiter + 1):
            worst = gmpy2.mpfr(0)
            for i in range(d):
                if frozen[i]:
                    continue
                zi = z[i]
                p, dp = _horner_pair(a, zi)
                if gmpy2.is_zero(p):
                    frozen[i] = True
                    continue
                s = gmpy2.mpc(0)
                for j in range(d):
                    if j != i:
                        s += 1 / (zi - z[j])
                ratio = p / dp
                w = ratio / (1 - ratio * s)
                z[i] = zi - w
                rel = abs(w) / max(gmpy2.mpfr(1), abs(z[i]))
                if rel < done or (rel < noisy and last[i] is not None and rel > last[i] / 4):
                    frozen[i] = True
                last[i] = rel
                worst = max(worst, rel)
            if all(frozen):
                return z, it
        raise ConvergenceError(
            f"Aberth iteration did not converge in {maxiter} sweeps at {digits} digits",
            {"digits": digits, "sweeps": maxiter, "last_correction": float(worst), "degree": d,
             "unconverged": frozen.count(False)},
        )


def _inclusion_errors(coeffs: Sequence[int], z: list, digits: int) -> list:
    """Smith inclusion radii, widened to cluster diameters where disks overlap."""
    bits = _bits(digits)
    with gmpy2.context(gmpy2.get_context(), precision=bits):
        d = len(z)
        a = [gmpy2.mpfr(c) for c in coeffs]
        absa = [abs(c) for c in a]
        lead = absa[-1]
        gamma = gmpy2.mpfr(4 * d + 4) * gmpy2.mpfr(2) ** (-bits)
        radii = []
        for i in range(d):
            p, _ = _horner_pair(a, z[i])
            r = abs(z[i])
            majorant = absa[-1]
            for c in absa[-2::-1]:
                majorant = majorant * r + c
            prod = gmpy2.mpfr(1)
            for j in range(d):
                if j != i:
                    prod *= abs(z[i] - z[j])
            if gmpy2.is_zero(prod):
                radii.append(gmpy2.inf())
            else:
                radii.append(d * (abs(p) + gamma * majorant) / (lead * prod) * (1 + 2 * gamma))
        # union of overlapping disks
        parent = list(range(d))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(d):
            for j in range(i + 1, d):
                if abs(z[i] - z[j]) <= radii[i] + radii[j]:
                    parent[find(i)] = find(j)
        groups: dict[int, list[int]] = {}
        for i in range(d):
            groups.setdefault(find(i), []).append(i)
        errors = list(radii)
        for members in groups.values():
            if len(members) > 1:
                for i in members:
                    errors[i] = max(abs(z[i] - z[j]) + radii[j] for j in members)
        return [_to_mpf(e) for e in errors]


def _roots_at(coeffs: list[int], digits: int):
    start = _float_aberth(coeffs)
    z, _ = _mp_aberth(coeffs, start, digits)
    errs = _inclusion_errors(coeffs, z, digits)
    # keep every bit of the iterate; the inclusion radii refer to it exactly
    with mpmath.workprec(_bits(digits)):
        return [_to_mpc(x) for x in z], errs


def find_roots(p: IntPoly, digits: int = DEFAULT_DIGITS) -> ComplexRootSet:
    """All complex zeros of ``p`` to ``digits`` certified digits.

    Exact zeros at the origin are split off first, then ``p`` is reduced to
    exact squarefree factors so the iteration only meets simple roots; each
    factor's roots are repeated by multiplicity.  Working precision starts at
    ``max(64, digits)`` decimal digits and doubles (up to 1024) until the
    inclusion radii certify the request.
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("find_roots needs a polynomial of degree >= 1")
    return _find_roots(p, int(digits))


@lru_cache(maxsize=1024)
def _find_roots(p: IntPoly, digits: int) -> ComplexRootSet:
    v = p.valuation
    factors = squarefree_decomposition(IntPoly(p.coeffs[v:])) if p.degree > v else []
    work = max(DEFAULT_DIGITS, digits)
    failures = []
    while work <= MAX_DIGITS:
        with mpmath.workdps(work + 10):
            roots = [mpmath.mpc(0)] * v
            errors = [mpmath.mpf(0)] * v
            try:
                for factor, mult in factors:
                    zs, es = _roots_at(list(factor.coeffs), work)
                    roots += [z for z in zs for _ in range(mult)]
                    errors += [e for e in es for _ in range(mult)]
            except ConvergenceError as exc:
                failures.append(exc.diagnostics)
                work *= 2
                continue
            rs = ComplexRootSet(tuple(roots), tuple(errors), p.degree, work)
            if rs.certified_digits >= digits:
                return rs
            failures.append({"digits": work, "certified": rs.certified_digits})
        work *= 2
    raise ConvergenceError(f"could not certify {digits} digits for the roots of {p}",
                           {"attempts": failures})


def min_modulus(rs: ComplexRootSet) -> Radius:
    """Smallest root modulus with the error propagated from the inclusion radii."""
    if not len(rs):
        raise ValueError("empty root set")
    with mpmath.workdps(rs.working_digits + 10):
        mods = [abs(z) for z in rs.roots]
        value = min(mods)
        # the true minimum lies in [min(m_i - e_i), min(m_i + e_i)]
        err = max(e - (m - value) for m, e in zip(mods, rs.errors))
        return Radius(value=+value, error=err,
                      digits=_certified_digits(err, mpmath.mpf(1), rs.working_digits))


def _unit_factor_roots(work: int):
    with mpmath.workdps(work + 10):
        w = mpmath.exp(1j * mpmath.pi / 3)
        return [w, mpmath.conj(w)], [mpmath.mpf(2) ** (-_bits(work))] * 2


def discriminant_roots(n: int, digits: int = DEFAULT_DIGITS) -> ComplexRootSet:
    """Zeros of the n-th metallic discriminant.

    The factor ``1 - q + q^2`` is split off exactly and its sixth roots of
    unity are appended analytically; only ``P_n`` is solved numerically.
    """
    rs = find_roots(p_factor(n), digits)
    extra, extra_err = _unit_factor_roots(rs.working_digits)
    return ComplexRootSet(rs.roots + tuple(extra), rs.errors + tuple(extra_err),
                          rs.source_degree + 2, rs.working_digits)


@lru_cache(maxsize=None)
def metallic_radius(n: int, digits: int = DEFAULT_DIGITS) -> Radius:
    """Radius of convergence of ``[n, n, n, ...]_q``: smallest zero modulus of ``P_n``."""
    return min_modulus(find_roots(p_factor(n), digits))


@lru_cache(maxsize=None)
def truncated_radius(n: int, k: int, digits: int = DEFAULT_DIGITS) -> Radius:
    """Radius of convergence of ``[n, ..., n]_q`` (k terms), set by the poles ``M_k(n) = 0``.

    A constant denominator gives :meth:`Radius.infinite`.
    """
    if k < 1:
        raise ValueError("truncated expansions need k >= 1")
    m = m_seq(n, k)
    if m.degree < 1:
        return Radius.infinite()
    return min_modulus(find_roots(m, digits))


def certify_annulus(p: IntPoly, inner, outer, *, slack=0, digits: int = DEFAULT_DIGITS,
                    roots: ComplexRootSet | None = None) -> bool:
    """True iff every zero modulus lies in ``[inner - eps, outer + eps]``.

    ``eps`` is the zero's certified error plus the optional ``slack``.
    """
    rs = roots if roots is not None else find_roots(p, digits)
    with mpmath.workdps(rs.working_digits + 10):
        inner, outer, slack = mpmath.mpf(inner), mpmath.mpf(outer), mpmath.mpf(slack)
        for z, e in rs:
            m = abs(z)
            if m < inner - e - slack or m > outer + e + slack:
                return False
    return True


def product_residual(p: IntPoly, rs: ComplexRootSet):
    """Compare ``prod (q - z_i)`` with ``p / lc(p)`` coefficient by coefficient.

    Returns ``(residual, bound)``: the largest coefficient discrepancy and the
    majorant bound implied by the certified error radii.
    """
    with mpmath.workprec(_bits(rs.working_digits) + 32):
        prod = [mpmath.mpc(1)]
        upper = [mpmath.mpf(1)]
        base = [mpmath.mpf(1)]
        for z, e in rs:
            prod = [mpmath.mpc(0)] + prod
            for t in range(len(prod) - 1):
                prod[t] -= z * prod[t + 1]
            m = abs(z)
            upper = [mpmath.mpf(0)] + upper
            base = [mpmath.mpf(0)] + base
            for t in range(len(upper) - 1):
                upper[t] += (m + e) * upper[t + 1]
                base[t] += m * base[t + 1]
        lead = mpmath.mpf(p.leading)
        residual = max(abs(prod[t] - p[t] / lead) for t in range(len(prod)))
        bound = max(u - b for u, b in zip(upper, base))
        # rounding in the expansion itself
        bound += max(upper) * mpmath.mpf(2) ** (-_bits(rs.working_digits) + 16)
        return residual, bound


# ---------------------------------------------------------------------------
# Argument-principle oracle

class _NeedPrecision(Exception):
    pass


_TAYLOR = 6


def _scaled_coeffs(coeffs: Sequence[int]) -> tuple[np.ndarray, int]:
    top = max(abs(c) for c in coeffs).bit_length()
    shift = max(0, top - 900)
    return _float_coeffs(coeffs), shift


def _theta_derivatives(coeffs, shift, r, theta, bits) -> np.ndarray:
    """Rows j = 0..TAYLOR of ``sum c_t t^j z^t`` at ``z = r e^(i theta)``.

    Up to a unit factor ``i^j`` these are the theta-derivatives of
    ``p(r e^(i theta))``.
    """
    t = np.arange(len(coeffs), dtype=float)
    if bits <= 53:
        c = _float_coeffs(coeffs)[::-1]
        z = r * np.exp(1j * theta)
        return np.array([np.polyval(c * t[::-1] ** j, z) for j in range(_TAYLOR + 1)])
    out = np.empty((_TAYLOR + 1, len(theta)), dtype=complex)
    with gmpy2.context(gmpy2.get_context(), precision=bits):
        unit = gmpy2.mpfr(2) ** -shift
        # descending coefficient rows c_t t^j
        rows = [[gmpy2.mpfr(c * e ** j) * unit for e, c in enumerate(coeffs)][::-1]
                for j in range(_TAYLOR + 1)]
        rr = gmpy2.mpfr(r)
        for k, th in enumerate(theta):
            th = gmpy2.mpfr(float(th))
            z = gmpy2.mpc(rr * gmpy2.cos(th), rr * gmpy2.sin(th))
            for j, row in enumerate(rows):
                acc = gmpy2.mpc(0)
                for w in row:
                    acc = acc * z + w
                out[j, k] = complex(acc)
    return out


def _winding(coeffs: list[int], r: float, bits: int, max_rounds: int, max_samples: int) -> int:
    d = len(coeffs) - 1
    c, _ = _scaled_coeffs(coeffs)
    t = np.arange(d + 1, dtype=float)
    absc = np.abs(c)
    # majorants sum |c_t| t^j r^t for j = 0..TAYLOR+1
    major = np.array([float(np.sum(absc * t ** j * r ** t)) for j in range(_TAYLOR + 2)])
    unit = 2.0 ** -bits if bits > 53 else np.finfo(float).eps
    eps = np.finfo(float).eps
    # Horner or power-sum rounding plus point rounding, per derivative order
    eval_err = (8 * d + 8) * unit * (major[:-1] + major[1:])
    fact = np.array([math.factorial(j) for j in range(_TAYLOR + 2)], dtype=float)

    theta = np.linspace(0.0, 2 * math.pi, max(64, 8 * (d + 1)) + 1)
    vals = _theta_derivatives(coeffs, _scaled_coeffs(coeffs)[1], r, theta, bits)
    vals[:, -1] = vals[:, 0]
    for _ in range(max_rounds):
        mags = np.abs(vals)
        err = eval_err[:, None] + 2 * eps * mags
        if np.any(mags[0] <= 4 * err[0]):
            raise _NeedPrecision
        h = np.diff(theta)
        bound = major[-1] * h ** (_TAYLOR + 1) / fact[-1]
        for j in range(1, _TAYLOR + 1):
            bound = bound + (mags[j, :-1] + err[j, :-1]) * h ** j / fact[j]
        unsafe = bound >= mags[0, :-1] - err[0, :-1]
        if not unsafe.any():
            turns = np.angle(vals[0, 1:] / vals[0, :-1]).sum() / (2 * math.pi)
            count = int(round(turns))
            if abs(turns - count) > 1e-6:
                raise RootTooCloseError(r, f"winding {turns} is not an integer")
            return count
        idx = np.nonzero(unsafe)[0]
        if np.min(h[unsafe]) < 1e-12 or len(theta) + len(idx) > max_samples:
            raise RootTooCloseError(r, "contour sampling did not resolve the phase")
        mids = 0.5 * (theta[idx] + theta[idx + 1])
        new_vals = _theta_derivatives(coeffs, _scaled_coeffs(coeffs)[1], r, mids, bits)
        theta = np.insert(theta, idx + 1, mids)
        vals = np.insert(vals, idx + 1, new_vals, axis=1)
    raise RootTooCloseError(r, f"no safe sampling after {max_rounds} refinements")


def count_zeros_in_disk(p: IntPoly, radius, *, max_rounds: int = 60, max_bits: int = 2048,
                        max_samples: int = 200_000) -> int:
    """Number of zeros of ``p`` in ``|q| < radius``, with multiplicity.

    Samples ``g(theta) = p(r e^(i theta))`` and sums the phase increments.
    An arc from ``theta_a`` of length ``h`` is accepted only when a Taylor
    bound (exact low-order terms at ``theta_a``, a coefficient majorant for
    the remainder) shows ``|g - g(theta_a)| < |g(theta_a)|`` on all of it.
    Such an arc turns by less than a half-turn, so no winding is missed.
    Other arcs are bisected.  Samples are taken in float64 and, when
    cancellation makes that inconclusive, at doubling multiprecision.
    For ``radius > 1`` the reversed polynomial is counted in ``1/radius``.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no finite zero count")
    r = float(radius)
    if not r > 0:
        raise ValueError("radius must be positive")
    if p.degree == 0:
        return 0
    if r > 1:
        # zeros with |q| >= r are the zeros of q^d p(1/q) in |w| <= 1/r
        return int(p.degree) - count_zeros_in_disk(
            p.reverse(), 1 / r, max_rounds=max_rounds, max_bits=max_bits, max_samples=max_samples)
    coeffs = list(p.coeffs)
    bits = 53
    while bits <= max_bits:
        try:
            return _winding(coeffs, r, bits, max_rounds, max_samples)
        except _NeedPrecision:
            bits = 128 if bits == 53 else 2 * bits
    raise RootTooCloseError(r, f"|p| indistinguishable from 0 at {max_bits} bits")


# ---------------------------------------------------------------------------
# Inequality checks used by the zero-free-disk arguments

SAMPLES = 4096
SAFETY = 1e-3


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    lhs: mpmath.mpf
    rhs: mpmath.mpf
    sampled: bool

    @property
    def margin(self):
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        if self.sampled:
            return self.margin > SAFETY * abs(self.rhs)
        return self.margin > 0

    def to_json(self) -> dict:
        return {"name": self.name, "lhs": mpmath.nstr(self.lhs, 15), "rhs": mpmath.nstr(self.rhs, 15),
                "margin": mpmath.nstr(self.margin, 6), "holds": self.holds, "sampled": self.sampled}


@dataclass(frozen=True)
class InequalityReport:
    n: int
    checks: tuple[InequalityCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def __getitem__(self, name: str) -> InequalityCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]


def circle_min_abs(p: IntPoly, radius, samples: int = SAMPLES, digits: int = 30):
    """Minimum of ``|p|`` on ``|q| = radius``: dense sampling, then local refinement."""
    r = float(radius)
    desc = _float_coeffs(list(p.coeffs))[::-1]
    theta = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    mags = np.abs(np.polyval(desc, r * np.exp(1j * theta)))
    step = 2 * math.pi / samples
    local = [i for i in range(samples) if mags[i] <= mags[i - 1] and mags[i] <= mags[(i + 1) % samples]]
    local.sort(key=lambda i: mags[i])
    best = None
    with mpmath.workdps(digits):
        R = mpmath.mpf(radius)
        for i in local[:6]:
            res = minimize_scalar(lambda t: abs(np.polyval(desc, r * np.exp(1j * t))),
                                  bounds=(theta[i] - step, theta[i] + step), method="bounded",
                                  options={"xatol": 1e-14})
            for t in (res.x, theta[i]):
                v = abs(p(R * mpmath.expjpi(mpmath.mpf(t) / mpmath.pi)))
                if best is None or v < best:
                    best = v
    return best


def check_inequality_lemmas(n: int, digits: int = DEFAULT_DIGITS, samples: int = SAMPLES) -> InequalityReport:
    """Evaluate the circle inequalities on ``f(q, n)`` used against zeros of ``M_k``.

    Point checks (``f(-R)`` against a bound) are exact-precision evaluations;
    ``min|f|`` checks sample the whole circle and demand a relative safety
    margin of ``SAFETY``.  Violations are reported, never raised.
    """
    f = f_poly(n)
    checks = []
    with mpmath.workdps(digits):
        R1 = metallic_radius(1, digits).value
        checks.append(InequalityCheck("f(-R1) > 1 - R1", f(-R1), 1 - R1, False))
        m1 = circle_min_abs(f, R1, samples)
        checks.append(InequalityCheck("min|f| on C1 > 1 - R1", m1, 1 - R1, True))
        if n >= 2:
            checks.append(InequalityCheck("min|f| on C1 > 2 R1^n", m1, 2 * R1 ** n, True))
        if n >= 2:
            Rn = metallic_radius(n, digits).value
            mn = circle_min_abs(f, Rn, samples)
            if n in (3, 4):
                rhs = sum(Rn ** t for t in range(2, 2 * n - 1))
                checks.append(InequalityCheck(f"f(-R{n}) > sum R{n}^t, t=2..{2 * n - 2}", f(-Rn), rhs, False))
                checks.append(InequalityCheck(f"min|f| on C{n} > sum R{n}^t, t=2..{2 * n - 2}", mn, rhs, True))
            checks.append(InequalityCheck(f"min|f| on C{n} > 2 R{n}^{n}", mn, 2 * Rn ** n, True))
    return InequalityReport(n, tuple(checks))
