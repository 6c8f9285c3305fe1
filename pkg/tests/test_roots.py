import math

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from qmetallic import roots
from qmetallic.metallic import f_poly, m_seq, m_tilde_seq, p_factor
from qmetallic.qpoly import IntPoly
from qmetallic.roots import (
    ConvergenceError,
    Radius,
    RootTooCloseError,
    certify_annulus,
    check_inequality_lemmas,
    count_zeros_in_disk,
    discriminant_roots,
    find_roots,
    fixed,
    metallic_radius,
    min_modulus,
    product_residual,
    truncated_radius,
)

with mpmath.workdps(90):
    GOLDEN = (3 - mpmath.sqrt(5)) / 2


@pytest.fixture(autouse=True)
def working_precision():
    with mpmath.workdps(90):
        yield

int_polys = st.lists(st.integers(-12, 12), min_size=2, max_size=9).map(IntPoly).filter(lambda p: p.degree >= 1)


def census(rs, r):
    return sum(1 for m in rs.moduli() if m < r)


# --- find_roots / min_modulus -------------------------------------------------

def test_golden_quadratic():
    rs = find_roots(IntPoly([1, 3, 1]))
    want = sorted([(-3 - mpmath.sqrt(5)) / 2, (-3 + mpmath.sqrt(5)) / 2])
    got = sorted(z.real for z in rs.roots)
    assert all(abs(g - w) < mpmath.mpf(10) ** -60 for g, w in zip(got, want))
    assert all(abs(z.imag) < mpmath.mpf(10) ** -60 for z in rs.roots)
    assert abs(min_modulus(rs).value - GOLDEN) < mpmath.mpf(10) ** -60


def test_unit_circle_examples():
    for p in (IntPoly([1, 0, 1]), IntPoly([1, -1, 1])):
        rs = find_roots(p)
        assert all(abs(m - 1) < mpmath.mpf(10) ** -60 for m in rs.moduli())
    assert abs(min_modulus(find_roots(IntPoly([1, 0, 1]))).value - 1) < mpmath.mpf(10) ** -60


def test_silver_radius_closed_form():
    closed = (1 + mpmath.sqrt(2) - mpmath.sqrt(2 * mpmath.sqrt(2) - 1)) / 2
    assert abs(min_modulus(find_roots(p_factor(2))).value - closed) < mpmath.mpf(10) ** -60


def test_zero_roots_split_off_exactly():
    rs = find_roots(IntPoly([0, 0, 2, 1]))
    assert len(rs) == 3
    assert sum(1 for z in rs.roots if z == 0) == 2


def test_multiple_roots():
    p = IntPoly([1, 2, 2, 2, 1])  # (1 + q)^2 (1 + q^2)
    rs = find_roots(p)
    assert sum(1 for z in rs.roots if abs(z + 1) < mpmath.mpf(10) ** -60) == 2
    assert rs.certified_digits >= 64


@pytest.mark.parametrize("bad", [IntPoly(), IntPoly([5])])
def test_find_roots_needs_positive_degree(bad):
    with pytest.raises(ValueError):
        find_roots(bad)


def test_non_convergence_reports_diagnostics(monkeypatch):
    def stuck(coeffs, start, digits, maxiter=200):
        raise ConvergenceError("stuck", {"digits": digits})

    monkeypatch.setattr(roots, "_mp_aberth", stuck)
    with pytest.raises(ConvergenceError) as info:
        find_roots(IntPoly([3, 1, 4, 1, 5]), 70)
    attempts = info.value.diagnostics["attempts"]
    assert [a["digits"] for a in attempts] == [70, 140, 280, 560]


def test_deterministic():
    p = m_seq(3, 9)
    a = roots._find_roots.__wrapped__(p, 64)
    b = roots._find_roots.__wrapped__(p, 64)
    assert a.roots == b.roots


@given(int_polys)
def test_root_set_complete_and_consistent(p):
    rs = find_roots(p)
    assert len(rs) == p.degree
    residual, bound = product_residual(p, rs)
    assert residual <= bound


@given(int_polys, st.floats(0.2, 3.0))
def test_zero_count_matches_census(p, r):
    rs = find_roots(p)
    assume(all(abs(m - r) > 1e-3 * r for m in rs.moduli()))
    assert count_zeros_in_disk(p, r) == census(rs, r)


@pytest.mark.parametrize("n", [1, 2, 5, 13, 31])
def test_palindromic_moduli_pair_up(n):
    rs = find_roots(p_factor(n))
    mods = sorted(rs.moduli())
    inv = sorted(1 / m for m in mods)
    tol = 10 * rs.max_error + mpmath.mpf(10) ** -rs.working_digits
    assert all(abs(a - b) <= tol for a, b in zip(mods, inv))


def test_discriminant_roots_include_sixth_roots_of_unity():
    rs = discriminant_roots(4)
    assert len(rs) == 10
    w = mpmath.exp(1j * mpmath.pi / 3)
    assert any(abs(z - w) < mpmath.mpf(10) ** -60 for z in rs.roots)


# --- radii --------------------------------------------------------------------

@pytest.mark.parametrize("n, text", [(3, "0.59719"), (20, "0.87404"), (48, "0.93153")])
def test_metallic_radius_examples(n, text):
    assert metallic_radius(n).format(5) == text


def test_radius_drops_at_twenty():
    assert metallic_radius(20).value < metallic_radius(19).value


def test_radii_at_most_one():
    for n in range(1, 49):
        assert metallic_radius(n).value <= 1


def test_truncated_examples():
    assert truncated_radius(1, 5).value >= GOLDEN
    r3 = metallic_radius(3).value
    for k in range(3, 21):
        assert truncated_radius(3, k).value > r3
    assert truncated_radius(1, 2).is_infinite
    with pytest.raises(ValueError):
        truncated_radius(2, 0)


def test_radius_model():
    r = metallic_radius(1)
    assert r.digits >= 64
    assert float(r) == pytest.approx(0.3819660112501051)
    assert r.to_json()["value"].startswith("0.381966011250105")
    with pytest.raises(ValueError):
        r.format(r.digits + 1)
    inf = Radius.infinite()
    assert inf.is_infinite and float(inf) == math.inf and inf.format(5) == "inf"
    assert inf.to_json() == {"value": None, "infinite": True, "digits": 0}


def test_root_set_json():
    data = find_roots(IntPoly([1, 0, 1])).to_json()
    assert len(data) == 2 and set(data[0]) == {"re", "im", "err"}
    assert all(isinstance(v, str) for row in data for v in row.values())


def test_fixed_rounds_half_even():
    assert fixed(mpmath.mpf("0.125"), 2) == "0.12"
    assert fixed(mpmath.mpf("0.135"), 2) == "0.14"
    assert fixed(GOLDEN, 10) == "0.3819660113"


# --- annuli and zero counting ------------------------------------------------

def test_annulus_examples():
    inner, outer = GOLDEN, (3 + mpmath.sqrt(5)) / 2
    for n in (1, 2, 10, 48):
        assert certify_annulus(p_factor(n), inner, outer)
    assert not certify_annulus(IntPoly([-4, 0, 1]), 0, 1)
    r3 = metallic_radius(3).value
    for k in range(3, 16):
        assert certify_annulus(m_seq(3, k), r3, 1 / r3)
        assert certify_annulus(m_tilde_seq(3, k), r3, 1 / r3)


def test_count_examples():
    assert count_zeros_in_disk(p_factor(1), 0.38) == 0
    assert count_zeros_in_disk(IntPoly([0, 0, 1]), 1) == 2
    for n in range(1, 21):
        assert count_zeros_in_disk(f_poly(n), GOLDEN) == 0


def test_count_outside_unit_disk_uses_reversal():
    p = m_seq(5, 12)
    assert count_zeros_in_disk(p, 1 / GOLDEN) == p.degree
    assert count_zeros_in_disk(IntPoly([-4, 0, 1]), 3) == 2


def test_count_rejects_root_on_contour():
    with pytest.raises(RootTooCloseError) as info:
        count_zeros_in_disk(IntPoly([-1, 1]), 1.0, max_bits=256)
    assert info.value.modulus == 1.0


def test_count_bad_input():
    with pytest.raises(ValueError):
        count_zeros_in_disk(IntPoly(), 1)
    with pytest.raises(ValueError):
        count_zeros_in_disk(IntPoly([1, 1]), 0)
    assert count_zeros_in_disk(IntPoly([7]), 2) == 0


def test_count_hard_polynomial_needs_multiprecision():
    # coefficients near 1e17 make float64 samples meaningless at |q| = 0.6
    p = m_seq(10, 20)
    assert count_zeros_in_disk(p, 0.6) == census(find_roots(p), 0.6) == 0


# --- inequality report ---------------------------------------------------------

def test_point_inequality_at_golden_radius():
    report = check_inequality_lemmas(5)
    c = report["f(-R1) > 1 - R1"]
    assert c.holds and c.margin > 0
    assert abs(c.rhs - (1 - GOLDEN)) < mpmath.mpf(10) ** -40


def test_point_inequality_n3():
    c = check_inequality_lemmas(3)["f(-R3) > sum R3^t, t=2..4"]
    assert c.holds
    assert float(c.lhs) == pytest.approx(0.700925, abs=1e-6)


def test_point_inequality_n4_fails():
    c = check_inequality_lemmas(4)["f(-R4) > sum R4^t, t=2..6"]
    assert not c.holds
    assert float(c.margin) == pytest.approx(-0.19905, abs=1e-5)


def test_circle_minimum_cannot_beat_two_r_cubed():
    # P_3 = f + 2q^3 vanishes somewhere on C_3, so min |f| <= 2 R_3^3 there
    r3 = metallic_radius(3).value
    zero = min(find_roots(p_factor(3)).roots, key=abs)
    assert abs(abs(f_poly(3)(zero)) - 2 * r3**3) < mpmath.mpf(10) ** -40
    c = check_inequality_lemmas(3)["min|f| on C3 > 2 R3^3"]
    assert not c.holds
    assert c.lhs <= 2 * r3**3


def test_report_names_and_json():
    report = check_inequality_lemmas(4)
    assert "min|f| on C1 > 1 - R1" in report.names()
    assert not report.all_hold
    data = report["f(-R1) > 1 - R1"].to_json()
    assert data["holds"] is True and data["sampled"] is False
