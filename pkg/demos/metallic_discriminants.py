"""Discriminants of the q-metallic numbers and their palindromic cofactors."""
from qmetallic.metallic import UNIT_FACTOR, discriminant, f_poly, p_factor
from qmetallic.qpoly import is_palindrome

for n in range(1, 7):
    d = discriminant(n)
    assert UNIT_FACTOR * p_factor(n) == d
    print(f"n={n}")
    print(f"  D   = {d}  (palindromic: {is_palindrome(d)}, D(1) = {d(1)})")
    print(f"  P_n = {p_factor(n)}")
    print(f"  f   = {f_poly(n)}")
