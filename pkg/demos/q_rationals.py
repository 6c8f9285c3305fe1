"""Deform a few rationals both ways and show the two routes agree."""
from fractions import Fraction

from qmetallic import negative_expand, q_rational, regular_expand
from qmetallic.qseries import series_of_ratfunc

for x in (Fraction(5, 2), Fraction(7, 3), Fraction(13, 8), Fraction(3)):
    value = q_rational(x)
    print(f"{x}: regular {regular_expand(x)}, negative {negative_expand(x)}")
    print(f"    [{x}]_q = {value}")
    print(f"    series {[int(c) for c in series_of_ratfunc(value, 10)]}")
