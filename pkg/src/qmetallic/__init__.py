"""q-deformed rationals, q-metallic numbers and their radii of convergence.

The package is layered the same way the objects are built:

``qpoly``     exact integer polynomials, Laurent polynomials, rational functions
``cfrac``     continued fractions and the q-rational ``[r/s]_q``
``qseries``   truncated power series, stabilized q-irrationals
``metallic``  discriminants, ``P_n``, ``f(q, n)`` and the ``M_k`` sequences
``roots``     certified root finding, radii, zero counting, inequality checks
"""
from .cfrac import NegativeCF, RegularCF, negative_expand, q_rational, regular_expand
from .metallic import discriminant, f_poly, m_seq, m_tilde_seq, p_factor
from .qpoly import IntPoly, LaurentPoly, RatFunc, euler_q_integer
from .qseries import PowerSeries, metallic_series, series_of_ratfunc, stabilized_series
from .roots import (
    ComplexRootSet,
    Radius,
    certify_annulus,
    check_inequality_lemmas,
    count_zeros_in_disk,
    find_roots,
    metallic_radius,
    truncated_radius,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexRootSet",
    "IntPoly",
    "LaurentPoly",
    "NegativeCF",
    "PowerSeries",
    "Radius",
    "RatFunc",
    "RegularCF",
    "certify_annulus",
    "check_inequality_lemmas",
    "count_zeros_in_disk",
    "discriminant",
    "euler_q_integer",
    "f_poly",
    "find_roots",
    "m_seq",
    "m_tilde_seq",
    "metallic_radius",
    "metallic_series",
    "negative_expand",
    "p_factor",
    "q_rational",
    "regular_expand",
    "series_of_ratfunc",
    "stabilized_series",
    "truncated_radius",
]
