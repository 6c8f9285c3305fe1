"""Poles of the k-term truncations [n, ..., n]_q stay outside the limiting radius."""
from qmetallic.metallic import m_seq
from qmetallic.roots import certify_annulus, metallic_radius, truncated_radius

for n in (1, 3, 4):
    R = metallic_radius(n)
    print(f"n={n}: R = {R.format(8)}")
    for k in range(2, 13):
        r = truncated_radius(n, k)
        if r.is_infinite:
            print(f"  k={k:>2}  no poles")
            continue
        inside = certify_annulus(m_seq(n, k), R.value, 1 / R.value)
        print(f"  k={k:>2}  radius {r.format(8)}  margin {float(r.value - R.value):+.2e}  "
              f"zeros in annulus: {inside}")
