"""Radii of convergence of [n, n, n, ...]_q for n = 1..48, against the reference table."""
from qmetallic.reference import NON_MONOTONE, REFERENCE_RADII
from qmetallic.roots import fixed, metallic_radius

previous = None
for n in range(1, 49):
    r = metallic_radius(n)
    got = fixed(r.value, 5)
    notes = []
    if got != REFERENCE_RADII[n]:
        notes.append(f"reference prints {REFERENCE_RADII[n]}")
    if previous is not None and r.value < previous:
        notes.append("drop")
    previous = r.value
    print(f"{n:>2}  {fixed(r.value, 12)}  {got}  {'; '.join(notes)}")
print("drops at", NON_MONOTONE)
