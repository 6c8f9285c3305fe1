"""Point and circle inequalities for f(q, n) at the metallic radii."""
from qmetallic.roots import check_inequality_lemmas

for n in (1, 2, 3, 4, 10):
    report = check_inequality_lemmas(n)
    print(f"n={n}")
    for name in report.names():
        c = report[name]
        print(f"  {name:<32} {'holds' if c.holds else 'FAILS'}  margin {float(c.margin):+.6f}")
