"""Cross-check Aberth root moduli against argument-principle zero counts."""
from qmetallic.metallic import m_seq, p_factor
from qmetallic.roots import count_zeros_in_disk, find_roots, product_residual

for label, p in (("P_5", p_factor(5)), ("M_12(3)", m_seq(3, 12)), ("M_16(6)", m_seq(6, 16))):
    rs = find_roots(p)
    mods = sorted(float(m) for m in rs.moduli())
    residual, bound = product_residual(p, rs)
    print(f"{label}: degree {p.degree}, moduli {mods[0]:.6f} .. {mods[-1]:.6f}, "
          f"residual {float(residual):.1e} <= bound {float(bound):.1e}")
    for r in (0.5, 0.7, 0.9, 1.2, 2.0):
        census = sum(1 for m in mods if m < r)
        print(f"    |q| < {r}: winding {count_zeros_in_disk(p, r)}, census {census}")
