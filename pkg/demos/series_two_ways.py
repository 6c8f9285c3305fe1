"""q-metallic series from stabilized convergents and from the quadratic formula."""
from qmetallic.qseries import metallic_equation_residual, metallic_series, stabilized_series

for n in range(1, 6):
    stab, k = stabilized_series(n, 16, return_index=True)
    direct = metallic_series(n, 16)
    assert stab == direct
    assert not any(metallic_equation_residual(n, direct).coeffs)
    print(f"n={n} (stable from convergent {k}):", [int(c) for c in direct])
