"""Compensated Eulerian integrals and the constants built from them.

Run:  python demos/01_eulerian_integrals.py

The integral of x**(r-1) exp(-z x) equals Gamma(r) z**(-r).  For r < 0 it
diverges at 0 unless the first Maclaurin terms of exp(-z x) are subtracted;
the compensated integral keeps the same closed form.  On the imaginary axis
(z = -i theta) the real and imaginary parts give the cosine and sine
integrals behind the stable exponent.
"""

import math

from stablelaw import quadrature as quad
from stablelaw import special


def main():
    print("Gamma through reflection and Lanczos")
    for r in (0.5, -0.5, -2.5, 7.25):
        lhs = special.gamma(r) * special.gamma(1 - r) * special.sinpi(r)
        print(f"  gamma({r:5}) = {special.gamma(r): .12g}   reflection residual {abs(lhs - math.pi):.1e}")

    print("\nCompensated power integral vs Gamma(r) z^-r")
    for r, z in ((0.5, 1.0), (-0.5, -1j), (-1.5, 1 - 1j), (0.7, 3 + 2j)):
        num = quad.compensated_power_integral(r, z)
        ref = special.gamma(r) * complex(z) ** (-r)
        print(f"  r={r:5}, z={z!s:8}: {num:.10f}   rel err {abs(num - ref) / abs(ref):.1e}")

    print("\nCosine and sine integrals: C(k)|theta|^(k-1), S(k) sign(theta)|theta|^(k-1)")
    for k, th in ((0.5, 2.0), (2.0, 1.0), (2.5, -3.0)):
        c = quad.compensated_cosine_integral(k, th)
        print(f"  cos  k={k}, theta={th:4}: {c: .10f}  closed {special.c_kappa(k) * abs(th) ** (k - 1): .10f}")
    for k, th in ((1.0, 5.0), (1.0, -5.0), (0.5, 2.0)):
        s = quad.compensated_sine_integral(k, th)
        ref = special.s_kappa(k) * math.copysign(1, th) * abs(th) ** (k - 1)
        print(f"  sin  k={k}, theta={th:4}: {s: .10f}  closed {ref: .10f}")

    val, err = quad.oscillatory_improper(lambda x: 1 / x, "sine", 1.0)
    print(f"\nDirichlet integral: {val:.15f} (pi/2 = {math.pi / 2:.15f}, error estimate {err:.1e})")
    print(f"K(alpha) near 1: K(1 - 1e-8) = {special.k_alpha(1 - 1e-8):.12f}, pi/2 = {math.pi / 2:.12f}")


if __name__ == "__main__":
    main()
