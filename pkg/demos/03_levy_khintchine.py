"""The Levy-Khintchine form of the stable exponent, integrated numerically.

Run:  python demos/03_levy_khintchine.py

With truncation sin x, the centred exponent is the integral of
exp(itx) - 1 - it sin x against the Levy density
(1 +- beta) c^alpha / (2 K(alpha) |x|^(1+alpha)).  The one-sided integral
has a closed form that is continuous through alpha = 1, where the tangent
blows up but its product with |t|^(alpha-1) - 1 stays finite.
"""

from stablelaw import levy_khintchine as lk
from stablelaw import stable


def main():
    print("numeric Levy-Khintchine integral vs closed-form centred exponent")
    for alpha, beta in ((0.3, 1.0), (0.8, -0.5), (1.0, 1.0), (1.7, 0.0)):
        for t in (-3.0, 1.0):
            num = lk.lk_exponent_numeric(alpha, 1.0, beta, t)
            ref = stable.log_cf_centered(alpha, 1.0, beta, t)
            print(f"  alpha={alpha}, beta={beta:4}, t={t:4}: {num:.10f}  residual {abs(num - ref):.1e}")

    print("\nthe one-sided exponent through alpha = 1 (t = 2)")
    for alpha in (0.99, 0.9999, 1.0, 1.0001, 1.01):
        print(f"  alpha={alpha:<7}: closed {lk.psi_tilde(alpha, 2.0):.8f}   numeric {lk.psi_tilde_numeric(alpha, 2.0):.8f}")


if __name__ == "__main__":
    main()
