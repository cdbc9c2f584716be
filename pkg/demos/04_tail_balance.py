"""Regular variation: reading tail balance off the characteristic function.

Run:  python demos/04_tail_balance.py

For a law with H(x) = P(|X| > x) regularly varying of index -k, the
imaginary part of the cf near 0 and the tail difference K(x) = P(X > x) -
P(X < -x) determine each other: beta = lim K/H and c' = beta tan(pi k/2).
Two-sided Pareto laws have an exact cf, so both sides can be computed.  At
alpha = 1 the tangent degenerates and the constraint |c'| <= 2/pi appears
through the second integrated tails K2 and H2.
"""

import math

from stablelaw import stable, tails
from stablelaw.stable import StableParams

PROBE = (1e2, 1e3, 1e4)


def main():
    print("tail balance of two-sided Pareto laws")
    for p, q in ((1.0, 0.0), (0.7, 0.3), (0.5, 0.5)):
        for k in (0.5, 1.5):
            est = tails.tail_balance(tails.two_sided_pareto(p, q, k), k, PROBE, center=True)
            d = est.diagnostics
            print(f"  p={p}, q={q}, k={k}: beta {est.balance_beta:+.4f} (p-q = {p - q:+.1f}),"
                  f" c' {d['c_prime_estimate']:+.5f} vs beta tan(pi k/2) {d['c_prime_expected']:+.5f}")

    print("\nthe converse for a stable law known only through its cf (alpha = 1/2, beta = 1)")
    levy = StableParams(0.5, 1.0, 1.0)
    dist = tails.from_cf(lambda t: stable.cf(levy, t))
    for which in ("hu", "kv", "thm1"):
        est = tails.lemma_ratio(dist, which, 0.5, PROBE)
        print(f"  {which:4}: " + ", ".join(f"x={x:.0e}: {r:.5f}" for x, r in est.ratio_series))

    print("\nalpha = 1: K2 and H2 grow like x log x with slopes c c' and 2c/pi")
    for beta in (-1.0, 0.0, 1.0):
        rep = tails.alpha_one_constraint(1.0, 2 * beta / math.pi, PROBE)
        print(f"  beta={beta:+}: K2 slope {rep.k2_limit:+.5f}, H2 slope {rep.h2_limit:.5f},"
              f" 2/pi = {2 / math.pi:.5f}, |K2| <= 1.05 H2: {rep.constraint_ok}")


if __name__ == "__main__":
    main()
