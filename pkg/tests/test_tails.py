import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given, strategies as st
from scipy import stats

from stablelaw import special, stable, tails
from stablelaw.errors import DomainError, PreconditionError
from stablelaw.stable import StableParams

PROBE = (1e2, 1e3, 1e4)


def pareto_cf_oracle(p, q, k, t):
    """E exp(itY) = k E_{k+1}(-i t) for standard Pareto Y."""
    def J(s):
        return complex(k * mpmath.expint(k + 1, mpmath.mpc(0, -s)))
    j = J(t)
    return p * j + q * j.conjugate()


# ---------------------------------------------------------------- distributions


def test_pareto_validation():
    with pytest.raises(DomainError):
        tails.two_sided_pareto(0.5, 0.6, 0.5)
    with pytest.raises(DomainError):
        tails.two_sided_pareto(1.0, 0.0, -1.0)
    with pytest.raises(DomainError):
        tails.two_sided_pareto(1.0, 0.0, 1.0)


@pytest.mark.parametrize("p,q,k", [(1.0, 0.0, 0.5), (0.7, 0.3, 1.5), (0.5, 0.5, 0.3)])
@pytest.mark.parametrize("t", [0.01, 0.3, 1.0, 1.99, 2.0, 7.5, 40.0, -3.0])
def test_pareto_cf_matches_expint(p, q, k, t):
    d = tails.two_sided_pareto(p, q, k)
    assert abs(d.cf(t) - pareto_cf_oracle(p, q, k, t)) <= 1e-12


def test_pareto_cf_vectorised_and_at_zero():
    d = tails.two_sided_pareto(0.7, 0.3, 0.5)
    ts = np.array([[-1.0, 0.0], [0.5, 3.0]])
    vals = d.cf(ts)
    assert vals.shape == (2, 2) and vals[0, 1] == 1.0
    assert vals[1, 1] == pytest.approx(d.cf(3.0))


def test_pareto_tails_and_cdf_agree():
    d = tails.two_sided_pareto(0.7, 0.3, 0.5)
    for x in (0.5, 1.0, 4.0, 100.0):
        H, K = tails.tails(d, x)
        F = d.intermediate_cdf
        assert H == pytest.approx(1 - F(x) + F(-x), abs=1e-15)
        assert K == pytest.approx(1 - F(x) - F(-x), abs=1e-15)
    assert tails.tails(d, 4.0) == pytest.approx((0.5, 0.2))


def test_half_jump_convention():
    pm = tails.point_mass(2.0)
    assert pm.intermediate_cdf(2.0) == 0.5
    with pytest.raises(DomainError, match="halfway"):
        tails.DistributionSpec(intermediate_cdf=lambda x: float(x >= 0), atoms=(0.0,))
    with pytest.raises(DomainError):
        tails.DistributionSpec()


def test_tails_domain():
    with pytest.raises(DomainError):
        tails.tails(tails.point_mass(), 0.0)


def test_point_mass_tails():
    H, K = tails.tails(tails.point_mass(0.0), 1.0)
    assert (H, K) == (0.0, 0.0)
    H, K = tails.tails(tails.point_mass(3.0), 3.0)
    assert (H, K) == (0.5, 0.5)


def test_tail_pair_vectorised():
    pair = tails.tail_pair(tails.two_sided_pareto(1.0, 0.0, 0.5))
    H, K = pair(np.array([0.5, 4.0]))
    np.testing.assert_allclose(H, [1.0, 0.5])
    np.testing.assert_allclose(K, [1.0, 0.5])


def test_scaled():
    d = tails.scaled(tails.two_sided_pareto(0.7, 0.3, 1.5), 2.0)
    assert tails.tails(d, 8.0) == pytest.approx((0.125, 0.05))
    assert d.cf(0.5) == pytest.approx(pareto_cf_oracle(0.7, 0.3, 1.5, 1.0), abs=1e-12)
    assert d.mean == pytest.approx(2 * 0.4 * 3.0)
    with pytest.raises(DomainError):
        tails.scaled(d, 0.0)


# ---------------------------------------------------------------- transforms


@pytest.mark.parametrize("t", [0.05, 0.5, 2.0])
def test_uv_routes_agree(t):
    d = tails.two_sided_pareto(0.7, 0.3, 0.5)
    assert np.allclose(tails.uv_from_cf(d.cf, t), tails.uv_from_tails(d, t), atol=1e-9)


def test_invert_tails_oracles(cauchy, levy):
    for x in (0.5, 1.0, 3.0, 20.0):
        H, K = tails.invert_tails(lambda t: stable.cf(cauchy, t), x)
        assert H == pytest.approx(2 * stats.cauchy.sf(x), abs=1e-8)
        assert K == pytest.approx(0.0, abs=1e-8)
        H, K = tails.invert_tails(lambda t: stable.cf(levy, t), x)
        assert H == pytest.approx(stats.levy.sf(x), abs=1e-8)
        assert K == pytest.approx(stats.levy.sf(x), abs=1e-8)


def test_from_cf_uses_inversion(cauchy):
    d = tails.from_cf(lambda t: stable.cf(cauchy, t), "cauchy")
    assert tails.tails(d, 1.0)[0] == pytest.approx(0.5, abs=1e-8)


def test_stable_distribution_spec(levy):
    d = tails.stable_distribution(levy)
    assert tails.tails(d, 2.0)[0] == pytest.approx(stats.levy.sf(2.0), abs=1e-8)
    assert tails.stable_distribution(StableParams(1.5, 1.0, 0.0, 2.0)).mean == 2.0


@pytest.mark.parametrize("x", [-2.0, 0.0, 0.7, 3.0])
def test_gil_pelaez(x, cauchy, levy):
    assert tails.gil_pelaez_cdf(lambda t: stable.cf(cauchy, t), x) == pytest.approx(stats.cauchy.cdf(x), abs=1e-8)
    assert tails.gil_pelaez_cdf(lambda t: stable.cf(levy, t), x) == pytest.approx(stats.levy.cdf(x), abs=1e-8)


def test_gil_pelaez_point_mass_step():
    cf = tails.point_mass(0.0).cf
    assert tails.gil_pelaez_cdf(cf, 1.3) == pytest.approx(1.0, abs=1e-8)
    assert tails.gil_pelaez_cdf(cf, -1.3) == pytest.approx(0.0, abs=1e-8)


@pytest.mark.parametrize("x,y", [(-1.0, 0.5), (0.0, 2.0), (1.0, 10.0), (-4.0, -1.0)])
def test_levy_inversion_matches_gil_pelaez(x, y):
    p = StableParams(1.5, 1.0, 0.5, 0.3)
    cf = lambda t: stable.cf(p, t)  # noqa: E731
    diff = tails.gil_pelaez_cdf(cf, y) - tails.gil_pelaez_cdf(cf, x)
    assert tails.levy_inversion_diff(cf, x, y) == pytest.approx(diff, abs=2e-6)
    ref = stats.levy_stable.cdf(y, 1.5, 0.5, loc=0.3) - stats.levy_stable.cdf(x, 1.5, 0.5, loc=0.3)
    assert diff == pytest.approx(ref, abs=1e-6)


def test_distribution_mean():
    d = tails.two_sided_pareto(0.7, 0.3, 1.5)
    assert tails.distribution_mean(d) == pytest.approx(0.4 * 3.0, rel=1e-6)


# ---------------------------------------------------------------- cumulative tails


def test_cumulative_k1_growth():
    # K(x) = 0.4 x^{-1/2} beyond 1, so K1(x) ~ 0.8 x^{1/2}
    d = tails.two_sided_pareto(0.7, 0.3, 0.5)
    for x in (1e2, 1e4):
        k1 = tails.cumulative_tails(d, x, 1)
        assert k1 == pytest.approx(0.4 + 0.8 * (math.sqrt(x) - 1), rel=1e-9)
        ratio = tails.cumulative_tails(d, 2 * x, 1) / k1
        assert ratio == pytest.approx(math.sqrt(2), rel=0.02)


@pytest.mark.parametrize("x", [10.0, 1e3])
@pytest.mark.parametrize("kind", ["K", "H"])
@pytest.mark.parametrize("order", [1, 2])
def test_cumulative_routes_agree(x, kind, order):
    d = tails.two_sided_pareto(0.7, 0.3, 0.5)
    a = tails.cumulative_tails(d, x, order, kind=kind, route="direct")
    b = tails.cumulative_tails(d, x, order, kind=kind, route="transform")
    assert b == pytest.approx(a, rel=1e-6)


def test_cumulative_second_order_limit():
    # K2(x) / (x^2 V(1/x)) -> 1 / ((1 - k)(2 - k) C(k)) = -(2/pi) C(3 - k)
    k = 0.5
    d = tails.two_sided_pareto(0.7, 0.3, k)
    x = 1e4
    ratio = tails.cumulative_tails(d, x, 2) / (x * x * d.cf(1 / x).imag)
    expected = 1.0 / ((1 - k) * (2 - k) * special.c_kappa(k))
    assert expected == pytest.approx(-2 / math.pi * special.c_kappa(3 - k), rel=1e-12)
    assert ratio == pytest.approx(expected, rel=0.05)


def test_cumulative_errors():
    d = tails.two_sided_pareto(0.7, 0.3, 0.5)
    with pytest.raises(DomainError):
        tails.cumulative_tails(d, 1.0, 3)
    with pytest.raises(DomainError):
        tails.cumulative_tails(d, 1.0, 1, kind="Q")
    with pytest.raises(DomainError):
        tails.cumulative_tails(d, 1.0, 1, route="magic")
    with pytest.raises(DomainError):
        tails.cumulative_tails(d, -1.0, 1)
    with pytest.raises(DomainError):
        tails.cumulative_tails(tails.DistributionSpec(tail_fn=d.tail_fn), 5.0, 1, route="transform")


def test_cumulative_sign_change_precondition():
    # V(t) = sin(t) * cos(3 t) changes sign inside (0, 1]
    def cf(t):
        t = np.asarray(t, dtype=float)
        return np.exp(-np.abs(t)) + 1j * 0.01 * np.sin(t) * np.cos(3 * t)

    with pytest.raises(PreconditionError):
        tails.cumulative_tails(cf, 10.0, 2, kind="K", route="transform")


# ---------------------------------------------------------------- ratios


def test_extrapolate():
    seq = [1 + 0.5 ** n for n in range(6)]
    assert tails.extrapolate(seq) == pytest.approx(1.0, abs=1e-12)
    assert tails.extrapolate([3.0, 2.0]) == 2.0
    assert tails.extrapolate([1.0, 3.0, 8.0]) == 8.0  # diverging: last value
    assert tails.extrapolate([2.0, 2.0, 2.0]) == 2.0


@pytest.mark.parametrize("probe", [(1e2, 1e3), (1e3, 1e2, 1e4), (0.0, 1.0, 2.0)])
def test_probe_validation(probe):
    with pytest.raises(ValueError):
        tails.lemma_ratio(tails.two_sided_pareto(1.0, 0.0, 0.5), "hu", 0.5, probe)


def test_lemma_ratio_hu_pareto():
    est = tails.lemma_ratio(tails.two_sided_pareto(1.0, 0.0, 0.5), "hu", 0.5, PROBE)
    vals = [r for _, r in est.ratio_series]
    assert all(abs(v - 1) <= 0.05 for v in vals)
    assert abs(vals[-1] - 1) <= abs(vals[0] - 1)
    assert est.converged and not est.degenerate
    assert est.diagnostics["H_nonincreasing"]


@pytest.mark.parametrize("which", ["kv", "thm1"])
def test_lemma_ratio_pareto_skewed(which):
    for k in (0.5, 1.5):
        est = tails.lemma_ratio(tails.two_sided_pareto(0.7, 0.3, k), which, k, PROBE)
        assert abs(est.ratio_series[-1][1] - 1) <= 0.05


def test_lemma_ratio_symmetric_is_degenerate():
    est = tails.lemma_ratio(tails.two_sided_pareto(0.5, 0.5, 0.5), "kv", 0.5, PROBE)
    assert est.degenerate and not est.converged
    assert math.isnan(est.limit)


def test_lemma_ratio_stable_via_inversion(levy):
    d = tails.from_cf(lambda t: stable.cf(levy, t))
    for which in ("hu", "kv", "thm1"):
        est = tails.lemma_ratio(d, which, 0.5, PROBE)
        assert abs(est.ratio_series[-1][1] - 1) <= 0.05


def test_lemma_ratio_scale_invariance():
    lam = 3.0
    d = tails.two_sided_pareto(0.7, 0.3, 0.5)
    for which in ("hu", "kv", "thm1"):
        a = tails.lemma_ratio(d, which, 0.5, PROBE)
        b = tails.lemma_ratio(tails.scaled(d, lam), which, 0.5, [lam * x for x in PROBE])
        for (_, ra), (_, rb) in zip(a.ratio_series, b.ratio_series):
            assert rb == pytest.approx(ra, abs=1e-6)


def test_lemma_ratio_domain():
    d = tails.two_sided_pareto(1.0, 0.0, 0.5)
    with pytest.raises(DomainError):
        tails.lemma_ratio(d, "xx", 0.5, PROBE)
    with pytest.raises(DomainError):
        tails.lemma_ratio(d, "thm1", 1.0, PROBE)
    with pytest.raises(DomainError):
        tails.lemma_ratio(d, "hu", 2.5, PROBE)
    with pytest.raises(DomainError):
        tails.lemma_ratio(d, "kv", 2.0, PROBE)


@pytest.mark.parametrize("p,q", [(1.0, 0.0), (0.7, 0.3), (0.5, 0.5)])
@pytest.mark.parametrize("k", [0.5, 1.5])
def test_tail_balance(p, q, k):
    est = tails.tail_balance(tails.two_sided_pareto(p, q, k), k, PROBE, center=True)
    assert est.balance_beta == pytest.approx(p - q, abs=0.02)
    assert est.converged
    assert est.diagnostics["c_prime_consistent"]
    ref = (p - q) * math.tan(math.pi * k / 2)
    assert est.diagnostics["c_prime_estimate"] == pytest.approx(ref, rel=0.05, abs=1e-9)


def test_tail_balance_requires_centring():
    d = tails.two_sided_pareto(0.7, 0.3, 1.5)
    with pytest.raises(DomainError, match="center"):
        tails.tail_balance(d, 1.5, PROBE)
    with pytest.raises(DomainError):
        tails.tail_balance(d, 1.0, PROBE)
    with pytest.raises(DomainError):
        tails.tail_balance(tails.point_mass(0.0), 0.5, PROBE)


def test_tail_balance_reports_nonconvergence():
    # a law whose K/H ratio keeps drifting along the probe
    def tail_fn(x):
        x = float(x)
        return 1.0 / (1.0 + x), math.sin(math.log(x)) / (1.0 + x)

    d = tails.DistributionSpec(tail_fn=tail_fn, cf=lambda t: complex(math.exp(-abs(t))))
    est = tails.tail_balance(d, 0.5, (1e1, 1e2, 1e3, 1e4), center=False)
    assert not est.converged
    assert -1.0 <= est.balance_beta <= 1.0


@pytest.mark.parametrize("beta", [-1.0, 0.0, 1.0])
def test_alpha_one_constraint(beta):
    rep = tails.alpha_one_constraint(1.0, 2 * beta / math.pi, PROBE)
    assert rep.passed
    assert abs(rep.k2_limit) <= 1.05 * rep.h2_limit
    assert rep.h2_limit == pytest.approx(2 / math.pi, rel=0.05)
    if beta == 0:
        assert rep.k2_limit == pytest.approx(0.0, abs=1e-6)
    else:
        assert math.copysign(1, rep.k2_limit) == beta
        assert abs(rep.ratio) == pytest.approx(1.0, rel=0.05)
        assert abs(rep.c_prime_estimate) == pytest.approx(2 / math.pi, rel=0.05)


def test_alpha_one_cf_matches_stable():
    for beta in (-0.6, 1.0):
        p = StableParams(1.0, 1.3, beta)
        cf = tails.alpha_one_cf(p.c, p.c_prime)
        for t in (-2.0, 0.3, 5.0):
            assert cf(t) == pytest.approx(stable.cf(p, t), abs=1e-14)


def test_alpha_one_domain():
    with pytest.raises(DomainError):
        tails.alpha_one_constraint(0.0, 0.1, PROBE)
    with pytest.raises(ValueError):
        tails.alpha_one_constraint(1.0, 0.1, (0.5, 10.0, 100.0))
