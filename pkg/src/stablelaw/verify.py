"""Identity suites: every closed form in the library turned into a residual.

Each suite returns a list of :class:`Check` rows (residual against a
tolerance).  The suites back the ``verify`` CLI command; they use the
library's closed forms and :mod:`scipy.stats` as oracles for the numerical
routes.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, stats

from . import levy_khintchine as lk
from . import quadrature as quad
from . import special
from . import stable
from . import tails
from .quadrature import DEFAULT_CONFIG

__all__ = ["Check", "SUITES", "run_suite", "run_all", "STABILITY_GRID", "REPRESENTATIVE_LAWS"]


@dataclass(frozen=True)
class Check:
    """One verified identity: ``passed`` iff ``residual <= tolerance``."""

    suite: str
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self):
        return bool(self.residual <= self.tolerance)

    def as_row(self):
        return {
            "suite": self.suite,
            "check": self.name,
            "residual": float(self.residual),
            "tolerance": float(self.tolerance),
            "status": "PASS" if self.passed else "FAIL",
        }


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# ---------------------------------------------------------------------------


def special_suite(config=DEFAULT_CONFIG):
    out = []
    grid = [r for r in np.arange(-4.95, 5.0, 0.1) if abs(r - round(r)) > 1e-6]
    refl = max(abs(special.gamma(r) * special.gamma(1 - r) * special.sinpi(r) - math.pi) for r in grid)
    out.append(Check("special", "reflection gamma(r)gamma(1-r)sin(pi r) = pi", refl, 1e-10))
    rec = max(
        abs(special.gamma(r + 1) - r * special.gamma(r)) / abs(special.gamma(r + 1))
        for r in grid if abs(r + 1 - round(r + 1)) > 1e-6
    )
    out.append(Check("special", "recursion gamma(r+1) = r gamma(r)", rec, 1e-10))
    examples = [
        (special.gamma(0.5), math.sqrt(math.pi)),
        (special.gamma(-0.5), -2 * math.sqrt(math.pi)),
        (special.k_alpha(1.0), math.pi / 2),
        (special.k_alpha(0.5), math.sqrt(2 * math.pi)),
        (special.c_kappa(0.5), math.sqrt(math.pi / 2)),
        (special.s_kappa(1.0), math.pi / 2),
        (special.c_kappa(2.0), -math.pi / 2),
    ]
    out.append(Check("special", "closed-form examples", max(_rel(a, b) for a, b in examples), 1e-12))
    alphas = np.arange(1e-3, 2.0, 1e-3)
    ks = np.array([special.k_alpha(a) for a in alphas])
    out.append(Check("special", "K(alpha) > 0 on (0, 2)", float(max(0.0, -ks.min())), 0.0))
    jumps = np.abs(np.diff(ks))
    slope = np.maximum(np.abs(np.gradient(ks))[:-1], np.abs(np.gradient(ks))[1:])
    out.append(Check("special", "K(alpha) continuity (jump / local slope)", float(np.max(jumps / slope)), 10.0))
    near_one = max(abs(special.k_alpha(1 + d) - math.pi / 2) for d in (-1e-8, 1e-8))
    out.append(Check("special", "K(1 +- 1e-8) near pi/2", near_one, 1e-7))
    kap = [k for k in np.arange(0.05, 6.0, 0.05) if abs(k - round(k)) > 1e-6]
    ratio = max(abs(special.c_kappa(k) / special.s_kappa(k) - math.tan(math.pi * k / 2)) /
                max(1.0, abs(math.tan(math.pi * k / 2))) for k in kap)
    out.append(Check("special", "C/S ratio = tan(pi kappa/2)", ratio, 1e-9))
    both = max(
        max(_rel(special.c_kappa(k), special.gamma(1 - k) * math.sin(math.pi * k / 2)),
            _rel(special.s_kappa(k), special.gamma(1 - k) * math.cos(math.pi * k / 2)))
        for k in kap
    )
    out.append(Check("special", "C and S agree with the Gamma(1-kappa) forms", both, 1e-10))
    return out


EULER_R = (-1.5, -0.5, 0.3, 0.7)
EULER_Z = (1.0, -1j, 1 - 1j, 3 + 2j, 2j)
COS_KAPPA = (0.3, 0.5, 1.5, 2.0, 2.5, 3.5)
SIN_KAPPA = (0.3, 0.5, 1.0, 1.5, 2.5, 3.0)
THETAS = (-4.0, -0.5, 0.5, 2.0, 4.0)


def eulerian_suite(config=DEFAULT_CONFIG):
    out = []
    worst_plane, worst_axis = 0.0, 0.0
    for r, z in itertools.product(EULER_R, EULER_Z):
        ref = special.gamma(r) * complex(z) ** (-r)
        err = _rel(quad.compensated_power_integral(r, z, config), ref)
        if complex(z).real == 0:
            worst_axis = max(worst_axis, err)
        else:
            worst_plane = max(worst_plane, err)
    out.append(Check("eulerian", "compensated power integral, Re z > 0", worst_plane, 1e-6))
    out.append(Check("eulerian", "compensated power integral, imaginary axis", worst_axis, 1e-5))
    worst = 0.0
    for k, th in itertools.product(COS_KAPPA, THETAS):
        ref = special.c_kappa(k) * abs(th) ** (k - 1)
        worst = max(worst, _rel(quad.compensated_cosine_integral(k, th, config), ref))
    out.append(Check("eulerian", "compensated cosine integral = C(kappa)|theta|^(kappa-1)", worst, 1e-6))
    worst = 0.0
    for k, th in itertools.product(SIN_KAPPA, THETAS):
        ref = special.s_kappa(k) * math.copysign(1.0, th) * abs(th) ** (k - 1)
        worst = max(worst, _rel(quad.compensated_sine_integral(k, th, config), ref))
    out.append(Check("eulerian", "compensated sine integral = S(kappa)sign(theta)|theta|^(kappa-1)", worst, 1e-6))
    dirichlet = quad.oscillatory_improper(lambda x: 1.0 / x, "sine", 1.0, config)[0]
    out.append(Check("eulerian", "Dirichlet integral = pi/2", abs(dirichlet - math.pi / 2), 1e-8))
    homog = 0.0
    for k in (0.5, 1.5, 2.5):
        base = quad.compensated_cosine_integral(k, 1.0, config)
        for th in (0.5, 2.0, 4.0):
            homog = max(homog, _rel(quad.compensated_cosine_integral(k, th, config) / base, th ** (k - 1)))
    out.append(Check("eulerian", "cosine homogeneity in theta", homog, 10 * config.rel_tol))
    conj = 0.0
    for r, z in itertools.product(EULER_R, (1 - 1j, 3 + 2j)):
        a = quad.compensated_power_integral(r, z, config)
        b = quad.compensated_power_integral(r, complex(z).conjugate(), config)
        conj = max(conj, abs(a - b.conjugate()) / abs(a))
    out.append(Check("eulerian", "conjugate symmetry in z", conj, 1e-8))
    ibp = 0.0
    for r, z in itertools.product((-0.7, -0.3), (1.0, 1 - 1j, 3 + 2j)):
        lhs = quad.compensated_power_integral(r, z, config) * r / z
        rhs = quad.compensated_power_integral(r + 1, z, config)
        ibp = max(ibp, abs(lhs - rhs) / abs(rhs))
    out.append(Check("eulerian", "integration by parts I(r)r/z = I(r+1)", ibp, 1e-8))
    return out


STABILITY_GRID = (
    stable.StableParams(0.5, 1.0, 0.0, 0.0),
    stable.StableParams(0.5, 2.0, 1.0, -1.0),
    stable.StableParams(0.8, 0.5, -1.0, 0.3),
    stable.StableParams(1.0, 1.0, 0.0, 0.0),
    stable.StableParams(1.0, 1.0, 1.0, 0.0),
    stable.StableParams(1.0, 2.0, -1.0, 0.5),
    stable.StableParams(1.0, 0.5, 0.5, -1.0),
    stable.StableParams(1.2, 1.0, 1.0, 0.0),
    stable.StableParams(1.5, 1.0, -1.0, 2.0),
    stable.StableParams(1.5, 0.7, 0.5, 0.0),
    stable.StableParams(1.9, 1.3, 1.0, -0.4),
    stable.StableParams(2.0, 1 / math.sqrt(2), 0.0, 1.0),
)
STABILITY_N = (2, 3, 5, 10)
STABILITY_T = (-7.0, -1.0, -0.1, 0.1, 1.0, 7.0)


def stability_suite(config=DEFAULT_CONFIG):
    out = []
    worst = max(
        stable.stability_defect(p, n, t)
        for p, n, t in itertools.product(STABILITY_GRID, STABILITY_N, STABILITY_T)
    )
    out.append(Check("stability", "functional equation defect", worst, 1e-10))
    ts = np.array(STABILITY_T)
    herm = max(float(np.max(np.abs(stable.cf(p, -ts) - np.conj(stable.cf(p, ts))))) for p in STABILITY_GRID)
    out.append(Check("stability", "Hermitian symmetry cf(-t) = conj cf(t)", herm, 1e-15))
    modulus = max(
        float(np.max(np.abs(np.abs(stable.cf(p, ts)) - np.exp(-np.abs(p.c * ts) ** p.alpha))))
        for p in STABILITY_GRID
    )
    out.append(Check("stability", "modulus |cf| = exp(-|ct|^alpha)", modulus, 1e-14))
    centred = 0.0
    for p in STABILITY_GRID:
        if p.alpha == 2.0:
            continue
        b = stable.shift_b(p)
        for t in STABILITY_T:
            lhs = stable.log_cf(p, t) - 1j * b * t
            rhs = stable.log_cf_centered(p.alpha, p.c, p.beta, t)
            centred = max(centred, abs(lhs - rhs) / (1 + abs(rhs)))
    out.append(Check("stability", "log_cf - i b t = centred exponent", centred, 1e-12))
    semigroup = max(
        abs(stable.norming_constant(p.alpha, m * n) - stable.norming_constant(p.alpha, m) * stable.norming_constant(p.alpha, n))
        / stable.norming_constant(p.alpha, m * n)
        for p in STABILITY_GRID for m, n in ((2, 3), (5, 10))
    )
    out.append(Check("stability", "a_mn = a_m a_n", semigroup, 1e-14))
    scaling = max(
        _rel(stable.scaling_c(a, 3.0, 4.0), ref) for a, ref in ((2.0, 5.0), (1.0, 7.0))
    )
    out.append(Check("stability", "scaling law a^alpha + b^alpha = c^alpha", scaling, 1e-15))
    return out


LK_ALPHAS = (0.3, 0.8, 1.0, 1.2, 1.7)
LK_BETAS = (-1.0, 0.0, 0.5, 1.0)
LK_TS = (-3.0, -1.0, -0.5, 0.5, 1.0, 3.0)
LK_CS = (0.5, 1.0, 2.0)


def lk_suite(config=DEFAULT_CONFIG):
    out = []
    worst = 0.0
    for a, b, t, c in itertools.product(LK_ALPHAS, LK_BETAS, LK_TS, LK_CS):
        ref = stable.log_cf_centered(a, c, b, t)
        worst = max(worst, abs(lk.lk_exponent_numeric(a, c, b, t, config) - ref) / (1 + abs(ref)))
    out.append(Check("lk", "Levy-Khintchine integral = centred exponent", worst, 1e-6))
    worst = 0.0
    kcheck = 0.0
    for a in (0.3, 0.5, 0.8, 1.2, 1.5, 1.7):
        for t in LK_TS:
            worst = max(worst, abs(lk.half_line_exponent_numeric(a, t, config) - lk.half_line_exponent(a, t)))
        # |psi(1)| = K |1 - i tan| = K / |cos(pi a/2)|
        k_rec = abs(lk.half_line_exponent_numeric(a, 1.0, config)) * abs(special.cospi(a / 2))
        kcheck = max(kcheck, abs(k_rec - special.k_alpha(a)))
    out.append(Check("lk", "half-line integrals = -K|t|^alpha(1 - i sign(t) tan)", worst, 1e-6))
    out.append(Check("lk", "K(alpha) reconstructed from the half-line integral", kcheck, 1e-6))
    worst = 0.0
    for a in (0.3, 0.8, 1.0, 1.2, 1.7):
        for t in LK_TS:
            worst = max(worst, abs(lk.psi_tilde_numeric(a, t, config) - lk.psi_tilde(a, t)))
    out.append(Check("lk", "psi_tilde numeric = closed form", worst, 1e-6))
    cont = 0.0
    for t in (-2.0, -0.5, 0.5, 2.0):
        ref = lk.psi_tilde(1.0, t)
        for a in (1 - 1e-4, 1 + 1e-4):
            cont = max(cont, abs(lk.psi_tilde(a, t) - ref) / (1 + abs(ref)))
    out.append(Check("lk", "alpha -> 1 continuity of psi_tilde", cont, 1e-2))
    return out


REPRESENTATIVE_LAWS = (
    stable.StableParams(2.0, 1 / math.sqrt(2), 0.0, 0.0),
    stable.StableParams(1.0, 1.0, 0.0, 0.0),
    stable.StableParams(0.5, 1.0, 1.0, 0.0),
    stable.StableParams(1.5, 1.0, 0.5, 0.3),
)


def _normalisation(p, config, X=50.0):
    """``int_{-X}^{X} pdf`` plus the tail mass ``1 - F(X) + F(-X)``."""
    body = integrate.quad(lambda x: stable.pdf(p, x, config), -X, X, points=[p.mu],
                          limit=500, epsabs=1e-9, epsrel=1e-9)[0]
    return body + 1.0 - stable.cdf(p, X, config) + stable.cdf(p, -X, config)


def inversion_suite(config=DEFAULT_CONFIG):
    out = []
    xs = np.linspace(-5.0, 5.0, 21)
    normal = stable.StableParams(2.0, 1 / math.sqrt(2))
    cauchy = stable.StableParams(1.0, 1.0)
    out.append(Check("inversion", "pdf = normal density (alpha = 2)",
                     float(np.max(np.abs(stable.pdf(normal, xs, config) - stats.norm.pdf(xs)))), 1e-6))
    out.append(Check("inversion", "pdf = Cauchy density (alpha = 1, beta = 0)",
                     float(np.max(np.abs(stable.pdf(cauchy, xs, config) - stats.cauchy.pdf(xs)))), 1e-6))
    levy = stable.StableParams(0.5, 1.0, 1.0, 0.0)
    pos = xs[xs > 0]
    out.append(Check("inversion", "pdf = Levy density (alpha = 1/2, beta = 1)",
                     float(np.max(np.abs(stable.pdf(levy, pos, config) - stats.levy.pdf(pos)))), 1e-6))
    out.append(Check("inversion", "cdf = normal, Cauchy and Levy cdfs", max(
        float(np.max(np.abs(stable.cdf(normal, xs, config) - stats.norm.cdf(xs)))),
        float(np.max(np.abs(stable.cdf(cauchy, xs, config) - stats.cauchy.cdf(xs)))),
        float(np.max(np.abs(stable.cdf(levy, pos, config) - stats.levy.cdf(pos)))),
    ), 1e-6))
    norm_err = max(abs(_normalisation(p, config) - 1.0) for p in REPRESENTATIVE_LAWS)
    out.append(Check("inversion", "pdf integrates to 1", norm_err, 1e-4))
    h = 1e-3
    deriv = 0.0
    for p in REPRESENTATIVE_LAWS:
        grid = np.linspace(-5.0, 5.0, 11)
        fd = (stable.cdf(p, grid + h, config) - stable.cdf(p, grid - h, config)) / (2 * h)
        deriv = max(deriv, float(np.max(np.abs(fd - stable.pdf(p, grid, config)))))
    out.append(Check("inversion", "d/dx cdf = pdf", deriv, 1e-4))
    mono = 0.0
    for p in REPRESENTATIVE_LAWS:
        vals = stable.cdf(p, xs, config)
        mono = max(mono, float(-np.min(np.diff(vals))), float(-np.min(stable.pdf(p, xs, config))))
    out.append(Check("inversion", "cdf nondecreasing and pdf >= 0 up to abs_tol", max(mono, 0.0), config.abs_tol))
    pairs = ((-1.0, 0.5), (0.0, 2.0), (0.3, 3.0), (-4.0, -1.0), (1.0, 10.0))
    gp = 0.0
    for p in (cauchy, levy, stable.StableParams(1.5, 1.0, 0.5, 0.3)):
        phi = lambda t, p=p: stable.cf(p, t)  # noqa: E731
        for x, y in pairs:
            diff = tails.gil_pelaez_cdf(phi, y, config) - tails.gil_pelaez_cdf(phi, x, config)
            gp = max(gp, abs(tails.levy_inversion_diff(phi, x, y, config) - diff))
    out.append(Check("inversion", "Gil-Pelaez difference = Levy inversion", gp, 2e-6))
    rt = 0.0
    for p, ref in ((cauchy, stats.cauchy), (levy, stats.levy)):
        phi = lambda t, p=p: stable.cf(p, t)  # noqa: E731
        for x in (0.5, 1.0, 2.0, 5.0, 10.0):
            H, K = tails.invert_tails(phi, x, config)
            Fp, Fm = ref.cdf(x), ref.cdf(-x)
            rt = max(rt, abs(H - (1 - Fp + Fm)), abs(K - (1 - Fp - Fm)))
    out.append(Check("inversion", "tails from cf = tails from cdf", rt, 1e-5))
    dirac = tails.gil_pelaez_cdf(lambda t: np.ones_like(np.asarray(t, dtype=float)) + 0j, 1.5, config)
    out.append(Check("inversion", "cf = 1 gives the Dirichlet step", abs(dirac - 1.0), 1e-8))
    theta = math.tan(0.35 * math.pi)
    grid = np.linspace(-10.0, 10.0, 401)
    low = float(np.min(stable.pdf_strict(0.7, theta, grid, config)))
    out.append(Check("inversion", "strict density >= -1e-6 at theta = tan(pi alpha/2)", max(0.0, -low), 1e-6))
    low = float(np.min(stable.pdf_strict(0.7, 1.5 * theta, grid, config)))
    out.append(Check("inversion", "strict density < -1e-4 at 1.5 theta (margin past -1e-4)",
                     max(0.0, low + 1e-4), 0.0))
    return out


PARETO_FAMILY = tuple(itertools.product(((1.0, 0.0), (0.7, 0.3), (0.5, 0.5)), (0.5, 1.5)))
PROBE = (1e2, 1e3, 1e4)


def tails_suite(config=DEFAULT_CONFIG):
    out = []
    beta_err, cp_err = 0.0, 0.0
    for (p, q), k in PARETO_FAMILY:
        est = tails.tail_balance(tails.two_sided_pareto(p, q, k), k, PROBE, config, center=True)
        beta_err = max(beta_err, abs(est.diagnostics["raw_beta"] - (p - q)))
        ref = est.diagnostics["c_prime_expected"]
        got = est.diagnostics["c_prime_estimate"]
        cp_err = max(cp_err, abs(got - ref) / abs(ref) if ref != 0 else abs(got))
    out.append(Check("tails", "tail balance beta = p - q (Pareto family)", beta_err, 0.02))
    out.append(Check("tails", "c' = beta tan(pi k/2) (relative)", cp_err, 0.05))
    ratio_err = 0.0
    for (p, q), k in PARETO_FAMILY:
        dist = tails.two_sided_pareto(p, q, k)
        for which in ("hu", "kv", "thm1"):
            est = tails.lemma_ratio(dist, which, k, PROBE, config)
            if not est.degenerate:
                ratio_err = max(ratio_err, abs(est.ratio_series[-1][1] - 1.0))
    out.append(Check("tails", "Pareto lemma ratios at 1e4", ratio_err, 0.05))
    levy = stable.StableParams(0.5, 1.0, 1.0, 0.0)
    dist = tails.from_cf(lambda t: stable.cf(levy, t), "stable(0.5, 1, 1, 0)")
    ratio_err = max(
        abs(tails.lemma_ratio(dist, which, 0.5, PROBE, config).ratio_series[-1][1] - 1.0)
        for which in ("hu", "kv", "thm1")
    )
    out.append(Check("tails", "stable alpha = 1/2 lemma ratios at 1e4 (cf inversion)", ratio_err, 0.05))
    bound, cprime = 0.0, 0.0
    for beta in (-1.0, 0.0, 1.0):
        rep = tails.alpha_one_constraint(1.0, 2 * beta / math.pi, PROBE, config)
        bound = max(bound, abs(rep.k2_limit) - 1.05 * rep.h2_limit, 0.0 if rep.pointwise_ok else math.inf)
        ref = 2 * abs(beta) / math.pi
        err = abs(abs(rep.c_prime_estimate) - ref)
        cprime = max(cprime, err / ref if ref else err)
    out.append(Check("tails", "alpha = 1: |K2 limit| <= 1.05 H2 limit", bound, 0.0))
    out.append(Check("tails", "alpha = 1: |c'| = 2|beta|/pi", cprime, 0.05))
    cum = 0.0
    pareto = tails.two_sided_pareto(0.7, 0.3, 0.5)
    for x in (10.0, 100.0, 1e4):
        for order in (1, 2):
            for kind in ("K", "H"):
                a = tails.cumulative_tails(pareto, x, order, config, kind=kind, route="direct")
                b = tails.cumulative_tails(pareto, x, order, config, kind=kind, route="transform")
                cum = max(cum, abs(a - b) / max(1.0, abs(a)))
    out.append(Check("tails", "cumulative tails: direct = transform", cum, 1e-5))
    tri = 0.0
    for (p, q), k in PARETO_FAMILY:
        d = tails.two_sided_pareto(p, q, k)
        for x in (0.5, 1.0, 2.0, 10.0):
            H, K = tails.tails(d, x, config)
            tri = max(tri, abs(K) - H)
    out.append(Check("tails", "triangle bound |K| <= H", max(tri, 0.0), 0.0))
    return out


SUITES = {
    "special": special_suite,
    "eulerian": eulerian_suite,
    "stability": stability_suite,
    "lk": lk_suite,
    "inversion": inversion_suite,
    "tails": tails_suite,
}


def run_suite(name, config=DEFAULT_CONFIG):
    """Run one suite (or ``"all"``) and return its checks."""
    if name == "all":
        return run_all(config)
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'") from None
    return suite(config)


def run_all(config=DEFAULT_CONFIG):
    out = []
    for name in SUITES:
        out.extend(SUITES[name](config))
    return out

