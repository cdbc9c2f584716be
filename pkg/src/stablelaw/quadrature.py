"""Improper and oscillatory integrals on the half line.

The workhorse is :func:`oscillatory_improper`, which cuts ``[start, inf)``
at the zeros of the kernel, integrates each half period, and accelerates
the resulting alternating partial sums with Wynn's epsilon algorithm.  The
compensated power integrals (``x**(r-1) * (exp(-z x) - Taylor part)``) are
assembled from three pieces:

* a head ``[0, A]`` integrated against the algebraic weight ``x**p`` with
  the smooth remainder factored out (series form for small ``|z x|``),
* an oscillatory tail handled by :func:`oscillatory_improper`,
* the subtracted Taylor terms on ``[A, inf)``, integrated in closed form.
"""

import functools
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, special as sp_special

from .errors import ConvergenceError, DomainError

__all__ = [
    "QuadratureConfig",
    "DEFAULT_CONFIG",
    "wynn_epsilon",
    "oscillatory_improper",
    "compensated_power_integral",
    "compensated_cosine_integral",
    "compensated_sine_integral",
    "compensation_order",
    "power_head_integral",
    "power_head_integral_fixed",
]


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and budgets for the improper-integral engine.

    ``abs_tol``/``rel_tol`` bound the final value, ``inner_tol`` bounds each
    half-period segment, ``accel_depth`` is the number of epsilon-table
    column pairs used, and ``max_segments`` caps the number of half periods.
    """

    abs_tol: float = 1e-8
    rel_tol: float = 1e-8
    max_segments: int = 10_000
    accel_depth: int = 8
    inner_tol: float = 1e-10

    def __post_init__(self):
        if not self.abs_tol > 0 or not self.rel_tol > 0:
            raise DomainError("abs_tol and rel_tol must be positive")
        if not self.inner_tol > 0:
            raise DomainError("inner_tol must be positive")
        if self.max_segments < 8:
            raise DomainError("max_segments must be at least 8")
        if self.accel_depth < 2:
            raise DomainError("accel_depth must be at least 2")

    def tolerance(self, value):
        return max(self.abs_tol, self.rel_tol * abs(value))


DEFAULT_CONFIG = QuadratureConfig()

_GL_HI = np.polynomial.legendre.leggauss(32)
_GL_LO = np.polynomial.legendre.leggauss(16)
_BATCH = 16
_QUAD_LIMIT = 400


def wynn_epsilon(partial_sums, order=None):
    """Accelerated limit of a sequence of partial sums.

    Builds the epsilon table up to column ``2 * order`` (or as far as the
    number of sums allows) and returns the deepest even-column entry.  A
    zero difference means the sequence has already settled, in which case
    the last good estimate is returned.
    """
    s = np.asarray(partial_sums, dtype=float)
    n = len(s)
    if n == 0:
        raise ValueError("need at least one partial sum")
    max_col = n - 1 if order is None else min(n - 1, 2 * order)
    prev = np.zeros(n + 1)
    cur = s.copy()
    best = s[-1]
    for p in range(1, max_col + 1):
        diff = np.diff(cur)
        scale = np.maximum(np.abs(cur[1:]), np.abs(cur[:-1]))
        if np.any(np.abs(diff) <= 4 * np.finfo(float).eps * scale) or np.any(diff == 0):
            break
        nxt = prev[1:len(cur)] + 1.0 / diff
        if not np.all(np.isfinite(nxt)):
            break
        prev, cur = cur, nxt
        if p % 2 == 0:
            best = cur[-1]
    return float(best)


def _as_vector_fn(f):
    """Wrap ``f`` so that it maps float arrays to float arrays."""
    probe = np.array([0.5, 1.5])
    try:
        out = np.asarray(f(probe), dtype=float)
        if out.shape == probe.shape:
            return f
    except Exception:
        pass
    return np.vectorize(lambda x: float(f(x)), otypes=[float])


def _quad(g, a, b, config, points=None):
    val, _ = integrate.quad(
        g, a, b, epsabs=config.inner_tol, epsrel=1e-12,
        limit=_QUAD_LIMIT, points=points,
    )
    return val


def _segments_gl(g, edges):
    """Gauss-Legendre sums over consecutive intervals; returns (hi, lo)."""
    a = edges[:-1, None]
    half = 0.5 * (edges[1:] - edges[:-1])[:, None]
    out = []
    for nodes, weights in (_GL_HI, _GL_LO):
        x = a + half * (nodes[None, :] + 1.0)
        y = np.asarray(g(x.ravel()), dtype=float).reshape(x.shape)
        out.append((half[:, 0] * (y @ weights)))
    return out


def _kernel_fn(kernel):
    if kernel == "sine":
        return np.sin
    if kernel == "cosine":
        return np.cos
    raise DomainError(f"kernel must be 'sine' or 'cosine', got {kernel!r}")


def _first_zero_index(kernel, omega, start):
    # sine zeros at k*pi/omega, cosine zeros at (k + 1/2)*pi/omega
    shift = 0.0 if kernel == "sine" else 0.5
    return math.floor(start * omega / math.pi - shift) + 1, shift


def oscillatory_improper(f, kernel, frequency, config=DEFAULT_CONFIG, start=0.0, head_points=None):
    """Integrate ``f(x) * kernel(frequency * x)`` over ``[start, inf)``.

    Parameters
    ----------
    f : callable
        Amplitude; should accept numpy arrays (scalar functions are
        vectorised automatically).  It must be eventually monotone in
        magnitude, or smooth on the scale of a half period, for the
        acceleration to be meaningful.
    kernel : {"sine", "cosine"}
    frequency : float
        Nonzero; a negative value flips the sign of a sine kernel.
    config : QuadratureConfig
    start : float
        Lower limit (default 0).
    head_points : sequence of float, optional
        Breakpoints for the interval up to the first kernel zero (kinks or
        steep power-law behaviour of ``f``); points outside it are ignored.

    Returns
    -------
    value, error : float
        The accelerated limit and the gap between the last two accelerated
        iterates.

    Raises
    ------
    ConvergenceError
        If the accelerated iterates do not settle within
        ``config.max_segments`` half periods.
    """
    if frequency == 0 or not math.isfinite(frequency):
        raise DomainError(f"frequency must be finite and nonzero, got {frequency!r}")
    kern = _kernel_fn(kernel)
    sign = -1.0 if (kernel == "sine" and frequency < 0) else 1.0
    omega = abs(float(frequency))
    f = _as_vector_fn(f)

    def g(x):
        return f(x) * kern(omega * x)

    k0, shift = _first_zero_index(kernel, omega, start)
    first_zero = (k0 + shift) * math.pi / omega
    if first_zero > start:
        pts = None
        if head_points is not None:
            pts = sorted(p for p in head_points if start < p < first_zero) or None
        head = _quad(g, start, first_zero, config, points=pts)
    else:
        head = 0.0

    sums = []
    estimates = []
    total = head
    k = k0
    tiny_run = 0
    depth = config.accel_depth
    need = 2 * depth + 1
    while len(sums) < config.max_segments:
        edges = (np.arange(k, k + _BATCH + 1) + shift) * math.pi / omega
        hi, lo = _segments_gl(g, edges)
        for i in range(_BATCH):
            term = hi[i]
            if abs(hi[i] - lo[i]) > config.inner_tol:
                term = _quad(g, edges[i], edges[i + 1], config)
            total += term
            sums.append(total)
            scale = max(abs(total), 1e-300)
            if abs(term) <= 1e-17 * scale or abs(term) < 1e-300:
                tiny_run += 1
            else:
                tiny_run = 0
            if tiny_run >= 4:
                return sign * total, abs(term)
            if len(sums) >= need:
                estimates.append(wynn_epsilon(sums[-need:], depth))
                if len(estimates) >= 3:
                    e0, e1, e2 = estimates[-3:]
                    tol = config.tolerance(e2)
                    if abs(e2 - e1) <= tol and abs(e1 - e0) <= tol:
                        return sign * e2, abs(e2 - e1)
        k += _BATCH
    raise ConvergenceError(
        f"no convergence within {config.max_segments} half periods "
        f"(frequency={frequency!r}, start={start!r})",
        iterates=[sign * e for e in estimates[-2:]],
    )


def compensation_order(r):
    """Number of Maclaurin terms of ``exp(-z x)`` subtracted for exponent ``r``.

    Zero for ``r > 0`` and ``k + 1`` for ``-(k + 1) < r < -k``.
    """
    return max(0, math.ceil(-r))


def _alg_head(h, expo, upper, config):
    """Integral of ``x**expo * h(x)`` over ``[0, upper]`` with the QAWS weight."""
    val, _ = integrate.quad(
        h, 0.0, upper, weight="alg", wvar=(expo, 0.0),
        epsabs=config.inner_tol, epsrel=1e-12, limit=_QUAD_LIMIT,
    )
    return val


def _series_split(w, small, series, direct):
    w = np.asarray(w, dtype=complex)
    out = np.empty_like(w)
    m = np.abs(w) < small
    if np.any(m):
        out[m] = series(w[m])
    if np.any(~m):
        out[~m] = direct(w[~m])
    return out


def _exp_remainder_over_power(w, m):
    """``(exp(-w) - sum_{i<m} (-w)**i / i!) / w**m`` for complex ``w``."""

    def series(v):
        # sum_{i>=m} (-1)^i v^(i-m) / i!
        acc = np.zeros_like(v)
        term = np.full_like(v, (-1.0) ** m / math.factorial(m))
        for i in range(m, m + 40):
            acc = acc + term
            term = term * (-v) / (i + 1)
        return acc

    def direct(v):
        poly = sum((-v) ** i / math.factorial(i) for i in range(m))
        return (np.exp(-v) - poly) / v ** m

    return _series_split(w, 1.0, series, direct)


def power_head_integral(r, z, upper, config=DEFAULT_CONFIG):
    """``int_0^upper x**(r-1) (exp(-z x) - sum_{i < -r} (-z x)**i / i!) dx``.

    The remainder is divided by its leading power ``x**m`` and the rest is
    integrated against the algebraic weight ``x**(r - 1 + m)``, which is
    integrable because ``r + m > 0``.
    """
    z = complex(z)
    m = compensation_order(r)
    expo = r - 1.0 + m

    def h(x):
        return z ** m * _exp_remainder_over_power(z * np.asarray(x, dtype=float), m)

    re = _alg_head(lambda x: h(x).real, expo, upper, config)
    im = _alg_head(lambda x: h(x).imag, expo, upper, config)
    return complex(re, im)


@functools.lru_cache(maxsize=64)
def _jacobi_rule(nodes, expo):
    return sp_special.roots_jacobi(nodes, 0.0, expo)


def power_head_integral_fixed(r, z, upper=1.0, nodes=None):
    """Vectorised :func:`power_head_integral` over an array of ``z``.

    Uses one Gauss-Jacobi rule with weight ``x**(r - 1 + m)``; the remaining
    factor is entire, so the rule is exact up to rounding once it has a few
    nodes per oscillation of ``exp(-z x)`` over ``[0, upper]``.  ``nodes``
    defaults to ``32 + 1.5 * max|z| * upper``.
    """
    z = np.asarray(z, dtype=complex)
    m = compensation_order(r)
    expo = r - 1.0 + m
    if nodes is None:
        nodes = 32 + int(1.5 * float(np.max(np.abs(z), initial=0.0)) * upper)
    u, w = _jacobi_rule(nodes, expo)
    x = 0.5 * upper * (1.0 + u)
    scale = (0.5 * upper) ** (expo + 1.0)
    zx = z[..., None] * x
    h = z[..., None] ** m * _exp_remainder_over_power(zx.ravel(), m).reshape(zx.shape)
    return scale * (h @ w)


def compensated_power_integral(r, z, config=DEFAULT_CONFIG):
    """Compensated Eulerian integral.

    Computes::

        int_0^inf x**(r-1) * (exp(-z x) - sum_{0 <= i < -r} (-z x)**i / i!) dx

    for real ``r`` (not 0, -1, -2, ...) and complex ``z != 0`` with
    ``Re z >= 0``.  On the imaginary axis ``r < 1`` is required.  The exact
    value is ``Gamma(r) * z**(-r)`` on the principal branch.
    """
    r = float(r)
    z = complex(z)
    n = round(r)
    if n <= 0 and abs(r - n) < 1e-12:
        raise DomainError(f"r must avoid 0, -1, -2, ...; got {r!r}")
    if z == 0 or z.real < 0:
        raise DomainError(f"z must be nonzero with Re z >= 0, got {z!r}")
    lam, theta = z.real, -z.imag
    if lam == 0 and r >= 1:
        raise DomainError("on the imaginary axis the integral needs r < 1")
    m = compensation_order(r)
    upper = 4.0 / abs(z)
    head = power_head_integral(r, z, upper, config)

    # exp(-z x) = exp(-lam x) (cos(theta x) + i sin(theta x))
    if abs(theta) <= lam:
        # the exponential damping wins before a half period has elapsed
        def part(trig):
            return integrate.quad(
                lambda x: x ** (r - 1.0) * math.exp(-lam * x) * trig(theta * x), upper, np.inf,
                epsabs=config.inner_tol, epsrel=1e-12, limit=_QUAD_LIMIT,
            )[0]

        tail = complex(part(math.cos), part(math.sin) if theta else 0.0)
    else:
        def amp(x):
            return x ** (r - 1.0) * np.exp(-lam * x)

        re, _ = oscillatory_improper(amp, "cosine", theta, config, start=upper)
        im, _ = oscillatory_improper(amp, "sine", theta, config, start=upper)
        tail = complex(re, im)
    # subtracted Taylor terms on [upper, inf): int x^(r-1+i) dx = -upper^(r+i)/(r+i)
    poly_tail = sum(
        (-z) ** i / math.factorial(i) * (-(upper ** (r + i)) / (r + i)) for i in range(m)
    )
    return head + tail - poly_tail


def _trig_remainder_over_power(w, first, terms):
    """``(trig(w) - sum of the first `terms` Maclaurin terms) / w**lead``.

    ``first`` is 0 for cosine (powers 0, 2, 4, ...) and 1 for sine.
    """
    lead = first + 2 * terms

    def series(v):
        acc = np.zeros_like(v)
        v2 = v * v
        term = np.full_like(v, (-1.0) ** terms / math.factorial(lead))
        for j in range(terms, terms + 25):
            acc = acc + term
            p = first + 2 * j
            term = -term * v2 / ((p + 1) * (p + 2))
        return acc

    def direct(v):
        base = np.cos(v) if first == 0 else np.sin(v)
        poly = sum(
            (-1.0) ** j * v ** (first + 2 * j) / math.factorial(first + 2 * j)
            for j in range(terms)
        )
        return (base - poly) / v ** lead

    return _series_split(w, 1.0, series, direct).real


def _compensated_trig(kappa, omega, first, config):
    # number of subtracted terms: j < (kappa - 1 - first) / 2
    terms = max(0, math.ceil((kappa - 1.0 - first) / 2.0))
    lead = first + 2 * terms
    expo = lead - kappa
    upper = (3.5 if first == 0 else 3.0) * math.pi / omega

    def h(x):
        return omega ** lead * _trig_remainder_over_power(omega * np.asarray(x, dtype=float), first, terms)

    head = _alg_head(h, expo, upper, config)
    kernel = "cosine" if first == 0 else "sine"
    tail, _ = oscillatory_improper(lambda x: x ** (-kappa), kernel, omega, config, start=upper)
    poly_tail = 0.0
    for j in range(terms):
        p = first + 2 * j
        coeff = (-1.0) ** j * omega ** p / math.factorial(p)
        poly_tail += coeff * upper ** (p - kappa + 1.0) / (kappa - p - 1.0)
    return head + tail - poly_tail


def compensated_cosine_integral(kappa, theta, config=DEFAULT_CONFIG):
    """``int_0^inf x**(-kappa) (cos(theta x) - sum_{j < (kappa-1)/2} (-1)^j (theta x)^(2j)/(2j)!) dx``.

    Defined for ``kappa > 0`` not an odd integer; equals
    ``c_kappa(kappa) * |theta|**(kappa - 1)``.
    """
    kappa = float(kappa)
    if not kappa > 0:
        raise DomainError(f"kappa must be positive, got {kappa!r}")
    n = round(kappa)
    if n % 2 == 1 and abs(kappa - n) < 1e-12:
        raise DomainError(f"cosine integral diverges at odd kappa={kappa!r}")
    if theta == 0:
        raise DomainError("theta must be nonzero")
    return _compensated_trig(kappa, abs(float(theta)), 0, config)


def compensated_sine_integral(kappa, theta, config=DEFAULT_CONFIG):
    """``int_0^inf x**(-kappa) (sin(theta x) - sum_{j < (kappa-2)/2} (-1)^j (theta x)^(2j+1)/(2j+1)!) dx``.

    Defined for ``kappa > 0`` not an even integer; equals
    ``s_kappa(kappa) * sign(theta) * |theta|**(kappa - 1)``.
    """
    kappa = float(kappa)
    if not kappa > 0:
        raise DomainError(f"kappa must be positive, got {kappa!r}")
    n = round(kappa)
    if n % 2 == 0 and abs(kappa - n) < 1e-12:
        raise DomainError(f"sine integral diverges at even kappa={kappa!r}")
    if theta == 0:
        raise DomainError("theta must be nonzero")
    val = _compensated_trig(kappa, abs(float(theta)), 1, config)
    return val if theta > 0 else -val
