"""The stable family S_alpha(c, beta, mu).

Characteristic exponent::

    psi(t) = i mu t - |c t|**alpha * (1 - i beta sign(t) omega_alpha(t))

with ``omega = tan(pi alpha / 2)`` for alpha != 1 and ``-(2/pi) log|t|`` at
alpha = 1.  Functions accept scalar or array ``t``/``x``; scalars come back
as Python ``complex``/``float``.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from . import special
from .errors import DegenerateDistributionError, DomainError
from .quadrature import DEFAULT_CONFIG, oscillatory_improper

__all__ = [
    "StableParams",
    "log_cf",
    "cf",
    "shift_b",
    "log_cf_centered",
    "norming_constant",
    "centering_constant",
    "stability_defect",
    "scaling_c",
    "levy_density",
    "pdf_strict",
    "pdf",
    "cdf",
    "envelope_cutoff",
]

# |alpha - 1| below this uses the alpha = 1 formula in the centred exponent
ALPHA_ONE_TOL = 1e-8


@dataclass(frozen=True)
class StableParams:
    """Index ``alpha`` in (0, 2], scale ``c >= 0``, skewness ``beta`` in [-1, 1], location ``mu``.

    At ``alpha = 2`` the skewness has no effect and is stored as 0.
    """

    alpha: float
    c: float = 1.0
    beta: float = 0.0
    mu: float = 0.0

    def __post_init__(self):
        for name in ("alpha", "c", "beta", "mu"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, float(v))
        if not 0.0 < self.alpha <= 2.0:
            raise DomainError(f"alpha must lie in (0, 2], got {self.alpha!r}")
        if self.c < 0:
            raise DomainError(f"c must be nonnegative, got {self.c!r}")
        if abs(self.beta) > 1.0:
            raise DomainError(f"beta must lie in [-1, 1], got {self.beta!r}")
        if self.alpha == 2.0:
            object.__setattr__(self, "beta", 0.0)

    @property
    def gamma(self):
        """Location constant of the two-sided form of the exponent (equal to ``mu``)."""
        return self.mu

    @property
    def c_prime(self):
        """Skew coefficient: ``beta tan(pi alpha/2)`` for alpha != 1, ``2 beta / pi`` at alpha = 1."""
        if self.alpha == 1.0:
            return 2.0 * self.beta / math.pi
        return self.beta * special.omega(self.alpha)

    @property
    def is_degenerate(self):
        return self.c == 0.0

    def centered(self):
        """Same law with ``mu = 0``."""
        return StableParams(self.alpha, self.c, self.beta, 0.0)


def _scalar_or_array(value, like):
    if np.ndim(like) == 0:
        return value.item() if isinstance(value, np.ndarray) else value
    return value


def log_cf(params, t):
    """Characteristic exponent ``psi(t)``.

    ``psi(0) = 0`` exactly and ``psi(-t)`` is the conjugate of ``psi(t)``
    by construction (only ``|t|`` is ever evaluated).
    """
    t_arr = np.asarray(t, dtype=float)
    a = np.abs(t_arr)
    mod = (params.c * a) ** params.alpha
    if params.alpha == 1.0:
        safe = np.where(a > 0, a, 1.0)
        w = np.where(a > 0, -2.0 / math.pi * np.log(safe), 0.0)
    else:
        w = special.omega(params.alpha)
    pos = -mod * (1.0 - 1j * params.beta * w)
    pos = np.where(a > 0, pos, 0.0 + 0.0j)
    core = np.where(t_arr < 0, np.conj(pos), pos)
    out = 1j * params.mu * t_arr + core
    return _scalar_or_array(out, t)


def cf(params, t):
    """Characteristic function ``exp(psi(t))``."""
    out = np.exp(np.asarray(log_cf(params, t)))
    return _scalar_or_array(out, t)


def shift_b(params):
    """Location shift ``b`` turning ``X`` into ``X - b`` with the centred exponent.

    ``mu + beta c**alpha tan(pi alpha / 2)`` for alpha != 1, ``mu`` at alpha = 1.
    Only defined for 0 < alpha < 2.
    """
    if not 0.0 < params.alpha < 2.0:
        raise DomainError("shift_b is defined for 0 < alpha < 2")
    if params.alpha == 1.0:
        return params.mu
    return params.mu + params.beta * params.c ** params.alpha * special.omega(params.alpha)


def _tan_times_expm1(alpha, logabs):
    """``tan(pi alpha/2) * (|t|**(alpha-1) - 1)`` without the 0*inf at alpha = 1.

    Written as ``[(alpha-1) tan(pi alpha/2)] * [expm1((alpha-1) log|t|)/(alpha-1)]``;
    the first factor tends to -2/pi and the second to log|t|.
    """
    d = alpha - 1.0
    # (alpha-1) tan(pi alpha/2) = -(2/pi) cos(pi d/2) / sinc(d/2)
    lead = -2.0 / math.pi * special.cospi(0.5 * d) / np.sinc(0.5 * d)
    if d == 0.0:
        return lead * logabs
    return lead * np.expm1(d * logabs) / d


def log_cf_centered(alpha, c, beta, t):
    """Exponent of ``X - b`` (see :func:`shift_b`) for 0 < alpha < 2.

    For alpha != 1::

        -c**alpha * (|t|**alpha - i beta tan(pi alpha/2) * t (|t|**(alpha-1) - 1))

    and at alpha = 1 ``-c (|t| + i (2/pi) beta t log|t|)``.  The function is
    continuous in alpha; near 1 the tangent/power product is evaluated in
    a cancellation-free form.
    """
    alpha = float(alpha)
    if not 0.0 < alpha < 2.0:
        raise DomainError(f"log_cf_centered needs 0 < alpha < 2, got {alpha!r}")
    t_arr = np.asarray(t, dtype=float)
    a = np.abs(t_arr)
    safe = np.where(a > 0, a, 1.0)
    L = np.log(safe)
    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        skew = -2.0 / math.pi * t_arr * L
        out = -c * (a - 1j * beta * skew)
    else:
        skew = t_arr * _tan_times_expm1(alpha, L)
        out = -(c ** alpha) * (a ** alpha - 1j * beta * skew)
    out = np.where(a > 0, out, 0.0 + 0.0j)
    return _scalar_or_array(out, t)


def norming_constant(alpha, n):
    """``a_n = n**(1/alpha)``."""
    return float(n) ** (1.0 / alpha)


def centering_constant(params, n):
    """``b_n`` with ``phi(t)**n = phi(a_n t) exp(i b_n t)``."""
    if params.alpha == 1.0:
        return 2.0 / math.pi * params.c * params.beta * n * math.log(n)
    return params.mu * (n - norming_constant(params.alpha, n))


def stability_defect(params, n, t):
    """``|n psi(t) - psi(a_n t) - i b_n t|``; zero up to rounding for a stable law."""
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    a_n = norming_constant(params.alpha, n)
    b_n = centering_constant(params, n)
    t_arr = np.asarray(t, dtype=float)
    resid = n * np.asarray(log_cf(params, t_arr)) - np.asarray(log_cf(params, a_n * t_arr)) - 1j * b_n * t_arr
    return _scalar_or_array(np.abs(resid), t)


def scaling_c(alpha, a, b):
    """Scale ``c`` with ``a X1 + b X2 = c X + d`` in law: ``(a**alpha + b**alpha)**(1/alpha)``."""
    if not 0.0 < alpha <= 2.0:
        raise DomainError(f"alpha must lie in (0, 2], got {alpha!r}")
    if a <= 0 or b <= 0:
        raise DomainError("a and b must be positive")
    return (a ** alpha + b ** alpha) ** (1.0 / alpha)


def levy_density(alpha, c, beta, x):
    """Density of the stable Levy measure with sine truncation.

    ``[(1 - beta) 1(x<0) + (1 + beta) 1(x>0)] c**alpha / (2 K(alpha) |x|**(1+alpha))``
    """
    if not 0.0 < alpha < 2.0:
        raise DomainError("the Levy measure is defined for 0 < alpha < 2")
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr == 0):
        raise DomainError("the Levy density is not defined at x = 0")
    weight = np.where(x_arr > 0, 1.0 + beta, 1.0 - beta)
    out = weight * c ** alpha / (2.0 * special.k_alpha(alpha) * np.abs(x_arr) ** (1.0 + alpha))
    return _scalar_or_array(out, x)


def envelope_cutoff(alpha, c=1.0, level=1e-16):
    """Smallest ``t`` with ``exp(-(c t)**alpha) <= level``."""
    return (-math.log(level)) ** (1.0 / alpha) / c


def _head_points(upper):
    return [upper * 2.0 ** -k for k in range(1, 40)]


def _decaying_integral(g, upper, config):
    val, _ = integrate.quad(
        g, 0.0, upper, epsabs=min(config.inner_tol, config.abs_tol), epsrel=1e-12,
        limit=800, points=_head_points(upper),
    )
    return val


def _fourier_pair(amp_cos, amp_sin, y, upper, config):
    """``int_0^inf amp_cos(t) cos(t y) + amp_sin(t) sin(t y) dt`` for decaying amplitudes."""
    if y == 0 or math.pi / abs(y) >= upper:
        return _decaying_integral(lambda t: amp_cos(t) * np.cos(t * y) + amp_sin(t) * np.sin(t * y), upper, config)
    a, _ = oscillatory_improper(amp_cos, "cosine", y, config)
    b, _ = oscillatory_improper(amp_sin, "sine", y, config)
    return a + b


def pdf_strict(alpha, theta, x, config=DEFAULT_CONFIG):
    """Strictly stable density ``(1/pi) int_0^inf exp(-u**alpha) cos(x u + theta u**alpha) du``.

    The integral is a genuine density iff ``|theta| <= |tan(pi alpha / 2)|``;
    larger ``|theta|`` is allowed so the negativity can be observed.
    """
    if not 0.0 < alpha <= 2.0:
        raise DomainError(f"alpha must lie in (0, 2], got {alpha!r}")
    upper = envelope_cutoff(alpha)

    def amp_cos(u):
        u = np.asarray(u, dtype=float)
        return np.exp(-u ** alpha) * np.cos(theta * u ** alpha)

    def amp_sin(u):
        u = np.asarray(u, dtype=float)
        return -np.exp(-u ** alpha) * np.sin(theta * u ** alpha)

    def one(xv):
        return _fourier_pair(amp_cos, amp_sin, float(xv), upper, config) / math.pi

    if np.ndim(x) == 0:
        return one(x)
    return np.array([one(v) for v in np.ravel(x)]).reshape(np.shape(x))


def _uv(params0):
    def u(t):
        return np.real(cf(params0, np.asarray(t, dtype=float)))

    def v(t):
        return np.imag(cf(params0, np.asarray(t, dtype=float)))

    return u, v


def pdf(params, x, config=DEFAULT_CONFIG):
    """Density by Fourier inversion: ``(1/pi) int_0^inf Re[exp(-i t x) phi(t)] dt``."""
    if params.is_degenerate:
        raise DegenerateDistributionError("a point mass (c = 0) has no density")
    p0 = params.centered()
    u, v = _uv(p0)
    upper = envelope_cutoff(params.alpha, params.c)

    def one(xv):
        y = float(xv) - params.mu
        return _fourier_pair(u, v, y, upper, config) / math.pi

    if np.ndim(x) == 0:
        return one(x)
    return np.array([one(v_) for v_ in np.ravel(x)]).reshape(np.shape(x))


def cdf(params, x, config=DEFAULT_CONFIG):
    """Distribution function by the Gil-Pelaez formula.

    ``F(x) = 1/2 - (1/pi) int_0^inf Im[exp(-i t x) phi(t)] / t dt``
    """
    if params.is_degenerate:
        raise DegenerateDistributionError("cdf inversion needs c > 0")
    p0 = params.centered()
    u, v = _uv(p0)
    upper = envelope_cutoff(params.alpha, params.c)

    def amp_cos(t):
        t = np.asarray(t, dtype=float)
        return v(t) / t

    def amp_sin(t):
        t = np.asarray(t, dtype=float)
        return -u(t) / t

    def one(xv):
        y = float(xv) - params.mu
        if y == 0:
            integral = _decaying_integral(amp_cos, upper, config)
        else:
            integral = _fourier_pair(amp_cos, amp_sin, y, upper, config)
        return 0.5 - integral / math.pi

    if np.ndim(x) == 0:
        return one(x)
    return np.array([one(v_) for v_ in np.ravel(x)]).reshape(np.shape(x))
