"""Levy-Khintchine representation of the stable exponent with truncation ``sin x``.

The centred stable exponent (see :func:`stablelaw.stable.log_cf_centered`)
equals::

    int (exp(i t x) - 1 - i t sin x) L(dx)

with the Levy density ``L`` of :func:`stablelaw.stable.levy_density`.  Each
half line reduces to the one-sided integral::

    psi_tilde(t) = int_0^inf (exp(i t x) - 1 - i t sin x) x**(-alpha-1) dx
                 = -K(alpha) [|t|**alpha - i t tan(pi alpha/2) (|t|**(alpha-1) - 1)]

whose alpha = 1 value ``-(pi/2)|t| - i t log|t|`` is the continuous limit.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import special
from .errors import DomainError
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    _alg_head,
    compensated_power_integral,
    oscillatory_improper,
)
from .stable import _tan_times_expm1

__all__ = [
    "LkIntegralSpec",
    "lk_exponent_numeric",
    "half_line_exponent_numeric",
    "half_line_exponent",
    "psi_tilde",
    "psi_tilde_numeric",
]

# below this |x| * max(1, |t|) the odd part of the integrand uses its Taylor form
TAYLOR_SWITCH = 1e-3


def _check_alpha(alpha):
    alpha = float(alpha)
    if not 0.0 < alpha < 2.0:
        raise DomainError(f"alpha must lie in (0, 2), got {alpha!r}")
    return alpha


@dataclass(frozen=True)
class LkIntegralSpec:
    """Inputs of :func:`lk_exponent_numeric` bundled and validated."""

    alpha: float
    c: float
    beta: float
    t: float
    config: QuadratureConfig = field(default=DEFAULT_CONFIG)

    def __post_init__(self):
        _check_alpha(self.alpha)
        if not self.c >= 0:
            raise DomainError(f"c must be nonnegative, got {self.c!r}")
        if abs(self.beta) > 1:
            raise DomainError(f"beta must lie in [-1, 1], got {self.beta!r}")
        if not math.isfinite(self.t):
            raise DomainError(f"t must be finite, got {self.t!r}")

    def evaluate(self):
        return lk_exponent_numeric(self.alpha, self.c, self.beta, self.t, self.config)


def half_line_exponent(alpha, t):
    """Closed form ``-K(alpha) |t|**alpha (1 - i sign(t) tan(pi alpha/2))`` for alpha != 1."""
    alpha = _check_alpha(alpha)
    if alpha == 1.0:
        raise DomainError("the half-line integral is not defined at alpha = 1")
    if t == 0:
        return 0j
    return -special.k_alpha(alpha) * abs(t) ** alpha * complex(
        1.0, -math.copysign(1.0, t) * special.omega(alpha)
    )


def half_line_exponent_numeric(alpha, t, config=DEFAULT_CONFIG):
    """``int_0^inf (exp(i t x) - 1 [- i t x]) x**(-alpha-1) dx`` by quadrature.

    The linear term is subtracted only for alpha > 1.  This is the
    compensated power integral with ``r = -alpha`` and ``z = -i t``.
    """
    alpha = _check_alpha(alpha)
    if alpha == 1.0:
        raise DomainError("the half-line integral is not defined at alpha = 1")
    if t == 0:
        return 0j
    return compensated_power_integral(-alpha, complex(0.0, -t), config)


def psi_tilde(alpha, t):
    """Closed form of the one-sided exponent with ``sin x`` truncation."""
    alpha = _check_alpha(alpha)
    t = float(t)
    if t == 0:
        return 0j
    L = math.log(abs(t))
    if alpha == 1.0:
        return complex(-0.5 * math.pi * abs(t), -t * L)
    K = special.k_alpha(alpha)
    return -K * complex(abs(t) ** alpha, -t * float(_tan_times_expm1(alpha, L)))


def _smooth_factor(t):
    """``(exp(i t x) - 1 - i t sin x) / x**2`` as (real, imag) callables."""

    def real(x):
        x = np.asarray(x, dtype=float)
        safe = np.where(x > 0, x, 1.0)
        s = np.sin(0.5 * t * safe) / safe
        return np.where(x > 0, -2.0 * s * s, -0.5 * t * t)

    def imag(x):
        x = np.asarray(x, dtype=float)
        small = x * max(1.0, abs(t)) < TAYLOR_SWITCH
        safe = np.where(small, 1.0, x)
        direct = (np.sin(t * safe) - t * np.sin(safe)) / safe ** 2
        # sin(tx) - t sin x = (t - t^3) x^3/6 + (t^5 - t) x^5/120 + ...
        taylor = (t - t ** 3) * x / 6.0 + (t ** 5 - t) * x ** 3 / 120.0
        return np.where(small, taylor, direct)

    return real, imag


def psi_tilde_numeric(alpha, t, config=DEFAULT_CONFIG):
    """Integrate ``(exp(i t x) - 1 - i t sin x) x**(-alpha-1)`` over ``(0, inf)``.

    The head ``[0, A]`` carries the singular weight ``x**(1 - alpha)``
    explicitly (QAWS) against the bounded factor
    ``(exp(i t x) - 1 - i t sin x) / x**2``.  On ``[A, inf)`` the pieces are
    integrated separately: the ``-1`` term in closed form and the
    ``cos(t x)``, ``sin(t x)``, ``sin x`` terms with the oscillatory engine.
    """
    alpha = _check_alpha(alpha)
    t = float(t)
    if t == 0:
        return 0j
    upper = 4.0 * math.pi / max(1.0, abs(t))
    real, imag = _smooth_factor(t)
    head = complex(
        _alg_head(real, 1.0 - alpha, upper, config),
        _alg_head(imag, 1.0 - alpha, upper, config),
    )

    def amp(x):
        return np.asarray(x, dtype=float) ** (-alpha - 1.0)

    cos_t, _ = oscillatory_improper(amp, "cosine", t, config, start=upper)
    sin_t, _ = oscillatory_improper(amp, "sine", t, config, start=upper)
    sin_1, _ = oscillatory_improper(amp, "sine", 1.0, config, start=upper)
    tail = complex(cos_t - upper ** (-alpha) / alpha, sin_t - t * sin_1)
    return head + tail


def lk_exponent_numeric(alpha, c, beta, t, config=DEFAULT_CONFIG):
    """``int (exp(i t x) - 1 - i t sin x) L(dx)`` for the stable Levy measure.

    The measure has density ``(1 +- beta) c**alpha / (2 K(alpha) |x|**(1+alpha))``
    on the two half lines, so the integral is
    ``c**alpha / (2 K) [(1 + beta) psi_tilde(t) + (1 - beta) psi_tilde(-t)]``
    with both half lines integrated numerically.  Should agree with
    :func:`stablelaw.stable.log_cf_centered`.
    """
    spec = LkIntegralSpec(alpha, c, beta, t, config)
    if t == 0 or c == 0:
        return 0j
    weight = spec.c ** spec.alpha / (2.0 * special.k_alpha(spec.alpha))
    pos = psi_tilde_numeric(spec.alpha, spec.t, config) if beta != -1 else 0j
    neg = psi_tilde_numeric(spec.alpha, -spec.t, config) if beta != 1 else 0j
    return weight * ((1.0 + spec.beta) * pos + (1.0 - spec.beta) * neg)

