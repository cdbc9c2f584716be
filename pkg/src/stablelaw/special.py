"""Real gamma function and the closed-form constants built on it.

Everything here is a scalar, pure function.  The rest of the package uses
these values as exact references, so accuracy near poles and near the
integer points of the trigonometric factors matters more than speed.
"""

import math

from .errors import DomainError

__all__ = [
    "gamma",
    "sinpi",
    "cospi",
    "k_alpha",
    "c_kappa",
    "s_kappa",
    "omega",
    "POLE_TOL",
]

POLE_TOL = 1e-12
ALPHA_ONE_BAND = 1e-6

# Lanczos approximation, g = 7, nine terms.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def sinpi(x):
    """sin(pi * x) with exact argument reduction.

    ``math.sin(math.pi * x)`` loses all relative accuracy next to the
    integers; reducing ``x`` first keeps the zeros exact.
    """
    n = round(x)
    f = x - n
    if abs(f) <= 0.25:
        v = math.sin(math.pi * f)
    else:
        v = math.copysign(math.cos(math.pi * (0.5 - abs(f))), f)
    return -v if n % 2 else v


def cospi(x):
    """cos(pi * x) with exact argument reduction."""
    n = round(x)
    f = abs(x - n)
    if f <= 0.25:
        v = math.cos(math.pi * f)
    else:
        v = math.sin(math.pi * (0.5 - f))
    return -v if n % 2 else v


def _lanczos(r):
    # valid for r >= 0.5
    z = r - 1.0
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    # split the power to delay overflow for large r
    half = t ** (0.5 * (z + 0.5))
    return _SQRT_2PI * half * (half * math.exp(-t)) * acc


def _check_pole(r):
    n = round(r)
    if n <= 0 and abs(r - n) < POLE_TOL:
        raise DomainError(f"gamma has a pole at {n}; got r={r!r}")


def gamma(r):
    """Gamma function for real, non-pole ``r``.

    Arguments below 1/2 go through the reflection formula, the rest through
    a Lanczos sum.

    Raises
    ------
    DomainError
        If ``r`` is within ``POLE_TOL`` of 0, -1, -2, ...
    """
    r = float(r)
    if not math.isfinite(r):
        raise DomainError(f"gamma needs a finite argument, got {r!r}")
    _check_pole(r)
    if r >= 0.5:
        return _lanczos(r)
    return math.pi / (sinpi(r) * _lanczos(1.0 - r))


def k_alpha(alpha):
    """Normalising constant ``-Gamma(-alpha) cos(pi alpha / 2)`` of the stable Levy measure.

    Positive and continuous on (0, 2) with value pi/2 at alpha = 1.  Within
    ``ALPHA_ONE_BAND`` of 1 the equivalent form
    ``Gamma(2 - alpha) cos(pi alpha / 2) / (alpha (1 - alpha))`` is used,
    with the ratio ``cos(pi alpha / 2) / (1 - alpha)`` written as a sinc so
    that it stays finite at alpha = 1.
    """
    alpha = float(alpha)
    if not 0.0 < alpha < 2.0:
        raise DomainError(f"k_alpha needs 0 < alpha < 2, got {alpha!r}")
    d = 1.0 - alpha
    if abs(d) < ALPHA_ONE_BAND:
        # cos(pi a / 2) = sin(pi d / 2)
        x = 0.5 * math.pi * d
        sinc = 1.0 - x * x / 6.0 + x ** 4 / 120.0
        return gamma(2.0 - alpha) / alpha * 0.5 * math.pi * sinc
    return -gamma(-alpha) * cospi(0.5 * alpha)


def _near_integer(x):
    n = round(x)
    return n if abs(x - n) < POLE_TOL else None


def c_kappa(kappa):
    """Cosine-integral constant ``C(kappa) = Gamma(1 - kappa) sin(pi kappa / 2)``.

    Evaluated through the reflected form ``(pi/2) / (Gamma(kappa) cos(pi kappa / 2))``,
    which is finite at the even integers (where the first form is 0 * inf)
    and loses no accuracy near any integer.  Undefined at odd integers.
    """
    kappa = float(kappa)
    if not kappa > 0.0:
        raise DomainError(f"c_kappa needs kappa > 0, got {kappa!r}")
    n = _near_integer(kappa)
    if n is not None and n % 2 == 1:
        raise DomainError(f"C(kappa) is undefined at odd integer kappa={kappa!r}")
    return 0.5 * math.pi / (gamma(kappa) * cospi(0.5 * kappa))


def s_kappa(kappa):
    """Sine-integral constant ``S(kappa) = Gamma(1 - kappa) cos(pi kappa / 2)``.

    Same evaluation strategy as :func:`c_kappa`; undefined at even integers.
    ``S(1) = pi/2`` is the Dirichlet integral.
    """
    kappa = float(kappa)
    if not kappa > 0.0:
        raise DomainError(f"s_kappa needs kappa > 0, got {kappa!r}")
    n = _near_integer(kappa)
    if n is not None and n % 2 == 0:
        raise DomainError(f"S(kappa) is undefined at even integer kappa={kappa!r}")
    return 0.5 * math.pi / (gamma(kappa) * sinpi(0.5 * kappa))


def omega(alpha, t=1.0):
    """Skewness factor of the stable exponent.

    ``tan(pi alpha / 2)`` for alpha != 1 (exactly 0 at alpha = 2) and
    ``-(2/pi) log|t|`` at alpha = 1.  At alpha = 1, t = 0 the value is not
    defined; callers multiply it by sign(0) = 0 and must skip the call.
    """
    alpha = float(alpha)
    if not 0.0 < alpha <= 2.0:
        raise DomainError(f"omega needs 0 < alpha <= 2, got {alpha!r}")
    if alpha == 2.0:
        return 0.0
    if alpha == 1.0:
        if t == 0:
            raise DomainError("omega at alpha = 1 is undefined for t = 0")
        return -2.0 / math.pi * math.log(abs(t))
    return sinpi(0.5 * alpha) / cospi(0.5 * alpha)
