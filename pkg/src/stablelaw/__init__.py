"""Stable distributions: characteristic exponent, Levy-Khintchine form,
compensated Eulerian integrals, Fourier inversion and tail balance.

Submodules:

* :mod:`stablelaw.special` -- Gamma, sin(pi x), K(alpha), C(kappa), S(kappa)
* :mod:`stablelaw.quadrature` -- oscillatory improper integrals, compensated integrals
* :mod:`stablelaw.stable` -- parameters, cf, stability, pdf/cdf by inversion
* :mod:`stablelaw.levy_khintchine` -- the Levy-Khintchine integral and its closed form
* :mod:`stablelaw.tails` -- tail sums/differences and regular-variation checks
* :mod:`stablelaw.verify` -- identity suites behind ``stablelaw verify``
"""

__version__ = "0.1.0"

from . import errors, special, quadrature, stable, levy_khintchine, tails, verify  # noqa: E402
from .errors import ConvergenceError, DegenerateDistributionError, DomainError, PreconditionError  # noqa: E402
from .quadrature import DEFAULT_CONFIG, QuadratureConfig  # noqa: E402
from .stable import StableParams, cdf, cf, log_cf, log_cf_centered, pdf  # noqa: E402

__all__ = [
    "__version__",
    "errors",
    "special",
    "quadrature",
    "stable",
    "levy_khintchine",
    "tails",
    "verify",
    "ConvergenceError",
    "DegenerateDistributionError",
    "DomainError",
    "PreconditionError",
    "DEFAULT_CONFIG",
    "QuadratureConfig",
    "StableParams",
    "cdf",
    "cf",
    "log_cf",
    "log_cf_centered",
    "pdf",
]
