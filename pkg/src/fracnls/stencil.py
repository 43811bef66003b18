"""Fractional centered-difference coefficients for the Riesz derivative.

The symmetric discretization of the Riesz derivative of order ``alpha`` in
(1, 2] is built from the weight sequence

    c_k = (-1)^k Gamma(alpha+1) / [Gamma(alpha/2 - k + 1) Gamma(alpha/2 + k + 1)]

which we generate by the ratio recurrence

    c_{k+1} = c_k * (k - alpha/2) / (k + 1 + alpha/2),
    c_0     = Gamma(alpha+1) / Gamma(alpha/2 + 1)^2.

The recurrence is algebraically identical to the gamma formula but avoids
the poles of Gamma(alpha/2 - k + 1) at integer arguments (alpha = 2) and
gamma overflow for large k.  At alpha = 2 the factor (k - alpha/2) vanishes
at k = 1, so every c_k with k >= 2 comes out exactly zero and the sequence
reduces to the 3-point Laplacian stencil [2, -1, 0, ...].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "StencilCoeffs",
    "centered_coeffs",
    "tail_constants",
    "tail_bound",
    "validate_alpha",
]


def validate_alpha(alpha: float) -> float:
    """Validate a fractional order, returning it as a float.

    Raises ValueError unless 1 < alpha <= 2.
    """
    alpha = float(alpha)
    if not (1.0 < alpha <= 2.0) or not math.isfinite(alpha):
        raise ValueError(f"fractional order must satisfy 1 < alpha <= 2, got {alpha}")
    return alpha


@dataclass(frozen=True)
class StencilCoeffs:
    """Weights c_0..c_K of the fractional centered difference.

    Sign pattern: c_0 >= 0 and c_k <= 0 for k >= 1, with |c_k| strictly
    decreasing and the full two-sided sum of |c_k| (k != 0) equal to c_0.
    """

    alpha: float
    coeffs: np.ndarray  # read-only, length K+1

    def __post_init__(self):
        self.coeffs.setflags(write=False)

    def __len__(self) -> int:
        return self.coeffs.size

    @property
    def order(self) -> int:
        """Largest lag K carried by this sequence."""
        return self.coeffs.size - 1


@lru_cache(maxsize=64)
def _coeff_array(alpha: float, K: int) -> np.ndarray:
    ratios = np.empty(K + 1)
    ratios[0] = math.gamma(alpha + 1.0) / math.gamma(alpha / 2.0 + 1.0) ** 2
    if K >= 1:
        k = np.arange(K, dtype=float)
        ratios[1:] = (k - alpha / 2.0) / (k + 1.0 + alpha / 2.0)
    c = np.cumprod(ratios)
    c.setflags(write=False)
    return c

def centered_coeffs(alpha: float, K: int) -> StencilCoeffs:
    """Return c_0..c_K for the Riesz centered difference of order alpha.

    Results are cached per (alpha, K): every operator construction on the
    same grid reuses the identical (read-only) array.
    """
    alpha = validate_alpha(alpha)
    if K < 1:
        raise ValueError(f"need at least lags 0..1, got K={K}")
    return StencilCoeffs(alpha, _coeff_array(alpha, int(K)))


def tail_constants(alpha: float) -> tuple[float, float]:
    """Constants (theta, theta0) bracketing the coefficient tail sums.

    theta  = (1 - (1+alpha)/(5+alpha/2))^(5+alpha/2) e^(1+alpha)
             * Gamma(alpha+1) sin(pi alpha/2) / (pi alpha)
    theta0 = sqrt(2) e^(13/12) Gamma(alpha+1) sin(pi alpha/2) / (pi alpha)

    Both vanish at alpha = 2 where sin(pi alpha/2) = 0.
    """
    alpha = validate_alpha(alpha)
    common = math.gamma(alpha + 1.0) * math.sin(math.pi * alpha / 2.0) / (math.pi * alpha)
    p = 5.0 + alpha / 2.0
    theta = (1.0 - (1.0 + alpha) / p) ** p * math.exp(1.0 + alpha) * common
    theta0 = math.sqrt(2.0) * math.exp(13.0 / 12.0) * common
    return theta, theta0


def tail_bound(alpha: float, k0: int) -> tuple[float, float]:
    """Bracket (lower, upper) for sum_{j>k0} |c_j|, valid for k0 >= 3.

    lower = theta  / (k0 + 1/2)^alpha
    upper = theta0 / (k0 - 1)^alpha
    """
    alpha = validate_alpha(alpha)
    if k0 < 3:
        raise ValueError(f"tail bracket requires k0 >= 3, got {k0}")
    theta, theta0 = tail_constants(alpha)
    return theta / (k0 + 0.5) ** alpha, theta0 / (k0 - 1.0) ** alpha
