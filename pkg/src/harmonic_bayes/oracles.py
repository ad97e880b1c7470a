"""Reference answers computed without any spectral machinery.

The grid oracle is plain Bayes on a uniform grid with trapezoid weights; it
shares no code with the FFT or coefficient paths so that agreement between
the two is evidence rather than tautology.  The Gaussian closed forms cover
both the textbook conjugate update on the real line and its restriction to
a bounded interval, which is what a spectral posterior on ``[-pi, pi]``
actually represents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InputContractError, NumericalDegeneracyError

__all__ = [
    "GridPosterior",
    "grid_posterior",
    "trapezoid",
    "conjugate_gaussian_posterior",
    "conjugate_gaussian_sequence",
    "truncated_normal_moments",
    "truncated_gaussian_posterior",
]


def trapezoid(values: np.ndarray, h: float) -> float:
    """Composite trapezoid rule on a uniform grid with spacing ``h``."""
    v = np.asarray(values, dtype=float)
    return float(h * (v.sum() - 0.5 * (v[0] + v[-1])))


@dataclass(frozen=True, eq=False)
class GridPosterior:
    grid: np.ndarray
    density: np.ndarray
    evidence: float

    @property
    def spacing(self) -> float:
        return float(self.grid[1] - self.grid[0])

    def mean(self) -> float:
        return trapezoid(self.grid * self.density, self.spacing)

    def variance(self) -> float:
        m = self.mean()
        return trapezoid((self.grid - m) ** 2 * self.density, self.spacing)

    def mass(self) -> float:
        return trapezoid(self.density, self.spacing)


def _evaluate(fn: Callable, grid: np.ndarray, name: str) -> np.ndarray:
    try:
        vals = np.asarray(fn(grid), dtype=float)
        if vals.shape != grid.shape:
            vals = np.broadcast_to(vals, grid.shape).astype(float)
    except (TypeError, ValueError):
        vals = np.array([float(fn(float(t))) for t in grid])
    if not np.all(np.isfinite(vals)):
        raise InputContractError(f"{name} is not finite on the grid")
    if np.any(vals < 0):
        raise InputContractError(f"{name} takes negative values on the grid")
    return vals


def grid_posterior(
    prior_fn: Callable,
    like_fn: Callable,
    lo: float,
    hi: float,
    M: int,
) -> GridPosterior:
    """Posterior on ``M`` equispaced points of ``[lo, hi]`` (endpoints included).

    The evidence is the trapezoid integral of ``prior * likelihood``; the
    returned density is that product divided by the evidence.
    """
    if int(M) != M or M < 16:
        raise InputContractError(f"grid oracle needs M >= 16 points, got {M!r}")
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise InputContractError(f"need finite lo < hi, got ({lo}, {hi})")
    grid = np.linspace(lo, hi, int(M))
    h = (hi - lo) / (M - 1)
    joint = _evaluate(prior_fn, grid, "prior") * _evaluate(like_fn, grid, "likelihood")
    Z = trapezoid(joint, h)
    if not Z > 0:
        raise NumericalDegeneracyError(f"prior and likelihood do not overlap (evidence {Z!r})")
    return GridPosterior(grid, joint / Z, Z)


def _check_var(name: str, v: float) -> None:
    if not v > 0 or not math.isfinite(v):
        raise InputContractError(f"{name} must be a positive finite variance, got {v!r}")


def conjugate_gaussian_posterior(mu0: float, var0: float, x: float, var_l: float) -> tuple[float, float]:
    """Normal prior ``N(mu0, var0)`` and one observation ``x ~ N(theta, var_l)``."""
    _check_var("var0", var0)
    _check_var("var_l", var_l)
    var_star = 1.0 / (1.0 / var0 + 1.0 / var_l)
    return var_star * (mu0 / var0 + x / var_l), var_star


def conjugate_gaussian_sequence(mu0: float, var0: float, xs, var_l: float) -> tuple[float, float]:
    """Posterior after the observations ``xs``, each with variance ``var_l``."""
    mu, var = mu0, var0
    for x in xs:
        mu, var = conjugate_gaussian_posterior(mu, var, float(x), var_l)
    return mu, var


_SQRT2 = math.sqrt(2.0)


def _phi(z: float) -> float:
    return math.exp(-0.5 * z * z) / math.sqrt(2 * math.pi)


def _Phi_diff(a: float, b: float) -> float:
    # Phi(b) - Phi(a) without cancellation in either tail
    if a >= 0:
        return 0.5 * (math.erfc(a / _SQRT2) - math.erfc(b / _SQRT2))
    if b <= 0:
        return 0.5 * (math.erfc(-b / _SQRT2) - math.erfc(-a / _SQRT2))
    return 1.0 - 0.5 * (math.erfc(-a / _SQRT2) + math.erfc(b / _SQRT2))


def truncated_normal_moments(mu: float, sigma: float, lo: float, hi: float) -> tuple[float, float, float]:
    """``(mass, mean, variance)`` of ``N(mu, sigma^2)`` restricted to ``[lo, hi]``.

    ``mass`` is the probability the untruncated normal puts on the interval,
    so ``1 - mass`` is the truncation deficit.
    """
    _check_var("sigma^2", sigma * sigma)
    a, b = (lo - mu) / sigma, (hi - mu) / sigma
    mass = _Phi_diff(a, b)
    if not mass > 0:
        raise NumericalDegeneracyError("interval carries no mass under this normal")
    pa, pb = _phi(a), _phi(b)
    r = (pa - pb) / mass
    mean = mu + sigma * r
    var = sigma * sigma * (1.0 + (a * pa - b * pb) / mass - r * r)
    return mass, mean, var


def truncated_gaussian_posterior(
    mu0: float, var0: float, x: float, var_l: float, lo: float, hi: float
) -> tuple[float, float, float]:
    """Conjugate update with the prior truncated to ``[lo, hi]``.

    The posterior is the conjugate normal restricted to the same interval;
    returns its ``(mass deficit, mean, variance)``.
    """
    mu, var = conjugate_gaussian_posterior(mu0, var0, x, var_l)
    mass, mean, v = truncated_normal_moments(mu, math.sqrt(var), lo, hi)
    return 1.0 - mass, mean, v
