"""Named density families used as projection inputs.

Each family is a :class:`Density`, a vectorised callable with a short
label.  On a bounded domain Gaussians and mixtures are truncated to the
domain and renormalised to unit mass there (``normalize=False`` keeps the
raw pdf, which is the form a Gaussian likelihood takes).

The text form understood by :func:`parse_density` is the one the CLI
accepts::

    uniform
    gaussian:MU,SIGMA
    mixture:W1,MU1,SIGMA1;W2,MU2,SIGMA2;...
    indicator:A,B
    grid:PATH            (CSV with theta,value columns)
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from .basis import Domain
from .errors import CoefficientFileError, InputContractError
from .oracles import truncated_normal_moments

__all__ = [
    "Density",
    "uniform",
    "gaussian",
    "mixture",
    "indicator",
    "sampled",
    "load_grid_csv",
    "parse_density",
]


@dataclass(frozen=True, eq=False)
class Density:
    fn: Callable[[np.ndarray], np.ndarray]
    label: str

    def __call__(self, theta):
        return self.fn(np.asarray(theta, dtype=float))


def uniform(domain: Domain) -> Density:
    if not domain.bounded:
        raise InputContractError("a uniform density needs a bounded domain")
    level = 1.0 / domain.length
    return Density(lambda t: np.full(np.shape(t), level), f"uniform[{domain.lo:g},{domain.hi:g}]")


def _check_sigma(sigma: float) -> float:
    sigma = float(sigma)
    if not (sigma > 0 and math.isfinite(sigma)):
        raise InputContractError(f"sigma must be positive, got {sigma!r}")
    return sigma


def _normal_pdf(t: np.ndarray, mu: float, sigma: float) -> np.ndarray:
    z = (t - mu) / sigma
    return np.exp(-0.5 * z * z) / (sigma * math.sqrt(2 * math.pi))


def gaussian(mu: float, sigma: float, domain: Domain | None = None, *, normalize: bool = True) -> Density:
    """Normal pdf, truncated and renormalised on a bounded ``domain``."""
    mu, sigma = float(mu), _check_sigma(sigma)
    scale = 1.0
    if normalize and domain is not None and domain.bounded:
        scale = 1.0 / truncated_normal_moments(mu, sigma, domain.lo, domain.hi)[0]
    return Density(lambda t: scale * _normal_pdf(t, mu, sigma), f"gaussian({mu:g},{sigma:g})")


def mixture(components, domain: Domain | None = None) -> Density:
    """Weighted sum of normals; ``components`` holds ``(weight, mu, sigma)`` triples."""
    comps = [(float(w), float(m), _check_sigma(s)) for w, m, s in components]
    if not comps:
        raise InputContractError("a mixture needs at least one component")
    if any(w < 0 for w, _, _ in comps) or sum(w for w, _, _ in comps) <= 0:
        raise InputContractError("mixture weights must be nonnegative with a positive sum")
    total = sum(w for w, _, _ in comps)
    if domain is not None and domain.bounded:
        total = sum(w * truncated_normal_moments(m, s, domain.lo, domain.hi)[0] for w, m, s in comps)

    def fn(t):
        out = np.zeros(np.shape(t))
        for w, m, s in comps:
            out = out + w * _normal_pdf(t, m, s)
        return out / total

    return Density(fn, "mixture(" + ";".join(f"{w:g},{m:g},{s:g}" for w, m, s in comps) + ")")


def indicator(a: float, b: float) -> Density:
    """Uniform density on ``[a, b]``, zero elsewhere."""
    a, b = float(a), float(b)
    if not a < b:
        raise InputContractError(f"indicator needs a < b, got ({a}, {b})")
    level = 1.0 / (b - a)
    return Density(lambda t: np.where((t >= a) & (t <= b), level, 0.0), f"indicator({a:g},{b:g})")


def sampled(thetas, values) -> Density:
    """Piecewise-linear interpolant of samples; zero outside their range."""
    x = np.asarray(thetas, dtype=float)
    y = np.asarray(values, dtype=float)
    if x.ndim != 1 or x.shape != y.shape or x.size < 2:
        raise InputContractError("sampled density needs two equal-length 1-D arrays (>= 2 points)")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise InputContractError("sampled density has non-finite entries")
    order = np.argsort(x, kind="stable")
    x, y = x[order], y[order]
    if np.any(np.diff(x) <= 0):
        raise InputContractError("sample abscissae must be distinct")
    return Density(lambda t: np.interp(t, x, y, left=0.0, right=0.0), f"grid({x.size} pts)")


def load_grid_csv(path: str | Path) -> Density:
    """Read ``theta,value`` rows (an optional header row is skipped)."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    except OSError as exc:
        raise CoefficientFileError(f"cannot read {path}: {exc}") from exc
    xs, ys = [], []
    for i, row in enumerate(rows):
        try:
            x, y = float(row[0]), float(row[1])
        except (ValueError, IndexError):
            if i == 0:
                continue
            raise CoefficientFileError(f"{path}: bad row {i + 1}: {row!r}") from None
        xs.append(x)
        ys.append(y)
    return sampled(xs, ys)


def _numbers(text: str, count: int, family: str) -> list[float]:
    parts = [p.strip() for p in text.split(",")]
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise InputContractError(f"{family}: expected numbers, got {text!r}") from None
    if len(vals) != count:
        raise InputContractError(f"{family}: expected {count} parameters, got {len(vals)}")
    return vals


def parse_density(text: str, domain: Domain, *, normalize: bool = True) -> Density:
    """Build a density from its textual form (see the module docstring)."""
    family, _, args = text.strip().partition(":")
    family = family.lower()
    if family == "uniform":
        return uniform(domain)
    if family == "gaussian":
        mu, sigma = _numbers(args, 2, family)
        return gaussian(mu, sigma, domain, normalize=normalize)
    if family == "mixture":
        comps = [_numbers(c, 3, family) for c in args.split(";") if c.strip()]
        return mixture(comps, domain)
    if family == "indicator":
        a, b = _numbers(args, 2, family)
        return indicator(a, b)
    if family == "grid":
        if not args:
            raise InputContractError("grid: missing file path")
        return load_grid_csv(args)
    raise InputContractError(
        f"unknown density family {family!r} (expected uniform, gaussian, mixture, indicator, grid)"
    )
