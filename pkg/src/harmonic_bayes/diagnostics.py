"""Coefficient decay diagnostics, truncation error and resolution choice.

By Parseval the squared L2 error of keeping ``|k| <= K'`` equals the energy
of the discarded coefficients.  For analytic periodic functions that energy
falls exponentially in ``K'``; a jump or a kink leaves an algebraic tail
``|a_k| ~ |k|^(-alpha)`` and the Gibbs phenomenon that comes with it.

``fit_decay`` estimates which regime a coefficient vector is in.  It works
on the per-wavenumber magnitude ``max(|a_k|, |a_-k|)`` turned into a
monotone envelope (running maximum taken from the tail), so oscillating
spectra such as ``sin(k)/k`` are judged by their peaks rather than their
zeros.  The fit window is ``[K/4, K]``.  When the envelope reaches the noise
floor before ``K`` the spectrum is fully resolved and the window shrinks to
``[k_f/4, k_f]``, ``k_f`` being the last wavenumber above the floor;
otherwise machine noise would masquerade as a flat tail.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .basis import BasisKind, BasisSpec, CoefficientVector, project
from .errors import InputContractError

__all__ = [
    "DecayClass",
    "Verdict",
    "DecayReport",
    "SuitabilityVerdict",
    "magnitude_envelope",
    "tail_energy",
    "fit_decay",
    "recommend_K",
    "suitability",
]

NOISE_FLOOR = 1e-14  # relative to the largest magnitude
SELECTION_MARGIN = 0.10
MIN_POINTS = 4
MIN_DROP = 2.0  # the envelope must fall at least this much across the window


class DecayClass(str, enum.Enum):
    EXPONENTIAL = "exponential"
    ALGEBRAIC = "algebraic"
    FLAT = "flat/undecided"


class Verdict(str, enum.Enum):
    IDEAL = "ideal"
    USABLE = "usable"
    CHALLENGING = "challenging"


@dataclass(frozen=True)
class DecayReport:
    """Outcome of :func:`fit_decay`.

    ``gamma`` and ``alpha`` are the fitted rates of ``C exp(-gamma k)`` and
    ``C k^(-alpha)``; ``exp_quality`` / ``alg_quality`` are the R^2 values of
    the two fits (0 when no fit was possible).  ``tail_energy_at_K`` is the
    energy beyond ``K`` predicted by the winning model, and
    ``tail_energy_half`` the computable energy in ``K/2 < |k| <= K``.
    """

    decay_class: DecayClass
    gamma: float
    alpha: float
    exp_quality: float
    alg_quality: float
    tail_energy_at_K: float
    tail_energy_half: float
    window: tuple[int, int]
    n_points: int

    @property
    def fit_quality(self) -> float:
        if self.decay_class is DecayClass.EXPONENTIAL:
            return self.exp_quality
        if self.decay_class is DecayClass.ALGEBRAIC:
            return self.alg_quality
        return max(self.exp_quality, self.alg_quality)


@dataclass(frozen=True)
class SuitabilityVerdict:
    verdict: Verdict
    reasons: list[str] = field(default_factory=list)


def _magnitudes(coeffs: CoefficientVector) -> np.ndarray:
    # magnitude per wavenumber |k| = 0..K
    spec = coeffs.spec
    mag = np.abs(coeffs.entries)
    if spec.kind is BasisKind.FOURIER:
        K = spec.K
        return np.maximum(mag[K:], mag[:K + 1][::-1])
    return mag.copy()


def magnitude_envelope(coeffs: CoefficientVector) -> np.ndarray:
    """Non-increasing envelope of the magnitudes, indexed by ``|k| = 0..K``."""
    return np.maximum.accumulate(_magnitudes(coeffs)[::-1])[::-1]


def tail_energy(coeffs: CoefficientVector, Kp: int) -> float:
    """Energy of the retained coefficients with ``Kp < |k| <= K``.

    This is the part of the truncation error that the vector itself can
    see; the true error of truncating the underlying function at ``Kp`` is
    at least this large.
    """
    K = coeffs.spec.K
    if isinstance(Kp, bool) or int(Kp) != Kp or not 0 <= Kp <= K:
        raise InputContractError(f"Kp must lie in [0, {K}], got {Kp!r}")
    k = np.abs(coeffs.indices)
    return float(np.sum(np.abs(coeffs.entries[k > Kp]) ** 2))


def _linear_fit(x: np.ndarray, y: np.ndarray) -> tuple[float, float, float, float]:
    # returns slope, intercept, rms residual, R^2
    A = np.column_stack([x, np.ones_like(x)])
    (slope, icpt), *_ = np.linalg.lstsq(A, y, rcond=None)
    resid = y - (slope * x + icpt)
    sse = float(resid @ resid)
    sst = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 - sse / sst if sst > 0 else 0.0
    return float(slope), float(icpt), math.sqrt(sse / len(x)), max(0.0, r2)


def _model_tail(decay: DecayClass, K: int, icpt: float, gamma: float, alpha: float,
                fourier: bool) -> float:
    # energy beyond K predicted by the fitted envelope
    sides = 2.0 if fourier else 1.0
    if decay is DecayClass.EXPONENTIAL:
        c2 = math.exp(2 * icpt)
        r = math.exp(-2 * gamma)
        return sides * c2 * r ** (K + 1) / (1 - r)
    if decay is DecayClass.ALGEBRAIC:
        if 2 * alpha <= 1:
            return math.inf
        c2 = math.exp(2 * icpt)
        # integral of c2 x^(-2 alpha) from K + 1/2 to infinity
        return sides * c2 * (K + 0.5) ** (1 - 2 * alpha) / (2 * alpha - 1)
    return math.nan


def fit_decay(coeffs: CoefficientVector) -> DecayReport:
    """Classify the asymptotic decay of a coefficient vector.

    Both ``log env`` vs ``k`` and ``log env`` vs ``log k`` are fitted by
    least squares on the window described in the module docstring.  A model
    wins only if its rms residual is at least 10% below the other's;
    otherwise, with fewer than four usable points, or when the envelope
    falls by less than a factor of two across the window, the result is
    ``FLAT``.
    """
    K = coeffs.spec.K
    env = magnitude_envelope(coeffs)
    half = tail_energy(coeffs, K // 2)
    top = float(env[0]) if env.size else 0.0

    def flat(window=(0, K), n=0, eq=0.0, aq=0.0, gamma=0.0, alpha=0.0):
        return DecayReport(DecayClass.FLAT, gamma, alpha, eq, aq, math.nan, half, window, n)

    if top == 0.0:
        return flat()
    above = np.nonzero(env > NOISE_FLOOR * top)[0]
    k_f = int(above[-1])
    hi = k_f if k_f < K else K
    lo = min(max(1, hi // 4), hi)
    ks = np.arange(lo, hi + 1)
    vals = env[lo:hi + 1]
    keep = vals > NOISE_FLOOR * top
    ks, vals = ks[keep], vals[keep]
    if ks.size < MIN_POINTS:
        return flat((lo, hi), int(ks.size))

    y = np.log(vals)
    if y[0] - y[-1] < math.log(MIN_DROP):
        return flat((lo, hi), int(ks.size))
    e_slope, e_icpt, e_rms, e_r2 = _linear_fit(ks.astype(float), y)
    a_slope, a_icpt, a_rms, a_r2 = _linear_fit(np.log(ks), y)
    gamma, alpha = -e_slope, -a_slope

    if e_rms < (1 - SELECTION_MARGIN) * a_rms and gamma > 0:
        decay = DecayClass.EXPONENTIAL
        icpt = e_icpt
    elif a_rms < (1 - SELECTION_MARGIN) * e_rms and alpha > 0:
        decay = DecayClass.ALGEBRAIC
        icpt = a_icpt
    else:
        return flat((lo, hi), int(ks.size), e_r2, a_r2, max(gamma, 0.0), alpha)
    beyond = _model_tail(decay, K, icpt, gamma, alpha, coeffs.spec.kind is BasisKind.FOURIER)
    return DecayReport(decay, max(gamma, 0.0), alpha, e_r2, a_r2, beyond, half, (lo, hi), int(ks.size))


def recommend_K(
    f: Callable,
    spec_template: BasisSpec,
    epsilon: float,
    K_max: int,
    *,
    reference: CoefficientVector | None = None,
) -> int | None:
    """Smallest ``K <= K_max`` whose relative tail energy is at most ``epsilon**2``.

    The tail is measured on a reference projection of ``f`` at
    ``K_ref = 2 K_max`` (or on ``reference`` if given).  Returns ``None``
    when no ``K <= K_max`` qualifies.
    """
    if not epsilon > 0:
        raise InputContractError(f"epsilon must be positive, got {epsilon!r}")
    if isinstance(K_max, bool) or int(K_max) != K_max or K_max < 0:
        raise InputContractError(f"K_max must be a nonnegative integer, got {K_max!r}")
    if reference is None:
        reference = project(spec_template.with_K(2 * int(K_max)), f)
    energy = np.abs(reference.entries) ** 2
    total = float(energy.sum())
    if total == 0.0:
        return 0
    # tail[K] = energy with |k| > K, via a reverse cumulative sum over |k|
    per_k = np.bincount(np.abs(reference.indices), weights=energy)
    tail = np.concatenate([np.cumsum(per_k[::-1])[::-1][1:], [0.0]])
    ok = np.nonzero(tail[: int(K_max) + 1] <= epsilon**2 * total)[0]
    return int(ok[0]) if ok.size else None


def suitability(prior_report: DecayReport, like_report: DecayReport) -> SuitabilityVerdict:
    """Rate a prior/likelihood pair for spectral updating."""
    reasons: list[str] = []
    ok_alg = True
    for name, rep in (("prior", prior_report), ("likelihood", like_report)):
        if rep.decay_class is DecayClass.FLAT:
            ok_alg = False
            reasons.append(
                f"{name}: no measurable decay; the truncation at K may be far from converged"
            )
        elif rep.decay_class is DecayClass.ALGEBRAIC:
            if rep.alpha <= 1:
                ok_alg = False
                reasons.append(
                    f"{name}: algebraic decay with alpha={rep.alpha:.2f} <= 1, typical of a "
                    "jump; expect Gibbs oscillation and negative density lobes"
                )
            else:
                reasons.append(
                    f"{name}: algebraic decay with alpha={rep.alpha:.2f}; heavy spectral tail "
                    "needs a large K"
                )
        else:
            reasons.append(f"{name}: exponential decay, gamma={rep.gamma:.3g}")
    if all(r.decay_class is DecayClass.EXPONENTIAL for r in (prior_report, like_report)):
        return SuitabilityVerdict(Verdict.IDEAL, reasons)
    if ok_alg:
        return SuitabilityVerdict(Verdict.USABLE, reasons)
    return SuitabilityVerdict(Verdict.CHALLENGING, reasons)
