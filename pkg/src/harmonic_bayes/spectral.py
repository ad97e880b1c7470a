"""Coefficient algebra and the spectral Bayesian update.

For orthonormal Fourier functions on a period of length ``L`` the product
of two basis functions is ``phi_m phi_n = phi_{m+n} / sqrt(L)``.  Hence the
coefficients of ``prior * likelihood`` are ``(a * b) / sqrt(L)`` and the
evidence, the integral of that product, is ``sqrt(L)`` times its zeroth
coefficient, i.e. ``(a * b)_0`` itself.  ``raw`` below always means the
properly scaled coefficient vector of the unnormalized posterior.

Two truncation modes are offered.  ``circular`` wraps wavenumbers modulo
``N = 2K + 1``, the periodized finite update.  ``padded`` computes the full
linear convolution and keeps ``|k| <= K``, which is alias-free whenever the
inputs are bandlimited to ``K``.  Either mode runs on the ``direct`` O(N^2)
reference or on the ``fft`` engine; both must agree to rounding.

Cosine expansions are updated through their even extension: the cosine
series on ``[lo, lo + L]`` is a Fourier series on a period of ``2L`` with
``F_0 = sqrt(2) a_0`` and ``F_{+-k} = a_k``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numba
import numpy as np

from .basis import (
    BasisKind,
    BasisSpec,
    CoefficientVector,
    reconstruct_uniform,
)
from .errors import (
    BasisMismatchError,
    InvalidPosteriorError,
    UnsupportedBasisError,
)
from .fft import circular_convolve_centered, fast_linear_convolve

__all__ = [
    "CoefficientVector",
    "Mode",
    "Engine",
    "UpdateResult",
    "UNDERSHOOT_TOLERANCE",
    "circular_convolve_direct",
    "linear_convolve_direct",
    "convolve",
    "unnormalized_product",
    "bayes_update",
    "evidence",
    "l2_norm",
]

# |Im c0| / |c0| above this means the inputs were not real densities
IMAG_TOLERANCE = 1e-8
# negative values smaller than this fraction of the peak are round-off
UNDERSHOOT_TOLERANCE = 1e-10


class Mode(str, enum.Enum):
    CIRCULAR = "circular"
    PADDED = "padded"


class Engine(str, enum.Enum):
    DIRECT = "direct"
    FFT = "fft"


@dataclass(frozen=True, eq=False)
class UpdateResult:
    """Normalized posterior plus evidence and quality diagnostics.

    ``min_density`` and ``max_density`` are the extremes of the reconstructed
    posterior on a probe grid.  Negative values are never clipped;
    ``undershoot`` is true when the minimum lies below round-off level
    (``UNDERSHOOT_TOLERANCE`` times the peak), the usual sign of Gibbs
    oscillation.  ``aliasing_estimate`` is ``max |c_padded - c_circular|`` and is
    only populated when both modes were computed.
    """

    posterior: CoefficientVector
    evidence_Z: float
    raw_c0: complex
    min_density: float
    mass: float
    mode: Mode
    engine: Engine
    aliasing_estimate: float | None = None
    max_density: float = math.nan

    @property
    def undershoot(self) -> bool:
        return self.min_density < -UNDERSHOOT_TOLERANCE * abs(self.max_density)


@numba.njit(cache=True)
def _circular_sum(a, b, K):
    # c_k = sum_m a_m b_<k-m>, with <n> = ((n + K) mod N) - K; arrays are
    # stored from index -K, so position i holds wavenumber i - K
    n = a.shape[0]
    out = np.zeros(n, dtype=np.complex128)
    for i in range(n):
        acc = 0j
        for j in range(n):
            t = i - j + K
            if t < 0:
                t += n
            elif t >= n:
                t -= n
            acc += a[j] * b[t]
        out[i] = acc
    return out


def _require_same_fourier(a: CoefficientVector, b: CoefficientVector) -> None:
    if a.spec != b.spec:
        raise BasisMismatchError(f"basis mismatch: {a.spec} vs {b.spec}")
    if a.spec.kind is not BasisKind.FOURIER:
        raise UnsupportedBasisError(
            f"direct convolution is defined on Fourier coefficients, got {a.spec.kind.value}"
        )


def circular_convolve_direct(a: CoefficientVector, b: CoefficientVector) -> CoefficientVector:
    """Wrap-around convolution of centred Fourier vectors, summed term by term."""
    _require_same_fourier(a, b)
    return CoefficientVector(a.spec, _circular_sum(a.entries, b.entries, a.spec.K))


def linear_convolve_direct(a: CoefficientVector, b: CoefficientVector) -> np.ndarray:
    """Full convolution, wavenumbers ``-2K..2K`` (length ``2N - 1``)."""
    _require_same_fourier(a, b)
    return np.convolve(a.entries, b.entries)


def _convolve_arrays(a: np.ndarray, b: np.ndarray, K: int, mode: Mode, engine: Engine) -> np.ndarray:
    """Centred convolution ``a (*) b`` truncated to ``-K..K`` (no basis scaling)."""
    if mode is Mode.CIRCULAR:
        if engine is Engine.DIRECT:
            return _circular_sum(a, b, K)
        return circular_convolve_centered(a, b)
    if engine is Engine.DIRECT:
        full = np.convolve(a, b)
    else:
        full = fast_linear_convolve(a, b)
    return full[K:3 * K + 1]


def convolve(
    a: CoefficientVector,
    b: CoefficientVector,
    mode: Mode | str = Mode.PADDED,
    engine: Engine | str = Engine.FFT,
) -> CoefficientVector:
    """Truncated convolution of two Fourier vectors with the chosen mode/engine."""
    _require_same_fourier(a, b)
    return CoefficientVector(
        a.spec, _convolve_arrays(a.entries, b.entries, a.spec.K, Mode(mode), Engine(engine))
    )


def _cosine_to_even(c: np.ndarray) -> np.ndarray:
    K = c.shape[0] - 1
    ext = np.empty(2 * K + 1, dtype=np.complex128)
    ext[K] = math.sqrt(2.0) * c[0]
    ext[K + 1:] = c[1:]
    ext[:K] = c[1:][::-1]
    return ext


def _even_to_cosine(ext: np.ndarray) -> np.ndarray:
    K = ext.shape[0] // 2
    out = ext[K:].copy()
    # the two halves agree for even input; average away rounding asymmetry
    out[1:] = 0.5 * (ext[K + 1:] + ext[:K][::-1])
    out[0] = ext[K] / math.sqrt(2.0)
    return out


def unnormalized_product(
    prior: CoefficientVector,
    likelihood: CoefficientVector,
    mode: Mode | str = Mode.PADDED,
    engine: Engine | str = Engine.FFT,
) -> CoefficientVector:
    """Coefficients of ``prior * likelihood`` (before normalization)."""
    mode, engine = Mode(mode), Engine(engine)
    if prior.spec != likelihood.spec:
        raise BasisMismatchError(f"basis mismatch: {prior.spec} vs {likelihood.spec}")
    spec = prior.spec
    if spec.kind is BasisKind.FOURIER:
        conv = _convolve_arrays(prior.entries, likelihood.entries, spec.K, mode, engine)
        return CoefficientVector(spec, conv / math.sqrt(spec.domain.length))
    if spec.kind is BasisKind.COSINE:
        a = _cosine_to_even(prior.entries)
        b = _cosine_to_even(likelihood.entries)
        conv = _convolve_arrays(a, b, spec.K, mode, engine)
        raw = _even_to_cosine(conv / math.sqrt(2.0 * spec.domain.length))
        return CoefficientVector(spec, raw.real)
    raise UnsupportedBasisError(
        "no product rule is implemented for the Hermite basis; "
        "use it for projection, reconstruction and diagnostics only"
    )


def _constant_coefficient(spec: BasisSpec) -> float:
    # <1, phi_0>: the mass carried by the zeroth coefficient
    if spec.kind is BasisKind.HERMITE:
        raise UnsupportedBasisError("the constant function is not in the Hermite span")
    return math.sqrt(spec.domain.length)


def evidence(raw: CoefficientVector) -> float:
    """Integral of the function whose coefficients are ``raw``: ``sqrt(L) Re(raw_0)``."""
    return _constant_coefficient(raw.spec) * float(raw.entries[raw.spec.position(0)].real)


def l2_norm(coeffs: CoefficientVector) -> float:
    """L2 norm of the expansion, by Parseval."""
    return float(np.sqrt(np.sum(np.abs(coeffs.entries) ** 2)))


def _probe(posterior: CoefficientVector, probe_points: int | None) -> tuple[float, float, float]:
    # (min, max, mass) of the reconstruction on a uniform probe grid
    spec = posterior.spec
    P = probe_points or max(4 * spec.N, 256)
    _, vals = reconstruct_uniform(posterior, P)
    mass = float(np.sum(vals) * spec.domain.length / P)
    return float(np.min(vals)), float(np.max(vals)), mass


def bayes_update(
    prior: CoefficientVector,
    likelihood: CoefficientVector,
    mode: Mode | str = Mode.PADDED,
    engine: Engine | str = Engine.FFT,
    *,
    check_aliasing: bool = False,
    probe_points: int | None = None,
) -> UpdateResult:
    """Posterior coefficients ``c = raw / Z`` with ``Z`` the evidence.

    Raises :class:`InvalidPosteriorError` when ``Z <= 0`` or the zeroth
    coefficient has a non-negligible imaginary part; both indicate inputs
    that are not (well-represented) real densities.
    """
    mode, engine = Mode(mode), Engine(engine)
    raw = unnormalized_product(prior, likelihood, mode, engine)
    spec = raw.spec
    c0 = complex(raw.entries[spec.position(0)])
    if abs(c0.imag) > IMAG_TOLERANCE * abs(c0):
        raise InvalidPosteriorError(
            f"zeroth posterior coefficient is not real: {c0!r}"
        )
    Z = evidence(raw)
    if not Z > 0.0:
        raise InvalidPosteriorError(f"evidence must be positive, got Z = {Z!r}")
    posterior = raw.scaled(1.0 / Z)
    min_density, max_density, mass = _probe(posterior, probe_points)
    alias = None
    if check_aliasing:
        other = Mode.CIRCULAR if mode is Mode.PADDED else Mode.PADDED
        alt = unnormalized_product(prior, likelihood, other, engine)
        alias = float(np.max(np.abs(alt.entries - raw.entries))) / Z
    return UpdateResult(
        posterior=posterior,
        evidence_Z=Z,
        raw_c0=c0,
        min_density=min_density,
        mass=mass,
        mode=mode,
        engine=engine,
        aliasing_estimate=alias,
        max_density=max_density,
    )
