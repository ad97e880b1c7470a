"""Orthonormal bases, quadrature rules and the density <-> coefficient maps.

Three bases are supported, each tied to the domain whose boundary behaviour
it models:

=========  ======================  =====================================
kind       domain                  basis functions
=========  ======================  =====================================
fourier    periodic ``[lo, hi)``   ``exp(2j*pi*k*(t - c)/L) / sqrt(L)``
cosine     interval ``[lo, hi]``   ``sqrt(2/L) cos(pi*k*(t - lo)/L)``
hermite    real line               ``(2^k k! sqrt(pi))^(-1/2) H_k(t) e^(-t^2/2)``
=========  ======================  =====================================

Here ``L = hi - lo`` and ``c`` is the midpoint, so on the default
``[-pi, pi]`` the Fourier functions are ``exp(1j*k*t) / sqrt(2*pi)``.  The
cosine basis uses ``1/sqrt(L)`` for ``k = 0``; the ``sqrt(2/L)`` factor is
only unit-norm for ``k >= 1``.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BasisMismatchError, DomainError, InputContractError
from .fft import dft, idft

__all__ = [
    "BasisKind",
    "DomainKind",
    "Domain",
    "BasisSpec",
    "CoefficientVector",
    "QuadratureRule",
    "BasisAdvice",
    "Moments",
    "ImaginaryResidualWarning",
    "eval_basis",
    "basis_matrix",
    "hermite_functions",
    "gauss_hermite",
    "quadrature_for",
    "project",
    "reconstruct",
    "reconstruct_uniform",
    "moments",
    "advise_basis",
]

_CHUNK = 2048


class BasisKind(str, enum.Enum):
    FOURIER = "fourier"
    COSINE = "cosine"
    HERMITE = "hermite"


class DomainKind(str, enum.Enum):
    PERIODIC = "periodic"
    INTERVAL = "interval"
    REAL_LINE = "real-line"


_REQUIRED_DOMAIN = {
    BasisKind.FOURIER: DomainKind.PERIODIC,
    BasisKind.COSINE: DomainKind.INTERVAL,
    BasisKind.HERMITE: DomainKind.REAL_LINE,
}


class ImaginaryResidualWarning(UserWarning):
    """A reconstruction that should be real carries an imaginary part."""


@dataclass(frozen=True)
class Domain:
    kind: DomainKind
    lo: float | None = None
    hi: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", DomainKind(self.kind))
        if self.kind is DomainKind.REAL_LINE:
            if self.lo is not None or self.hi is not None:
                raise DomainError("the real line takes no bounds")
            return
        if self.lo is None or self.hi is None:
            raise DomainError(f"{self.kind.value} domain needs lo and hi")
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise DomainError(f"need finite lo < hi, got ({lo}, {hi})")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def periodic(cls, lo: float = -math.pi, hi: float = math.pi) -> "Domain":
        return cls(DomainKind.PERIODIC, lo, hi)

    @classmethod
    def interval(cls, lo: float, hi: float) -> "Domain":
        return cls(DomainKind.INTERVAL, lo, hi)

    @classmethod
    def real_line(cls) -> "Domain":
        return cls(DomainKind.REAL_LINE)

    @property
    def bounded(self) -> bool:
        return self.kind is not DomainKind.REAL_LINE

    @property
    def length(self) -> float:
        if not self.bounded:
            return math.inf
        return self.hi - self.lo

    @property
    def center(self) -> float:
        return 0.0 if not self.bounded else 0.5 * (self.lo + self.hi)

    def check(self, thetas) -> np.ndarray:
        t = np.asarray(thetas, dtype=float)
        if not np.all(np.isfinite(t)):
            raise DomainError("evaluation points must be finite")
        if self.bounded:
            tol = 1e-12 * self.length
            if np.any(t < self.lo - tol) or np.any(t > self.hi + tol):
                raise DomainError(
                    f"points outside [{self.lo}, {self.hi}]: "
                    f"range [{t.min()}, {t.max()}]"
                )
        return t


@dataclass(frozen=True)
class BasisSpec:
    """Basis kind, domain and truncation order ``K``."""

    kind: BasisKind
    domain: Domain
    K: int

    def __post_init__(self):
        object.__setattr__(self, "kind", BasisKind(self.kind))
        if isinstance(self.K, bool) or int(self.K) != self.K or self.K < 0:
            raise InputContractError(f"K must be a nonnegative integer, got {self.K!r}")
        object.__setattr__(self, "K", int(self.K))
        need = _REQUIRED_DOMAIN[self.kind]
        if self.domain.kind is not need:
            raise DomainError(
                f"{self.kind.value} basis requires a {need.value} domain, "
                f"got {self.domain.kind.value}"
            )

    @classmethod
    def fourier(cls, K: int, lo: float = -math.pi, hi: float = math.pi) -> "BasisSpec":
        return cls(BasisKind.FOURIER, Domain.periodic(lo, hi), K)

    @classmethod
    def cosine(cls, K: int, lo: float = 0.0, hi: float = 1.0) -> "BasisSpec":
        return cls(BasisKind.COSINE, Domain.interval(lo, hi), K)

    @classmethod
    def hermite(cls, K: int) -> "BasisSpec":
        return cls(BasisKind.HERMITE, Domain.real_line(), K)

    @property
    def N(self) -> int:
        return 2 * self.K + 1 if self.kind is BasisKind.FOURIER else self.K + 1

    @property
    def k_min(self) -> int:
        return -self.K if self.kind is BasisKind.FOURIER else 0

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.k_min, self.K + 1)

    def position(self, k: int) -> int:
        if isinstance(k, bool) or int(k) != k or not self.k_min <= k <= self.K:
            raise InputContractError(
                f"index {k!r} outside [{self.k_min}, {self.K}] for {self.kind.value}"
            )
        return int(k) - self.k_min

    def with_K(self, K: int) -> "BasisSpec":
        return BasisSpec(self.kind, self.domain, K)


class CoefficientVector:
    """Spectral coefficients of one function in a :class:`BasisSpec`.

    Entries are ordered from the lowest retained wavenumber upward
    (``-K..K`` for Fourier, ``0..K`` otherwise) and are read-only.
    """

    __slots__ = ("spec", "entries")

    def __init__(self, spec: BasisSpec, entries):
        arr = np.array(entries, dtype=np.complex128).reshape(-1)
        if arr.shape[0] != spec.N:
            raise InputContractError(
                f"{spec.kind.value} K={spec.K} needs {spec.N} entries, got {arr.shape[0]}"
            )
        if not np.all(np.isfinite(arr)):
            raise InputContractError("coefficient entries must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "entries", arr)

    def __setattr__(self, name, value):
        raise AttributeError("CoefficientVector is immutable")

    def __len__(self) -> int:
        return self.entries.shape[0]

    def __repr__(self) -> str:
        return f"CoefficientVector({self.spec.kind.value}, K={self.spec.K})"

    @property
    def indices(self) -> np.ndarray:
        return self.spec.indices

    def at(self, k: int) -> complex:
        return complex(self.entries[self.spec.position(k)])

    def scaled(self, factor: complex) -> "CoefficientVector":
        return CoefficientVector(self.spec, self.entries * factor)

    def __add__(self, other: "CoefficientVector") -> "CoefficientVector":
        if other.spec != self.spec:
            raise BasisMismatchError("cannot add coefficients from different bases")
        return CoefficientVector(self.spec, self.entries + other.entries)

    def truncated(self, K: int) -> "CoefficientVector":
        """Keep wavenumbers ``|k| <= K`` (a smaller spec)."""
        if not 0 <= K <= self.spec.K:
            raise InputContractError(f"cannot truncate K={self.spec.K} to {K}")
        lo = self.spec.position(-K if self.spec.kind is BasisKind.FOURIER else 0)
        hi = self.spec.position(K)
        return CoefficientVector(self.spec.with_K(K), self.entries[lo:hi + 1])

    def padded(self, K: int) -> "CoefficientVector":
        """Zero-extend to a larger order ``K``."""
        if K < self.spec.K:
            raise InputContractError(f"cannot pad K={self.spec.K} down to {K}")
        spec = self.spec.with_K(K)
        out = np.zeros(spec.N, dtype=np.complex128)
        start = spec.position(self.spec.k_min)
        out[start:start + self.spec.N] = self.entries
        return CoefficientVector(spec, out)


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes and positive weights approximating an integral over a domain.

    ``scaled_weights`` is only set for Gauss-Hermite rules, where it holds
    ``weights * exp(nodes**2)``: the rule then integrates plain ``g(x) dx``
    rather than ``g(x) exp(-x^2) dx``.
    """

    nodes: np.ndarray
    weights: np.ndarray
    exactness_note: str
    scheme: str
    scaled_weights: np.ndarray | None = None

    def __post_init__(self):
        if self.nodes.shape != self.weights.shape:
            raise InputContractError("nodes and weights differ in length")

    def __len__(self) -> int:
        return self.nodes.shape[0]

    @property
    def effective_weights(self) -> np.ndarray:
        return self.weights if self.scaled_weights is None else self.scaled_weights


@dataclass(frozen=True)
class BasisAdvice:
    kind: BasisKind
    rationale: str
    warning: bool = False


@dataclass(frozen=True)
class Moments:
    mass: float
    mean: float
    variance: float


def hermite_functions(K: int, x) -> np.ndarray:
    """Values ``psi_k(x)`` for ``k = 0..K`` as an array of shape ``(len(x), K+1)``.

    Uses the normalized form of ``H_{k+1} = 2x H_k - 2k H_{k-1}``, which keeps
    every intermediate bounded.
    """
    x = np.asarray(x, dtype=float).reshape(-1)
    out = np.empty((x.shape[0], K + 1))
    out[:, 0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if K >= 1:
        out[:, 1] = math.sqrt(2.0) * x * out[:, 0]
    for k in range(1, K):
        out[:, k + 1] = (
            math.sqrt(2.0 / (k + 1)) * x * out[:, k]
            - math.sqrt(k / (k + 1)) * out[:, k - 1]
        )
    return out


def _fourier_phase(spec: BasisSpec, t: np.ndarray) -> np.ndarray:
    L = spec.domain.length
    return np.exp(1j * np.outer(t - spec.domain.center, 2 * np.pi * spec.indices / L)) / math.sqrt(L)


def basis_matrix(spec: BasisSpec, thetas) -> np.ndarray:
    """Matrix ``B[j, i] = phi_{k_i}(theta_j)`` over all retained indices."""
    t = spec.domain.check(thetas).reshape(-1)
    if spec.kind is BasisKind.FOURIER:
        return _fourier_phase(spec, t)
    if spec.kind is BasisKind.COSINE:
        L = spec.domain.length
        ks = spec.indices
        vals = np.cos(np.outer(t - spec.domain.lo, np.pi * ks / L)) * math.sqrt(2.0 / L)
        vals[:, 0] = 1.0 / math.sqrt(L)
        return vals.astype(np.complex128)
    return hermite_functions(spec.K, t).astype(np.complex128)


def eval_basis(spec: BasisSpec, k: int, theta):
    """Value of ``phi_k`` at ``theta`` (scalar or array)."""
    spec.position(k)
    t = spec.domain.check(theta)
    if spec.kind is BasisKind.FOURIER:
        L = spec.domain.length
        vals = np.exp(2j * np.pi * k * (t - spec.domain.center) / L) / math.sqrt(L)
    elif spec.kind is BasisKind.COSINE:
        L = spec.domain.length
        if k == 0:
            vals = np.full(t.shape, 1.0 / math.sqrt(L))
        else:
            vals = math.sqrt(2.0 / L) * np.cos(np.pi * k * (t - spec.domain.lo) / L)
        vals = vals.astype(np.complex128)
    else:
        vals = hermite_functions(int(k), t.reshape(-1))[:, -1].reshape(t.shape)
        vals = vals.astype(np.complex128)
    if np.ndim(theta) == 0:
        return complex(vals)
    return vals


def gauss_hermite(M: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``M``-point Gauss-Hermite rule for the weight ``exp(-x^2)``.

    Returns ``(nodes, weights, scaled_weights)`` with
    ``scaled_weights = weights * exp(nodes**2)``, computed without forming
    the exponential.  Nodes start from the Golub-Welsch eigenvalues and are
    polished by Newton iteration on the normalized recurrence.
    """
    if M < 1:
        raise InputContractError("need at least one node")
    if M == 1:
        return np.zeros(1), np.array([math.sqrt(math.pi)]), np.array([math.sqrt(math.pi)])
    off = np.sqrt(np.arange(1, M) / 2.0)
    jacobi = np.diag(off, 1) + np.diag(off, -1)
    x = np.linalg.eigvalsh(jacobi)
    for _ in range(100):
        psi = hermite_functions(M, x)
        # psi_M' = sqrt(2M) psi_{M-1} - x psi_M
        step = psi[:, M] / (math.sqrt(2.0 * M) * psi[:, M - 1] - x * psi[:, M])
        x = x - step
        if np.max(np.abs(step)) < 1e-15 * max(1.0, np.max(np.abs(x))):
            break
    x = 0.5 * (x - x[::-1])  # exact symmetry
    # w_j exp(x_j^2) = 1 / (M psi_{M-1}(x_j)^2)
    psi_prev = hermite_functions(M - 1, x)[:, M - 1]
    scaled = 1.0 / (M * psi_prev**2)
    scaled = 0.5 * (scaled + scaled[::-1])
    weights = scaled * np.exp(-x * x)
    return x, weights, scaled


def quadrature_for(spec: BasisSpec, M: int, scheme: str | None = None) -> QuadratureRule:
    """Quadrature rule with ``M >= spec.N`` nodes suited to ``spec``.

    ``scheme``: Fourier takes ``"uniform"`` (default) or ``"gauss-legendre"``;
    cosine takes ``"midpoint"`` (default) or ``"gauss-legendre"``.  The
    uniform rule is exact on trigonometric polynomials but only second order
    for densities whose periodic extension has a kink or jump; Gauss-Legendre
    then converges much faster.
    """
    if isinstance(M, bool) or int(M) != M or M < spec.N:
        raise InputContractError(f"need M >= N = {spec.N} quadrature nodes, got {M!r}")
    M = int(M)
    if spec.kind is BasisKind.FOURIER and scheme == "gauss-legendre":
        # not exact for trigonometric polynomials, but spectrally accurate for
        # functions that are smooth on the closed interval yet not periodic
        y, w = np.polynomial.legendre.leggauss(M)
        L = spec.domain.length
        nodes = spec.domain.lo + 0.5 * L * (y + 1.0)
        note = f"exact for polynomials of degree <= {2 * M - 1}"
        return QuadratureRule(nodes, 0.5 * L * w, note, "gauss-legendre")
    if spec.kind is BasisKind.FOURIER:
        if scheme not in (None, "uniform"):
            raise InputContractError(f"unknown Fourier scheme {scheme!r}")
        L = spec.domain.length
        nodes = spec.domain.lo + L * np.arange(M) / M
        weights = np.full(M, L / M)
        note = f"exact for trigonometric polynomials of degree < {M}"
        return QuadratureRule(nodes, weights, note, "uniform")
    if spec.kind is BasisKind.COSINE:
        lo, L = spec.domain.lo, spec.domain.length
        scheme = scheme or "midpoint"
        if scheme == "midpoint":
            nodes = lo + L * (np.arange(M) + 0.5) / M
            weights = np.full(M, L / M)
            note = f"exact for cosines cos(pi*k*t/L) with k < {2 * M}"
        elif scheme == "gauss-legendre":
            y, w = np.polynomial.legendre.leggauss(M)
            nodes = lo + 0.5 * L * (y + 1.0)
            weights = 0.5 * L * w
            note = f"exact for polynomials of degree <= {2 * M - 1}"
        else:
            raise InputContractError(f"unknown cosine scheme {scheme!r}")
        return QuadratureRule(nodes, weights, note, scheme)
    if scheme not in (None, "gauss-hermite"):
        raise InputContractError(f"unknown Hermite scheme {scheme!r}")
    x, w, scaled = gauss_hermite(M)
    note = f"exact for p(x) exp(-x^2), deg p <= {2 * M - 1}"
    return QuadratureRule(x, w, note, "gauss-hermite", scaled_weights=scaled)


def _sample(f: Callable, nodes: np.ndarray, allow_complex: bool) -> np.ndarray:
    try:
        vals = np.asarray(f(nodes))
    except (TypeError, ValueError):
        vals = None
    if vals is None or vals.shape != nodes.shape:
        vals = np.array([f(x) for x in nodes])
    if np.iscomplexobj(vals):
        if not allow_complex:
            if np.any(vals.imag != 0):
                raise InputContractError("complex function values need the Fourier basis")
            vals = vals.real
    vals = vals.astype(np.complex128 if np.iscomplexobj(vals) else float)
    if not np.all(np.isfinite(vals)):
        bad = nodes[~np.isfinite(vals)][0]
        raise InputContractError(f"function is not finite at node {bad!r}")
    return vals


def _is_standard_uniform(spec: BasisSpec, rule: QuadratureRule) -> bool:
    M = len(rule)
    L = spec.domain.length
    return (
        spec.kind is BasisKind.FOURIER
        and rule.scheme == "uniform"
        and np.isclose(rule.nodes[0], spec.domain.lo, rtol=0, atol=1e-14 * L)
        and np.allclose(rule.weights, L / M, rtol=1e-14, atol=0)
    )


def project(
    spec: BasisSpec,
    f: Callable,
    rule: QuadratureRule | None = None,
    *,
    oversample: float = 2.0,
) -> CoefficientVector:
    """Coefficients ``a_k = <f, phi_k>`` by quadrature.

    ``f`` must accept an array of nodes (or a scalar, as a fallback).
    Unnormalized functions are fine.  By default the rule has ``2N``
    nodes; a user-supplied rule must have at least ``oversample * N``.
    """
    if rule is None:
        rule = quadrature_for(spec, max(spec.N, math.ceil(oversample * spec.N)))
    elif len(rule) < oversample * spec.N:
        raise InputContractError(
            f"rule has {len(rule)} nodes; projection needs >= {oversample} x N = "
            f"{oversample * spec.N:g} (pass oversample=1 to relax)"
        )
    vals = _sample(f, rule.nodes, spec.kind is BasisKind.FOURIER)
    if _is_standard_uniform(spec, rule):
        M = len(rule)
        L = spec.domain.length
        spectrum = dft(vals)
        ks = spec.indices
        coeffs = math.sqrt(L) / M * np.where(ks % 2 == 0, 1.0, -1.0) * spectrum[ks % M]
        return CoefficientVector(spec, coeffs)
    weighted = vals * rule.effective_weights
    coeffs = np.zeros(spec.N, dtype=np.complex128)
    for start in range(0, len(rule), _CHUNK):
        sl = slice(start, start + _CHUNK)
        coeffs += weighted[sl] @ np.conj(basis_matrix(spec, rule.nodes[sl]))
    if spec.kind is not BasisKind.FOURIER:
        coeffs = coeffs.real.astype(np.complex128)
    return CoefficientVector(spec, coeffs)


def _real_part(vals: np.ndarray) -> np.ndarray:
    scale = max(1.0, float(np.max(np.abs(vals.real), initial=0.0)))
    resid = float(np.max(np.abs(vals.imag), initial=0.0))
    if resid > 1e-10 * scale:
        warnings.warn(
            f"reconstruction has imaginary residual {resid:.3e}",
            ImaginaryResidualWarning,
            stacklevel=3,
        )
    return vals.real.copy()


def reconstruct(coeffs: CoefficientVector, thetas) -> np.ndarray:
    """``Re(sum_k a_k phi_k(theta))`` at each point."""
    t = coeffs.spec.domain.check(thetas)
    flat = t.reshape(-1)
    out = np.empty(flat.shape[0], dtype=np.complex128)
    for start in range(0, flat.shape[0], _CHUNK):
        sl = slice(start, start + _CHUNK)
        out[sl] = basis_matrix(coeffs.spec, flat[sl]) @ coeffs.entries
    return _real_part(out).reshape(t.shape)


def reconstruct_uniform(coeffs: CoefficientVector, P: int) -> tuple[np.ndarray, np.ndarray]:
    """Reconstruction on ``P`` uniform points of a bounded domain.

    Fourier: nodes ``lo + L j / P`` (an FFT evaluation, needs ``P >= N``).
    Cosine: midpoints ``lo + L (j + 1/2) / P``.  Returns ``(nodes, values)``.
    """
    spec = coeffs.spec
    if not spec.domain.bounded:
        raise InputContractError("uniform reconstruction needs a bounded domain")
    L = spec.domain.length
    if spec.kind is BasisKind.FOURIER:
        if P < spec.N:
            raise InputContractError(f"need P >= N = {spec.N}")
        ks = spec.indices
        placed = np.zeros(P, dtype=np.complex128)
        placed[ks % P] = coeffs.entries * np.where(ks % 2 == 0, 1.0, -1.0)
        vals = idft(placed) * (P / math.sqrt(L))
        nodes = spec.domain.lo + L * np.arange(P) / P
        return nodes, _real_part(vals)
    nodes = spec.domain.lo + L * (np.arange(P) + 0.5) / P
    return nodes, reconstruct(coeffs, nodes)


def _fourier_moment_weights(spec: BasisSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # integrals of u^p phi_k(u) over [-L/2, L/2], u = theta - center
    L = spec.domain.length
    ks = spec.indices
    sign = np.where(ks % 2 == 0, 1.0, -1.0)
    nz = ks != 0
    omega = 2 * np.pi * np.where(nz, ks, 1) / L
    m0 = np.where(nz, 0.0, L).astype(np.complex128)
    m1 = np.where(nz, L * sign / (1j * omega), 0.0)
    m2 = np.where(nz, 2 * L * sign / omega**2, L**3 / 12).astype(np.complex128)
    return m0 / math.sqrt(L), m1 / math.sqrt(L), m2 / math.sqrt(L)


def _cosine_moment_weights(spec: BasisSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # integrals of u^p phi_k(u) over [0, L], u = theta - lo
    L = spec.domain.length
    ks = spec.indices
    sign = np.where(ks % 2 == 0, 1.0, -1.0)
    nz = ks != 0
    a = np.pi * np.where(nz, ks, 1) / L
    norm = np.where(nz, math.sqrt(2.0 / L), 1.0 / math.sqrt(L))
    m0 = np.where(nz, 0.0, L)
    m1 = np.where(nz, (sign - 1.0) / a**2, L**2 / 2)
    m2 = np.where(nz, 2 * L * sign / a**2, L**3 / 3)
    return m0 * norm, m1 * norm, m2 * norm


def _hermite_moment_weights(spec: BasisSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # x = sqrt(2) y turns x^p psi_k(x) exp(y^2) into a polynomial in y
    y, _, scaled = gauss_hermite(spec.K + 4)
    x = math.sqrt(2.0) * y
    psi = hermite_functions(spec.K, x)
    w = math.sqrt(2.0) * scaled
    return w @ psi, (w * x) @ psi, (w * x * x) @ psi


def moments(coeffs: CoefficientVector) -> Moments:
    """Mass, mean and variance of the expansion over its domain, in closed form."""
    spec = coeffs.spec
    if spec.kind is BasisKind.FOURIER:
        w0, w1, w2 = _fourier_moment_weights(spec)
        shift = spec.domain.center
    elif spec.kind is BasisKind.COSINE:
        w0, w1, w2 = _cosine_moment_weights(spec)
        shift = spec.domain.lo
    else:
        w0, w1, w2 = _hermite_moment_weights(spec)
        shift = 0.0
    c = coeffs.entries
    mass = float(np.real(c @ w0))
    if mass == 0.0:
        raise InputContractError("zero-mass expansion has no mean")
    m1 = float(np.real(c @ w1)) / mass
    m2 = float(np.real(c @ w2)) / mass
    return Moments(mass, shift + m1, m2 - m1 * m1)


_ADVICE = {
    "periodic": (
        BasisKind.FOURIER,
        "periodic boundary behaviour: complex exponentials are the natural basis "
        "and a periodic function has no boundary jump to excite Gibbs ringing",
    ),
    "neumann": (
        BasisKind.COSINE,
        "bounded, non-periodic domain with zero-slope boundaries: the cosine basis "
        "is the even extension's Fourier basis and builds in the Neumann condition",
    ),
    "decaying": (
        BasisKind.HERMITE,
        "decay on the real line: Hermite functions carry the Gaussian factor "
        "exp(-t^2/2) in every basis function",
    ),
}


def advise_basis(domain: Domain, boundary_hint: str) -> BasisAdvice:
    """Pick a basis from the boundary behaviour of the functions involved.

    ``boundary_hint`` is one of ``periodic``, ``neumann``, ``decaying`` or
    ``unknown``.  The table is fixed; the domain only adds caveats to the
    rationale when it does not match the chosen basis.
    """
    hint = boundary_hint.lower()
    if hint == "unknown":
        return BasisAdvice(
            BasisKind.FOURIER,
            "no boundary information: defaulting to Fourier; expect Gibbs "
            "oscillation and algebraic coefficient decay if the function is "
            "not periodic (check with the decay diagnostics)",
            warning=True,
        )
    if hint not in _ADVICE:
        raise InputContractError(f"unknown boundary hint {boundary_hint!r}")
    kind, why = _ADVICE[hint]
    need = _REQUIRED_DOMAIN[kind]
    if domain.kind is not need:
        why += f"; note the {kind.value} basis needs a {need.value} domain, not {domain.kind.value}"
        return BasisAdvice(kind, why, warning=True)
    return BasisAdvice(kind, why)
