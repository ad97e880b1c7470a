"""Sequential filtering and separable multi-dimensional updates.

A filter state holds the current posterior, which serves as the prior of the
next observation, together with the running sum of log evidences.  By the
chain rule of probability that sum is the log evidence of all observations
taken together.  Every step renormalises and re-checks unit mass so that a
long chain cannot drift.

For a density that factorises over coordinates the update factorises too:
each dimension is updated on its own and the joint evidence is the product
of the per-dimension evidences.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .basis import BasisKind, BasisSpec, CoefficientVector
from .errors import (
    BasisMismatchError,
    HarmonicBayesError,
    InputContractError,
    InvalidPosteriorError,
    NumericalDegeneracyError,
    UnsupportedBasisError,
)
from .spectral import Engine, Mode, UpdateResult, _probe, bayes_update, evidence

__all__ = [
    "MASS_TOLERANCE",
    "FilterState",
    "SeparableModel",
    "init",
    "step",
    "run",
    "separable_update",
    "joint_evidence",
]

MASS_TOLERANCE = 1e-7


@dataclass(frozen=True, eq=False)
class FilterState:
    current: CoefficientVector
    step_count: int = 0
    log_evidence_sum: float = 0.0
    last: UpdateResult | None = None


def _check_mass(c: CoefficientVector, where: str) -> None:
    _, _, mass = _probe(c, None)
    if abs(mass - 1.0) > MASS_TOLERANCE:
        raise NumericalDegeneracyError(f"{where}: reconstructed mass {mass!r} is not 1")


def init(prior: CoefficientVector) -> FilterState:
    """Start a chain from ``prior``, rescaled to unit mass if necessary."""
    if prior.spec.kind is BasisKind.HERMITE:
        raise UnsupportedBasisError("sequential updates need a Fourier or cosine basis")
    mass = evidence(prior)
    if not mass > 0:
        raise InvalidPosteriorError(f"prior has non-positive mass {mass!r}")
    current = prior if mass == 1.0 else prior.scaled(1.0 / mass)
    _check_mass(current, "initial prior")
    return FilterState(current)


def step(
    state: FilterState,
    likelihood: CoefficientVector,
    mode: Mode | str = Mode.PADDED,
    engine: Engine | str = Engine.FFT,
) -> FilterState:
    """Absorb one likelihood; returns a new state."""
    if likelihood.spec != state.current.spec:
        raise BasisMismatchError(
            f"likelihood basis {likelihood.spec} differs from the state's {state.current.spec}"
        )
    res = bayes_update(state.current, likelihood, mode, engine)
    if abs(res.mass - 1.0) > MASS_TOLERANCE:
        raise NumericalDegeneracyError(
            f"step {state.step_count + 1}: posterior mass {res.mass!r} is not 1"
        )
    return FilterState(
        res.posterior,
        state.step_count + 1,
        state.log_evidence_sum + math.log(res.evidence_Z),
        res,
    )


def run(
    prior: CoefficientVector,
    likelihoods: Sequence[CoefficientVector],
    mode: Mode | str = Mode.PADDED,
    engine: Engine | str = Engine.FFT,
) -> list[FilterState]:
    """All states of the chain, starting with the initial one."""
    states = [init(prior)]
    for like in likelihoods:
        states.append(step(states[-1], like, mode, engine))
    return states


@dataclass(frozen=True, eq=False)
class SeparableModel:
    """Per-dimension ``(spec, prior, likelihood)`` triples of a factorised model.

    The factorisation itself is the caller's claim; it is not checked.
    """

    dims: tuple[tuple[BasisSpec, CoefficientVector, CoefficientVector], ...]

    def __post_init__(self):
        dims = tuple(tuple(d) for d in self.dims)
        if not dims:
            raise InputContractError("a separable model needs at least one dimension")
        for i, (spec, prior, like) in enumerate(dims):
            if prior.spec != spec or like.spec != spec:
                raise BasisMismatchError(f"dimension {i}: prior/likelihood basis differs from {spec}")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def from_pairs(cls, priors, likelihoods) -> "SeparableModel":
        priors, likelihoods = list(priors), list(likelihoods)
        if len(priors) != len(likelihoods):
            raise InputContractError("need one likelihood per prior")
        return cls(tuple((p.spec, p, l) for p, l in zip(priors, likelihoods)))

    @property
    def d(self) -> int:
        return len(self.dims)


def _annotated(i: int, exc: HarmonicBayesError) -> HarmonicBayesError:
    try:
        new = type(exc)(f"dimension {i}: {exc}")
    except TypeError:
        return exc
    new.__cause__ = exc
    return new


def separable_update(
    model: SeparableModel,
    mode: Mode | str = Mode.PADDED,
    engine: Engine | str = Engine.FFT,
    *,
    workers: int | None = None,
) -> list[UpdateResult]:
    """Update every dimension independently; output order follows ``model.dims``.

    With ``workers > 1`` dimensions run on a thread pool; the results do not
    depend on scheduling.
    """

    def one(i: int) -> UpdateResult:
        _, prior, like = model.dims[i]
        try:
            return bayes_update(prior, like, mode, engine)
        except HarmonicBayesError as exc:
            raise _annotated(i, exc) from exc

    if workers and workers > 1 and model.d > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, range(model.d)))
    return [one(i) for i in range(model.d)]


def joint_evidence(results: Sequence[UpdateResult]) -> float:
    """Product of the per-dimension evidences."""
    return math.prod(r.evidence_Z for r in results)
