"""Runtime scaling of the direct and FFT circular convolution engines.

Each timing is the median over ``repeats`` samples after one discarded
warm-up call.  A sample runs the kernel enough times in a row to last at
least ``min_sample`` seconds, so microsecond-scale FFT calls are not lost
in timer resolution.  Inputs are random Hermitian-symmetric vectors, i.e.
coefficients of real functions, drawn from a seeded generator.
"""

from __future__ import annotations

import math
import os
import statistics
import time
from dataclasses import dataclass

import numpy as np

from .errors import InputContractError
from .spectral import Engine, Mode, _convolve_arrays

__all__ = [
    "DIRECT_LIMIT",
    "BenchRecord",
    "BenchReport",
    "default_seed",
    "random_hermitian",
    "time_engine",
    "fit_exponent",
    "run_bench",
]

DIRECT_LIMIT = 2**15
MIN_REPEATS = 5


@dataclass(frozen=True)
class BenchRecord:
    N: int
    engine: Engine
    wall_time: float
    repeats: int


@dataclass(frozen=True)
class BenchReport:
    records: list[BenchRecord]
    exponents: dict[Engine, float]
    skipped: list[tuple[int, Engine, str]]


def default_seed() -> int:
    raw = os.environ.get("HB_SEED", "42")
    try:
        return int(raw)
    except ValueError:
        raise InputContractError(f"HB_SEED must be an integer, got {raw!r}") from None


def random_hermitian(N: int, rng: np.random.Generator) -> np.ndarray:
    """Centred length-``N`` vector with ``a_-k = conj(a_k)``."""
    if N % 2 != 1:
        raise InputContractError("centred vectors have odd length")
    K = N // 2
    half = rng.standard_normal(K) + 1j * rng.standard_normal(K)
    out = np.empty(N, dtype=np.complex128)
    out[K] = rng.standard_normal()
    out[K + 1:] = half
    out[:K] = np.conj(half[::-1])
    return out


def time_engine(
    engine: Engine | str,
    a: np.ndarray,
    b: np.ndarray,
    repeats: int = 9,
    *,
    min_sample: float = 2e-3,
) -> float:
    """Median seconds per call of the circular convolution on ``engine``."""
    engine = Engine(engine)
    K = a.shape[0] // 2

    def call():
        _convolve_arrays(a, b, K, Mode.CIRCULAR, engine)

    call()  # warm-up, also compiles and fills plan caches
    t0 = time.perf_counter()
    call()
    once = max(time.perf_counter() - t0, 1e-9)
    inner = max(1, math.ceil(min_sample / once))
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        for _ in range(inner):
            call()
        samples.append((time.perf_counter() - t0) / inner)
    return statistics.median(samples)


def fit_exponent(Ns, times) -> float:
    """Least-squares slope of ``log t`` against ``log N``."""
    x = np.log(np.asarray(Ns, dtype=float))
    y = np.log(np.asarray(times, dtype=float))
    if x.size < 2:
        raise InputContractError("an exponent fit needs at least two sizes")
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def run_bench(
    Ns,
    repeats: int = 9,
    *,
    engines=(Engine.DIRECT, Engine.FFT),
    force: bool = False,
    seed: int | None = None,
    min_sample: float = 2e-3,
) -> BenchReport:
    """Time each engine at each size; fit exponents when two or more sizes ran."""
    Ns = [int(n) for n in Ns]
    if not Ns:
        raise InputContractError("no sizes given")
    for n in Ns:
        if n < 33 or n % 2 != 1:
            raise InputContractError(f"sizes must be odd and >= 33, got {n}")
    if repeats < MIN_REPEATS:
        raise InputContractError(f"need at least {MIN_REPEATS} repeats, got {repeats}")
    engines = [Engine(e) for e in engines]
    rng = np.random.default_rng(default_seed() if seed is None else seed)
    inputs = {n: (random_hermitian(n, rng), random_hermitian(n, rng)) for n in Ns}
    records: list[BenchRecord] = []
    skipped: list[tuple[int, Engine, str]] = []
    for engine in engines:
        for n in Ns:
            if engine is Engine.DIRECT and n > DIRECT_LIMIT and not force:
                skipped.append((n, engine, f"direct engine refused above N={DIRECT_LIMIT}; use --force"))
                continue
            a, b = inputs[n]
            t = time_engine(engine, a, b, repeats, min_sample=min_sample)
            records.append(BenchRecord(n, engine, t, repeats))
    exponents = {}
    for engine in engines:
        rows = [r for r in records if r.engine is engine]
        if len(rows) >= 2:
            exponents[engine] = fit_exponent([r.N for r in rows], [r.wall_time for r in rows])
    return BenchReport(records, exponents, skipped)
