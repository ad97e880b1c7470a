"""Discrete Fourier transforms of arbitrary length and FFT convolution.

Conventions, fixed for the whole package:

* forward transform is unnormalized, ``X_k = sum_n x_n exp(-2j*pi*k*n/N)``;
* inverse carries the ``1/N`` factor.

Power-of-two lengths go straight to an iterative radix-2 kernel.  Every
other length is handled by Bluestein's chirp-z algorithm, which rewrites the
length-N DFT as a convolution evaluated with the radix-2 kernel at a
power-of-two size ``>= 2N - 1``.  This matters here because centred spectral
vectors always have odd length ``N = 2K + 1``.
"""

from __future__ import annotations

from functools import lru_cache

import numba
import numpy as np

from .errors import InputContractError

__all__ = [
    "dft",
    "idft",
    "fast_circular_convolve",
    "circular_convolve_centered",
    "fast_linear_convolve",
    "center_to_standard",
    "standard_to_center",
    "next_power_of_two",
]


def next_power_of_two(n: int) -> int:
    return 1 << max(n - 1, 0).bit_length()


@numba.njit(cache=True)
def _radix2_inplace(a, tw):
    """In-place decimation-in-time FFT of a power-of-two length array.

    ``tw`` holds the twiddles of every stage back to back: the stage of
    butterfly span ``size`` reads ``tw[size // 2 : size]``.
    """
    n = a.shape[0]
    j = 0
    for i in range(1, n):
        bit = n >> 1
        while j & bit:
            j ^= bit
            bit >>= 1
        j |= bit
        if i < j:
            tmp = a[i]
            a[i] = a[j]
            a[j] = tmp
    size = 2
    while size <= n:
        half = size >> 1
        for start in range(0, n, size):
            for k in range(half):
                p = start + k
                t = a[p + half] * tw[half + k]
                u = a[p]
                a[p + half] = u - t
                a[p] = u + t
        size <<= 1


@lru_cache(maxsize=32)
def _stage_twiddles(n: int) -> np.ndarray:
    parts = [np.zeros(1, dtype=np.complex128)]
    size = 2
    while size <= n:
        parts.append(np.exp(-2j * np.pi * np.arange(size // 2) / size))
        size *= 2
    tw = np.concatenate(parts)
    tw.flags.writeable = False
    return tw


def _fft_pow2(x: np.ndarray) -> np.ndarray:
    a = np.array(x, dtype=np.complex128)
    _radix2_inplace(a, _stage_twiddles(a.shape[0]))
    return a


def _ifft_pow2_unscaled(x: np.ndarray) -> np.ndarray:
    # conj(FFT(conj(x))) == N * IFFT(x)
    a = np.conj(np.asarray(x, dtype=np.complex128))
    _radix2_inplace(a, _stage_twiddles(a.shape[0]))
    np.conjugate(a, out=a)
    return a


@lru_cache(maxsize=32)
def _bluestein_plan(n: int) -> tuple[int, np.ndarray, np.ndarray]:
    m = next_power_of_two(2 * n - 1)
    k = np.arange(n, dtype=np.int64)
    # k^2 mod 2n keeps the phase argument small and exact
    chirp = np.exp(-1j * np.pi * ((k * k) % (2 * n)) / n)
    h = np.zeros(m, dtype=np.complex128)
    h[:n] = np.conj(chirp)
    h[m - n + 1:] = np.conj(chirp[1:])[::-1]
    filt = _fft_pow2(h) / m
    chirp.flags.writeable = False
    filt.flags.writeable = False
    return m, chirp, filt


def _as_signal(x) -> np.ndarray:
    arr = np.asarray(x, dtype=np.complex128)
    if arr.ndim != 1:
        raise InputContractError(f"expected a 1-D sequence, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise InputContractError("empty input")
    if not np.all(np.isfinite(arr)):
        raise InputContractError("non-finite entries in input")
    return arr


@numba.njit(cache=True)
def _bluestein(x, chirp, filt, tw):
    # chirp-z: X_k = conj(w_k) * sum_n (x_n conj(w_n)) w_(k-n), w_j = exp(i pi j^2 / n)
    n = x.shape[0]
    m = filt.shape[0]
    y = np.zeros(m, dtype=np.complex128)
    for i in range(n):
        y[i] = x[i] * chirp[i]
    _radix2_inplace(y, tw)
    for i in range(m):
        y[i] = np.conj(y[i] * filt[i])
    _radix2_inplace(y, tw)
    out = np.empty(n, dtype=np.complex128)
    for i in range(n):
        out[i] = np.conj(y[i]) * chirp[i]
    return out


def _dft(x: np.ndarray) -> np.ndarray:
    n = x.shape[0]
    if n & (n - 1) == 0:
        return _fft_pow2(x)
    m, chirp, filt = _bluestein_plan(n)
    return _bluestein(x, chirp, filt, _stage_twiddles(m))


def _idft(X: np.ndarray) -> np.ndarray:
    return np.conj(_dft(np.conj(X))) / X.shape[0]


def dft(x) -> np.ndarray:
    """Forward DFT of any length ``N >= 1`` in ``O(N log N)``."""
    return _dft(_as_signal(x))


def idft(X) -> np.ndarray:
    """Inverse DFT, ``x_n = (1/N) sum_k X_k exp(+2j*pi*k*n/N)``."""
    return _idft(_as_signal(X))


@numba.njit(cache=True)
def _circular_core(a, b, shift, chirp, filt, tw, pow2):
    # idft(dft(a') * dft(b')) for a' = roll(a, -shift), b' = roll(b, -shift),
    # returned rolled back by +shift
    n = a.shape[0]
    xa = np.empty(n, dtype=np.complex128)
    xb = np.empty(n, dtype=np.complex128)
    for i in range(n):
        j = (i + shift) % n
        xa[i] = a[j]
        xb[i] = b[j]
    if pow2:
        _radix2_inplace(xa, tw)
        _radix2_inplace(xb, tw)
        fa, fb = xa, xb
    else:
        fa = _bluestein(xa, chirp, filt, tw)
        fb = _bluestein(xb, chirp, filt, tw)
    for i in range(n):
        fa[i] = np.conj(fa[i] * fb[i])
    if pow2:
        _radix2_inplace(fa, tw)
        back = fa
    else:
        back = _bluestein(fa, chirp, filt, tw)
    out = np.empty(n, dtype=np.complex128)
    for i in range(n):
        out[(i + shift) % n] = np.conj(back[i]) / n
    return out


_EMPTY = np.zeros(1, dtype=np.complex128)


def _circular(a: np.ndarray, b: np.ndarray, shift: int) -> np.ndarray:
    n = a.shape[0]
    if n & (n - 1) == 0:
        return _circular_core(a, b, shift, _EMPTY, _EMPTY, _stage_twiddles(n), True)
    m, chirp, filt = _bluestein_plan(n)
    return _circular_core(a, b, shift, chirp, filt, _stage_twiddles(m), False)


def fast_circular_convolve(a, b) -> np.ndarray:
    """Circular convolution of two equal-length sequences in standard order.

    Computed as ``idft(dft(a) * dft(b))``.
    """
    a = _as_signal(a)
    b = _as_signal(b)
    if a.shape != b.shape:
        raise InputContractError(f"length mismatch: {a.shape[0]} vs {b.shape[0]}")
    return _circular(a, b, 0)


def circular_convolve_centered(a, b) -> np.ndarray:
    """Circular convolution of centred vectors ``(c_-K .. c_K)``.

    Same as ``standard_to_center(fast_circular_convolve(center_to_standard(a),
    center_to_standard(b)))`` with the reorderings folded into the kernel.
    """
    a = _as_signal(a)
    b = _as_signal(b)
    if a.shape != b.shape:
        raise InputContractError(f"length mismatch: {a.shape[0]} vs {b.shape[0]}")
    if a.shape[0] % 2 != 1:
        raise InputContractError("centred vectors have odd length 2K+1")
    return _circular(a, b, a.shape[0] // 2)


def fast_linear_convolve(a, b) -> np.ndarray:
    """Full linear convolution (length ``len(a) + len(b) - 1``).

    Both inputs are zero-padded to a power of two, so no wrap-around occurs.
    """
    a = _as_signal(a)
    b = _as_signal(b)
    out_len = a.shape[0] + b.shape[0] - 1
    m = next_power_of_two(out_len)
    pa = np.zeros(m, dtype=np.complex128)
    pb = np.zeros(m, dtype=np.complex128)
    pa[: a.shape[0]] = a
    pb[: b.shape[0]] = b
    prod = _fft_pow2(pa) * _fft_pow2(pb)
    return _ifft_pow2_unscaled(prod)[:out_len] / m


def center_to_standard(c) -> np.ndarray:
    """Reorder a centred vector ``(c_-K, ..., c_K)`` to DFT order.

    Wavenumber ``k`` lands at position ``(k + N) mod N``.
    """
    c = np.asarray(c)
    if c.shape[0] % 2 != 1:
        raise InputContractError("centred vectors have odd length 2K+1")
    return np.roll(c, -(c.shape[0] // 2))


def standard_to_center(s) -> np.ndarray:
    """Inverse of :func:`center_to_standard`."""
    s = np.asarray(s)
    if s.shape[0] % 2 != 1:
        raise InputContractError("centred vectors have odd length 2K+1")
    return np.roll(s, s.shape[0] // 2)
