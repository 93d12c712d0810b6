"""DFT backends: a direct O(M^2) summation and an iterative radix-2 DIT FFT.

Both backends tally into an optional :class:`OpCounter`. Counting conventions:

* ``dft_naive`` on M > 1 points performs M**2 complex multiplications (the
  trivial products by W**0 included) and M*(M-1) complex additions. A 1-point
  transform is the identity and costs nothing.
* ``fft_radix2`` counts one multiplication and two additions (the sum and the
  difference) per butterfly, i.e. (M/2)*log2(M) multiplications and
  M*log2(M) additions. Butterflies whose twiddle is 1 are still counted.
* The final real scaling by ``K`` is not tallied.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    ArrayLike,
    ComplexSignal,
    NormalizationMode,
    NotAPowerOfTwo,
    is_power_of_two,
    scale_factor,
)


@dataclass
class OpCounter:
    additions: int = 0
    multiplications: int = 0

    def tally(self, additions: int = 0, multiplications: int = 0) -> None:
        if additions < 0 or multiplications < 0:
            raise ValueError("operation counts only grow")
        self.additions += additions
        self.multiplications += multiplications

    def reset(self) -> None:
        self.additions = 0
        self.multiplications = 0


@dataclass(frozen=True, eq=False)
class TwiddleTable:
    """``factors[j] == exp(-2*pi*i*j/M)`` for ``j`` in ``0..M-1``."""

    length: int
    factors: np.ndarray

    def __getitem__(self, j):
        return self.factors[j]

    def power(self, e):
        """``W_M**(-e)`` for any integer (or integer array) exponent."""
        return self.factors[np.mod(e, self.length)]


@functools.lru_cache(maxsize=64)
def twiddle_table(m: int) -> TwiddleTable:
    if m < 1:
        raise ValueError(f"twiddle table length must be positive, got {m}")
    j = np.arange(m)
    factors = np.exp(-2j * np.pi * j / m)
    # Exact values where the angle is a multiple of pi/2.
    for q, w in enumerate((1, -1j, -1, 1j)):
        if (q * m) % 4 == 0:
            factors[q * m // 4] = w
    factors.flags.writeable = False
    return TwiddleTable(m, factors)


def _as_array(x: ArrayLike) -> np.ndarray:
    return ComplexSignal(x).samples


def _finish(y: np.ndarray, mode: NormalizationMode) -> ComplexSignal:
    k = scale_factor(mode, y.size)
    if k != 1.0:
        y = y * k
    return ComplexSignal(y)


_NAIVE_BLOCK_ELEMENTS = 1 << 18


def naive_unnormalized(x: np.ndarray, counter: Optional[OpCounter] = None) -> np.ndarray:
    m = x.size
    if m == 1:
        return x.copy()
    w = twiddle_table(m).factors
    k = np.arange(m)
    # out[k] = sum_n x[n] * W^(k*n), accumulated in ascending n for every k at once;
    # the twiddle products are formed a block of n values at a time.
    block = max(1, min(64, _NAIVE_BLOCK_ELEMENTS // m))
    out = x[0] * w[np.zeros(m, dtype=np.intp)]
    for start in range(1, m, block):
        n = np.arange(start, min(start + block, m))
        idx = np.multiply.outer(n, k)
        if m & (m - 1) == 0:
            idx &= m - 1
        else:
            idx %= m
        terms = np.take(w, idx)
        terms *= x[n, None]
        for row in terms:
            out += row
    if counter is not None:
        counter.tally(additions=m * (m - 1), multiplications=m * m)
    return out


@functools.lru_cache(maxsize=64)
def bit_reversal_permutation(m: int) -> np.ndarray:
    bits = m.bit_length() - 1
    perm = np.zeros(m, dtype=np.int64)
    for b in range(bits):
        perm |= ((np.arange(m) >> b) & 1) << (bits - 1 - b)
    perm.flags.writeable = False
    return perm


def radix2_unnormalized(x: np.ndarray, counter: Optional[OpCounter] = None) -> np.ndarray:
    m = x.size
    if not is_power_of_two(m):
        raise NotAPowerOfTwo(m)
    w = twiddle_table(m).factors
    y = x[bit_reversal_permutation(m)]
    half = 1
    while half < m:
        span = 2 * half
        blocks = y.reshape(m // span, 2, half)
        tw = w[:: m // span][:half]
        top = blocks[:, 0, :]
        bottom = blocks[:, 1, :] * tw
        y = np.concatenate((top + bottom, top - bottom), axis=1).reshape(m)
        if counter is not None:
            counter.tally(additions=m, multiplications=m // 2)
        half = span
    return y


def dft_naive(x: ArrayLike, mode: NormalizationMode = NormalizationMode.NONE,
              counter: Optional[OpCounter] = None) -> ComplexSignal:
    """Direct DFT, ``X[k] = K * sum_n x[n] exp(-2*pi*i*k*n/M)``.

    Used as the reference oracle for everything else, so it stays the plain
    summation: O(M^2) work, ascending-n accumulation order.
    """
    return _finish(naive_unnormalized(_as_array(x), counter), mode)


def fft_radix2(x: ArrayLike, mode: NormalizationMode = NormalizationMode.NONE,
               counter: Optional[OpCounter] = None) -> ComplexSignal:
    """Iterative radix-2 decimation-in-time FFT.

    Raises
    ------
    NotAPowerOfTwo
        If ``len(x)`` is not a power of two.
    """
    return _finish(radix2_unnormalized(_as_array(x), counter), mode)


def dft_auto(x: ArrayLike, mode: NormalizationMode = NormalizationMode.NONE,
             counter: Optional[OpCounter] = None) -> ComplexSignal:
    """FFT for power-of-two lengths, direct summation otherwise."""
    arr = _as_array(x)
    if is_power_of_two(arr.size):
        return _finish(radix2_unnormalized(arr, counter), mode)
    return _finish(naive_unnormalized(arr, counter), mode)
