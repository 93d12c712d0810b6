"""Domain types shared by the folding, transform and pipeline layers.

Signals are stored as read-only ``complex128`` numpy arrays; a scalar sample
is a plain Python ``complex``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

ArrayLike = Union["ComplexSignal", np.ndarray, Iterable[complex]]


class NotASquare(ValueError):
    """Raised when a length has no exact integer square root."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"length {n} is not a perfect square")


class NotAPowerOfTwo(ValueError):
    """Raised when the radix-2 FFT receives a length that is not 2**k."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"length {n} is not a power of two")


def _frozen_samples(samples) -> np.ndarray:
    if isinstance(samples, ComplexSignal):
        return samples.samples
    arr = np.array(samples, dtype=np.complex128).reshape(-1)
    if arr.size == 0:
        raise ValueError("signal must contain at least one sample")
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise ValueError(f"sample {bad} is not finite: {arr[bad]!r}")
    arr.flags.writeable = False
    return arr


class ComplexSignal:
    """Immutable, non-empty sequence of finite complex samples."""

    __slots__ = ("_samples",)

    def __init__(self, samples: ArrayLike):
        self._samples = _frozen_samples(samples)

    @property
    def samples(self) -> np.ndarray:
        return self._samples

    def __len__(self) -> int:
        return self._samples.size

    def __getitem__(self, i):
        return self._samples[i]

    def __iter__(self):
        return iter(self._samples.tolist())

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._samples
        return self._samples.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, ComplexSignal):
            return NotImplemented
        return np.array_equal(self._samples, other._samples)

    def __hash__(self):
        return hash(self._samples.tobytes())

    def __repr__(self):
        return f"ComplexSignal({self._samples.tolist()!r})"


@dataclass(frozen=True)
class SquareLength:
    n: int
    root: int

    def __post_init__(self):
        if self.root * self.root != self.n:
            raise NotASquare(self.n)


class CompactedSignal(ComplexSignal):
    """The sqrt(N)-point folded signal, remembering the length it came from."""

    __slots__ = ("original_length",)

    def __init__(self, samples: ArrayLike, original_length: int):
        super().__init__(samples)
        if len(self) * len(self) != original_length:
            raise ValueError(
                f"compacted length {len(self)} does not square to {original_length}"
            )
        self.original_length = original_length

    def __repr__(self):
        return (
            f"CompactedSignal({self._samples.tolist()!r}, "
            f"original_length={self.original_length})"
        )


class NormalizationMode(enum.Enum):
    NONE = "none"
    ONE_OVER_N = "1overN"
    UNITARY = "unitary"

    @classmethod
    def parse(cls, text: str) -> "NormalizationMode":
        key = text.strip().lower().replace("/", "over")
        for mode in cls:
            if mode.value.lower() == key or mode.name.lower() == key:
                return mode
        raise ValueError(f"unknown normalization {text!r}")


class SicSpectrum:
    """Square-index coefficients ``X[k*sqrt(N)]`` indexed by ``k``."""

    __slots__ = ("_values", "normalization", "original_length", "root")

    def __init__(self, values: ArrayLike, normalization: NormalizationMode,
                 original_length: int):
        self._values = _frozen_samples(values)
        if self._values.size ** 2 != original_length:
            raise ValueError(
                f"{self._values.size} values cannot be the SICs of a "
                f"{original_length}-point signal"
            )
        self.normalization = normalization
        self.original_length = original_length
        self.root = self._values.size

    @property
    def values(self) -> np.ndarray:
        return self._values

    def bin(self, k: int) -> int:
        """Absolute DFT bin of the ``k``-th value."""
        if not 0 <= k < self.root:
            raise IndexError(k)
        return k * self.root

    @property
    def bins(self) -> np.ndarray:
        return np.arange(self.root) * self.root

    def __len__(self) -> int:
        return self.root

    def __getitem__(self, k):
        return self._values[k]

    def __repr__(self):
        return (
            f"SicSpectrum({self._values.tolist()!r}, "
            f"normalization={self.normalization}, "
            f"original_length={self.original_length})"
        )


def validate_square_length(n: int) -> SquareLength:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"length must be an integer, got {type(n).__name__}")
    n = int(n)
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    root = math.isqrt(n)
    if root * root != n:
        raise NotASquare(n)
    return SquareLength(n, root)


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def scale_factor(mode: NormalizationMode, original_length: int) -> float:
    """Output scale ``K`` for ``mode``, always taken against the original N."""
    if original_length < 1:
        raise ValueError(f"length must be positive, got {original_length}")
    if mode is NormalizationMode.NONE:
        return 1.0
    if mode is NormalizationMode.ONE_OVER_N:
        return 1.0 / original_length
    if mode is NormalizationMode.UNITARY:
        return 1.0 / math.sqrt(original_length)
    raise ValueError(f"unknown normalization {mode!r}")
