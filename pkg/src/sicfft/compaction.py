"""Multiplierless folding of an N-point signal down to sqrt(N) points."""

from __future__ import annotations

from typing import Optional

import numpy as np

from .core import ArrayLike, CompactedSignal, ComplexSignal, validate_square_length
from .transform import OpCounter


def fold(x: np.ndarray, counter: Optional[OpCounter] = None) -> np.ndarray:
    """Column sums ``out[n] = sum_r x[n + r*root]`` as a fresh array.

    Each column is seeded with its ``r = 0`` sample and accumulated in
    ascending ``r``, so the result is bit-reproducible and costs exactly
    ``N - root`` complex additions.
    """
    root = validate_square_length(x.size).root
    rows = x.reshape(root, root)
    out = rows[0].copy()
    for r in range(1, root):
        out += rows[r]
    if counter is not None:
        counter.tally(additions=x.size - root)
    return out


def compact_sic(x: ArrayLike) -> CompactedSignal:
    """Fold ``x`` so that the DFT of the result holds the square-index bins.

    >>> compact_sic([1, 2, 3, 4]).samples.tolist()
    [(4+0j), (6+0j)]
    """
    samples = ComplexSignal(x).samples
    return CompactedSignal(fold(samples), samples.size)


def compact_sic_counted(x: ArrayLike, counter: OpCounter) -> CompactedSignal:
    samples = ComplexSignal(x).samples
    return CompactedSignal(fold(samples, counter), samples.size)
