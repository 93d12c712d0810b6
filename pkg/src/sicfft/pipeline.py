"""Square-index coefficients of an N-point DFT via a sqrt(N)-point transform.

The fast path folds the input (``compaction.fold``), transforms the folded
signal unnormalized and then applies ``K`` once, with ``K`` dimensioned by the
original length N. ``sics_by_full_dft`` is the slow reference path.
"""

from __future__ import annotations

from typing import Optional

from .compaction import fold
from .core import (
    ArrayLike,
    ComplexSignal,
    NormalizationMode,
    NotAPowerOfTwo,
    SicSpectrum,
    is_power_of_two,
    scale_factor,
    validate_square_length,
)
from .transform import OpCounter, naive_unnormalized, radix2_unnormalized

BACKENDS = ("auto", "naive", "fft")


def compute_sics(x: ArrayLike, mode: NormalizationMode = NormalizationMode.NONE,
                 counter: Optional[OpCounter] = None,
                 backend: str = "auto") -> SicSpectrum:
    """Compute ``X[k*sqrt(N)]`` for ``k = 0..sqrt(N)-1``.

    Parameters
    ----------
    x : signal of perfect-square length N.
    mode : normalization of the result, relative to N.
    counter : optional tally of every complex add/multiply performed.
    backend : ``"auto"`` picks the radix-2 FFT when sqrt(N) is a power of
        two and the direct DFT otherwise; ``"fft"`` and ``"naive"`` force one.

    Raises
    ------
    NotASquare
        If N is not a perfect square.
    NotAPowerOfTwo
        If ``backend="fft"`` and sqrt(N) is not a power of two.
    """
    samples = ComplexSignal(x).samples
    sq = validate_square_length(samples.size)
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; expected one of {BACKENDS}")
    if backend == "fft" and not is_power_of_two(sq.root):
        raise NotAPowerOfTwo(sq.root)

    folded = fold(samples, counter)
    use_fft = backend == "fft" or (backend == "auto" and is_power_of_two(sq.root))
    if use_fft:
        spectrum = radix2_unnormalized(folded, counter)
    else:
        spectrum = naive_unnormalized(folded, counter)

    k = scale_factor(mode, sq.n)
    if k != 1.0:
        spectrum = spectrum * k
    return SicSpectrum(spectrum, mode, sq.n)


def sics_by_full_dft(x: ArrayLike,
                     mode: NormalizationMode = NormalizationMode.NONE) -> SicSpectrum:
    """Reference path: full N-point direct DFT, then every sqrt(N)-th bin."""
    samples = ComplexSignal(x).samples
    sq = validate_square_length(samples.size)
    full = naive_unnormalized(samples)
    picked = full[:: sq.root]
    k = scale_factor(mode, sq.n)
    if k != 1.0:
        picked = picked * k
    return SicSpectrum(picked, mode, sq.n)
