"""Square-index coefficients ``X[k*sqrt(N)]`` of an N-point DFT.

Fold the input to sqrt(N) points with additions only, then run a
sqrt(N)-point DFT::

    >>> from sicfft import compute_sics, NormalizationMode
    >>> x = [11+11j, 22+22j, 33+33j, -5-5j, -6-6j, -7-7j, 9-9j, 10-10j, 11-11j]
    >>> s = compute_sics(x, NormalizationMode.ONE_OVER_N)
    >>> [round(z.real, 5) for z in s.values.tolist()]
    [8.66667, -2.69936, -0.96731]
"""

from .compaction import compact_sic, compact_sic_counted
from .core import (
    CompactedSignal,
    ComplexSignal,
    NormalizationMode,
    NotAPowerOfTwo,
    NotASquare,
    SicSpectrum,
    SquareLength,
    scale_factor,
    validate_square_length,
)
from .pipeline import compute_sics, sics_by_full_dft
from .transform import OpCounter, TwiddleTable, dft_auto, dft_naive, fft_radix2, twiddle_table

__all__ = [
    "CompactedSignal",
    "ComplexSignal",
    "NormalizationMode",
    "NotAPowerOfTwo",
    "NotASquare",
    "OpCounter",
    "SicSpectrum",
    "SquareLength",
    "TwiddleTable",
    "compact_sic",
    "compact_sic_counted",
    "compute_sics",
    "dft_auto",
    "dft_naive",
    "fft_radix2",
    "scale_factor",
    "sics_by_full_dft",
    "twiddle_table",
    "validate_square_length",
]
