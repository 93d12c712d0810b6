"""Benchmark harness and operation-count growth fits.

Wall times are medians over ``repetitions`` timed runs after one discarded
warmup; operation counts come from one extra instrumented run, so they are
exact and independent of the machine.
"""

from __future__ import annotations

import csv
import enum
import math
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, TextIO

import numpy as np

from .compaction import fold
from .core import is_power_of_two, validate_square_length
from .transform import OpCounter, naive_unnormalized, radix2_unnormalized

CSV_HEADER = ("n", "method", "wall_time_s", "additions", "multiplications", "repetitions")
MIN_REPETITIONS = 5


class Method(enum.Enum):
    FULL_NAIVE = "FullNaive"
    FULL_FFT = "FullFft"
    COMPACT_NAIVE = "CompactNaive"
    COMPACT_FFT = "CompactFft"

    @classmethod
    def parse(cls, text: str) -> "Method":
        for m in cls:
            if text.strip().lower() in (m.value.lower(), m.name.lower()):
                return m
        raise ValueError(f"unknown method {text!r}")

    @property
    def compacts(self) -> bool:
        return self in (Method.COMPACT_NAIVE, Method.COMPACT_FFT)

    @property
    def uses_fft(self) -> bool:
        return self in (Method.FULL_FFT, Method.COMPACT_FFT)


class Model(enum.Enum):
    N_LOG_N = "NlogN"
    SQRT_N_LOG_SQRT_N = "SqrtNlogSqrtN"
    N = "N"
    N_SQRT_N = "NSqrtN"
    N_SQUARED = "N2"

    def predict(self, n: int) -> float:
        r = math.isqrt(n)
        if self is Model.N_LOG_N:
            return n * math.log2(n)
        if self is Model.SQRT_N_LOG_SQRT_N:
            return r * math.log2(r)
        if self is Model.N:
            return float(n)
        if self is Model.N_SQRT_N:
            return n * r
        return float(n) * n


class InsufficientData(ValueError):
    pass


@dataclass(frozen=True)
class BenchRecord:
    n: int
    method: Method
    wall_time: Optional[float]
    additions: Optional[int]
    multiplications: Optional[int]
    repetitions: int
    error: Optional[str] = None

    def __post_init__(self):
        if self.error is None:
            if not self.wall_time or self.wall_time <= 0:
                raise ValueError(f"wall time must be positive, got {self.wall_time}")
            if self.repetitions < MIN_REPETITIONS:
                raise ValueError(
                    f"at least {MIN_REPETITIONS} repetitions required, got {self.repetitions}"
                )

    @property
    def ok(self) -> bool:
        return self.error is None


def method_runner(method: Method) -> Callable[[np.ndarray, Optional[OpCounter]], np.ndarray]:
    """The unnormalized SIC computation ``method`` performs, as a callable."""
    transform = radix2_unnormalized if method.uses_fft else naive_unnormalized

    if method.compacts:
        def run(x, counter=None):
            return transform(fold(x, counter), counter)
    else:
        def run(x, counter=None):
            root = math.isqrt(x.size)
            return transform(x, counter)[::root]
    return run


def check_compatible(n: int, method: Method) -> None:
    """Raise ``ValueError`` if ``method`` cannot run on an ``n``-point signal."""
    sq = validate_square_length(n)
    if method.uses_fft:
        length = sq.root if method.compacts else sq.n
        if not is_power_of_two(length):
            raise ValueError(
                f"{method.value} needs a power-of-two transform length, got {length}"
            )


def bench_signal(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng([seed, n])
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def time_median(fn: Callable[[], object], repetitions: int) -> float:
    fn()  # warmup, discarded
    samples = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def run_bench(sizes: Iterable[int], methods: Iterable[Method],
              repetitions: int = 7, seed: int = 0) -> list[BenchRecord]:
    """Time and count every (size, method) pair, ordered by (n, method).

    Pairs that cannot run (non-square n, FFT on a non-power-of-two length)
    come back as records with ``error`` set; the rest are unaffected.
    """
    if repetitions < MIN_REPETITIONS:
        raise ValueError(f"at least {MIN_REPETITIONS} repetitions required")
    method_order = list(Method)
    pairs = sorted(
        {(int(n), Method(m)) for n in sizes for m in methods},
        key=lambda p: (p[0], method_order.index(p[1])),
    )
    records = []
    for n, method in pairs:
        try:
            check_compatible(n, method)
        except ValueError as exc:
            records.append(BenchRecord(n, method, None, None, None, repetitions, str(exc)))
            continue
        x = bench_signal(n, seed)
        run = method_runner(method)
        wall = time_median(lambda: run(x), repetitions)
        counter = OpCounter()
        run(x, counter)
        records.append(BenchRecord(n, method, wall, counter.additions,
                                   counter.multiplications, repetitions))
    return records


def write_csv(records: Iterable[BenchRecord], stream: TextIO) -> int:
    """Write the successful records; returns the number of rows written."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    rows = 0
    for r in records:
        if not r.ok:
            continue
        writer.writerow([r.n, r.method.value, repr(r.wall_time), r.additions,
                         r.multiplications, r.repetitions])
        rows += 1
    return rows


def read_csv(stream: TextIO) -> list[BenchRecord]:
    reader = csv.reader(line for line in stream if not line.startswith("#"))
    header = next(reader, None)
    if header is None or tuple(header) != CSV_HEADER:
        raise ValueError(f"expected header {','.join(CSV_HEADER)}, got {header}")
    return [
        BenchRecord(int(n), Method.parse(m), float(t), int(a), int(mu), int(reps))
        for n, m, t, a, mu, reps in reader
    ]


@dataclass
class FitRow:
    n: int
    observed: int
    predicted: float

    @property
    def ratio(self) -> float:
        return self.observed / self.predicted


@dataclass
class FitReport:
    method: Method
    model: Model
    quantity: str
    rows: list[FitRow] = field(default_factory=list)
    flat_tolerance: float = 1.25

    @property
    def spread(self) -> float:
        """max/min of the ratio over the three largest sizes."""
        top = [r.ratio for r in self.rows[-3:]]
        return max(top) / min(top)

    @property
    def flat(self) -> bool:
        return self.spread <= self.flat_tolerance

    def table(self) -> str:
        lines = [f"{self.method.value} {self.quantity} vs {self.model.value}",
                 f"{'n':>10} {'observed':>14} {'predicted':>16} {'ratio':>10}"]
        for r in self.rows:
            lines.append(f"{r.n:>10} {r.observed:>14} {r.predicted:>16.1f} {r.ratio:>10.6f}")
        lines.append(f"spread(top 3) = {self.spread:.6f} -> {'flat' if self.flat else 'NOT flat'}")
        return "\n".join(lines)


def fit_growth(records: Sequence[BenchRecord], model: Model,
               method: Optional[Method] = None,
               quantity: str = "multiplications") -> FitReport:
    """Ratio of observed operation counts to ``model`` at each size.

    ``method`` may be omitted when all usable records share one method.
    Sizes where the model predicts zero work (e.g. log of 1) are skipped.
    """
    if quantity not in ("multiplications", "additions"):
        raise ValueError(f"unknown quantity {quantity!r}")
    usable = [r for r in records if r.ok]
    if method is None:
        kinds = {r.method for r in usable}
        if len(kinds) != 1:
            raise ValueError(f"records mix methods {sorted(k.value for k in kinds)}; pass method=")
        method = kinds.pop()
    by_size = {}
    for r in usable:
        if r.method is method:
            by_size.setdefault(r.n, r)
    rows = [FitRow(n, getattr(by_size[n], quantity), model.predict(n))
            for n in sorted(by_size) if model.predict(n) > 0]
    if len(rows) < 4:
        raise InsufficientData(
            f"need at least 4 distinct sizes for {method.value}, got {len(rows)}"
        )
    return FitReport(method, model, quantity, rows)
