"""Command-line front end: ``sicfft {compact,sics,gen,bench}``.

Exit codes: 0 success, 1 I/O or parse error, 2 length is not a perfect
square, 3 backend/length mismatch.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Optional, Sequence

import numpy as np

from . import signal_io
from .compaction import compact_sic_counted
from .core import NormalizationMode, NotAPowerOfTwo, NotASquare, validate_square_length
from .metering import Method, run_bench, write_csv
from .pipeline import compute_sics
from .transform import OpCounter

EXIT_OK = 0
EXIT_IO = 1
EXIT_NOT_SQUARE = 2
EXIT_BACKEND = 3

NORM_CHOICES = {
    "none": NormalizationMode.NONE,
    "1overN": NormalizationMode.ONE_OVER_N,
    "unitary": NormalizationMode.UNITARY,
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load(args) -> np.ndarray:
    try:
        return signal_io.read_signal(args.input, args.format)
    except OSError as exc:
        raise CliError(f"cannot read {args.input}: {exc.strerror or exc}", EXIT_IO)
    except signal_io.SignalFormatError as exc:
        raise CliError(str(exc), EXIT_IO)


@contextlib.contextmanager
def _text_out(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}", EXIT_IO)
    with fh:
        yield fh


def _emit_signal(samples, path: Optional[str], fmt: str) -> None:
    if fmt == "csv":
        with _text_out(path) as out:
            signal_io.write_csv(samples, out)
        return
    data = signal_io.to_bin(samples)
    if path is None or path == "-":
        sys.stdout.flush()
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}", EXIT_IO)


def cmd_compact(args) -> int:
    x = _load(args)
    try:
        root = validate_square_length(x.size).root
    except NotASquare as exc:
        raise CliError(str(exc), EXIT_NOT_SQUARE)
    counter = OpCounter()
    folded = compact_sic_counted(x, counter)
    _emit_signal(folded.samples, args.output, args.format)
    print(f"sqrtN={root} additions={counter.additions}", file=sys.stderr)
    return EXIT_OK


def cmd_sics(args) -> int:
    x = _load(args)
    counter = OpCounter() if args.count_ops else None
    try:
        spectrum = compute_sics(x, NORM_CHOICES[args.norm], counter, args.backend)
    except NotASquare as exc:
        raise CliError(str(exc), EXIT_NOT_SQUARE)
    except NotAPowerOfTwo as exc:
        raise CliError(f"backend fft cannot handle compacted {exc}", EXIT_BACKEND)
    with _text_out(args.output) as out:
        for k, z in enumerate(spectrum.values.tolist()):
            out.write(f"{k},{spectrum.bin(k)},{signal_io.format_sample(z)}\n")
        if counter is not None:
            out.write(f"# ops: additions={counter.additions} "
                      f"multiplications={counter.multiplications}\n")
    return EXIT_OK


def generate(kind: str, n: int, seed: int = 0, tone_bin: int = 1,
             value: complex = 1 + 0j) -> np.ndarray:
    """Deterministic test signals; raises ``ValueError`` on bad parameters."""
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if kind == "random":
        rng = np.random.default_rng(seed)
        return rng.standard_normal(n) + 1j * rng.standard_normal(n)
    if kind == "tone":
        if not 0 <= tone_bin < n:
            raise ValueError(f"tone bin {tone_bin} outside 0..{n - 1}")
        # Exact integer phase reduction before the exponential.
        phase = (tone_bin * np.arange(n)) % n
        return np.exp(2j * np.pi * phase / n)
    if kind == "impulse":
        x = np.zeros(n, dtype=np.complex128)
        x[0] = 1
        return x
    if kind == "constant":
        if not np.isfinite(value):
            raise ValueError(f"constant value must be finite, got {value}")
        return np.full(n, value, dtype=np.complex128)
    raise ValueError(f"unknown signal kind {kind!r}")


def cmd_gen(args) -> int:
    try:
        x = generate(args.kind, args.n, args.seed, args.bin, args.value)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_IO)
    _emit_signal(x, args.output, args.format)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.reps < 5:
        raise CliError(f"--reps must be at least 5, got {args.reps}", EXIT_IO)
    records = run_bench(args.sizes, args.methods, args.reps, args.seed)
    status = EXIT_OK
    for r in records:
        if not r.ok:
            print(f"error: n={r.n} method={r.method.value}: {r.error}", file=sys.stderr)
            code = EXIT_NOT_SQUARE if "perfect square" in r.error else EXIT_BACKEND
            status = status or code
    with _text_out(args.output) as out:
        write_csv(records, out)
    return status


def _int_list(text: str) -> list[int]:
    try:
        return [eval_size(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def eval_size(token: str) -> int:
    """``"1024"`` or ``"2^10"`` / ``"2**10"``."""
    token = token.strip()
    for sep in ("**", "^"):
        if sep in token:
            base, exp = token.split(sep)
            return int(base) ** int(exp)
    return int(token)


def _method_list(text: str) -> list[Method]:
    try:
        return [Method.parse(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for non-square input here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="sicfft",
        description="Square-index DFT coefficients via input compaction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    io_flags = _Parser(add_help=False)
    io_flags.add_argument("--output", "-o", default=None,
                          help="output path (default: standard output)")
    io_flags.add_argument("--format", choices=signal_io.FORMATS, default="csv")

    p = sub.add_parser("compact", parents=[io_flags],
                       help="fold an N-point signal to sqrt(N) points")
    p.add_argument("--input", "-i", required=True)
    p.set_defaults(func=cmd_compact)

    p = sub.add_parser("sics", parents=[io_flags],
                       help="compute the square-index coefficients")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--norm", choices=list(NORM_CHOICES), default="none")
    p.add_argument("--backend", choices=("naive", "fft", "auto"), default="auto")
    p.add_argument("--count-ops", action="store_true",
                   help="append a '# ops:' trailer with exact operation counts")
    p.set_defaults(func=cmd_sics)

    p = sub.add_parser("gen", parents=[io_flags], help="write a test signal")
    p.add_argument("--kind", choices=("random", "tone", "impulse", "constant"),
                   default="random")
    p.add_argument("--n", "-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bin", type=int, default=1, help="tone bin (kind=tone)")
    p.add_argument("--value", type=_complex, default=1 + 0j,
                   help="sample value (kind=constant), e.g. 2-1j")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time and count SIC methods, CSV report")
    p.add_argument("--sizes", type=_int_list, required=True,
                   help="comma-separated square lengths, e.g. 1024,2^12")
    p.add_argument("--methods", type=_method_list,
                   default=[Method.COMPACT_FFT, Method.FULL_FFT],
                   help="comma-separated: FullNaive,FullFft,CompactNaive,CompactFft")
    p.add_argument("--reps", type=int, default=7)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"sicfft {args.command}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
