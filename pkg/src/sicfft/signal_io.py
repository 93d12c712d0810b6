"""Signal file formats.

``csv``: one sample per line as ``re,im``; blank lines and lines starting
with ``#`` are ignored; no header. Values are written with 17 significant
digits, which round-trips every double exactly.

``bin``: little-endian IEEE-754 float64 pairs (re then im), no header, so the
file size must be a multiple of 16 bytes.
"""

from __future__ import annotations

import io
import os
from typing import TextIO, Union

import numpy as np

FORMATS = ("csv", "bin")
_BIN_DTYPE = np.dtype("<c16")

PathLike = Union[str, os.PathLike]


class SignalFormatError(ValueError):
    pass


def format_float(v: float) -> str:
    return format(v, ".17g")


def format_sample(z: complex) -> str:
    return f"{format_float(z.real)},{format_float(z.imag)}"


def parse_csv(text: str, source: str = "<input>") -> np.ndarray:
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split(",")
        if len(parts) != 2:
            raise SignalFormatError(
                f"{source}:{lineno}: expected 're,im', got {stripped!r}"
            )
        try:
            re_, im = float(parts[0]), float(parts[1])
        except ValueError:
            raise SignalFormatError(
                f"{source}:{lineno}: cannot parse {stripped!r} as two numbers"
            ) from None
        if not (np.isfinite(re_) and np.isfinite(im)):
            raise SignalFormatError(f"{source}:{lineno}: non-finite sample {stripped!r}")
        values.append(complex(re_, im))
    if not values:
        raise SignalFormatError(f"{source}: no samples")
    return np.array(values, dtype=np.complex128)


def write_csv(samples, stream: TextIO) -> None:
    for z in np.asarray(samples, dtype=np.complex128).tolist():
        stream.write(format_sample(z))
        stream.write("\n")


def parse_bin(data: bytes, source: str = "<input>") -> np.ndarray:
    if len(data) % _BIN_DTYPE.itemsize:
        whole = len(data) - len(data) % _BIN_DTYPE.itemsize
        raise SignalFormatError(
            f"{source}: size {len(data)} bytes is not a multiple of 16 "
            f"(trailing bytes at offset {whole})"
        )
    if not data:
        raise SignalFormatError(f"{source}: no samples")
    arr = np.frombuffer(data, dtype=_BIN_DTYPE).astype(np.complex128)
    bad = np.flatnonzero(~np.isfinite(arr))
    if bad.size:
        raise SignalFormatError(
            f"{source}: non-finite sample at offset {int(bad[0]) * _BIN_DTYPE.itemsize}"
        )
    return arr


def to_bin(samples) -> bytes:
    return np.asarray(samples, dtype=np.complex128).astype(_BIN_DTYPE).tobytes()


def read_signal(path: PathLike, fmt: str = "csv") -> np.ndarray:
    if fmt == "csv":
        with open(path, encoding="utf-8") as fh:
            return parse_csv(fh.read(), os.fspath(path))
    if fmt == "bin":
        with open(path, "rb") as fh:
            return parse_bin(fh.read(), os.fspath(path))
    raise ValueError(f"unknown format {fmt!r}")


def write_signal(path: PathLike, samples, fmt: str = "csv") -> None:
    if fmt == "csv":
        buf = io.StringIO()
        write_csv(samples, buf)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(buf.getvalue())
    elif fmt == "bin":
        with open(path, "wb") as fh:
            fh.write(to_bin(samples))
    else:
        raise ValueError(f"unknown format {fmt!r}")
