import struct

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sicfft import signal_io
from sicfft.signal_io import SignalFormatError

finite = st.floats(allow_nan=False, allow_infinity=False)
signals = st.lists(st.builds(complex, finite, finite), min_size=1, max_size=50)


def bits(arr):
    return np.asarray(arr, dtype=np.complex128).view(np.uint64).tolist()


@given(signals)
def test_csv_round_trip_exact(values):
    import io

    buf = io.StringIO()
    signal_io.write_csv(values, buf)
    assert bits(signal_io.parse_csv(buf.getvalue())) == bits(values)


@given(signals)
def test_bin_round_trip_exact(values):
    assert bits(signal_io.parse_bin(signal_io.to_bin(values))) == bits(values)


def test_negative_zero_and_extremes_survive(tmp_path):
    values = [complex(-0.0, 0.0), complex(5e-324, -1.7976931348623157e308),
              complex(0.1, 1 / 3)]
    for fmt in signal_io.FORMATS:
        path = tmp_path / f"s.{fmt}"
        signal_io.write_signal(path, values, fmt)
        assert bits(signal_io.read_signal(path, fmt)) == bits(values)


def test_bin_layout_is_little_endian_re_then_im():
    data = signal_io.to_bin([1.5 - 2j])
    assert data == struct.pack("<dd", 1.5, -2.0)


def test_csv_integers_print_plainly():
    import io

    buf = io.StringIO()
    signal_io.write_csv([15 - 3j, 26 + 6j], buf)
    assert buf.getvalue() == "15,-3\n26,6\n"


def test_csv_comments_and_blank_lines():
    text = "# header comment\n1,2\n\n  # indented\n3.5,-4e-3\n"
    assert signal_io.parse_csv(text).tolist() == [1 + 2j, 3.5 - 0.004j]


@pytest.mark.parametrize("text, where", [
    ("1,2\n3\n", ":2:"),
    ("1,2\nfoo,1\n", ":2:"),
    ("1,2,3\n", ":1:"),
    ("nan,0\n", ":1:"),
])
def test_csv_errors_name_the_line(text, where):
    with pytest.raises(SignalFormatError, match=where):
        signal_io.parse_csv(text, "sig.csv")


def test_csv_empty():
    with pytest.raises(SignalFormatError, match="no samples"):
        signal_io.parse_csv("# nothing\n")


def test_bin_size_must_be_multiple_of_16():
    with pytest.raises(SignalFormatError, match="offset 16"):
        signal_io.parse_bin(b"\0" * 20)
    with pytest.raises(SignalFormatError, match="no samples"):
        signal_io.parse_bin(b"")


def test_bin_rejects_non_finite():
    with pytest.raises(SignalFormatError, match="offset 16"):
        signal_io.parse_bin(struct.pack("<4d", 1, 2, float("inf"), 0))
