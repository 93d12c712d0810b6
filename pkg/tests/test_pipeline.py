import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_signal
from oracles import PAPER_SICS, PAPER_SIGNAL, dft, max_rel_err, tone
from sicfft.core import NormalizationMode, NotAPowerOfTwo, NotASquare, SicSpectrum
from sicfft.pipeline import compute_sics, sics_by_full_dft
from sicfft.transform import OpCounter, dft_naive

NONE, ONE_OVER_N, UNITARY = NormalizationMode


def test_paper_example_one_over_n():
    s = compute_sics(PAPER_SIGNAL, ONE_OVER_N)
    assert isinstance(s, SicSpectrum)
    assert s.bins.tolist() == [0, 3, 6]
    for got, printed in zip(s.values, PAPER_SICS):
        assert abs(got.real - printed.real) <= 1e-4
        assert abs(got.imag - printed.imag) <= 1e-4


def test_paper_example_oracle_agrees():
    full = dft(PAPER_SIGNAL, 1 / 9)
    ref = sics_by_full_dft(PAPER_SIGNAL, ONE_OVER_N)
    fast = compute_sics(PAPER_SIGNAL, ONE_OVER_N)
    assert max_rel_err(ref, full[::3]) <= 1e-12
    assert max_rel_err(fast, ref) <= 1e-9
    for got, printed in zip(ref.values, PAPER_SICS):
        assert abs(got - printed) <= 1e-4 * math.sqrt(2)


def test_paper_example_unnormalized_is_listing_output():
    # fft(compactsic(x)) with no scaling at all
    s = compute_sics(PAPER_SIGNAL)
    assert max_rel_err(s, dft([15 - 3j, 26 + 6j, 37 + 15j])) <= 1e-15


@pytest.mark.parametrize("n", [1, 4, 9, 25, 64, 256])
def test_constant_signal_is_dc_only(n):
    c = 1.5 - 0.25j
    s = compute_sics(np.full(n, c), ONE_OVER_N)
    assert abs(s[0] - c) <= 1e-12
    assert np.all(np.abs(s.values[1:]) <= 1e-12)


def test_random_64_equals_subsampled_full_dft(rng):
    x = random_signal(rng, 64)
    full = np.asarray(dft_naive(x))
    assert max_rel_err(compute_sics(x), full[[0, 8, 16, 24, 32, 40, 48, 56]]) <= 1e-9


def test_full_dft_impulse():
    x = np.zeros(16)
    x[0] = 1
    assert sics_by_full_dft(x).values.tolist() == [1, 1, 1, 1]


def test_energy_only_off_square_bins():
    n = 16
    x = np.zeros(n, dtype=complex)
    for b in range(n):
        if b % 4:
            x += (b + 1) * np.asarray(tone(n, b))
    assert np.all(np.abs(sics_by_full_dft(x).values) <= 1e-10)
    assert np.all(np.abs(compute_sics(x).values) <= 1e-10)


@pytest.mark.parametrize("n", [2, 12, 50])
def test_non_square_rejected(n):
    with pytest.raises(NotASquare):
        compute_sics(np.ones(n))
    with pytest.raises(NotASquare):
        sics_by_full_dft(np.ones(n))


def test_forced_fft_needs_power_of_two_root():
    with pytest.raises(NotAPowerOfTwo):
        compute_sics(np.ones(36), backend="fft")
    with pytest.raises(ValueError):
        compute_sics(np.ones(16), backend="bluestein")


@pytest.mark.parametrize("n", [16, 256, 1024])
def test_backends_agree(rng, n):
    x = random_signal(rng, n)
    a = compute_sics(x, backend="naive")
    b = compute_sics(x, backend="fft")
    c = compute_sics(x, backend="auto")
    assert max_rel_err(a, b) <= 1e-9
    assert c.values.tolist() == b.values.tolist()


@st.composite
def square_signals(draw, max_root=20):
    root = draw(st.integers(1, max_root))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_signal(np.random.default_rng(seed), root * root)


@given(square_signals(), st.sampled_from(list(NormalizationMode)))
@settings(max_examples=60, deadline=None)
def test_core_identity(x, mode):
    assert max_rel_err(compute_sics(x, mode), sics_by_full_dft(x, mode)) <= 1e-9


@given(square_signals())
@settings(max_examples=60, deadline=None)
def test_normalization_consistency(x):
    n = x.size
    raw = compute_sics(x, NONE).values
    scaled = compute_sics(x, ONE_OVER_N).values
    # both sides perform the same single rounding of raw * (1/n)
    assert np.array_equal(scaled, raw * (1 / n))
    assert np.all(np.abs(scaled - raw / n) <= np.spacing(np.abs(raw / n)) * 2)


@given(square_signals(max_root=32))
@settings(max_examples=60, deadline=None)
def test_dc_equals_scaled_total(x):
    for mode, k in [(NONE, 1.0), (ONE_OVER_N, 1 / x.size), (UNITARY, 1 / math.sqrt(x.size))]:
        total = k * math.fsum(x.real) + 1j * k * math.fsum(x.imag)
        v0 = compute_sics(x, mode)[0]
        assert abs(v0 - total) <= 1e-12 * max(abs(total), k * np.abs(x).sum())


@pytest.mark.parametrize("n", [4, 9, 16, 36, 64, 81, 256, 1024, 4096])
def test_cost_dominance(rng, n):
    x = random_signal(rng, n)
    root = math.isqrt(n)
    c = OpCounter()
    compute_sics(x, counter=c)
    if root & (root - 1) == 0:
        bound = (root // 2) * math.log2(root) + root if root > 1 else 0
    else:
        bound = n
    assert c.multiplications <= bound
    assert c.additions <= 2 * n
    naive = OpCounter()
    compute_sics(x, counter=naive, backend="naive")
    assert naive.multiplications == n  # (sqrt N)^2
    assert naive.additions == (n - root) + root * (root - 1)


def test_unitary_is_relative_to_original_length(rng):
    x = random_signal(rng, 256)
    a = compute_sics(x, UNITARY).values
    b = compute_sics(x, NONE).values / 16
    np.testing.assert_allclose(a, b, rtol=1e-15, atol=0)


def test_concurrent_calls_are_independent(rng):
    from concurrent.futures import ThreadPoolExecutor

    xs = [random_signal(rng, 1024) for _ in range(8)]
    expected = [compute_sics(x).values.tolist() for x in xs]

    def run(x):
        c = OpCounter()
        return compute_sics(x, counter=c).values.tolist(), c.multiplications

    with ThreadPoolExecutor(4) as pool:
        results = list(pool.map(run, xs))
    assert [r[0] for r in results] == expected
    assert {r[1] for r in results} == {80}
