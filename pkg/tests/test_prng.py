import numpy as np
import pytest

from dj_decider.prng import MASK64, SplitMix64, partial_shuffle


def test_known_first_output() -> None:
    assert SplitMix64(0)() == 0xE220A8397B1DCDAF


def test_draws_match_successive_calls() -> None:
    scalar = SplitMix64(42)
    expected = [scalar() for _ in range(10)]

    vectorized = SplitMix64(42)
    words = vectorized.draws(4).tolist() + vectorized.draws(6).tolist()
    assert words == expected
    # both generators are left in the same state
    assert vectorized() == scalar()


def test_seed_is_taken_modulo_2_64() -> None:
    assert SplitMix64(-1)() == SplitMix64(MASK64)()
    assert SplitMix64(1 << 64)() == SplitMix64(0)()


def test_uniforms_range() -> None:
    u = SplitMix64(7).uniforms(10_000)
    assert u.dtype == np.float64
    assert np.all(u >= 0.0) and np.all(u < 1.0)
    assert 0.45 < u.mean() < 0.55


def test_draws_negative_count() -> None:
    with pytest.raises(ValueError):
        SplitMix64(0).draws(-1)


def test_partial_shuffle() -> None:
    items = np.arange(16)
    full = partial_shuffle(items, 16, SplitMix64(3))
    assert sorted(full.tolist()) == list(range(16))
    # input is not modified
    assert items.tolist() == list(range(16))

    head = partial_shuffle(items, 8, SplitMix64(3))
    assert head.tolist() == full[:8].tolist()
    assert partial_shuffle(items, 0, SplitMix64(3)).size == 0

    with pytest.raises(ValueError, match="count must be in"):
        partial_shuffle(items, 17, SplitMix64(3))
