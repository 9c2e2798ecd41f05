"""Deterministic 64-bit generator used for random tables and for sampling.

SplitMix64: the i-th output (1-based) of a generator seeded with `s` is
mix(s + i * GAMMA mod 2^64), which lets a whole batch be drawn at once.
"""

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_MUL1 = 0xBF58476D1CE4E5B9
_MUL2 = 0x94D049BB133111EB


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MUL1) & MASK64
    z = ((z ^ (z >> 27)) * _MUL2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Seeded generator of 64-bit words.

    Seeds are taken modulo 2^64, so negative seeds are accepted.
    """

    def __init__(self, seed: int) -> None:
        self._state = seed & MASK64

    def __call__(self) -> int:
        self._state = (self._state + GAMMA) & MASK64
        return _mix(self._state)

    def draws(self, count: int) -> np.ndarray:
        """The next `count` words, identical to `count` successive calls."""
        if count < 0:
            raise ValueError("count must be nonnegative")
        with np.errstate(over="ignore"):
            steps = np.arange(1, count + 1, dtype=np.uint64)
            z = np.uint64(self._state) + steps * np.uint64(GAMMA)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(_MUL1)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(_MUL2)
            z = z ^ (z >> np.uint64(31))
        self._state = (self._state + count * GAMMA) & MASK64
        return z

    def uniforms(self, count: int) -> np.ndarray:
        """Doubles in [0, 1) built from the top 53 bits of each word."""
        return (self.draws(count) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def partial_shuffle(items: np.ndarray, count: int, rng: SplitMix64) -> np.ndarray:
    """Forward Fisher-Yates over `items`, stopped after `count` positions.

    Position i swaps with i + (word mod (len - i)). Returns the first `count`
    entries of the shuffled copy; `count == len(items)` is a full shuffle.
    """
    size = len(items)
    if not 0 <= count <= size:
        raise ValueError(f"count must be in [0, {size}], got {count}")
    shuffled = np.array(items, copy=True)
    if count == 0:
        return shuffled[:0]
    bounds = np.arange(size, size - count, -1, dtype=np.uint64)
    offsets = (rng.draws(count) % bounds).tolist()
    for i, offset in enumerate(offsets):
        j = i + offset
        shuffled[i], shuffled[j] = shuffled[j], shuffled[i]
    return shuffled[:count]
