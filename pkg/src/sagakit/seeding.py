"""Deterministic seed derivation for reproducible randomized runs.

Every randomized operation takes an explicit integer seed and derives
per-trial child seeds from it, so serial and parallel executions of the
same (seed, trial-index) grid produce identical results.
"""

import random

DEFAULT_SEED = 1729

_MASK = (1 << 64) - 1


def child_seed(seed: int, index: int) -> int:
    """Mix (seed, index) into a new 64-bit seed (splitmix64-style)."""
    z = (seed * 0x9E3779B97F4A7C15 + index + 1) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def rng_for(seed: int, index: int) -> random.Random:
    """A fresh RNG for trial `index` under parent `seed`."""
    return random.Random(child_seed(seed, index))


def random_int_coords(rng: random.Random, length: int, low: int = -10,
                      high: int = 10, nonzero: bool = True) -> list[int]:
    """Uniform integer coordinate vector from the box [low, high]^length.

    With nonzero=True the zero vector is rejected and resampled.
    """
    if length == 0:
        return []
    while True:
        coords = [rng.randint(low, high) for _ in range(length)]
        if not nonzero or any(coords):
            return coords
