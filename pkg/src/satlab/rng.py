"""Seeded randomness for the solver loops.

Every trial draws from a stream that is a pure function of (master seed,
trial index), so repeated-trial drivers may run trials in any order or in
parallel and still aggregate bit-identically.
"""

from __future__ import annotations

import random

_MASK64 = (1 << 64) - 1


def derive_seed(master_seed: int, trial_index: int) -> int:
    """Stable 64-bit mix of master seed and trial index (splitmix64 core)."""
    z = (master_seed * 0x9E3779B97F4A7C15 + trial_index + 1) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class RandomSource:
    """Deterministic pseudorandom stream used by one solver iteration.

    Supports exactly the draws the algorithms need: a uniform permutation
    of 1..n, a fair coin, and a uniform index below a small bound.
    """

    def __init__(self, seed: int):
        self.seed = seed
        self._random = random.Random(seed)

    def permutation(self, n: int) -> list[int]:
        perm = list(range(1, n + 1))
        self._random.shuffle(perm)
        return perm

    def coin(self) -> bool:
        return self._random.getrandbits(1) == 1

    def index(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        return self._random.randrange(bound)

    @classmethod
    def for_trial(cls, master_seed: int, trial_index: int) -> "RandomSource":
        return cls(derive_seed(master_seed, trial_index))
