"""Deterministic splittable pseudo-random numbers for corpus generation.

All randomness in the verification harness flows through :class:`SplitMix64`
so that a (suite, seed) pair reproduces the exact same corpus on any
platform or implementation.  The generator is the standard splitmix64:

    state   <- state + 0x9E3779B97F4A7C15            (mod 2^64)
    z       <- (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z       <- (z ^ (z >> 27)) * 0x94D049BB133111EB
    output  <- z ^ (z >> 31)

Splitting spawns an independent child generator seeded with the parent's
next output word.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def split(self) -> "SplitMix64":
        """Independent child stream; advancing the child leaves the parent alone."""
        return SplitMix64(self.next_u64())

    def random(self) -> float:
        """Float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) via rejection sampling (no modulo bias)."""
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        bound = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < bound:
                return x % n

    def randint(self, a: int, b: int) -> int:
        """Uniform integer in [a, b] inclusive."""
        return a + self.randrange(b - a + 1)

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, seq, k: int) -> list:
        """k distinct elements, order determined by the stream."""
        if k > len(seq):
            raise ValueError("sample larger than population")
        pool = list(seq)
        self.shuffle(pool)
        return pool[:k]
