"""Deterministic random generation for property checks.

Everything here is reproducible from a single integer seed on any
platform: the generator is a 64-bit linear congruential generator with
Knuth's MMIX constants,

    state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64

and the sampler below draws from it in a fixed documented order, so the
same seed always yields the same stream of configurations.
"""

from __future__ import annotations

from .config import Configuration, Tail
from .heights import MINUS_INF, PLUS_INF

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = (1 << 64) - 1


class Lcg64:
    """The package's only randomness source. Seeded, portable, tiny."""

    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state * MULTIPLIER + INCREMENT) & MASK
        return self.state

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n), reduced from the high bits of
        the state; the low bits of a power-of-two LCG cycle with tiny
        periods and must not be used directly."""
        return (self.next_u64() >> 33) % n

    def int_between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


def _value(rng: Lcg64, height: int, allow_inf: bool):
    if allow_inf and rng.below(8) == 0:
        return PLUS_INF if rng.below(2) else MINUS_INF
    return rng.int_between(-height, height)


def sample_configuration(
    rng: Lcg64,
    height: int = 4,
    include_infinities: bool = False,
) -> Configuration:
    """One random configuration, cycling through all four constructor
    shapes: finite deviations, periodic, affine, and general two-tailed."""
    kind = rng.below(4)
    if kind == 0:
        count = rng.below(5)
        devs = {}
        for _ in range(count):
            pos = rng.int_between(-6, 6)
            devs[pos] = _value(rng, height, include_infinities)
        return Configuration.finite(devs)
    if kind == 1:
        p = 1 + rng.below(4)
        return Configuration.periodic(
            [_value(rng, height, include_infinities) for _ in range(p)]
        )
    if kind == 2:
        p = 1 + rng.below(3)
        slope = rng.int_between(-2, 2)
        return Configuration.affine(
            [_value(rng, height, include_infinities) for _ in range(p)], slope
        )
    core_len = rng.below(4)
    start = rng.int_between(-2, 2)
    core = tuple(_value(rng, height, include_infinities) for _ in range(core_len))
    tails = []
    for _ in range(2):
        p = 1 + rng.below(3)
        slope = rng.int_between(-2, 2)
        tails.append(
            Tail(
                tuple(_value(rng, height, include_infinities) for _ in range(p)),
                slope,
            )
        )
    return Configuration(start, core, tails[0], tails[1])
