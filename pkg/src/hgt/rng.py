"""splitmix64 generator.

Constants are the published ones (Steele, Lea, Flood 2014):
increment 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
All arithmetic is on Python ints masked to 64 bits, so streams are identical on
every platform.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound); exact for any bound, including big ints."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        nbits = (bound - 1).bit_length() or 1
        while True:
            x = 0
            got = 0
            while got < nbits:
                x = (x << 64) | self.next_u64()
                got += 64
            x >>= got - nbits
            if x < bound:
                return x

    def bernoulli(self, num: int, den: int) -> bool:
        """True with probability num/den, decided on the top 53 bits without floats."""
        return (self.next_u64() >> 11) * den < num << 53

    def sample(self, population: int, k: int) -> list[int]:
        """k distinct values from range(population), via a partial Fisher-Yates shuffle."""
        pool = list(range(population))
        for i in range(k):
            j = i + self.below(population - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


def substream(seed: int, index: int) -> SplitMix64:
    """Independent stream for the index-th task spawned from seed."""
    return SplitMix64(mix64((seed & MASK64) ^ mix64(index + 1)))
