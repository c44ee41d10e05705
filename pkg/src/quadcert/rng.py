"""Deterministic random number generation for reproducible certificates.

The generator is SplitMix64 (Steele, Lea and Flood's splittable generator as
popularized by the Java 8 SplittableRandom implementation): a 64-bit counter
advanced by the golden-gamma constant, finalized by two xor-shift-multiply
rounds. It is tiny, portable, and fully determined by its seed, which is why
every seed printed in a certificate reproduces the same draws on any machine.
"""

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """SplitMix64 stream seeded with a 64-bit integer."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        """Return the next 64-bit output."""
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection, so draws are unbiased."""
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def derive_seed(self) -> int:
        """Fresh 64-bit seed for an independent child stream."""
        return self.next_u64()
