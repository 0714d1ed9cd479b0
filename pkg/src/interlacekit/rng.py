"""Deterministic randomness with a pinned cross-language algorithm.

The generator is splitmix64: state advances by the additive constant
0x9E3779B97F4A7C15 and each output is finalized with two xor-shift
multiplies (0xBF58476D1CE4E5B9, 0x94D049BB133111EB) and a final
xor-shift by 31.  The same seed yields the same stream on any platform,
which is what makes generated test cases and CLI reports reproducible
byte for byte.

Bounded draws reduce the raw 64-bit output modulo the range size.  The
slight modulo bias is irrelevant here (ranges are tiny against 2**64)
and the simple rule is easy to reimplement elsewhere.
"""

from __future__ import annotations

from fractions import Fraction

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

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n)."""
        if n <= 0:
            raise ValueError(f"need a positive range, got {n}")
        return self.next_u64() % n

    def int_between(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi], both ends included."""
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.below(hi - lo + 1)

    def rational(self, num_bound: int, den_bound: int) -> Fraction:
        """Fraction with numerator in [-num_bound, num_bound] and
        denominator in [1, den_bound]; numerator drawn first."""
        num = self.int_between(-num_bound, num_bound)
        den = self.int_between(1, den_bound)
        return Fraction(num, den)


def trial_rng(seed: int, index: int) -> SplitMix64:
    """Independent stream for trial number ``index`` of a seeded run.

    Streams are decoupled by xor-ing the trial index into the seed, so
    trial i is reproducible alone without replaying trials 0 .. i-1.
    """
    if index < 0:
        raise ValueError(f"trial index must be nonnegative, got {index}")
    return SplitMix64((seed ^ index) & _MASK)
