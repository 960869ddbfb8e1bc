"""Portable seeded randomness.

Every stochastic choice in the package (edge sampling, Louvain visiting
order, label-propagation order and tie breaks) draws from :class:`SplitMix64`.
The generator is pure integer arithmetic on 64-bit words, so a given seed
yields the same stream on every platform and Python version.

Reference: Steele, Lea & Flood, "Fast splittable pseudorandom number
generators" (OOPSLA 2014); constants as in Vigna's ``splitmix64.c``.
"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def mix64(z):
    """SplitMix64 output finalizer (a bijection on 64-bit words)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h = ((h ^ byte) * _FNV_PRIME) & MASK64
    return h


def derive_seed(base_seed: int, network_id: str, k: int, replicate: int) -> int:
    """Child seed for one sweep cell.

    Each component is folded in as ``state = mix64(state + GOLDEN_GAMMA ^ part)``
    starting from ``base_seed``; the network id enters through its FNV-1a hash
    of the UTF-8 bytes. Negative integers are taken modulo 2**64.
    """
    state = base_seed & MASK64
    for part in (fnv1a64(network_id.encode("utf-8")), k & MASK64, replicate & MASK64):
        state = mix64(((state + GOLDEN_GAMMA) & MASK64) ^ part)
    return state


class SplitMix64:
    """Minimal SplitMix64 generator.

    >>> SplitMix64(0).next_u64()
    16294208416658607535
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection sampling (no modulo bias)."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = ((1 << 64) // n) * n
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def random(self) -> float:
        """Uniform float in ``[0, 1)`` with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, seq) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(seq) - 1, 0, -1):
            j = self.below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def sample_indices(self, population: int, k: int) -> list:
        """``k`` distinct indices from ``range(population)`` in draw order.

        Partial Fisher-Yates over a sparse swap table, so memory is O(k).
        """
        if not 0 <= k <= population:
            raise ValueError("sample larger than population")
        swaps = {}
        out = []
        for i in range(k):
            j = i + self.below(population - i)
            out.append(swaps.get(j, j))
            swaps[j] = swaps.get(i, i)
        return out
