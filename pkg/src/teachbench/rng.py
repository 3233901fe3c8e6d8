"""Deterministic randomness primitives shared by every sampling code path.

Reproducibility across runs, machines, and reimplementations matters more
here than statistical sophistication, so this module pins an exact,
documented procedure instead of deferring to ``random`` internals:

* generator: SplitMix64 (Steele et al.'s 64-bit mixer; state advances by
  the golden-ratio increment 0x9E3779B97F4A7C15, output is the
  xor-shift/multiply finalizer),
* bounded draws: rejection sampling on the top of the 64-bit range, so
  every bound is unbiased,
* shuffling: Fisher-Yates, iterating i from len-1 down to 1 and swapping
  with j = draw below (i+1),
* seed derivation: SHA-256 over the unit-separated string forms of the
  parts, first 8 bytes big-endian.

Any other implementation following this paragraph reproduces identical
streams; the test suite holds an independently written copy as an oracle.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Sequence, TypeVar

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

T = TypeVar("T")


class SplitMix64:
    """SplitMix64 pseudo-random generator over a 64-bit state."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        """Advance the state once and return the mixed 64-bit output."""
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Unbiased draw from [0, bound) via rejection sampling."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = _MASK64 + 1 - ((_MASK64 + 1) % bound)
        while True:
            draw = self.next_u64()
            if draw < limit:
                return draw % bound

    def uniform(self) -> float:
        """Float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (2.0 ** -53)


def fisher_yates(items: list[T], rng: SplitMix64) -> None:
    """Shuffle ``items`` in place with the classic descending-index walk."""
    for i in range(len(items) - 1, 0, -1):
        j = rng.below(i + 1)
        items[i], items[j] = items[j], items[i]


def shuffled(items: Sequence[T], seed: int) -> list[T]:
    """Return a seeded Fisher-Yates permutation of ``items``."""
    out = list(items)
    fisher_yates(out, SplitMix64(seed))
    return out


def derive_seed(*parts: int | str) -> int:
    """Derive a 64-bit seed from heterogeneous parts.

    Used for per-pair request seeds (run seed, method, sequence index),
    per-trial seeds (run seed, trial index), and retry seeds, so any
    single draw in a run is re-derivable in isolation.
    """
    joined = "\x1f".join(str(p) for p in parts)
    digest = hashlib.sha256(joined.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def sample_indices(n: int, k: int, seed: int) -> list[int]:
    """First ``k`` positions of a seeded permutation of range(n)."""
    if k > n:
        raise ValueError(f"cannot sample {k} of {n}")
    order = list(range(n))
    fisher_yates(order, SplitMix64(seed))
    return order[:k]


def choose_pairs(n: int, budget: int, seed: int) -> Iterable[tuple[int, int]]:
    """Yield ``budget`` index pairs (i, j), i != j, uniformly with replacement.

    j is drawn from the n-1 non-i values so ordered pairs are uniform;
    symmetric statistics over the yielded pairs are unbiased estimates of
    the unordered-pair mean.
    """
    rng = SplitMix64(seed)
    for _ in range(budget):
        i = rng.below(n)
        j = rng.below(n - 1)
        if j >= i:
            j += 1
        yield i, j
