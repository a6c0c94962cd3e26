"""Shuffle enumeration, permutation parity and wedge-index bookkeeping.

Positions inside a ``Shuffle`` are 1-based (matching the usual
x_1,...,x_{n+1} notation); everything else in the package works with
0-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb


@dataclass(frozen=True)
class Shuffle:
    permutation: tuple[int, ...]  # 1-based positions sigma(1..n)
    sign: int


@dataclass(frozen=True)
class WedgeIndex:
    indices: tuple[int, ...]  # strictly increasing


def parity(seq) -> int:
    """Sign of the permutation given by seq (+1 even, -1 odd)."""
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _block_partitions(values: tuple[int, ...], parts: tuple[int, ...]):
    if not parts:
        yield ()
        return
    head, rest = parts[0], parts[1:]
    for chosen in combinations(values, head):
        remaining = tuple(v for v in values if v not in chosen)
        for tail in _block_partitions(remaining, rest):
            yield chosen + tail


@lru_cache(maxsize=None)
def shuffles(parts: tuple[int, ...]) -> tuple[Shuffle, ...]:
    """All permutations of {1..n} increasing within each consecutive block.

    Enumerated in lexicographic order of the first block; each carries its
    parity sign.  Any negative part yields no shuffles; zero parts are fine.
    """
    if any(p < 0 for p in parts):
        return ()
    n = sum(parts)
    out = []
    for perm in _block_partitions(tuple(range(1, n + 1)), parts):
        out.append(Shuffle(perm, parity(perm)))
    return tuple(out)


def shuffle_count(parts: tuple[int, ...]) -> int:
    n = sum(parts)
    total = 1
    for p in parts:
        total *= comb(n, p)
        n -= p
    return total


def normalize_wedge(indices) -> tuple[WedgeIndex, int] | None:
    """Sorted wedge index and sorting parity; None when an index repeats."""
    seq = tuple(indices)
    if len(set(seq)) != len(seq):
        return None
    return WedgeIndex(tuple(sorted(seq))), parity(seq)


def sort_with_sign(indices) -> tuple[tuple[int, ...], int] | None:
    """Like normalize_wedge but returning a bare tuple (internal hot path)."""
    seq = tuple(indices)
    if len(set(seq)) != len(seq):
        return None
    return tuple(sorted(seq)), parity(seq)


@lru_cache(maxsize=None)
def wedge_basis(dim: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Strictly increasing k-tuples over range(dim), lexicographic."""
    return tuple(combinations(range(dim), k))


@lru_cache(maxsize=None)
def wedge_position(dim: int, k: int) -> dict:
    return {t: i for i, t in enumerate(wedge_basis(dim, k))}
