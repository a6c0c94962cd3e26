"""Canonical coordinates for the five cochain spaces and skew evaluation.

Domain shapes by kind (degree index n is the cohomology degree):

* associative / leibniz: n plain tensor slots, n >= 0
* lie: n wedge slots, n >= 0
* prelie: n-1 wedge slots followed by one plain slot, n >= 1
* threelie: n-1 independent wedge-pair slots followed by one plain slot,
  n >= 1 (no symmetry across slots)

A domain tuple is a flat tuple of ints except for threelie, where the
first n-1 entries are increasing 2-tuples and the last is an int.  Coords
are dense over (domain basis) x (coefficient basis) with the output index
innermost.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .combinatorics import sort_with_sign, wedge_basis
from .linalg import ZERO, vec_zero
from .structures import AlgebraKind


class CochainSpace:
    __slots__ = ("kind", "n", "dim_g", "dim_v", "basis", "position")

    def __init__(self, kind: AlgebraKind, n: int, dim_g: int, dim_v: int):
        kind = AlgebraKind(kind)
        if kind in (AlgebraKind.PRELIE, AlgebraKind.THREELIE) and n < 1:
            raise ValueError(f"{kind.value} cochains start at degree 1")
        if n < 0:
            raise ValueError("negative cochain degree")
        self.kind = kind
        self.n = n
        self.dim_g = dim_g
        self.dim_v = dim_v
        self.basis = _domain_basis(kind, n, dim_g)
        self.position = {t: i for i, t in enumerate(self.basis)}

    @property
    def dimension(self) -> int:
        return len(self.basis) * self.dim_v

    def locate(self, args) -> tuple[int, int] | None:
        """(basis position, sign) of a domain tuple, or None if it dies.

        Wedge slots are brought to canonical increasing order, collecting
        parity signs; a repeated index inside one wedge block gives None.
        """
        args = tuple(args)
        k = self.kind
        n = self.n
        if k in (AlgebraKind.ASSOCIATIVE, AlgebraKind.LEIBNIZ):
            if len(args) != n:
                raise ValueError("argument tuple length mismatch")
            pos = self.position.get(args)
            return None if pos is None else (pos, 1)
        if k is AlgebraKind.LIE:
            if len(args) != n:
                raise ValueError("argument tuple length mismatch")
            norm = sort_with_sign(args)
            if norm is None:
                return None
            key, sign = norm
            return self.position[key], sign
        if k is AlgebraKind.PRELIE:
            if len(args) != n:
                raise ValueError("argument tuple length mismatch")
            norm = sort_with_sign(args[: n - 1])
            if norm is None:
                return None
            key, sign = norm
            return self.position[key + args[n - 1:]], sign
        # threelie: n-1 wedge pairs + final plain slot
        if len(args) != n:
            raise ValueError("argument tuple length mismatch")
        sign = 1
        canon = []
        for pair in args[: n - 1]:
            norm = sort_with_sign(pair)
            if norm is None:
                return None
            key, s = norm
            canon.append(key)
            sign *= s
        return self.position[tuple(canon) + args[n - 1:]], sign

    def __eq__(self, other):
        return (
            isinstance(other, CochainSpace)
            and self.kind is other.kind
            and self.n == other.n
            and self.dim_g == other.dim_g
            and self.dim_v == other.dim_v
        )

    def __hash__(self):
        return hash((self.kind, self.n, self.dim_g, self.dim_v))

    def __repr__(self):
        return f"CochainSpace({self.kind.value}, n={self.n}, g={self.dim_g}, V={self.dim_v})"


@lru_cache(maxsize=None)
def _domain_basis(kind: AlgebraKind, n: int, dim_g: int) -> tuple:
    if kind in (AlgebraKind.ASSOCIATIVE, AlgebraKind.LEIBNIZ):
        return tuple(product(range(dim_g), repeat=n))
    if kind is AlgebraKind.LIE:
        return wedge_basis(dim_g, n)
    if kind is AlgebraKind.PRELIE:
        return tuple(
            w + (last,) for w in wedge_basis(dim_g, n - 1) for last in range(dim_g)
        )
    pairs = wedge_basis(dim_g, 2)
    return tuple(
        ws + (last,)
        for ws in product(pairs, repeat=n - 1)
        for last in range(dim_g)
    )


@lru_cache(maxsize=None)
def cochain_space(kind: AlgebraKind, n: int, dim_g: int, dim_v: int) -> CochainSpace:
    return CochainSpace(kind, n, dim_g, dim_v)


class Cochain:
    """A coordinate vector over a CochainSpace; treat as immutable."""

    __slots__ = ("space", "coords")

    def __init__(self, space: CochainSpace, coords):
        coords = list(coords)
        if len(coords) != space.dimension:
            raise ValueError(
                f"coordinate length {len(coords)} != space dimension {space.dimension}"
            )
        self.space = space
        self.coords = coords

    @classmethod
    def zero(cls, space: CochainSpace) -> "Cochain":
        return cls(space, [ZERO] * space.dimension)

    @classmethod
    def indicator(cls, space: CochainSpace, index: int) -> "Cochain":
        coords = [ZERO] * space.dimension
        coords[index] = Fraction(1)
        return cls(space, coords)

    @property
    def degree(self) -> int:
        """Graded degree when viewed as an element of C^*(g,g): n - 1."""
        return self.space.n - 1

    def value_at(self, pos: int) -> list[Fraction]:
        v = self.space.dim_v
        return self.coords[pos * v: (pos + 1) * v]

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def plus(self, other: "Cochain") -> "Cochain":
        if self.space != other.space:
            raise ValueError("cochain space mismatch")
        return Cochain(self.space, [a + b for a, b in zip(self.coords, other.coords)])

    def minus(self, other: "Cochain") -> "Cochain":
        if self.space != other.space:
            raise ValueError("cochain space mismatch")
        return Cochain(self.space, [a - b for a, b in zip(self.coords, other.coords)])

    def scale(self, c) -> "Cochain":
        c = Fraction(c)
        return Cochain(self.space, [c * a for a in self.coords])

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.space == other.space
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.space, tuple(self.coords)))

    def __repr__(self):
        return f"Cochain({self.space!r})"


def evaluate(f: Cochain, args) -> list[Fraction]:
    """Value of the cochain on a tuple of basis indices, skew-extended."""
    loc = f.space.locate(args)
    if loc is None:
        return vec_zero(f.space.dim_v)
    pos, sign = loc
    val = f.value_at(pos)
    if sign == 1:
        return val
    return [-x for x in val]


def evaluate_vec_slot(f: Cochain, args, slot: int, vec, leg: int | None = None) -> list[Fraction]:
    """Evaluate with one argument given as a vector instead of an index.

    ``slot`` names the domain position holding the vector.  For threelie,
    ``leg`` (0 or 1) says which leg of the wedge pair at ``slot`` is the
    vector; the other leg comes from ``args`` unchanged.
    """
    out = vec_zero(f.space.dim_v)
    args = list(args)
    for m, coef in enumerate(vec):
        if not coef:
            continue
        if leg is None:
            args[slot] = m
        else:
            pair = list(args[slot])
            pair[leg] = m
            args[slot] = tuple(pair)
        term = evaluate(f, tuple(args))
        for i, x in enumerate(term):
            if x:
                out[i] += coef * x
    return out


def to_vector(f: Cochain) -> list[Fraction]:
    return list(f.coords)


def from_vector(space: CochainSpace, v) -> Cochain:
    return Cochain(space, list(v))


def structure_element(a) -> Cochain:
    """The structure constants as a degree-1 element of C^*(g,g)."""
    from .structures import AlgebraKind

    d = a.dim
    space = cochain_space(a.kind, 2, d, d)
    coords = [ZERO] * space.dimension
    for pos, t in enumerate(space.basis):
        if a.kind is AlgebraKind.THREELIE:
            (i, j), m = t
            vec = a.triple(i, j, m)
        else:
            i, j = t
            vec = a.product(i, j)
        for k, x in enumerate(vec):
            if x:
                coords[pos * d + k] = x
    return Cochain(space, coords)
