"""Structure-constant algebras: storage, axiom validation, derived structures.

An ``Algebra`` is a kind tag plus a dense structure-constant tensor over a
chosen basis: ``e_i * e_j = sum_k c[i][j][k] e_k`` for the binary kinds and
``[e_i, e_j, e_k] = sum_l c[i][j][k][l] e_l`` for 3-Lie.  Skew-symmetry of
the *storage* is enforced at construction for lie/threelie (non-skew input
is rejected, never silently antisymmetrized); whether the defining identity
holds is a separate question answered by :func:`validate_structure`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .combinatorics import sort_with_sign, wedge_basis, wedge_position
from .linalg import ZERO, vec_add, vec_is_zero, vec_scale, vec_sub, vec_zero


class AlgebraKind(str, Enum):
    ASSOCIATIVE = "associative"
    LIE = "lie"
    PRELIE = "prelie"
    LEIBNIZ = "leibniz"
    THREELIE = "threelie"


BINARY_KINDS = (
    AlgebraKind.ASSOCIATIVE,
    AlgebraKind.LIE,
    AlgebraKind.PRELIE,
    AlgebraKind.LEIBNIZ,
)


def arity(kind: AlgebraKind) -> int:
    return 3 if kind is AlgebraKind.THREELIE else 2


@dataclass(frozen=True)
class Witness:
    args: tuple
    defect: tuple[Fraction, ...]
    label: str = ""


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    witnesses: tuple[Witness, ...] = ()

    def __post_init__(self):
        assert self.valid == (len(self.witnesses) == 0)


class Algebra:
    """Immutable structure-constant algebra of one of the five kinds."""

    __slots__ = ("kind", "dim", "constants")

    def __init__(self, kind: AlgebraKind, dim: int, constants):
        kind = AlgebraKind(kind)
        self.kind = kind
        self.dim = dim
        if kind is AlgebraKind.THREELIE:
            self._check_shape3(constants)
            self._check_skew3(constants)
        else:
            self._check_shape2(constants)
            if kind is AlgebraKind.LIE:
                self._check_skew2(constants)
        self.constants = constants

    def _check_shape2(self, c):
        d = self.dim
        if len(c) != d or any(len(row) != d for row in c) or any(
            len(v) != d for row in c for v in row
        ):
            raise ValueError("constants tensor must be dim x dim x dim")

    def _check_shape3(self, c):
        d = self.dim
        ok = len(c) == d and all(
            len(ci) == d and all(
                len(cij) == d and all(len(v) == d for v in cij) for cij in ci
            )
            for ci in c
        )
        if not ok:
            raise ValueError("constants tensor must be dim x dim x dim x dim")

    def _check_skew2(self, c):
        for i in range(self.dim):
            for j in range(i, self.dim):
                if c[i][j] != vec_scale(Fraction(-1), c[j][i]):
                    raise ValueError(
                        f"lie constants not skew-symmetric at basis pair ({i + 1},{j + 1})"
                    )

    def _check_skew3(self, c):
        d = self.dim
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    norm = sort_with_sign((i, j, k))
                    if norm is None:
                        if not vec_is_zero(c[i][j][k]):
                            raise ValueError(
                                "threelie constants nonzero on a repeated index "
                                f"triple ({i + 1},{j + 1},{k + 1})"
                            )
                        continue
                    (a, b, e), sign = norm
                    expect = vec_scale(Fraction(sign), c[a][b][e])
                    if c[i][j][k] != expect:
                        raise ValueError(
                            "threelie constants not totally skew at "
                            f"({i + 1},{j + 1},{k + 1})"
                        )

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, kind: AlgebraKind, dim: int) -> "Algebra":
        kind = AlgebraKind(kind)
        if kind is AlgebraKind.THREELIE:
            c = [[[vec_zero(dim) for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
        else:
            c = [[vec_zero(dim) for _ in range(dim)] for _ in range(dim)]
        return cls(kind, dim, c)

    @classmethod
    def from_entries(cls, kind: AlgebraKind, dim: int, entries: dict) -> "Algebra":
        """Build from {input tuple: {output index: coefficient}}, 0-based.

        For lie/threelie the input tuples must be strictly increasing; the
        skew completion is filled in here.
        """
        kind = AlgebraKind(kind)
        nargs = arity(kind)
        if kind is AlgebraKind.THREELIE:
            c = [[[vec_zero(dim) for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
        else:
            c = [[vec_zero(dim) for _ in range(dim)] for _ in range(dim)]
        for args, out in entries.items():
            if len(args) != nargs or not all(0 <= i < dim for i in args):
                raise ValueError(f"bad input tuple {args}")
            vec = vec_zero(dim)
            for k, coef in out.items():
                vec[k] = vec[k] + Fraction(coef)
            if kind in (AlgebraKind.LIE, AlgebraKind.THREELIE):
                if list(args) != sorted(set(args)):
                    raise ValueError(
                        f"{kind.value} entries must use strictly increasing input tuples"
                    )
                for perm_args, sign in _signed_orbit(args):
                    tgt = _tensor_slot(c, perm_args)
                    src = vec_scale(Fraction(sign), vec)
                    _tensor_set(c, perm_args, vec_add(tgt, src))
            else:
                _tensor_set(c, args, vec_add(_tensor_slot(c, args), vec))
        return cls(kind, dim, c)

    # -- products ----------------------------------------------------------

    def product(self, i: int, j: int) -> list[Fraction]:
        return self.constants[i][j]

    def triple(self, i: int, j: int, k: int) -> list[Fraction]:
        return self.constants[i][j][k]

    def product_vec(self, u, v) -> list[Fraction]:
        out = vec_zero(self.dim)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                out = vec_add(out, vec_scale(a * b, self.constants[i][j]))
        return out

    def triple_vec(self, u, v, w) -> list[Fraction]:
        out = vec_zero(self.dim)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, cc in enumerate(w):
                    if cc:
                        out = vec_add(out, vec_scale(a * b * cc, self.constants[i][j][k]))
        return out

    # -- arithmetic on constants -------------------------------------------

    def plus(self, other: "Algebra") -> "Algebra":
        if self.kind is not other.kind or self.dim != other.dim:
            raise ValueError("algebra kind/dim mismatch")
        if self.kind is AlgebraKind.THREELIE:
            c = [
                [
                    [vec_add(self.constants[i][j][k], other.constants[i][j][k])
                     for k in range(self.dim)]
                    for j in range(self.dim)
                ]
                for i in range(self.dim)
            ]
        else:
            c = [
                [vec_add(self.constants[i][j], other.constants[i][j]) for j in range(self.dim)]
                for i in range(self.dim)
            ]
        return Algebra(self.kind, self.dim, c)

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.kind is other.kind
            and self.dim == other.dim
            and self.constants == other.constants
        )

    def __hash__(self):
        return hash((self.kind, self.dim, _freeze(self.constants)))

    def __repr__(self):
        return f"Algebra({self.kind.value}, dim={self.dim})"


def _freeze(x):
    if isinstance(x, list):
        return tuple(_freeze(y) for y in x)
    return x


def _tensor_slot(c, args):
    for a in args[:-1]:
        c = c[a]
    return c[args[-1]]


def _tensor_set(c, args, value):
    for a in args[:-1]:
        c = c[a]
    c[args[-1]] = value


def _signed_orbit(args):
    """All permutations of a strictly increasing tuple with parity signs."""
    from itertools import permutations

    from .combinatorics import parity

    for perm in permutations(args):
        yield perm, parity(perm)


# -- axiom validation -------------------------------------------------------


def _associator(a: Algebra, x, y, z):
    return vec_sub(a.product_vec(a.product_vec(x, y), z), a.product_vec(x, a.product_vec(y, z)))


def _basis(dim, i):
    v = vec_zero(dim)
    v[i] = Fraction(1)
    return v


def validate_structure(a: Algebra, witness_cap: int = 16) -> ValidationReport:
    """Check the kind's defining identity on all basis tuples.

    Returns every failing tuple (up to ``witness_cap``) together with the
    nonzero defect vector.
    """
    d = a.dim
    e = [_basis(d, i) for i in range(d)]
    witnesses: list[Witness] = []

    def record(args, defect):
        if not vec_is_zero(defect) and len(witnesses) < witness_cap:
            witnesses.append(Witness(args, tuple(defect)))
            return True
        return not vec_is_zero(defect)

    failed = False
    if a.kind is AlgebraKind.THREELIE:
        rng = range(d)
        for i1 in rng:
            for i2 in rng:
                for i3 in rng:
                    for i4 in rng:
                        for i5 in rng:
                            t1 = a.triple_vec(e[i1], e[i2], a.triple_vec(e[i3], e[i4], e[i5]))
                            t2 = a.triple_vec(a.triple_vec(e[i1], e[i2], e[i3]), e[i4], e[i5])
                            t3 = a.triple_vec(e[i3], a.triple_vec(e[i1], e[i2], e[i4]), e[i5])
                            t4 = a.triple_vec(e[i3], e[i4], a.triple_vec(e[i1], e[i2], e[i5]))
                            defect = vec_sub(vec_sub(vec_sub(t1, t2), t3), t4)
                            failed |= record((i1, i2, i3, i4, i5), defect)
    else:
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    if a.kind is AlgebraKind.ASSOCIATIVE:
                        defect = _associator(a, e[i], e[j], e[k])
                    elif a.kind is AlgebraKind.PRELIE:
                        defect = vec_sub(
                            _associator(a, e[i], e[j], e[k]), _associator(a, e[j], e[i], e[k])
                        )
                    elif a.kind is AlgebraKind.LIE:
                        defect = vec_add(
                            vec_add(
                                a.product_vec(e[i], a.product_vec(e[j], e[k])),
                                a.product_vec(e[j], a.product_vec(e[k], e[i])),
                            ),
                            a.product_vec(e[k], a.product_vec(e[i], e[j])),
                        )
                    else:  # leibniz
                        defect = vec_sub(
                            vec_sub(
                                a.product_vec(e[i], a.product_vec(e[j], e[k])),
                                a.product_vec(a.product_vec(e[i], e[j]), e[k]),
                            ),
                            a.product_vec(e[j], a.product_vec(e[i], e[k])),
                        )
                    failed |= record((i, j, k), defect)
    return ValidationReport(not failed, tuple(witnesses))


# -- derived structures -----------------------------------------------------


def subadjacent_lie(a: Algebra) -> Algebra:
    """Commutator Lie algebra [x,y] = x*y - y*x of a pre-Lie product."""
    if a.kind is not AlgebraKind.PRELIE:
        raise ValueError("subadjacent_lie expects a prelie algebra")
    c = [
        [vec_sub(a.constants[i][j], a.constants[j][i]) for j in range(a.dim)]
        for i in range(a.dim)
    ]
    return Algebra(AlgebraKind.LIE, a.dim, c)


def fundamental_leibniz(a: Algebra) -> Algebra:
    """Leibniz bracket on wedge pairs induced by a 3-Lie bracket.

    On X = x1^x2 and Y = y1^y2 the bracket is
    [x1,x2,y1]^y2 + y1^[x1,x2,y2], expanded over the canonical basis of
    increasing pairs (i<j).
    """
    if a.kind is not AlgebraKind.THREELIE:
        raise ValueError("fundamental_leibniz expects a threelie algebra")
    pairs = wedge_basis(a.dim, 2)
    pos = wedge_position(a.dim, 2)
    nw = len(pairs)
    c = [[vec_zero(nw) for _ in range(nw)] for _ in range(nw)]
    for pi, (x1, x2) in enumerate(pairs):
        for qi, (y1, y2) in enumerate(pairs):
            acc = vec_zero(nw)
            for vec, fixed, fixed_second in (
                (a.triple(x1, x2, y1), y2, True),
                (a.triple(x1, x2, y2), y1, False),
            ):
                for m, coef in enumerate(vec):
                    if not coef:
                        continue
                    legs = (m, fixed) if fixed_second else (fixed, m)
                    norm = sort_with_sign(legs)
                    if norm is None:
                        continue
                    key, sign = norm
                    acc[pos[key]] += sign * coef
            c[pi][qi] = acc
    return Algebra(AlgebraKind.LEIBNIZ, nw, c)
