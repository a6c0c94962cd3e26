"""Graded Lie brackets on cochains, Maurer-Cartan checks, and the
cup-product differential graded algebra for algebra morphisms.

A graded element of degree p is a Cochain over C^{p+1}(g, g): p+1 tensor
or wedge inputs for associative/lie/leibniz, p wedge inputs plus one plain
input for prelie, p wedge-pair inputs plus one plain input for threelie.
The composition P o Q underlying each bracket follows the classical
formulas (Gerstenhaber, Nijenhuis-Richardson, Matsushima-Nijenhuis,
Balavoine, and the wedge-pair analogue for ternary brackets); the bracket
is always [P,Q] = P o Q - (-1)^{pq} Q o P.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .cochains import (
    Cochain,
    cochain_space,
    evaluate,
    evaluate_vec_slot,
    structure_element,
)
from .combinatorics import shuffles
from .linalg import vec_zero
from .structures import Algebra, AlgebraKind, validate_structure

HALF = Fraction(1, 2)


def graded_element(kind: AlgebraKind, dim_g: int, degree: int, coords) -> Cochain:
    return Cochain(cochain_space(kind, degree + 1, dim_g, dim_g), coords)


def _require_composable(p: Cochain, q: Cochain):
    if p.space.kind is not q.space.kind:
        raise ValueError("graded elements of different kinds")
    if p.space.dim_g != q.space.dim_g or p.space.dim_v != p.space.dim_g:
        raise ValueError("graded elements must live on the same algebra space")


def circ(P: Cochain, Q: Cochain) -> Cochain:
    """The degree p+q composition P o Q of the kind's graded Lie structure."""
    _require_composable(P, Q)
    kind = P.space.kind
    d = P.space.dim_g
    p, q = P.degree, Q.degree
    out_space = cochain_space(kind, p + q + 1, d, d)
    coords = [Fraction(0)] * out_space.dimension

    def add(pos: int, coef, vec):
        if coef:
            base = pos * d
            for i, x in enumerate(vec):
                if x:
                    coords[base + i] += coef * x

    if kind is AlgebraKind.ASSOCIATIVE:
        for pos, t in enumerate(out_space.basis):
            for i in range(1, p + 2):
                sign = Fraction(-1) ** ((i - 1) * q)
                w = evaluate(Q, t[i - 1: i + q])
                args = t[: i - 1] + (0,) + t[i + q:]
                add(pos, sign, evaluate_vec_slot(P, args, i - 1, w))
    elif kind is AlgebraKind.LIE:
        for pos, t in enumerate(out_space.basis):
            for sh in shuffles((q + 1, p)):
                perm = sh.permutation
                w = evaluate(Q, tuple(t[perm[a] - 1] for a in range(q + 1)))
                args = (0,) + tuple(t[perm[a] - 1] for a in range(q + 1, p + q + 1))
                add(pos, sh.sign, evaluate_vec_slot(P, args, 0, w))
    elif kind is AlgebraKind.PRELIE:
        swap = Fraction(-1) ** (p * q)
        for pos, t in enumerate(out_space.basis):
            head, last = t[: p + q], t[p + q]
            for sh in shuffles((q, 1, p - 1)):
                perm = sh.permutation
                w = evaluate(Q, tuple(head[perm[a] - 1] for a in range(q + 1)))
                args = (
                    (0,)
                    + tuple(head[perm[a] - 1] for a in range(q + 1, p + q))
                    + (last,)
                )
                add(pos, sh.sign, evaluate_vec_slot(P, args, 0, w))
            for sh in shuffles((p, q)):
                perm = sh.permutation
                w = evaluate(
                    Q, tuple(head[perm[a] - 1] for a in range(p, p + q)) + (last,)
                )
                args = tuple(head[perm[a] - 1] for a in range(p)) + (0,)
                add(pos, swap * sh.sign, evaluate_vec_slot(P, args, p, w))
    elif kind is AlgebraKind.LEIBNIZ:
        for pos, t in enumerate(out_space.basis):
            for k in range(1, p + 2):
                sign_k = Fraction(-1) ** ((k - 1) * q)
                for sh in shuffles((k - 1, q)):
                    perm = sh.permutation
                    w = evaluate(
                        Q,
                        tuple(t[perm[a] - 1] for a in range(k - 1, k + q - 1))
                        + (t[k + q - 1],),
                    )
                    args = (
                        tuple(t[perm[a] - 1] for a in range(k - 1))
                        + (0,)
                        + t[k + q:]
                    )
                    add(pos, sign_k * sh.sign, evaluate_vec_slot(P, args, k - 1, w))
    else:  # threelie
        swap = Fraction(-1) ** (p * q)
        for pos, t in enumerate(out_space.basis):
            pairs, z = t[: p + q], t[p + q]
            for k in range(1, p + 1):
                sign_k = Fraction(-1) ** ((k - 1) * q)
                xk, yk = pairs[k + q - 1]
                tail = pairs[k + q:]
                for sh in shuffles((k - 1, q)):
                    perm = sh.permutation
                    qpairs = tuple(pairs[perm[a] - 1] for a in range(k - 1, k + q - 1))
                    ppairs = tuple(pairs[perm[a] - 1] for a in range(k - 1))
                    # Q into the x-leg of pair k+q
                    w = evaluate(Q, qpairs + (xk,))
                    args = ppairs + (((0, yk)),) + tail + (z,)
                    add(pos, sign_k * sh.sign, evaluate_vec_slot(P, args, k - 1, w, leg=0))
                    # Q into the y-leg of pair k+q
                    w = evaluate(Q, qpairs + (yk,))
                    args = ppairs + (((xk, 0)),) + tail + (z,)
                    add(pos, sign_k * sh.sign, evaluate_vec_slot(P, args, k - 1, w, leg=1))
            for sh in shuffles((p, q)):
                perm = sh.permutation
                w = evaluate(
                    Q, tuple(pairs[perm[a] - 1] for a in range(p, p + q)) + (z,)
                )
                args = tuple(pairs[perm[a] - 1] for a in range(p)) + (0,)
                add(pos, swap * sh.sign, evaluate_vec_slot(P, args, p, w))
    return Cochain(out_space, coords)


def graded_bracket(P: Cochain, Q: Cochain) -> Cochain:
    """[P,Q] = P o Q - (-1)^{pq} Q o P."""
    sign = Fraction(-1) ** (P.degree * Q.degree)
    return circ(P, Q).minus(circ(Q, P).scale(sign))


@dataclass(frozen=True)
class MCResult:
    ok: bool
    defect: Cochain


def mc_check(x: Cochain, base: Algebra | None = None, check: bool = True) -> MCResult:
    """Maurer-Cartan check d_pi(x) + (1/2)[x,x] = 0 (pure [x,x]/2 when no base)."""
    if x.degree != 1:
        raise ValueError("Maurer-Cartan elements have degree 1")
    defect = graded_bracket(x, x).scale(HALF)
    if base is not None:
        defect = induced_differential(base, x, check=check).plus(defect)
    return MCResult(defect.is_zero(), defect)


def induced_differential(base: Algebra, f: Cochain, check: bool = True) -> Cochain:
    """d_pi f = [pi, f] for the structure element pi of a valid algebra."""
    if check and not validate_structure(base).valid:
        raise ValueError("induced_differential requires a valid base structure")
    return graded_bracket(structure_element(base), f)


def coboundary_bracket_identity(a: Algebra, f: Cochain) -> bool:
    """Whether dM f == (-1)^{n-1} [pi, f] for f with n inputs over C^*(g,g).

    dM is the coboundary of the regular representation (adjoint for
    lie/threelie); the identity ties the cohomology complex to the graded
    Lie structure.
    """
    from .cohomology import coboundary
    from .representations import regular_or_adjoint

    if f.space.dim_v != a.dim or f.space.dim_g != a.dim or f.space.kind is not a.kind:
        raise ValueError("cochain does not live on C^*(g,g) of this algebra")
    n = f.space.n
    lhs = coboundary(regular_or_adjoint(a), f)
    rhs = graded_bracket(structure_element(a), f).scale(Fraction(-1) ** (n - 1))
    return lhs == rhs


# -- the cup-product dga on maps between two associative algebras -----------


class MorphismCochain:
    """A p-multilinear map from an associative source into an associative
    target, in coordinates over the source tensor basis (p >= 1)."""

    __slots__ = ("source", "target", "degree", "coords", "basis", "position")

    def __init__(self, source: Algebra, target: Algebra, degree: int, coords):
        if source.kind is not AlgebraKind.ASSOCIATIVE or target.kind is not AlgebraKind.ASSOCIATIVE:
            raise ValueError("morphism cochains connect associative algebras")
        if degree < 1:
            raise ValueError("morphism cochains have degree >= 1")
        self.source = source
        self.target = target
        self.degree = degree
        self.basis = tuple(iproduct(range(source.dim), repeat=degree))
        self.position = {t: i for i, t in enumerate(self.basis)}
        coords = list(coords)
        if len(coords) != len(self.basis) * target.dim:
            raise ValueError("coordinate length mismatch")
        self.coords = coords

    @classmethod
    def zero(cls, source: Algebra, target: Algebra, degree: int) -> "MorphismCochain":
        n = len(tuple(iproduct(range(source.dim), repeat=degree))) * target.dim
        return cls(source, target, degree, [Fraction(0)] * n)

    @classmethod
    def from_matrix_columns(cls, source: Algebra, target: Algebra, columns) -> "MorphismCochain":
        """Degree-1 map sending source e_i to the vector columns[i]."""
        coords = []
        for col in columns:
            coords.extend(col)
        return cls(source, target, 1, coords)

    def value(self, args) -> list[Fraction]:
        pos = self.position[tuple(args)]
        h = self.target.dim
        return self.coords[pos * h: (pos + 1) * h]

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def plus(self, other: "MorphismCochain") -> "MorphismCochain":
        self._same_space(other)
        return MorphismCochain(
            self.source, self.target, self.degree,
            [a + b for a, b in zip(self.coords, other.coords)],
        )

    def minus(self, other: "MorphismCochain") -> "MorphismCochain":
        self._same_space(other)
        return MorphismCochain(
            self.source, self.target, self.degree,
            [a - b for a, b in zip(self.coords, other.coords)],
        )

    def scale(self, c) -> "MorphismCochain":
        c = Fraction(c)
        return MorphismCochain(self.source, self.target, self.degree,
                               [c * a for a in self.coords])

    def _same_space(self, other: "MorphismCochain"):
        if (
            self.source != other.source
            or self.target != other.target
            or self.degree != other.degree
        ):
            raise ValueError("morphism cochain space mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, MorphismCochain)
            and self.source == other.source
            and self.target == other.target
            and self.degree == other.degree
            and self.coords == other.coords
        )

    def __repr__(self):
        return f"MorphismCochain(p={self.degree})"


def morphism_differential(P: MorphismCochain) -> MorphismCochain:
    """(dP)(x_1..x_{p+1}) = (-1)^p sum_i (-1)^i P(..., x_i * x_{i+1}, ...)."""
    g, h, p = P.source, P.target, P.degree
    out = MorphismCochain.zero(g, h, p + 1)
    coords = out.coords
    hdim = h.dim
    lead = Fraction(-1) ** p
    for pos, t in enumerate(out.basis):
        acc = vec_zero(hdim)
        for i in range(1, p + 1):
            sign = lead * Fraction(-1) ** i
            prod = g.product(t[i - 1], t[i])
            for m, c in enumerate(prod):
                if not c:
                    continue
                val = P.value(t[: i - 1] + (m,) + t[i + 1:])
                for s, x in enumerate(val):
                    if x:
                        acc[s] += sign * c * x
        coords[pos * hdim: (pos + 1) * hdim] = acc
    return MorphismCochain(g, h, p + 1, coords)


def cup_product(P: MorphismCochain, Q: MorphismCochain) -> MorphismCochain:
    """(P u Q)(x_1..x_{p+q}) = (-1)^{pq} P(x_1..x_p) * Q(x_{p+1}..x_{p+q})."""
    if P.source != Q.source or P.target != Q.target:
        raise ValueError("cup product needs matching source and target algebras")
    g, h = P.source, P.target
    p, q = P.degree, Q.degree
    sign = Fraction(-1) ** (p * q)
    out = MorphismCochain.zero(g, h, p + q)
    hdim = h.dim
    for pos, t in enumerate(out.basis):
        val = h.product_vec(P.value(t[:p]), Q.value(t[p:]))
        for s, x in enumerate(val):
            if x:
                out.coords[pos * hdim + s] = sign * x
    return out


def morphism_mc_check(f: MorphismCochain) -> bool:
    """True iff f is an algebra morphism; both the Maurer-Cartan route
    (df + f u f == 0) and the direct basis check are computed and must
    agree."""
    if f.degree != 1:
        raise ValueError("morphism check expects a degree-1 (linear) map")
    g, h = f.source, f.target
    if not validate_structure(g).valid or not validate_structure(h).valid:
        raise ValueError("morphism_mc_check requires valid associative algebras")
    mc = morphism_differential(f).plus(cup_product(f, f)).is_zero()
    direct = True
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = vec_zero(h.dim)
            for m, c in enumerate(g.product(i, j)):
                if c:
                    val = f.value((m,))
                    lhs = [x + c * y for x, y in zip(lhs, val)]
            rhs = h.product_vec(f.value((i,)), f.value((j,)))
            if lhs != rhs:
                direct = False
    if mc != direct:
        raise RuntimeError("Maurer-Cartan and direct morphism checks disagree")
    return mc
