"""Representations of the five algebra kinds and their standard constructions.

The action data is stored per basis element of the algebra (per increasing
wedge pair for 3-Lie), so linearity in the algebra argument is automatic.
Map names follow the interchange format: L/R (associative), rho (lie),
rho/mu (prelie), rhoL/rhoR (leibniz), rho (threelie).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cochains import Cochain, cochain_space, structure_element
from .combinatorics import wedge_basis, wedge_position
from .linalg import Matrix, vec_zero
from .structures import (
    Algebra,
    AlgebraKind,
    ValidationReport,
    Witness,
    fundamental_leibniz,
    subadjacent_lie,
    validate_structure,
)

MAP_NAMES = {
    AlgebraKind.ASSOCIATIVE: ("L", "R"),
    AlgebraKind.LIE: ("rho",),
    AlgebraKind.PRELIE: ("rho", "mu"),
    AlgebraKind.LEIBNIZ: ("rhoL", "rhoR"),
    AlgebraKind.THREELIE: ("rho",),
}


class Representation:
    __slots__ = ("kind", "algebra", "dim_v", "maps")

    def __init__(self, algebra: Algebra, dim_v: int, maps: dict):
        self.kind = algebra.kind
        self.algebra = algebra
        self.dim_v = dim_v
        expected = MAP_NAMES[self.kind]
        if set(maps) != set(expected):
            raise ValueError(f"{self.kind.value} representation needs maps {expected}")
        count = (
            len(wedge_basis(algebra.dim, 2))
            if self.kind is AlgebraKind.THREELIE
            else algebra.dim
        )
        for name in expected:
            ms = tuple(maps[name])
            if len(ms) != count:
                raise ValueError(f"map {name} must have {count} matrices")
            for m in ms:
                if m.rows != dim_v or m.cols != dim_v:
                    raise ValueError(f"map {name} matrices must be {dim_v}x{dim_v}")
        self.maps = {name: tuple(maps[name]) for name in expected}

    def action(self, name: str, i: int) -> Matrix:
        return self.maps[name][i]

    def action_on(self, name: str, vec) -> Matrix:
        """Linear extension of a map to an algebra-element vector."""
        out = Matrix.zeros(self.dim_v, self.dim_v)
        for k, c in enumerate(vec):
            if c:
                out = out + self.maps[name][k].scale(c)
        return out

    def pair_action(self, a: int, b: int) -> Matrix:
        """threelie rho on an arbitrary (possibly unordered) index pair."""
        if a == b:
            return Matrix.zeros(self.dim_v, self.dim_v)
        pos = wedge_position(self.algebra.dim, 2)
        if a < b:
            return self.maps["rho"][pos[(a, b)]]
        return self.maps["rho"][pos[(b, a)]].scale(Fraction(-1))

    def pair_action_vec(self, vec, b: int) -> Matrix:
        """threelie rho with a vector in the first slot."""
        out = Matrix.zeros(self.dim_v, self.dim_v)
        for m, c in enumerate(vec):
            if c and m != b:
                out = out + self.pair_action(m, b).scale(c)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.algebra == other.algebra
            and self.dim_v == other.dim_v
            and self.maps == other.maps
        )

    def __hash__(self):
        return hash((self.algebra, self.dim_v, tuple(sorted(self.maps.items()))))

    def __repr__(self):
        return f"Representation({self.kind.value}, dimV={self.dim_v})"


def zero_representation(algebra: Algebra, dim_v: int) -> Representation:
    count = len(wedge_basis(algebra.dim, 2)) if algebra.kind is AlgebraKind.THREELIE else algebra.dim
    z = Matrix.zeros(dim_v, dim_v)
    return Representation(algebra, dim_v, {n: (z,) * count for n in MAP_NAMES[algebra.kind]})


def check_representation(r: Representation, witness_cap: int = 16) -> ValidationReport:
    """Verify every defining identity of the kind on all basis tuples."""
    a = r.algebra
    d = a.dim
    witnesses: list[Witness] = []

    def record(label, args, defect: Matrix):
        if defect.is_zero():
            return False
        if len(witnesses) < witness_cap:
            flat = tuple(x for row in defect.data for x in row)
            witnesses.append(Witness(args, flat, label))
        return True

    failed = False
    k = r.kind
    if k is AlgebraKind.ASSOCIATIVE:
        L, R = r.maps["L"], r.maps["R"]
        for i in range(d):
            for j in range(d):
                prod = a.product(i, j)
                failed |= record("L_product", (i, j), r.action_on("L", prod) - L[i] @ L[j])
                failed |= record("R_product", (i, j), r.action_on("R", prod) - R[j] @ R[i])
                failed |= record("LR_commute", (i, j), L[i] @ R[j] - R[j] @ L[i])
    elif k is AlgebraKind.LIE:
        rho = r.maps["rho"]
        for i in range(d):
            for j in range(d):
                br = a.product(i, j)
                comm = rho[i] @ rho[j] - rho[j] @ rho[i]
                failed |= record("bracket", (i, j), r.action_on("rho", br) - comm)
    elif k is AlgebraKind.PRELIE:
        rho, mu = r.maps["rho"], r.maps["mu"]
        sub = subadjacent_lie(a)
        for i in range(d):
            for j in range(d):
                br = sub.product(i, j)
                comm = rho[i] @ rho[j] - rho[j] @ rho[i]
                failed |= record("subadjacent", (i, j), r.action_on("rho", br) - comm)
                lhs = rho[i] @ mu[j] - mu[j] @ rho[i]
                rhs = r.action_on("mu", a.product(i, j)) - mu[j] @ mu[i]
                failed |= record("mu_compat", (i, j), lhs - rhs)
    elif k is AlgebraKind.LEIBNIZ:
        rl, rr = r.maps["rhoL"], r.maps["rhoR"]
        for i in range(d):
            for j in range(d):
                br = a.product(i, j)
                failed |= record(
                    "left_bracket", (i, j),
                    r.action_on("rhoL", br) - (rl[i] @ rl[j] - rl[j] @ rl[i]),
                )
                failed |= record(
                    "right_bracket", (i, j),
                    r.action_on("rhoR", br) - (rl[i] @ rr[j] - rr[j] @ rl[i]),
                )
                failed |= record("right_kills", (i, j), rr[j] @ rl[i] + rr[j] @ rr[i])
    else:  # threelie
        for x1 in range(d):
            for x2 in range(d):
                for x3 in range(d):
                    for x4 in range(d):
                        r12, r34 = r.pair_action(x1, x2), r.pair_action(x3, x4)
                        lhs = r12 @ r34
                        rhs = (
                            r.pair_action_vec(a.triple(x1, x2, x3), x4)
                            + r.pair_action_vec(a.triple(x1, x2, x4), x3).scale(Fraction(-1))
                            + r34 @ r12
                        )
                        failed |= record("pair_product", (x1, x2, x3, x4), lhs - rhs)
                        lhs2 = r.pair_action_vec(a.triple(x2, x3, x4), x1).scale(Fraction(-1))
                        rhs2 = (
                            r.pair_action(x3, x4) @ r.pair_action(x1, x2)
                            - r.pair_action(x2, x4) @ r.pair_action(x1, x3)
                            + r.pair_action(x2, x3) @ r.pair_action(x1, x4)
                        )
                        failed |= record("triple_slot", (x1, x2, x3, x4), lhs2 - rhs2)
    return ValidationReport(not failed, tuple(witnesses))


def regular_or_adjoint(a: Algebra) -> Representation:
    """The algebra acting on itself: regular for associative/prelie/leibniz,
    adjoint for lie and threelie (the latter on wedge pairs)."""
    rep_check = validate_structure(a)
    if not rep_check.valid:
        raise ValueError("regular_or_adjoint requires a valid algebra")
    d = a.dim
    k = a.kind

    def mult_matrix(left: bool, i: int) -> Matrix:
        cols = [a.product(i, j) if left else a.product(j, i) for j in range(d)]
        return Matrix(d, d, [[cols[j][row] for j in range(d)] for row in range(d)])

    if k is AlgebraKind.ASSOCIATIVE:
        return Representation(a, d, {
            "L": tuple(mult_matrix(True, i) for i in range(d)),
            "R": tuple(mult_matrix(False, i) for i in range(d)),
        })
    if k is AlgebraKind.LIE:
        return Representation(a, d, {"rho": tuple(mult_matrix(True, i) for i in range(d))})
    if k is AlgebraKind.PRELIE:
        return Representation(a, d, {
            "rho": tuple(mult_matrix(True, i) for i in range(d)),
            "mu": tuple(mult_matrix(False, i) for i in range(d)),
        })
    if k is AlgebraKind.LEIBNIZ:
        return Representation(a, d, {
            "rhoL": tuple(mult_matrix(True, i) for i in range(d)),
            "rhoR": tuple(mult_matrix(False, i) for i in range(d)),
        })
    mats = []
    for (i, j) in wedge_basis(d, 2):
        cols = [a.triple(i, j, z) for z in range(d)]
        mats.append(Matrix(d, d, [[cols[z][row] for z in range(d)] for row in range(d)]))
    return Representation(a, d, {"rho": tuple(mats)})


def dual_representation(r: Representation) -> Representation:
    """Induced action on V* with the kind's sign convention.

    The associative dual pairs without a minus sign and swaps the two maps;
    every other kind transposes with a minus sign per its construction.
    """
    if not check_representation(r).valid:
        raise ValueError("dual_representation requires a valid representation")
    neg = Fraction(-1)

    def t(ms):
        return tuple(m.transpose() for m in ms)

    def nt(ms):
        return tuple(m.transpose().scale(neg) for m in ms)

    k = r.kind
    if k is AlgebraKind.ASSOCIATIVE:
        return Representation(r.algebra, r.dim_v, {"L": t(r.maps["R"]), "R": t(r.maps["L"])})
    if k is AlgebraKind.LIE:
        return Representation(r.algebra, r.dim_v, {"rho": nt(r.maps["rho"])})
    if k is AlgebraKind.PRELIE:
        rho_star = nt(r.maps["rho"])
        mu_t = t(r.maps["mu"])
        return Representation(r.algebra, r.dim_v, {
            "rho": tuple(x + y for x, y in zip(rho_star, mu_t)),
            "mu": mu_t,
        })
    if k is AlgebraKind.LEIBNIZ:
        lt = t(r.maps["rhoL"])
        rt = t(r.maps["rhoR"])
        return Representation(r.algebra, r.dim_v, {
            "rhoL": tuple(m.scale(neg) for m in lt),
            "rhoR": tuple(x + y for x, y in zip(lt, rt)),
        })
    return Representation(r.algebra, r.dim_v, {"rho": nt(r.maps["rho"])})


def _hom_index(a: int, b: int, dim_v: int) -> int:
    # Hom(g,V) basis ordered (input index, output index) lexicographic
    return a * dim_v + b


def hom_coefficient_rep(r: Representation) -> Representation:
    """Coefficient shift onto Hom(g,V).

    prelie input: a lie representation of the sub-adjacent algebra given by
    (x.f)(y) = rho(x)f(y) + mu(y)f(x) - f(x*y).

    threelie input: a leibniz representation of the wedge-pair algebra with
    (X.f)(z)_left = rho(X)f(z) - f([x,y,z]) and
    (X.f)(z)_right = f([x,y,z]) - rho(X)f(z) - rho(y,z)f(x) - rho(z,x)f(y).
    """
    if not check_representation(r).valid:
        raise ValueError("hom_coefficient_rep requires a valid representation")
    a = r.algebra
    d, dv = a.dim, r.dim_v
    hom_dim = d * dv

    def build(column_fn) -> Matrix:
        data = [[Fraction(0)] * hom_dim for _ in range(hom_dim)]
        for src_a in range(d):
            for src_b in range(dv):
                col = _hom_index(src_a, src_b, dv)
                for c in range(d):
                    vec = column_fn(src_a, src_b, c)
                    for out in range(dv):
                        if vec[out]:
                            data[_hom_index(c, out, dv)][col] = vec[out]
        return Matrix(hom_dim, hom_dim, data)

    if r.kind is AlgebraKind.PRELIE:
        rho, mu = r.maps["rho"], r.maps["mu"]

        def col(i):
            def fn(src_a, src_b, c):
                # value at e_c of the image of the functional e_a -> e_b
                out = vec_zero(dv)
                if src_a == c:
                    out = [x + y for x, y in zip(out, [rho[i].data[t][src_b] for t in range(dv)])]
                if src_a == i:
                    out = [x + y for x, y in zip(out, [mu[c].data[t][src_b] for t in range(dv)])]
                coef = a.product(i, c)[src_a]
                if coef:
                    out[src_b] -= coef
                return out
            return fn

        mats = tuple(build(col(i)) for i in range(d))
        return Representation(subadjacent_lie(a), hom_dim, {"rho": mats})

    if r.kind is AlgebraKind.THREELIE:
        fund = fundamental_leibniz(a)
        pairs = wedge_basis(d, 2)

        def col_left(w):
            i, j = pairs[w]

            def fn(src_a, src_b, c):
                out = vec_zero(dv)
                if src_a == c:
                    m = r.maps["rho"][w]
                    out = [x + m.data[t][src_b] for t, x in enumerate(out)]
                coef = a.triple(i, j, c)[src_a]
                if coef:
                    out[src_b] -= coef
                return out
            return fn

        def col_right(w):
            i, j = pairs[w]

            def fn(src_a, src_b, c):
                out = vec_zero(dv)
                coef = a.triple(i, j, c)[src_a]
                if coef:
                    out[src_b] += coef
                if src_a == c:
                    m = r.maps["rho"][w]
                    out = [x - m.data[t][src_b] for t, x in enumerate(out)]
                if src_a == i:
                    m = r.pair_action(j, c)
                    out = [x - m.data[t][src_b] for t, x in enumerate(out)]
                if src_a == j:
                    m = r.pair_action(c, i)
                    out = [x - m.data[t][src_b] for t, x in enumerate(out)]
                return out
            return fn

        left = tuple(build(col_left(w)) for w in range(len(pairs)))
        right = tuple(build(col_right(w)) for w in range(len(pairs)))
        return Representation(fund, hom_dim, {"rhoL": left, "rhoR": right})

    raise ValueError("hom_coefficient_rep expects a prelie or threelie representation")


@dataclass(frozen=True)
class SumAlgebraMC:
    """Degree-1 data on g + V: the carried structure and the action part.

    ``structure`` vanishes whenever any argument lies in V; ``action`` is
    the sum of all action terms and vanishes on all-g and all-V tuples.
    ``ambient`` is the trivially extended algebra on g + V whose induced
    differential drives the Maurer-Cartan check.
    """

    structure: Cochain
    action: Cochain
    ambient: Algebra


def rep_as_maurer_cartan(r: Representation) -> SumAlgebraMC:
    """Package candidate action maps as a degree-1 element over g + V.

    The action is Maurer-Cartan for the differential induced by the carried
    structure exactly when the maps form a representation.
    """
    a = r.algebra
    if not validate_structure(a).valid:
        raise ValueError("rep_as_maurer_cartan requires a valid base algebra")
    d, dv = a.dim, r.dim_v
    big = d + dv
    k = r.kind

    def embed_g(vec):
        return list(vec) + [Fraction(0)] * dv

    def embed_v(vec):
        return [Fraction(0)] * d + list(vec)

    if k is AlgebraKind.THREELIE:
        zero3 = Algebra.zero(k, big).constants
        ambient_c = [
            [
                [
                    embed_g(a.triple(i, j, m)) if i < d and j < d and m < d else zero3[i][j][m]
                    for m in range(big)
                ]
                for j in range(big)
            ]
            for i in range(big)
        ]
    else:
        ambient_c = [
            [
                embed_g(a.product(i, j)) if i < d and j < d else vec_zero(big)
                for j in range(big)
            ]
            for i in range(big)
        ]
    ambient = Algebra(k, big, ambient_c)

    space = cochain_space(k, 2, big, big)
    coords = [Fraction(0)] * space.dimension

    def put(args, vec):
        loc = space.locate(args)
        if loc is None:
            return
        pos, sign = loc
        for t, x in enumerate(vec):
            if x:
                coords[pos * big + t] += sign * x

    if k is AlgebraKind.ASSOCIATIVE:
        for i in range(d):
            for b in range(dv):
                put((i, d + b), embed_v(col_of(r.maps["L"][i], b)))
                put((d + b, i), embed_v(col_of(r.maps["R"][i], b)))
    elif k is AlgebraKind.LIE:
        for i in range(d):
            for b in range(dv):
                put((i, d + b), embed_v(col_of(r.maps["rho"][i], b)))
    elif k is AlgebraKind.PRELIE:
        for i in range(d):
            for b in range(dv):
                put((i, d + b), embed_v(col_of(r.maps["rho"][i], b)))
                put((d + b, i), embed_v(col_of(r.maps["mu"][i], b)))
    elif k is AlgebraKind.LEIBNIZ:
        for i in range(d):
            for b in range(dv):
                put((i, d + b), embed_v(col_of(r.maps["rhoL"][i], b)))
                put((d + b, i), embed_v(col_of(r.maps["rhoR"][i], b)))
    else:  # threelie
        for (i, j) in wedge_basis(d, 2):
            m = r.pair_action(i, j)
            for b in range(dv):
                put(((i, j), d + b), embed_v(col_of(m, b)))
        for gamma in range(d):
            for alpha in range(d):
                for b in range(dv):
                    m = r.pair_action(gamma, alpha)
                    put(((alpha, d + b), gamma), embed_v(col_of(m, b)))

    action = Cochain(space, coords)
    return SumAlgebraMC(structure_element(ambient), action, ambient)


def col_of(m: Matrix, j: int) -> list[Fraction]:
    return [m.data[i][j] for i in range(m.rows)]
