"""Cochain maps between the complexes of related theories.

* uncurry_prelie: Hom(wedge^{n-1} g, Hom(g,V)) -> Hom(wedge^{n-1} g (x) g, V),
  a bijection intertwining the Chevalley-Eilenberg coboundary of the
  sub-adjacent algebra (with Hom coefficients) and the pre-Lie coboundary.
* curry_threelie: the ternary n-cochains -> Leibniz (n-1)-cochains of the
  wedge-pair algebra with Hom(g,V) coefficients, same intertwining story.
* fundamental_extension: degree-preserving map of graded elements sending a
  ternary cochain P to the wedge-pair cochain acting leg-wise on the last
  slot; it is a homomorphism of graded Lie algebras onto the Balavoine side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cochains import Cochain, cochain_space, evaluate, evaluate_vec_slot
from .cohomology import coboundary, cohomology_dims
from .combinatorics import sort_with_sign, wedge_basis, wedge_position
from .linalg import vec_zero
from .representations import Representation, hom_coefficient_rep
from .structures import AlgebraKind, fundamental_leibniz


def uncurry_prelie(f: Cochain) -> Cochain:
    """Reindex a Lie cochain valued in Hom(g,V) as a pre-Lie cochain.

    The target value on (x_1,...,x_{n-1},y) is f(x_1,...,x_{n-1}) applied
    to y.  With the package's basis orders this is a pure relabeling.
    """
    sp = f.space
    if sp.kind is not AlgebraKind.LIE:
        raise ValueError("uncurry_prelie expects a lie cochain")
    d = sp.dim_g
    if sp.dim_v % d:
        raise ValueError("coefficients are not of Hom(g,V) shape")
    dv = sp.dim_v // d
    out_space = cochain_space(AlgebraKind.PRELIE, sp.n + 1, d, dv)
    coords = [Fraction(0)] * out_space.dimension
    for wpos, w in enumerate(sp.basis):
        for a in range(d):
            for b in range(dv):
                src = wpos * sp.dim_v + a * dv + b
                loc = out_space.locate(w + (a,))
                assert loc is not None and loc[1] == 1
                coords[loc[0] * dv + b] = f.coords[src]
    return Cochain(out_space, coords)


def curry_threelie(f: Cochain) -> Cochain:
    """Reindex a ternary n-cochain as a Leibniz (n-1)-cochain of the
    wedge-pair algebra with Hom(g,V) coefficients."""
    sp = f.space
    if sp.kind is not AlgebraKind.THREELIE:
        raise ValueError("curry_threelie expects a threelie cochain")
    d, dv = sp.dim_g, sp.dim_v
    nw = len(wedge_basis(d, 2))
    pos_of = wedge_position(d, 2)
    out_space = cochain_space(AlgebraKind.LEIBNIZ, sp.n - 1, nw, d * dv)
    coords = [Fraction(0)] * out_space.dimension
    for spos, t in enumerate(sp.basis):
        pairs, a = t[:-1], t[-1]
        key = tuple(pos_of[pr] for pr in pairs)
        opos = out_space.position[key]
        for b in range(dv):
            coords[opos * (d * dv) + a * dv + b] = f.coords[spos * dv + b]
    return Cochain(out_space, coords)


def fundamental_extension(P: Cochain) -> Cochain:
    """Extend a ternary graded element to wedge pairs, acting on each leg
    of the final pair: (X_1..X_p, x^y) -> P(...,x)^y + x^P(...,y)."""
    sp = P.space
    if sp.kind is not AlgebraKind.THREELIE or sp.dim_v != sp.dim_g:
        raise ValueError("fundamental_extension expects an element of C^*(g,g)")
    d = sp.dim_g
    pairs = wedge_basis(d, 2)
    pos_of = wedge_position(d, 2)
    nw = len(pairs)
    p = P.degree
    out_space = cochain_space(AlgebraKind.LEIBNIZ, p + 1, nw, nw)
    coords = [Fraction(0)] * out_space.dimension
    for opos, t in enumerate(out_space.basis):
        head = tuple(pairs[w] for w in t[:-1])
        x, y = pairs[t[-1]]
        acc = vec_zero(nw)
        for vec, fixed, fixed_second in (
            (evaluate(P, head + (x,)), y, True),
            (evaluate(P, head + (y,)), x, False),
        ):
            for m, c in enumerate(vec):
                if not c:
                    continue
                legs = (m, fixed) if fixed_second else (fixed, m)
                norm = sort_with_sign(legs)
                if norm is None:
                    continue
                key, s = norm
                acc[pos_of[key]] += s * c
        coords[opos * nw: (opos + 1) * nw] = acc
    return Cochain(out_space, coords)


@dataclass(frozen=True)
class ComparisonReport:
    kind: AlgebraKind
    squares: tuple[tuple[int, bool], ...]
    iso_dims: tuple[tuple[int, int, int], ...]

    @property
    def squares_commute(self) -> bool:
        return all(ok for _, ok in self.squares)

    @property
    def dims_agree(self) -> bool:
        return all(a == b for _, a, b in self.iso_dims)


def _square_prelie(r: Representation, n: int) -> bool:
    """Both paths around the square starting at lie degree n-1 agree on
    every basis cochain."""
    hom = hom_coefficient_rep(r)
    d, dv = r.algebra.dim, r.dim_v
    src = cochain_space(AlgebraKind.LIE, n - 1, d, d * dv)
    for idx in range(src.dimension):
        f = Cochain.indicator(src, idx)
        via_lie = uncurry_prelie(coboundary(hom, f))
        via_prelie = coboundary(r, uncurry_prelie(f))
        if via_lie != via_prelie:
            return False
    return True


def _square_threelie(r: Representation, n: int) -> bool:
    hom = hom_coefficient_rep(r)
    d, dv = r.algebra.dim, r.dim_v
    src = cochain_space(AlgebraKind.THREELIE, n, d, dv)
    for idx in range(src.dimension):
        f = Cochain.indicator(src, idx)
        via_three = curry_threelie(coboundary(r, f))
        via_leib = coboundary(hom, curry_threelie(f))
        if via_three != via_leib:
            return False
    return True


def compare_cohomologies(r: Representation, max_degree: int = 2) -> ComparisonReport:
    """Commuting squares plus paired cohomology dimensions per degree.

    For a prelie representation the pairing is H^n of the pre-Lie complex
    against H^{n-1} of the sub-adjacent Lie algebra with Hom(g,V)
    coefficients; for threelie, H^n of the ternary complex against H^{n-1}
    of the wedge-pair Leibniz algebra with Hom(g,V) coefficients.
    """
    if r.kind not in (AlgebraKind.PRELIE, AlgebraKind.THREELIE):
        raise ValueError("comparison maps exist for prelie and threelie only")
    hom = hom_coefficient_rep(r)
    own = cohomology_dims(r, max_degree)
    other = cohomology_dims(hom, max_degree - 1)
    squares = []
    iso = []
    for n in range(1, max_degree + 1):
        if r.kind is AlgebraKind.PRELIE:
            squares.append((n, _square_prelie(r, n)))
        else:
            squares.append((n, _square_threelie(r, n)))
        iso.append((n, own.h(n), other.h(n - 1)))
    return ComparisonReport(r.kind, tuple(squares), tuple(iso))
