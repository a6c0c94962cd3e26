"""The five coboundary operators, their matrices, and Z/B/H dimensions.

Each operator is implemented once, as a generator of elementary terms
(coefficient, optional action matrix, source domain tuple) per output basis
tuple.  Applying an operator to a cochain and assembling its full matrix
both consume the same term stream, so there is a single transcription of
each formula in the package.

d∘d = 0 is asserted at matrix level inside :func:`cohomology_dims` before
any dimensions are reported; it is the strongest guard against sign errors
in the five formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cochains import Cochain, cochain_space, evaluate
from .combinatorics import sort_with_sign
from .linalg import Matrix, rank_nullity, vec_add, vec_scale, vec_zero
from .representations import Representation, check_representation
from .structures import AlgebraKind


@dataclass(frozen=True)
class DegreeDims:
    n: int
    dim_c: int
    dim_z: int
    dim_b: int
    dim_h: int

    def __post_init__(self):
        assert 0 <= self.dim_b <= self.dim_z <= self.dim_c
        assert self.dim_h == self.dim_z - self.dim_b


@dataclass(frozen=True)
class CohomologyReport:
    kind: AlgebraKind
    rows: tuple[DegreeDims, ...]

    def h(self, n: int) -> int:
        for row in self.rows:
            if row.n == n:
                return row.dim_h
        raise KeyError(n)


def first_degree(kind: AlgebraKind) -> int:
    return 1 if kind in (AlgebraKind.PRELIE, AlgebraKind.THREELIE) else 0


def default_max_degree(kind: AlgebraKind, dim_g: int) -> int:
    """Dim-driven cap: wedge complexes vanish past the wedge capacity,
    tensor complexes are cut at 4 (3 for the wedge-pair complex)."""
    if kind is AlgebraKind.LIE:
        return dim_g
    if kind is AlgebraKind.PRELIE:
        return dim_g + 1
    if kind is AlgebraKind.THREELIE:
        return 3
    return 4


def _terms(r: Representation, n: int, out_tuple):
    """Elementary terms of (d f)(out_tuple) for f of degree n.

    Yields (coef, action matrix or None, source domain tuple).
    """
    a = r.algebra
    k = r.kind
    t = out_tuple
    if k is AlgebraKind.ASSOCIATIVE:
        L, R = r.maps["L"], r.maps["R"]
        yield Fraction(1), L[t[0]], t[1:]
        for i in range(1, n + 1):
            sign = Fraction(-1) ** i
            prod = a.product(t[i - 1], t[i])
            for m, c in enumerate(prod):
                if c:
                    yield sign * c, None, t[: i - 1] + (m,) + t[i + 1:]
        yield Fraction(-1) ** (n + 1), R[t[n]], t[:n]
    elif k is AlgebraKind.LIE:
        rho = r.maps["rho"]
        for i in range(n + 1):
            yield Fraction(-1) ** i, rho[t[i]], t[:i] + t[i + 1:]
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                br = a.product(t[i], t[j])
                rest = t[:i] + t[i + 1: j] + t[j + 1:]
                for m, c in enumerate(br):
                    if c:
                        yield Fraction(-1) ** (i + j) * c, None, (m,) + rest
    elif k is AlgebraKind.PRELIE:
        rho, mu = r.maps["rho"], r.maps["mu"]
        head, last = t[:n], t[n]
        for i in range(n):
            sign = Fraction(-1) ** i  # (-1)^{i+1} with 1-based i
            rest = head[:i] + head[i + 1:]
            yield sign, rho[head[i]], rest + (last,)
            yield sign, mu[last], rest + (head[i],)
            prod = a.product(head[i], last)
            for m, c in enumerate(prod):
                if c:
                    yield -sign * c, None, rest + (m,)
        for i in range(n):
            for j in range(i + 1, n):
                br = vec_add(a.product(head[i], head[j]),
                             vec_scale(Fraction(-1), a.product(head[j], head[i])))
                rest = head[:i] + head[i + 1: j] + head[j + 1:]
                for m, c in enumerate(br):
                    if c:
                        yield Fraction(-1) ** (i + j) * c, None, (m,) + rest + (last,)
    elif k is AlgebraKind.LEIBNIZ:
        rl, rr = r.maps["rhoL"], r.maps["rhoR"]
        for i in range(n):
            yield Fraction(-1) ** i, rl[t[i]], t[:i] + t[i + 1:]
        yield Fraction(-1) ** (n + 1), rr[t[n]], t[:n]
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                br = a.product(t[i], t[j])
                sign = Fraction(-1) ** (i + 1)  # (-1)^i with 1-based i
                for m, c in enumerate(br):
                    if c:
                        yield sign * c, None, t[:i] + t[i + 1: j] + (m,) + t[j + 1:]
    else:  # threelie
        pairs, z = t[:n], t[n]
        for j in range(n):
            xj, yj = pairs[j]
            sign = Fraction(-1) ** (j + 1)  # (-1)^j with 1-based j
            rest = pairs[:j] + pairs[j + 1:]
            # insertion of [X_j, X_k]_F into slot k
            for kk in range(j + 1, n):
                c_pair, e_pair = pairs[kk]
                kept = pairs[:j] + pairs[j + 1: kk]
                tail = pairs[kk + 1:]
                for vec, fixed, fixed_second in (
                    (a.triple(xj, yj, c_pair), e_pair, True),
                    (a.triple(xj, yj, e_pair), c_pair, False),
                ):
                    for m, c in enumerate(vec):
                        if not c:
                            continue
                        legs = (m, fixed) if fixed_second else (fixed, m)
                        norm = sort_with_sign(legs)
                        if norm is None:
                            continue
                        key, s = norm
                        yield sign * s * c, None, kept + (key,) + tail + (z,)
            # f(..., [X_j, z])
            br = a.triple(xj, yj, z)
            for m, c in enumerate(br):
                if c:
                    yield sign * c, None, rest + (m,)
            # rho(X_j) f(..., z)
            yield -sign, r.pair_action(xj, yj), rest + (z,)
        xn, yn = pairs[n - 1]
        lead = pairs[: n - 1]
        sign = Fraction(-1) ** (n + 1)
        yield sign, r.pair_action(yn, z), lead + (xn,)
        yield sign, r.pair_action(z, xn), lead + (yn,)


def coboundary(r: Representation, f: Cochain) -> Cochain:
    """The kind's coboundary of f, one degree up."""
    sp = f.space
    if sp.kind is not r.kind or sp.dim_g != r.algebra.dim or sp.dim_v != r.dim_v:
        raise ValueError("cochain does not match the representation")
    n = sp.n
    out_space = cochain_space(r.kind, n + 1, sp.dim_g, sp.dim_v)
    coords = [Fraction(0)] * out_space.dimension
    dv = sp.dim_v
    for pos, t in enumerate(out_space.basis):
        acc = vec_zero(dv)
        for coef, action, args in _terms(r, n, t):
            val = evaluate(f, args)
            if action is not None:
                val = action.apply(val)
            for i, x in enumerate(val):
                if x:
                    acc[i] += coef * x
        coords[pos * dv: (pos + 1) * dv] = acc
    return Cochain(out_space, coords)


def coboundary_matrix(r: Representation, n: int) -> Matrix:
    """Matrix of d_n : C^n -> C^{n+1} over the canonical bases.

    Column k equals the coordinates of the coboundary of the k-th basis
    cochain (asserted against :func:`coboundary` in the tests).
    """
    src = cochain_space(r.kind, n, r.algebra.dim, r.dim_v)
    dst = cochain_space(r.kind, n + 1, r.algebra.dim, r.dim_v)
    dv = r.dim_v
    data = [[Fraction(0)] * src.dimension for _ in range(dst.dimension)]
    for pos, t in enumerate(dst.basis):
        for coef, action, args in _terms(r, n, t):
            loc = src.locate(args)
            if loc is None:
                continue
            col_pos, s = loc
            w = coef * s
            if action is None:
                for out in range(dv):
                    data[pos * dv + out][col_pos * dv + out] += w
            else:
                for out in range(dv):
                    row = data[pos * dv + out]
                    arow = action.data[out]
                    for mid in range(dv):
                        if arow[mid]:
                            row[col_pos * dv + mid] += w * arow[mid]
    return Matrix(dst.dimension, src.dimension, data)


def cohomology_dims(
    r: Representation, max_degree: int | None = None, check: bool = True
) -> CohomologyReport:
    """dim C/Z/B/H per degree, first degree of the complex through max_degree.

    Asserts d_{n+1} o d_n = 0 as matrices before reporting anything.
    """
    if check and not check_representation(r).valid:
        raise ValueError("cohomology_dims requires a valid representation")
    n0 = first_degree(r.kind)
    if max_degree is None:
        max_degree = default_max_degree(r.kind, r.algebra.dim)
    if max_degree < n0:
        raise ValueError("max_degree below the first degree of the complex")
    mats = {n: coboundary_matrix(r, n) for n in range(n0, max_degree + 1)}
    for n in range(n0, max_degree):
        if not (mats[n + 1] @ mats[n]).is_zero():
            raise RuntimeError(f"d^2 != 0 between degrees {n} and {n + 2}")
    rows = []
    for n in range(n0, max_degree + 1):
        dim_c = mats[n].cols
        _, dim_z = rank_nullity(mats[n])
        dim_b = rank_nullity(mats[n - 1])[0] if n > n0 else 0
        rows.append(DegreeDims(n, dim_c, dim_z, dim_b, dim_z - dim_b))
    return CohomologyReport(r.kind, tuple(rows))
