"""Independent brute-force oracles used to freeze expected test values.

Everything here is deliberately written without importing the package:
cochains are plain dicts over explicitly enumerated tuple bases, the
coboundary formulas are transcribed term by term, and ranks go through
sympy's exact rational elimination.  The only shared vocabulary with the
package is the mathematics itself.
"""

from fractions import Fraction
from itertools import combinations, product

import sympy


def oracle_rank(rows):
    """Exact rank of a matrix given as a list of Fraction rows."""
    if not rows or not rows[0]:
        return 0
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows])
    return m.rank()


def oracle_dims_from_matrices(mats, dims_c):
    """Per-degree (dimC, dimZ, dimB, dimH) from a list of coboundary matrices.

    mats[n] maps degree n to degree n+1; dims_c[n] = dim C^n.  Matrices are
    lists of Fraction rows (possibly empty when either side is 0-dim).
    """
    out = []
    for n in range(len(mats)):
        rank_n = oracle_rank(mats[n])
        dim_z = dims_c[n] - rank_n
        dim_b = oracle_rank(mats[n - 1]) if n > 0 else 0
        out.append((dims_c[n], dim_z, dim_b, dim_z - dim_b))
    return out


# --- Hochschild complex of a 2-dim associative algebra, regular bimodule ---

def _mul(table, u, v):
    """Bilinear extension of a basis multiplication table to vectors."""
    dim = len(table)
    out = [Fraction(0)] * dim
    for i in range(dim):
        if not u[i]:
            continue
        for j in range(dim):
            if not v[j]:
                continue
            for k in range(dim):
                out[k] += u[i] * v[j] * table[i][j][k]
    return out


def _basis_vec(dim, i):
    v = [Fraction(0)] * dim
    v[i] = Fraction(1)
    return v


def oracle_hochschild_dims(table, max_degree):
    """dim table for H^0..H^max of the regular bimodule, full tuple basis."""
    dim = len(table)
    tuples = {n: list(product(range(dim), repeat=n)) for n in range(max_degree + 2)}
    dims_c = [dim * len(tuples[n]) for n in range(max_degree + 2)]

    def coboundary_matrix(n):
        rows = []
        for t in tuples[n + 1]:
            for out_idx in range(dim):
                row = [Fraction(0)] * dims_c[n]

                def add(src_tuple, vec_weight, out_vec_fn):
                    pos = tuples[n].index(tuple(src_tuple))
                    for mid in range(dim):
                        w = out_vec_fn(_basis_vec(dim, mid))[out_idx]
                        if w:
                            row[pos * dim + mid] += vec_weight * w

                # L_{x1} f(x2..x_{n+1})
                add(t[1:], Fraction(1), lambda v, i=t[0]: _mul(table, _basis_vec(dim, i), v))
                # insertion terms
                for i in range(1, n + 1):
                    prod_vec = _mul(table, _basis_vec(dim, t[i - 1]), _basis_vec(dim, t[i]))
                    for k in range(dim):
                        if prod_vec[k]:
                            src = t[: i - 1] + (k,) + t[i + 1:]
                            pos = tuples[n].index(src)
                            row[pos * dim + out_idx] += Fraction(-1) ** i * prod_vec[k]
                # R_{x_{n+1}} f(x1..xn)
                add(t[:-1], Fraction(-1) ** (n + 1), lambda v, i=t[-1]: _mul(table, v, _basis_vec(dim, i)))
                rows.append(row)
        return rows

    mats = [coboundary_matrix(n) for n in range(max_degree + 1)]
    return oracle_dims_from_matrices(mats, dims_c)


def dual_numbers_table():
    """e1 unit, e2*e2 = 0."""
    z, o = Fraction(0), Fraction(1)
    t = [[[z, z] for _ in range(2)] for _ in range(2)]
    t[0][0] = [o, z]
    t[0][1] = [z, o]
    t[1][0] = [z, o]
    t[1][1] = [z, z]
    return t


# --- Chevalley-Eilenberg complex of a Lie algebra, adjoint representation ---

def _sort_sign(seq):
    """(sorted tuple, parity sign) or None on a repeated entry."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] == seq[j]:
                return None
            if seq[i] > seq[j]:
                sign = -sign
    return tuple(sorted(seq)), sign


def oracle_ce_dims(bracket_table, max_degree):
    """dim table for H^0..H^max of the adjoint rep; wedge basis enumerated here."""
    dim = len(bracket_table)
    wedges = {n: list(combinations(range(dim), n)) for n in range(max_degree + 2)}
    dims_c = [dim * len(wedges[n]) for n in range(max_degree + 2)]

    def eval_cochain(coords, n, args):
        norm = _sort_sign(args)
        if norm is None:
            return [Fraction(0)] * dim
        key, sign = norm
        pos = wedges[n].index(key)
        return [sign * coords[pos * dim + k] for k in range(dim)]

    def coboundary_matrix(n):
        rows = []
        basis = [_basis_vec(dims_c[n], b) for b in range(dims_c[n])] if dims_c[n] else []
        for t in wedges[n + 1]:
            for out_idx in range(dim):
                row = [Fraction(0)] * dims_c[n]
                for b, coords in enumerate(basis):
                    total = Fraction(0)
                    for i in range(n + 1):
                        rest = t[:i] + t[i + 1:]
                        fv = eval_cochain(coords, n, rest)
                        acted = _mul(bracket_table, _basis_vec(dim, t[i]), fv)
                        total += Fraction(-1) ** i * acted[out_idx]
                    for i in range(n + 1):
                        for j in range(i + 1, n + 1):
                            br = _mul(bracket_table, _basis_vec(dim, t[i]), _basis_vec(dim, t[j]))
                            rest = t[:i] + t[i + 1: j] + t[j + 1:]
                            for k in range(dim):
                                if br[k]:
                                    fv = eval_cochain(coords, n, (k,) + rest)
                                    total += Fraction(-1) ** (i + j) * br[k] * fv[out_idx]
                    row[b] = total
                rows.append(row)
        return rows

    mats = [coboundary_matrix(n) for n in range(max_degree + 1)]
    return oracle_dims_from_matrices(mats, dims_c)


def aff1_bracket_table():
    """[e1, e2] = e1."""
    z, o = Fraction(0), Fraction(1)
    t = [[[z, z] for _ in range(2)] for _ in range(2)]
    t[0][1] = [o, z]
    t[1][0] = [-o, z]
    return t


def abelian_bracket_table(dim):
    z = Fraction(0)
    return [[[z] * dim for _ in range(dim)] for _ in range(dim)]
