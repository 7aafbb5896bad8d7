"""Exact dense linear algebra over a FieldSpec.

Prime fields dispatch to the row-reduction kernels; rationals use Fraction
Gaussian elimination for RREF and fraction-free Bareiss elimination for rank,
after clearing denominators row by row.
"""

from fractions import Fraction
from math import lcm

from mfull import kernels


def _clear_row(row):
    den = lcm(*(v.denominator for v in row)) if row else 1
    return [int(v * den) for v in row]


def _rref_frac(rows):
    if not rows:
        return 0, [], []
    mat = [[Fraction(v) for v in row] for row in rows]
    m, n = len(mat), len(mat[0])
    rank = 0
    pivots = []
    for col in range(n):
        piv = next((r for r in range(rank, m) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        inv = 1 / prow[col]
        if inv != 1:
            for j in range(col, n):
                prow[j] *= inv
        for r in range(m):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                row = mat[r]
                for j in range(col, n):
                    row[j] -= f * prow[j]
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    return rank, pivots, mat[:rank]


def rank(rows, field) -> int:
    if not rows:
        return 0
    if field.kind == "prime":
        return kernels.rank_mod_p(rows, field.p)
    return kernels.rank_bareiss([_clear_row([Fraction(v) for v in row]) for row in rows])


def rref(rows, field):
    """(rank, pivot columns, reduced rows) for either coefficient field."""
    if not rows:
        return 0, [], []
    if field.kind == "prime":
        return kernels.rref_mod_p(rows, field.p)
    return _rref_frac(rows)
