"""Pure-Python row-reduction kernels over F_p and fraction-free rank over Z.

Drop-in fallback for the compiled `mfull._speedups` extension; same
signatures, same results, much slower on large matrices.
"""

BACKEND = "python"


def rank_mod_p(rows, p):
    """Rank of a dense matrix given as a list of equal-length int rows."""
    if not rows:
        return 0
    mat = [[v % p for v in row] for row in rows]
    m, n = len(mat), len(mat[0])
    rank = 0
    for col in range(n):
        piv = None
        for r in range(rank, m):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        prow = mat[rank]
        for r in range(rank + 1, m):
            a = mat[r][col]
            if a:
                f = a * inv % p
                row = mat[r]
                for j in range(col, n):
                    row[j] = (row[j] - f * prow[j]) % p
        rank += 1
        if rank == m:
            break
    return rank


def rref_mod_p(rows, p):
    """Reduced row echelon form mod p.

    Returns (rank, pivot column indices, reduced nonzero rows); pivot entries
    are 1 and pivot columns are zero elsewhere.
    """
    if not rows:
        return 0, [], []
    mat = [[v % p for v in row] for row in rows]
    m, n = len(mat), len(mat[0])
    rank = 0
    pivots = []
    for col in range(n):
        piv = None
        for r in range(rank, m):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        prow = mat[rank]
        if inv != 1:
            for j in range(col, n):
                prow[j] = prow[j] * inv % p
        for r in range(m):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                row = mat[r]
                for j in range(col, n):
                    row[j] = (row[j] - f * prow[j]) % p
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    return rank, pivots, mat[:rank]


def rank_bareiss(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    if not rows:
        return 0
    mat = [list(map(int, row)) for row in rows]
    m, n = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(n):
        piv = None
        for r in range(rank, m):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        pval = prow[col]
        for r in range(rank + 1, m):
            row = mat[r]
            a = row[col]
            for j in range(col, n):
                row[j] = (row[j] * pval - a * prow[j]) // prev
        prev = pval
        rank += 1
        if rank == m:
            break
    return rank
