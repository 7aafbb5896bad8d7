"""Degreewise linear algebra on the graded pieces of a homogeneous ideal.

The graded piece I_j is built by the cascade I_j = R_1 * I_{j-1} + <gens of
degree j> and stored in reduced row echelon form over the degree-j monomial
basis (columns sorted descending under the ring order, so pivot columns are
exactly the degree-j leading monomials of I).  Everything downstream reads
off this table: Hilbert data, socle dimensions, m-full witness checks,
minimal-generator counts, initial-ideal generators, truncation bases, and the
multiplication maps used for Koszul strands.
"""

from __future__ import annotations

from mfull import linalg
from mfull.algebra import Polynomial, mono_divides, mono_index, monomials_desc, shift_map
from mfull.groebner import Ideal


class NotSaturatedError(RuntimeError):
    """The ideal did not reach R_j = I_j below the degree cap."""


class GradedPieces:
    def __init__(self, ideal: Ideal):
        if any(g.degree() < 1 for g in ideal.gens):
            raise ValueError("graded analysis needs a proper ideal")
        if not ideal.homogeneous:
            raise ValueError("graded analysis needs a homogeneous ideal")
        self.ideal = ideal
        self.ring = ideal.ring
        self.field = ideal.ring.field
        self._gens_by_degree = {}
        for g in ideal.gens:
            self._gens_by_degree.setdefault(g.degree(), []).append(g)
        self._full = {}        # j -> (rank, pivots, rows)
        self._shift_only = {}  # j -> rank of R_1 * I_{j-1} at degree j, pivots, rows
        self._mult = {}        # (k, j) -> std-basis multiplication vectors
        self._built = -1
        self._saturation = None

    # -- table construction --------------------------------------------------

    def dim_ring(self, j: int) -> int:
        if j < 0:
            return 0
        return len(monomials_desc(self.ring.n, j, self.ring.order))

    def _poly_row(self, g: Polynomial, j: int):
        idx = mono_index(self.ring.n, j, self.ring.order)
        row = [self.field.zero] * self.dim_ring(j)
        for m, c in g.terms:
            row[idx[m]] = c
        return row

    def extend(self, j: int):
        while self._built < j:
            d = self._built + 1
            rows = []
            ncols = self.dim_ring(d)
            if d > 0 and self._full[d - 1][0] > 0:
                prev_rows = self._full[d - 1][2]
                for k in range(self.ring.n):
                    sm = shift_map(self.ring.n, d - 1, self.ring.order, k)
                    for row in prev_rows:
                        new = [self.field.zero] * ncols
                        for i, v in enumerate(row):
                            if v:
                                new[sm[i]] = v
                        rows.append(new)
            r1, piv1, red1 = linalg.rref(rows, self.field)
            self._shift_only[d] = (r1, tuple(piv1), red1)
            grows = [self._poly_row(g, d) for g in self._gens_by_degree.get(d, ())]
            if grows:
                r2, piv2, red2 = linalg.rref(list(red1) + grows, self.field)
                self._full[d] = (r2, tuple(piv2), red2)
            else:
                self._full[d] = self._shift_only[d]
            self._built = d

    def dim_ideal(self, j: int) -> int:
        if j < 0:
            return 0
        self.extend(j)
        return self._full[j][0]

    def h(self, j: int) -> int:
        """dim (R/I)_j."""
        return self.dim_ring(j) - self.dim_ideal(j)

    def pivots(self, j: int):
        self.extend(j)
        return self._full[j][1]

    def rows(self, j: int):
        self.extend(j)
        return self._full[j][2]

    def std_cols(self, j: int):
        """Non-pivot column indices: the standard monomial basis of (R/I)_j."""
        piv = set(self.pivots(j))
        return [c for c in range(self.dim_ring(j)) if c not in piv]

    def std_monomials(self, j: int):
        monos = monomials_desc(self.ring.n, j, self.ring.order)
        return [monos[c] for c in self.std_cols(j)]

    # -- saturation and Hilbert data -------------------------------------------

    def _default_cap(self) -> int:
        return max(64, 4 * self.ring.n * self.ideal.max_gen_degree())

    def saturation_degree(self, cap: int | None = None) -> int:
        """Least j with I_j = R_j; exists iff I is m-primary."""
        if self._saturation is not None:
            return self._saturation
        cap = self._default_cap() if cap is None else cap
        j = 0
        while j <= cap:
            if self.dim_ideal(j) == self.dim_ring(j):
                self._saturation = j
                return j
            j += 1
        raise NotSaturatedError(f"no full graded piece up to degree {cap}")

    def hilbert_values(self):
        sat = self.saturation_degree()
        return tuple(self.h(j) for j in range(sat))

    def socle_degree(self) -> int:
        return self.saturation_degree() - 1

    def generator_degree_counts(self):
        """Degree -> number of minimal generators (dim I_j - dim (R_1 I_{j-1})_j)."""
        sat = self.saturation_degree()
        out = {}
        for j in range(1, sat + 1):
            self.extend(j)
            b = self._full[j][0] - self._shift_only[j][0]
            if b:
                out[j] = b
        return out

    # -- reductions and multiplication maps -------------------------------------

    def _pivot_row_map(self, j: int):
        self.extend(j)
        rank, piv, rows = self._full[j]
        return dict(zip(piv, rows))

    def mult_vectors(self, k: int, j: int):
        """Images of the degree-j standard basis under x_k, on the degree-j+1
        standard basis."""
        got = self._mult.get((k, j))
        if got is not None:
            return got
        std_src = self.std_cols(j)
        std_tgt = self.std_cols(j + 1)
        pos = {c: i for i, c in enumerate(std_tgt)}
        prows = self._pivot_row_map(j + 1)
        sm = shift_map(self.ring.n, j, self.ring.order, k)
        neg = self.field.neg
        zero = self.field.zero
        out = []
        for col in std_src:
            tgt = sm[col]
            if tgt in pos:
                vec = [zero] * len(std_tgt)
                vec[pos[tgt]] = self.field.one
            else:
                row = prows[tgt]
                vec = [neg(row[c]) for c in std_tgt]
            out.append(vec)
        self._mult[(k, j)] = out
        return out

    # -- derived data ---------------------------------------------------------

    def socle_dims(self):
        """Degree -> dim of the maximal-ideal annihilator in (R/I)_j."""
        c = self.socle_degree()
        dims = {}
        for j in range(c + 1):
            hj = self.h(j)
            if hj == 0:
                continue
            if self.h(j + 1) == 0:
                dims[j] = hj
                continue
            rows = []
            vecs = [self.mult_vectors(k, j) for k in range(self.ring.n)]
            for b in range(hj):
                row = []
                for k in range(self.ring.n):
                    row.extend(vecs[k][b])
                rows.append(row)
            kernel = hj - linalg.rank(rows, self.field)
            if kernel:
                dims[j] = kernel
        return dims

    def _form_rows(self, coeffs, j: int):
        """Rows of multiplication by a linear form: R_j -> R_{j+1} on monomials."""
        n = self.ring.n
        ncols = self.dim_ring(j + 1)
        maps = [shift_map(n, j, self.ring.order, k) for k in range(n)]
        add = self.field.add
        rows = []
        for b in range(self.dim_ring(j)):
            row = [self.field.zero] * ncols
            for k, a in enumerate(coeffs):
                if a != 0:
                    row[maps[k][b]] = add(row[maps[k][b]], a)
            rows.append(row)
        return rows

    def mfull_witness_check(self, coeffs) -> bool:
        """Decide m*I : x = I for the linear form with these coefficients.

        Both sides contain I, agree above the saturation degree, and are
        compared by dimension counts degree by degree below it.
        """
        sat = self.saturation_degree()
        self.extend(sat + 1)
        for j in range(sat + 1):
            r1, _, red1 = self._shift_only[j + 1]
            stacked = list(red1) + self._form_rows(coeffs, j)
            colon_dim = self.dim_ring(j) - (linalg.rank(stacked, self.field) - r1)
            if colon_dim != self.dim_ideal(j):
                return False
        return True

    def colon_form_quotient_dims(self, coeffs):
        """Degree -> dim ((I : x)/I)_j for the linear form x with these coefficients."""
        sat = self.saturation_degree()
        out = {}
        for j in range(sat):
            self.extend(j + 1)
            rank_j1, _, rows_j1 = self._full[j + 1]
            stacked = list(rows_j1) + self._form_rows(coeffs, j)
            colon_dim = self.dim_ring(j) - (linalg.rank(stacked, self.field) - rank_j1)
            d = colon_dim - self.dim_ideal(j)
            if d:
                out[j] = d
        return out

    def initial_min_gens(self):
        """Minimal monomial generators of the initial ideal, via degreewise pivots."""
        sat = self.saturation_degree()
        monos_all = [monomials_desc(self.ring.n, j, self.ring.order) for j in range(sat + 1)]
        mingens = []
        for j in range(1, sat + 1):
            for col in self.pivots(j):
                m = monos_all[j][col]
                if not any(mono_divides(g, m) for g in mingens):
                    mingens.append(m)
        return mingens

    def component_basis(self, d: int):
        """Polynomials forming a reduced basis of the vector space I_d."""
        monos = monomials_desc(self.ring.n, d, self.ring.order)
        out = []
        for row in self.rows(d):
            out.append(Polynomial(self.ring, [(monos[i], v) for i, v in enumerate(row) if v != 0]))
        return out


def graded_pieces(ideal: Ideal) -> GradedPieces:
    """Per-ideal cached table of graded pieces."""
    if ideal._pieces is None:
        ideal._pieces = GradedPieces(ideal)
    return ideal._pieces
