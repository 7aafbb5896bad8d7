"""Buchberger's algorithm with reduced bases, plus ideal-level operations:
membership, equality, sum, product, colon, intersection (tag-variable
elimination), initial ideal, and quotient by a linear form.

Normal selection strategy and both classical pair-elimination criteria; no
F4/F5.  Inputs are desk-scale (few variables, moderate degrees), so clarity
wins over asymptotics.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from mfull.algebra import (
    Polynomial,
    PolyRingCtx,
    RingMismatchError,
    apply_linear_change,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_desc,
)


@dataclass(frozen=True)
class LinearForm:
    """A nonzero homogeneous degree-1 form sum coeffs[k] * x_k."""

    ring: PolyRingCtx
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.ring.n:
            raise ValueError("coefficient count does not match ring")
        coeffs = tuple(self.ring.field.of(c) for c in self.coeffs)
        if all(c == 0 for c in coeffs):
            raise ValueError("linear form must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    def to_poly(self) -> Polynomial:
        n = self.ring.n
        return self.ring.from_terms(
            (tuple(1 if t == k else 0 for t in range(n)), c)
            for k, c in enumerate(self.coeffs)
            if c != 0
        )

    def __str__(self):
        from mfull.algebra import poly_str

        return poly_str(self.to_poly())


class Ideal:
    """Nonzero ideal given by generators, with a cached reduced Groebner basis."""

    __slots__ = ("ring", "gens", "homogeneous", "_gb", "_pieces")

    def __init__(self, ring_ctx: PolyRingCtx, gens):
        gens = tuple(g for g in gens if not g.is_zero())
        if not gens:
            raise ValueError("zero ideal is not representable")
        for g in gens:
            if g.ring != ring_ctx:
                raise RingMismatchError("generator from a different ring")
        self.ring = ring_ctx
        self.gens = gens
        self.homogeneous = all(g.is_homogeneous() for g in gens)
        self._gb = None
        self._pieces = None

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def max_gen_degree(self) -> int:
        return max(g.degree() for g in self.gens)

    def min_gen_degree(self) -> int:
        return min(g.degree() for g in self.gens)

    def __repr__(self):
        from mfull.algebra import poly_str

        return "Ideal(" + ", ".join(poly_str(g) for g in self.gens) + ")"


def maximal_ideal(ring_ctx: PolyRingCtx) -> Ideal:
    return Ideal(ring_ctx, [ring_ctx.variable(k) for k in range(ring_ctx.n)])


def maximal_ideal_power(ring_ctx: PolyRingCtx, t: int) -> Ideal:
    """Ideal generated by all monomials of degree t."""
    if t < 1:
        raise ValueError("power must be >= 1")
    return Ideal(ring_ctx, [ring_ctx.monomial(m) for m in monomials_desc(ring_ctx.n, t, ring_ctx.order)])


# -- division and Buchberger ---------------------------------------------------


def _normal_form_terms(f: Polynomial, basis) -> Polynomial:
    """Remainder of f under full multivariate division by basis (monic)."""
    ring_ctx = f.ring
    field = ring_ctx.field
    key = ring_ctx.sort_key
    work = dict(f.terms)
    rem = {}
    lms = [(g.lm(), g) for g in basis]
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, g in lms:
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                for gm, gc in g.terms[1:]:
                    t = mono_mul(gm, shift)
                    v = field.sub(work.get(t, field.zero), field.mul(c, gc))
                    if v == 0:
                        work.pop(t, None)
                    else:
                        work[t] = v
                break
        else:
            rem[m] = c
    return Polynomial(ring_ctx, rem.items())


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    l = mono_lcm(f.lm(), g.lm())
    return f.shift(mono_div(l, f.lm())) - g.shift(mono_div(l, g.lm()))


def _buchberger(gens, ring_ctx: PolyRingCtx):
    basis = [g.monic() for g in gens if not g.is_zero()]
    key = ring_ctx.sort_key
    pending = {}
    heap = []

    def push_pairs(new_idx):
        for i in range(new_idx):
            l = mono_lcm(basis[i].lm(), basis[new_idx].lm())
            pending[(i, new_idx)] = l
            heapq.heappush(heap, (key(l), i, new_idx))

    for idx in range(1, len(basis)):
        push_pairs(idx)
    while heap:
        _, i, j = heapq.heappop(heap)
        l = pending.pop((i, j), None)
        if l is None:
            continue
        lmi, lmj = basis[i].lm(), basis[j].lm()
        if mono_mul(lmi, lmj) == l:
            continue  # coprime leading terms
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_divides(basis[k].lm(), l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        r = _normal_form_terms(_spoly(basis[i], basis[j]), basis)
        if not r.is_zero():
            basis.append(r.monic())
            push_pairs(len(basis) - 1)
    return basis


def _reduce_basis(basis, ring_ctx: PolyRingCtx):
    """Minimalize leading terms, then tail-reduce to the unique reduced basis."""
    key = ring_ctx.sort_key
    basis = sorted(basis, key=lambda g: key(g.lm()))
    # ascending order: a kept element can divide a later one but never vice versa
    kept = []
    for g in basis:
        if not any(mono_divides(h.lm(), g.lm()) for h in kept):
            kept.append(g)
    changed = True
    while changed:
        changed = False
        for idx in range(len(kept)):
            others = kept[:idx] + kept[idx + 1 :]
            r = _normal_form_terms(kept[idx], others) if others else kept[idx]
            if r != kept[idx]:
                kept[idx] = r.monic()
                changed = True
    kept.sort(key=lambda g: key(g.lm()))
    return tuple(kept)


def reduced_gb(ideal: Ideal):
    """The unique reduced Groebner basis under the ring's order, cached."""
    if ideal._gb is not None:
        return ideal._gb
    if ideal.is_monomial():
        monos = sorted({g.lm() for g in ideal.gens}, key=ideal.ring.sort_key)
        kept = []
        for m in monos:
            if not any(mono_divides(k, m) for k in kept):
                kept.append(m)
        gb = tuple(ideal.ring.monomial(m) for m in kept)
    else:
        gb = _reduce_basis(_buchberger(ideal.gens, ideal.ring), ideal.ring)
    ideal._gb = gb
    return gb


def normal_form(f: Polynomial, ideal: Ideal) -> Polynomial:
    """Remainder of f modulo the reduced basis; zero iff f lies in the ideal."""
    if f.ring != ideal.ring:
        raise RingMismatchError("polynomial from a different ring")
    return _normal_form_terms(f, reduced_gb(ideal))


def ideal_contains(ideal: Ideal, f: Polynomial) -> bool:
    return normal_form(f, ideal).is_zero()


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    if a.ring != b.ring:
        raise RingMismatchError("ideals from different rings")
    return reduced_gb(a) == reduced_gb(b)


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise RingMismatchError("ideals from different rings")
    return Ideal(a.ring, a.gens + b.gens)


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise RingMismatchError("ideals from different rings")
    return Ideal(a.ring, [f * g for f in a.gens for g in b.gens])


# -- intersection, colon, elimination ------------------------------------------


def _tag_ring(ring_ctx: PolyRingCtx) -> PolyRingCtx:
    tag = "_t"
    while tag in ring_ctx.var_names:
        tag += "_"
    return PolyRingCtx(
        n=ring_ctx.n + 1,
        field=ring_ctx.field,
        order="elim1",
        var_names=(tag,) + ring_ctx.var_names,
    )


def _lift(f: Polynomial, ext: PolyRingCtx) -> Polynomial:
    return Polynomial(ext, [((0,) + m, c) for m, c in f.terms])


def _project(f: Polynomial, ring_ctx: PolyRingCtx) -> Polynomial:
    return Polynomial(ring_ctx, [(m[1:], c) for m, c in f.terms])


def ideal_intersect(a: Ideal, b: Ideal) -> Ideal:
    """Intersection via a single tag variable and an elimination order."""
    if a.ring != b.ring:
        raise RingMismatchError("ideals from different rings")
    ext = _tag_ring(a.ring)
    t = ext.variable(0)
    one_minus_t = ext.one() - t
    gens = [t * _lift(f, ext) for f in a.gens]
    gens += [one_minus_t * _lift(g, ext) for g in b.gens]
    gb = reduced_gb(Ideal(ext, gens))
    kept = [_project(g, a.ring) for g in gb if g.lm()[0] == 0]
    return Ideal(a.ring, kept)


def exact_divide(g: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient g / f for g in the principal ideal (f)."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring_ctx = g.ring
    field = ring_ctx.field
    work = g
    q = {}
    while not work.is_zero():
        if not mono_divides(f.lm(), work.lm()):
            raise ValueError("polynomial is not divisible")
        m = mono_div(work.lm(), f.lm())
        c = field.div(work.lc(), f.lc())
        q[m] = c
        work = work - f.shift(m).scale(c)
    return Polynomial(ring_ctx, q.items())


def ideal_colon_poly(ideal: Ideal, f: Polynomial) -> Ideal:
    """Colon ideal {g : g*f in I}, via intersection with (f) and exact division."""
    if f.ring != ideal.ring:
        raise RingMismatchError("polynomial from a different ring")
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    meet = ideal_intersect(ideal, Ideal(ideal.ring, [f]))
    return Ideal(ideal.ring, [exact_divide(g, f) for g in meet.gens])


def ideal_colon_ideal(ideal: Ideal, other: Ideal) -> Ideal:
    """Colon I : J as the intersection of the element-wise colons."""
    out = None
    for g in other.gens:
        c = ideal_colon_poly(ideal, g)
        out = c if out is None else ideal_intersect(out, c)
    return out


def initial_ideal(ideal: Ideal) -> Ideal:
    """Monomial ideal of leading terms of the reduced basis."""
    return Ideal(ideal.ring, [ideal.ring.monomial(g.lm()) for g in reduced_gb(ideal)])


# -- quotient by a linear form ---------------------------------------------------


@dataclass(frozen=True)
class QuotientImage:
    """Image of an ideal in the smaller ring R/xR; `ideal` is None when zero.

    `unit` flags a nonzero constant in the image, which cannot happen for
    proper homogeneous inputs.
    """

    ring: PolyRingCtx
    ideal: Ideal | None
    unit: bool = False

    @property
    def is_zero(self) -> bool:
        return self.ideal is None and not self.unit


def section_matrix(x: LinearForm):
    """Invertible matrix M with sum_k coeffs[k] * M[k] = e_n, so the
    substitution x_k -> sum M[k][t] x_t carries x to the last variable."""
    ring_ctx = x.ring
    field = ring_ctx.field
    n = ring_ctx.n
    k0 = max(k for k, c in enumerate(x.coeffs) if c != 0)
    rows = []
    inv = field.inv(x.coeffs[k0])
    for k in range(n):
        if k == k0:
            row = [field.zero] * n
            row[n - 1] = inv
            for kk, c in enumerate(x.coeffs):
                if kk == k0 or c == 0:
                    continue
                tgt = kk if kk < k0 else kk - 1
                row[tgt] = field.sub(row[tgt], field.mul(c, inv))
            rows.append(row)
        else:
            tgt = k if k < k0 else k - 1
            rows.append([field.one if t == tgt else field.zero for t in range(n)])
    return rows


def quotient_by_linear_form(ideal: Ideal, x: LinearForm) -> QuotientImage:
    """Image of the ideal in R/xR, presented natively over n-1 variables."""
    if x.ring != ideal.ring:
        raise RingMismatchError("linear form from a different ring")
    ring_ctx = ideal.ring
    n = ring_ctx.n
    small = PolyRingCtx(
        n=n - 1,
        field=ring_ctx.field,
        order=ring_ctx.order,
        var_names=ring_ctx.var_names[: n - 1],
    )
    mat = section_matrix(x)
    images = []
    unit = False
    for g in ideal.gens:
        h = apply_linear_change(g, mat)
        terms = [(m[: n - 1], c) for m, c in h.terms if m[n - 1] == 0]
        img = Polynomial(small, terms)
        if img.is_zero():
            continue
        if img.degree() == 0:
            unit = True
        images.append(img)
    if unit:
        return QuotientImage(ring=small, ideal=None, unit=True)
    if not images:
        return QuotientImage(ring=small, ideal=None)
    return QuotientImage(ring=small, ideal=Ideal(small, images))
