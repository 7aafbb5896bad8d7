"""Hilbert functions, socle profiles, and hyperplane-section degree data for
graded quotients R/I."""

from __future__ import annotations

from dataclasses import dataclass

from mfull.algebra import mono_divides, monomials_desc
from mfull.degreewise import NotSaturatedError, graded_pieces
from mfull.groebner import Ideal, LinearForm, QuotientImage, quotient_by_linear_form, reduced_gb


@dataclass(frozen=True)
class HilbertFunction:
    """h_j = dim (R/I)_j; `values` stops at the last nonzero entry when Artinian,
    or at `truncation_bound` when not."""

    values: tuple
    artinian: bool = True
    truncation_bound: int | None = None

    def h(self, j: int) -> int:
        if j < 0:
            return 0
        if j < len(self.values):
            return self.values[j]
        if self.artinian:
            return 0
        raise ValueError(f"degree {j} beyond truncation bound")

    def total(self) -> int:
        if not self.artinian:
            raise ValueError("length is infinite for non-Artinian quotients")
        return sum(self.values)

    @property
    def socle_degree(self) -> int:
        if not self.artinian:
            raise ValueError("socle degree needs an Artinian quotient")
        return len(self.values) - 1


@dataclass(frozen=True)
class SocleProfile:
    """Socle dimensions by degree; the socle is the annihilator of the maximal
    ideal in R/I, isomorphic to (I : m)/I."""

    dims: dict
    socle_degree: int
    initial_degree: int


def std_monomials(ideal: Ideal, j: int):
    """Degree-j monomials outside the leading-term ideal: a basis of (R/I)_j.

    Deliberately computed from the reduced Groebner basis, independently of
    the degreewise table the fast paths use.
    """
    if not ideal.homogeneous:
        raise ValueError("standard monomials need a homogeneous ideal")
    lts = [g.lm() for g in reduced_gb(ideal)]
    out = []
    for m in monomials_desc(ideal.ring.n, j, ideal.ring.order):
        if not any(mono_divides(lt, m) for lt in lts):
            out.append(m)
    return out


def is_m_primary(ideal: Ideal) -> bool:
    """True iff the leading-term ideal contains a pure power of every variable."""
    if not ideal.homogeneous:
        raise ValueError("m-primary test needs a homogeneous ideal")
    lts = [g.lm() for g in reduced_gb(ideal)]
    n = ideal.ring.n
    for k in range(n):
        if not any(lt[k] > 0 and all(lt[t] == 0 for t in range(n) if t != k) for lt in lts):
            return False
    return True


def _saturation(ideal: Ideal) -> int:
    pieces = graded_pieces(ideal)
    try:
        return pieces.saturation_degree()
    except NotSaturatedError:
        if not is_m_primary(ideal):
            raise ValueError("ideal is not m-primary") from None
        raise


def hilbert_function(ideal: Ideal, bound: int | None = None) -> HilbertFunction:
    """Hilbert function of R/I; non-m-primary ideals need an explicit bound."""
    pieces = graded_pieces(ideal)
    if bound is None:
        sat = _saturation(ideal)
        return HilbertFunction(values=tuple(pieces.h(j) for j in range(sat)))
    values = []
    for j in range(bound + 1):
        hj = pieces.h(j)
        if hj == 0:
            return HilbertFunction(values=tuple(values))
        values.append(hj)
    return HilbertFunction(values=tuple(values), artinian=False, truncation_bound=bound)


def socle_profile(ideal: Ideal) -> SocleProfile:
    _saturation(ideal)
    dims = graded_pieces(ideal).socle_dims()
    return SocleProfile(dims=dims, socle_degree=max(dims), initial_degree=min(dims))


def socle_initial_degree(ideal: Ideal) -> int:
    """Least degree with a nonzero socle; the generator-split threshold is one more."""
    return socle_profile(ideal).initial_degree


def image_hilbert(image: QuotientImage, bound: int | None = None) -> HilbertFunction:
    """Hilbert function of the quotient by a linear form, read off the image ideal."""
    if image.unit:
        return HilbertFunction(values=())
    if image.ideal is None:
        if image.ring.n == 0:
            return HilbertFunction(values=(1,))
        if bound is None:
            raise ValueError("zero image in a positive-dimensional ring needs a bound")
        vals = tuple(len(monomials_desc(image.ring.n, j, image.ring.order)) for j in range(bound + 1))
        return HilbertFunction(values=vals, artinian=False, truncation_bound=bound)
    return hilbert_function(image.ideal, bound=bound)


def section_vanishing_degree(ideal: Ideal, x: LinearForm) -> int:
    """Least j with (R/(I + xR))_j = 0, for the supplied linear form."""
    _saturation(ideal)
    image = quotient_by_linear_form(ideal, x)
    return len(image_hilbert(image).values)
