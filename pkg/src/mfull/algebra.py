"""Exact coefficient fields, monomial orders, and sparse multivariate polynomials.

Monomials are plain exponent tuples.  Polynomials are immutable values: a ring
context plus a tuple of (monomial, coefficient) terms sorted descending under
the ring's monomial order.  Coefficients are ints in [0, p) over a prime field
and `fractions.Fraction` over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

MAX_EXPONENT = 64

ORDERS = ("degrevlex", "lex", "deglex", "elim1")

MIN_PRIME = 32003


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit integers."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: a large prime field or the rationals."""

    kind: str = "prime"  # "prime" | "rationals"
    p: int | None = MIN_PRIME

    def __post_init__(self):
        if self.kind == "prime":
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.p < MIN_PRIME:
                raise ValueError(f"prime field too small: p={self.p} < {MIN_PRIME}")
        elif self.kind == "rationals":
            if self.p is not None:
                object.__setattr__(self, "p", None)
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    # -- scalar arithmetic -------------------------------------------------

    @property
    def zero(self):
        return 0 if self.kind == "prime" else Fraction(0)

    @property
    def one(self):
        return 1 if self.kind == "prime" else Fraction(1)

    def of(self, value):
        """Coerce an int or Fraction into the field."""
        if self.kind == "prime":
            return int(value) % self.p
        return Fraction(value)

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "prime" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "prime" else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "prime" else a * b

    def neg(self, a):
        return (-a) % self.p if self.kind == "prime" else -a

    def inv(self, a):
        if self.kind == "prime":
            if a % self.p == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, -1, self.p)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def describe(self) -> str:
        return f"p={self.p}" if self.kind == "prime" else "Q"


RATIONALS = FieldSpec(kind="rationals", p=None)


# -- monomials ---------------------------------------------------------------


def mono_degree(m) -> int:
    return sum(m)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    """True if a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Exact quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def max_var_index(m) -> int:
    """Largest 0-based index of a variable dividing m; -1 for the unit."""
    for i in range(len(m) - 1, -1, -1):
        if m[i] > 0:
            return i
    return -1


@lru_cache(maxsize=None)
def _order_key(order: str, n: int):
    if order == "degrevlex":
        return lambda m: (sum(m), tuple(-e for e in reversed(m)))
    if order == "lex":
        return lambda m: m
    if order == "deglex":
        return lambda m: (sum(m), m)
    if order == "elim1":
        # block order: first variable (tag) first, degrevlex on the rest
        return lambda m: (m[0], sum(m[1:]), tuple(-e for e in reversed(m[1:])))
    raise ValueError(f"unknown order {order!r}")


def monomial_cmp(a, b, order: str) -> int:
    """-1, 0 or 1 comparing a against b under the named order."""
    if len(a) != len(b):
        raise RingMismatchError("monomials of different lengths")
    ka, kb = _order_key(order, len(a))(a), _order_key(order, len(b))(b)
    return (ka > kb) - (ka < kb)


@lru_cache(maxsize=None)
def monomials_desc(n: int, d: int, order: str):
    """All degree-d monomials in n variables, sorted descending."""
    if n == 0:
        return ((),) if d == 0 else ()
    monos = []
    for bars in combinations_with_replacement(range(n), d):
        m = [0] * n
        for i in bars:
            m[i] += 1
        monos.append(tuple(m))
    key = _order_key(order, n)
    monos.sort(key=key, reverse=True)
    return tuple(monos)


@lru_cache(maxsize=None)
def mono_index(n: int, d: int, order: str):
    """Monomial -> column index within monomials_desc(n, d, order)."""
    return {m: i for i, m in enumerate(monomials_desc(n, d, order))}


@lru_cache(maxsize=None)
def shift_map(n: int, d: int, order: str, k: int):
    """Column map of multiplication by x_k: degree d -> degree d+1."""
    idx = mono_index(n, d + 1, order)
    out = []
    for m in monomials_desc(n, d, order):
        mm = list(m)
        mm[k] += 1
        out.append(idx[tuple(mm)])
    return tuple(out)


# -- ring and polynomials ----------------------------------------------------


@dataclass(frozen=True)
class PolyRingCtx:
    """Graded polynomial ring descriptor: K[x_1..x_n] with a monomial order."""

    n: int
    field: FieldSpec
    order: str = "degrevlex"
    var_names: tuple = ()

    def __post_init__(self):
        if not self.var_names:
            object.__setattr__(self, "var_names", tuple(f"x{i + 1}" for i in range(self.n)))
        if len(self.var_names) != self.n:
            raise ValueError("var_names must match variable count")
        if len(set(self.var_names)) != self.n:
            raise ValueError("variable names must be distinct")
        if self.order not in ORDERS:
            raise ValueError(f"unknown order {self.order!r}")

    @property
    def sort_key(self):
        return _order_key(self.order, self.n)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return Polynomial(self, [((0,) * self.n, self.field.one)])

    def variable(self, k: int) -> "Polynomial":
        m = [0] * self.n
        m[k] = 1
        return Polynomial(self, [(tuple(m), self.field.one)])

    def monomial(self, m, coeff=None) -> "Polynomial":
        c = self.field.one if coeff is None else self.field.of(coeff)
        return Polynomial(self, [(tuple(m), c)])

    def from_terms(self, terms) -> "Polynomial":
        return Polynomial(self, [(tuple(m), self.field.of(c)) for m, c in terms])


def ring(n: int, field: FieldSpec | None = None, order: str = "degrevlex", names=None) -> PolyRingCtx:
    """Convenience constructor used throughout the tests and the CLI."""
    return PolyRingCtx(
        n=n,
        field=field if field is not None else FieldSpec(),
        order=order,
        var_names=tuple(names) if names else (),
    )


class Polynomial:
    """Immutable sparse polynomial over a fixed ring.

    `terms` is a tuple of (monomial, coefficient) with nonzero coefficients,
    no duplicate monomials, sorted descending under the ring order.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring_ctx: PolyRingCtx, terms):
        field = ring_ctx.field
        acc = {}
        for m, c in terms:
            if len(m) != ring_ctx.n:
                raise RingMismatchError("monomial length does not match ring")
            if any(e < 0 for e in m):
                raise ValueError("negative exponent")
            if any(e > MAX_EXPONENT for e in m):
                raise ValueError(f"exponent exceeds {MAX_EXPONENT}")
            c = field.of(c)
            if m in acc:
                c = field.add(acc[m], c)
            if c == 0:
                acc.pop(m, None)
            else:
                acc[m] = c
        key = ring_ctx.sort_key
        self.ring = ring_ctx
        self.terms = tuple((m, acc[m]) for m in sorted(acc, key=key, reverse=True))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def lm(self):
        """Leading monomial."""
        return self.terms[0][0]

    def lc(self):
        """Leading coefficient."""
        return self.terms[0][1]

    def degree(self) -> int:
        """Total degree (max over terms); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = mono_degree(self.terms[0][0])
        return all(mono_degree(m) == d for m, _ in self.terms)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        inv = self.ring.field.inv(self.lc())
        return self.scale(inv)

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        c = field.of(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, [(m, field.mul(a, c)) for m, a in self.terms])

    def shift(self, mono) -> "Polynomial":
        """Multiply by a single monomial."""
        return Polynomial(self.ring, [(mono_mul(m, mono), c) for m, c in self.terms])

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials from different rings")

    def __add__(self, other):
        self._check(other)
        return Polynomial(self.ring, list(self.terms) + list(other.terms))

    def __sub__(self, other):
        self._check(other)
        neg = self.ring.field.neg
        return Polynomial(self.ring, list(self.terms) + [(m, neg(c)) for m, c in other.terms])

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, [(m, neg(c)) for m, c in self.terms])

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        field = self.ring.field
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                c = field.mul(c1, c2)
                if m in acc:
                    c = field.add(acc[m], c)
                if c == 0:
                    acc.pop(m, None)
                else:
                    acc[m] = c
        return Polynomial(self.ring, acc.items())

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base_needed = e >> 1
            if base_needed:
                base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        return f"Polynomial({poly_str(self)!r})"


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def apply_linear_change(f: Polynomial, matrix) -> Polynomial:
    """Substitute x_k -> sum_t matrix[k][t] * x_t.

    The matrix must be invertible over the coefficient field, so the map is a
    degree-preserving ring automorphism on homogeneous inputs.
    """
    rng = f.ring
    field = rng.field
    if len(matrix) != rng.n or any(len(row) != rng.n for row in matrix):
        raise ValueError("matrix shape does not match ring")
    if not _invertible(matrix, field):
        raise ValueError("singular change-of-coordinates matrix")
    images = []
    for k in range(rng.n):
        row = [field.of(v) for v in matrix[k]]
        images.append(rng.from_terms(
            (tuple(1 if t == j else 0 for t in range(rng.n)), row[j])
            for j in range(rng.n) if row[j] != 0
        ))
    power_cache = {}

    def image_power(k, e):
        if e == 0:
            return rng.one()
        got = power_cache.get((k, e))
        if got is None:
            got = image_power(k, e - 1) * images[k]
            power_cache[(k, e)] = got
        return got

    out = rng.zero()
    for m, c in f.terms:
        term = rng.from_terms([((0,) * rng.n, c)])
        for k, e in enumerate(m):
            if e:
                term = term * image_power(k, e)
        out = out + term
    return out


def _invertible(matrix, field: FieldSpec) -> bool:
    n = len(matrix)
    rows = [[field.of(v) for v in row] for row in matrix]
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if rows[r][col] != 0), None)
        if piv is None:
            return False
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        for r in range(rank + 1, n):
            if rows[r][col] != 0:
                factor = field.mul(rows[r][col], inv)
                rows[r] = [field.sub(a, field.mul(factor, b)) for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return True


# -- printing ------------------------------------------------------------------


def _coeff_str(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def mono_str(m, names) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"

def poly_str(f: Polynomial) -> str:
    """Canonical rendering; re-parseable by the ideal-file grammar for integer coefficients."""
    if not f.terms:
        return "0"
    names = f.ring.var_names
    out = []
    for i, (m, c) in enumerate(f.terms):
        ms = mono_str(m, names)
        cs = _coeff_str(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        if ms == "1":
            body = cs
        elif cs == "1":
            body = ms
        else:
            body = f"{cs}*{ms}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)
