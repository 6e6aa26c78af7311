"""Ideal-level algebra: sums, intersections, membership, dimension.

Only homogeneous ideals are accepted (the unit ideal aside): for those the
graded polynomial-ring answers to membership, Krull dimension and
m-primariness coincide with the local answers in k[[X1..Xd]], so no local
standard bases are needed.  Non-homogeneous generators are rejected at
construction instead of silently computing the wrong locus.
"""

from __future__ import annotations

from itertools import combinations

from .groebner import ReducedGB, buchberger, normal_form
from .polycore import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    Ring,
    RingMismatchError,
    elimination_block,
    homogeneous_components,
    mono_degree,
)

__all__ = [
    "Ideal",
    "PrimeIdeal",
    "NonHomogeneousError",
    "NotLinearPrimeError",
    "maximal_ideal",
    "ideal_sum",
    "ideal_intersect",
    "contains",
    "ideal_leq",
    "ideal_eq",
    "dim_quotient",
    "is_m_primary",
    "linear_rank",
    "is_linear_prime",
    "linear_basis",
]


class NonHomogeneousError(ValueError):
    """A generator mixes total degrees; only homogeneous ideals are supported."""


class NotLinearPrimeError(ValueError):
    """Linear primality certificate requested for a non-linear ideal."""


class Ideal:
    """Homogeneous ideal given by generators, or the unit ideal.

    Generators are normalized at construction: zeros dropped, duplicates
    removed, and any nonzero constant collapses the ideal to the unit ideal
    with sole generator 1.  Reduced Groebner bases are cached per order;
    the cache is written at most once per key and all queries are pure, so
    concurrent readers may at worst duplicate a computation.
    """

    __slots__ = ("ring", "generators", "is_unit", "_gb")

    def __init__(self, ring: Ring, generators=()):
        gens = []
        seen = set()
        is_unit = False
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError(f"generators must be Polynomial, got {type(g).__name__}")
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            if g.is_zero:
                continue
            degree = g.homogeneous_degree()
            if degree is None:
                raise NonHomogeneousError(f"non-homogeneous generator {g}")
            if degree == 0:
                is_unit = True
                break
            if g not in seen:
                seen.add(g)
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "is_unit", is_unit)
        object.__setattr__(self, "generators", (ring.one,) if is_unit else tuple(gens))
        object.__setattr__(self, "_gb", {})

    def __setattr__(self, name, value):
        raise AttributeError("Ideal is immutable")

    @classmethod
    def parse(cls, ring: Ring, *texts: str) -> "Ideal":
        return cls(ring, [ring.poly(t) for t in texts])

    @classmethod
    def unit(cls, ring: Ring) -> "Ideal":
        return cls(ring, [ring.one])

    @classmethod
    def zero(cls, ring: Ring) -> "Ideal":
        return cls(ring, [])

    @property
    def is_zero(self) -> bool:
        return not self.is_unit and not self.generators

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def groebner(self, order: MonomialOrder = GREVLEX) -> ReducedGB:
        gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self.generators, order)
            self._gb[order] = gb  # atomic; racing writers store the same value
        return gb

    def canonical_generators(self, order: MonomialOrder = GREVLEX):
        """Reduced-Groebner rendering, the canonical presentation."""
        if self.is_zero:
            return ("0",)
        return tuple(g.render() for g in self.groebner(order).elements)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.groebner().elements == other.groebner().elements

    __hash__ = None

    def __repr__(self):
        return f"({', '.join(self.canonical_generators())})"


def maximal_ideal(ring: Ring) -> Ideal:
    """The maximal ideal m generated by all variables."""
    return Ideal(ring, [ring.variable(v) for v in ring.variables])


def _require_same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise RingMismatchError("ideals from different rings")


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    """I + J: generator union (deduplicated); unit if either side is."""
    _require_same_ring(I, J)
    if I.is_unit or J.is_unit:
        return Ideal.unit(I.ring)
    return Ideal(I.ring, I.generators + J.generators)


def _fresh_variable(ring: Ring) -> str:
    name = "t"
    k = 0
    while name in ring.variables:
        name = f"t{k}"
        k += 1
    return name


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I n J via one auxiliary variable: eliminate t from t*I + (1-t)*J.

    The auxiliary variable heads an elimination block and never escapes:
    basis elements free of t are projected back, then split into homogeneous
    components (the intersection of homogeneous ideals is homogeneous, so
    each component stays inside it).
    """
    _require_same_ring(I, J)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    if I.is_zero or J.is_zero:
        return Ideal.zero(I.ring)

    ring = I.ring
    aux = _fresh_variable(ring)
    ext = Ring((aux,) + ring.variables, ring.field)

    def lift(f: Polynomial, extra: int) -> Polynomial:
        return Polynomial.from_terms(ext, {(extra,) + m: c for m, c in f.terms.items()})

    t = ext.variable(aux)
    one_minus_t = ext.one - t
    gens = [lift(f, 1) for f in I.generators]
    gens += [one_minus_t * lift(g, 0) for g in J.generators]
    gb = buchberger(gens, elimination_block(1))

    collected = []
    for g in gb.elements:
        if any(m[0] for m in g.terms):
            continue
        projected = Polynomial.from_terms(ring, {m[1:]: c for m, c in g.terms.items()})
        collected.extend(homogeneous_components(projected))
    return Ideal(ring, collected)


def contains(I: Ideal, f: Polynomial) -> bool:
    """Membership f in I, decided by normal form against the reduced basis."""
    if f.ring != I.ring:
        raise RingMismatchError("polynomial from a different ring")
    return normal_form(f, I.groebner().elements).is_zero


def ideal_leq(I: Ideal, J: Ideal) -> bool:
    """Containment I <= J: every generator of I reduces to zero modulo J."""
    _require_same_ring(I, J)
    return all(contains(J, g) for g in I.generators)


def ideal_eq(I: Ideal, J: Ideal) -> bool:
    return I == J


def dim_quotient(I: Ideal) -> int:
    """Krull dimension of R/I; -1 for the unit ideal, d for the zero ideal.

    Computed as the largest variable subset supporting no leading-term
    monomial of the grevlex basis (exhaustive over <= 2^d subsets).
    """
    if I.is_unit:
        return -1
    d = I.ring.dimension
    supports = {
        frozenset(i for i, e in enumerate(m) if e) for m in I.groebner().leading_monomials
    }
    for size in range(d, 0, -1):
        for subset in combinations(range(d), size):
            chosen = set(subset)
            if all(not support <= chosen for support in supports):
                return size
    return 0


def is_m_primary(I: Ideal) -> bool:
    """Proper with zero-dimensional quotient, i.e. radical equal to m."""
    return I.is_proper and dim_quotient(I) == 0


# ---------------------------------------------------------------------------
# Linear ideals: degree-1 generators, echelon bases, certified primality.


def _echelon(rows, field):
    """Reduced row echelon form over the coefficient field; zero rows dropped."""
    rows = [list(r) for r in rows]
    width = len(rows[0]) if rows else 0
    pivots = []
    rank = 0
    for col in range(width):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.invert(rows[rank][col])
        rows[rank] = [field.mul(x, inv) for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def _linear_rows(I: Ideal):
    """Coefficient vectors of the generators, or None if any has degree != 1."""
    d = I.ring.dimension
    rows = []
    for g in I.generators:
        if g.homogeneous_degree() != 1:
            return None
        row = [I.ring.field.zero] * d
        for m, c in g.terms.items():
            row[next(i for i, e in enumerate(m) if e)] = c
        rows.append(row)
    return rows


def linear_rank(I: Ideal) -> int:
    """Rank of the span of the degree-1 generators (others ignored)."""
    d = I.ring.dimension
    rows = []
    for g in I.generators:
        if g.homogeneous_degree() != 1:
            continue
        row = [I.ring.field.zero] * d
        for m, c in g.terms.items():
            row[next(i for i, e in enumerate(m) if e)] = c
        rows.append(row)
    if not rows:
        return 0
    echelon, _ = _echelon(rows, I.ring.field)
    return len(echelon)


def is_linear_prime(I: Ideal) -> bool:
    """All generators degree 1: then R/I is a power-series ring, hence I prime."""
    return not I.is_unit and _linear_rows(I) is not None


def linear_basis(I: Ideal):
    """Echelon-reduced linear generators (canonical, linearly independent)."""
    rows = _linear_rows(I)
    if rows is None:
        raise NotLinearPrimeError(f"ideal {I!r} has a generator of degree != 1")
    if not rows:
        return ()
    echelon, _ = _echelon(rows, I.ring.field)
    return tuple(I.ring.linear_form(r) for r in echelon)


class PrimeIdeal:
    """An ideal together with a primality certificate.

    ``linear`` certificates are machine-verified (independent degree-1
    generators; the quotient is again a power-series ring, so the ideal is
    prime) and the generator list is canonicalized to echelon form.
    ``asserted`` certificates record a user declaration and are trusted.
    """

    __slots__ = ("ideal", "certificate")

    def __init__(self, ideal: Ideal, certificate: str):
        if certificate not in ("linear", "asserted"):
            raise ValueError(f"unknown certificate {certificate!r}")
        if certificate == "linear":
            ideal = Ideal(ideal.ring, linear_basis(ideal))
        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(self, "certificate", certificate)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeIdeal is immutable")

    @classmethod
    def linear(cls, ideal: Ideal) -> "PrimeIdeal":
        return cls(ideal, "linear")

    @classmethod
    def asserted(cls, ideal: Ideal) -> "PrimeIdeal":
        return cls(ideal, "asserted")

    @property
    def ring(self) -> Ring:
        return self.ideal.ring

    @property
    def is_linear(self) -> bool:
        return self.certificate == "linear"

    def dim_quotient(self) -> int:
        return dim_quotient(self.ideal)

    def __eq__(self, other):
        if not isinstance(other, PrimeIdeal):
            return NotImplemented
        return self.ideal == other.ideal

    __hash__ = None

    def __repr__(self):
        return f"PrimeIdeal{self.ideal!r}"
