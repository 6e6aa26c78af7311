"""Independent oracles for cross-checking the engine.

Each oracle decides its question by a different route than the package:
membership by truncated-degree exact linear algebra, dimension of monomial
ideals by exhaustive independent-set search, intersection of monomial ideals
by pairwise lcms, and grevlex comparison straight from the definition.
"""

from fractions import Fraction
from itertools import combinations

from attprimes.polycore import Polynomial, mono_degree, mono_lcm


def monomials_of_degree(nvars, degree):
    """All exponent tuples of the given total degree."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree + 1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


def rank_of(rows):
    """Rank over the rationals by fraction-exact Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in rows if any(row)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def macaulay_contains(generators, f):
    """Membership of homogeneous f in the homogeneous ideal (generators).

    For homogeneous input, membership in degree e is decidable inside
    degree e: f lies in the ideal iff its coefficient vector is in the row
    span of all monomial multiples of the generators of that degree.
    """
    if f.is_zero:
        return True
    e = f.homogeneous_degree()
    assert e is not None, "oracle needs homogeneous input"
    nvars = f.ring.dimension
    basis = list(monomials_of_degree(nvars, e))
    index = {m: i for i, m in enumerate(basis)}

    def vec(poly):
        row = [Fraction(0)] * len(basis)
        for mono, coeff in poly.terms.items():
            row[index[mono]] = coeff
        return row

    rows = []
    for g in generators:
        dg = g.homogeneous_degree()
        assert dg is not None and dg > 0
        if dg > e:
            continue
        for mono in monomials_of_degree(nvars, e - dg):
            rows.append(vec(g.mul_term(mono, 1)))
    without = rank_of(rows)
    return rank_of(rows + [vec(f)]) == without


def monomial_ideal_dimension(exponent_tuples, nvars):
    """Largest variable subset meeting the support of no generator."""
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in exponent_tuples]
    if any(not s for s in supports):
        return -1  # a constant generator: unit ideal
    best = 0
    for size in range(nvars, 0, -1):
        for subset in combinations(range(nvars), size):
            chosen = set(subset)
            if all(not support <= chosen for support in supports):
                return size
    return best


def monomial_intersection(gens_a, gens_b):
    """Intersection of monomial ideals: pairwise lcms, minimalized."""
    lcms = {mono_lcm(a, b) for a in gens_a for b in gens_b}
    minimal = []
    for m in sorted(lcms):
        if not any(all(x <= y for x, y in zip(other, m)) for other in minimal):
            minimal = [o for o in minimal if not all(x <= y for x, y in zip(m, o))]
            minimal.append(m)
    return set(minimal)


def grevlex_reference(a, b):
    """Definition-based grevlex comparison: degree first, then the last
    nonzero coordinate of a - b decides (negative means a larger)."""
    da, db = mono_degree(a), mono_degree(b)
    if da != db:
        return -1 if da < db else 1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x - y < 0 else -1
    return 0


def random_homogeneous(rng, ring, degree, max_terms=3, coeff_bound=3):
    """Random nonzero homogeneous polynomial of the given degree."""
    monos = list(monomials_of_degree(ring.dimension, degree))
    while True:
        terms = {}
        for mono in rng.sample(monos, k=min(len(monos), rng.randint(1, max_terms))):
            c = rng.randint(-coeff_bound, coeff_bound)
            if c:
                terms[mono] = c
        if terms:
            return Polynomial.from_terms(ring, terms)


def random_ideal_generators(rng, ring, max_gens=3, max_degree=3):
    """Random homogeneous generator list (possibly with dependencies)."""
    return [
        random_homogeneous(rng, ring, rng.randint(1, max_degree))
        for _ in range(rng.randint(1, max_gens))
    ]
