"""Buchberger's algorithm, S-polynomials and normal forms.

This is the decision engine behind every ideal-theoretic question in the
package: membership, containment, dimension and m-primariness all reduce to
normal forms against a reduced Groebner basis.  Reduced bases are unique per
(ideal, order), which makes every downstream answer canonical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polycore import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    RingMismatchError,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

__all__ = ["ReducedGB", "normal_form", "s_polynomial", "buchberger"]


@dataclass(frozen=True)
class ReducedGB:
    """Reduced Groebner basis: monic elements, sorted by descending leading
    monomial, no leading term dividing any term of another element."""

    order: MonomialOrder
    elements: tuple

    @property
    def leading_monomials(self):
        return tuple(g.leading(self.order)[0] for g in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _check_basis(f: Polynomial, basis):
    for g in basis:
        if not isinstance(g, Polynomial) or g.ring != f.ring:
            raise RingMismatchError("basis and polynomial must share one ring")
        if g.is_zero:
            raise ValueError("zero polynomial in reduction basis")


def normal_form(f: Polynomial, basis, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Full remainder of f under division by basis.

    No term of the result is divisible by any basis leading term, and
    f - result lies in the ideal generated by basis.  Against a Groebner
    basis this is the canonical normal form.
    """
    basis = list(basis)
    _check_basis(f, basis)
    field = f.ring.field
    leads = [(g, *g.leading(order)) for g in basis]
    remainder = {}
    p = f
    while not p.is_zero:
        pm, pc = p.leading(order)
        for g, gm, gc in leads:
            if mono_divides(gm, pm):
                p = p - g.mul_term(mono_div(pm, gm), field.divide(pc, gc))
                break
        else:
            remainder[pm] = pc
            p = p - Polynomial.from_terms(p.ring, {pm: pc})
    return Polynomial.from_terms(f.ring, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """S-polynomial (lcm/lt(f))*f - (lcm/lt(g))*g; the leading terms cancel."""
    if f.is_zero or g.is_zero:
        raise ValueError("S-polynomial of a zero polynomial")
    if f.ring != g.ring:
        raise RingMismatchError("S-polynomial operands must share one ring")
    field = f.ring.field
    fm, fc = f.leading(order)
    gm, gc = g.leading(order)
    lcm = mono_lcm(fm, gm)
    return f.mul_term(mono_div(lcm, fm), field.invert(fc)) - g.mul_term(
        mono_div(lcm, gm), field.invert(gc)
    )


def buchberger(gens, order: MonomialOrder = GREVLEX, *, chain_criterion: bool = False) -> ReducedGB:
    """Reduced Groebner basis of the ideal generated by gens.

    Zero generators are discarded.  S-pairs are selected by the normal
    strategy (smallest lcm degree, ties by order on the lcm); the coprime
    leading-term criterion is always applied, Buchberger's chain criterion
    only when requested.  Output is deterministic and, by uniqueness of the
    reduced basis, independent of generator order.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return ReducedGB(order, ())
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators must share one ring")

    basis = [g.monic(order) for g in gens]
    lead = [g.leading(order)[0] for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    done = set()

    def pair_rank(p):
        lcm = mono_lcm(lead[p[0]], lead[p[1]])
        return (mono_degree(lcm), order.key(lcm), p)

    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.discard((i, j))
        done.add((i, j))
        lcm = mono_lcm(lead[i], lead[j])
        if lcm == mono_mul(lead[i], lead[j]):
            continue  # coprime leading terms: S reduces to zero
        if chain_criterion and any(
            k != i
            and k != j
            and mono_divides(lead[k], lcm)
            and (min(i, k), max(i, k)) in done
            and (min(j, k), max(j, k)) in done
            for k in range(len(basis))
        ):
            continue
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if h.is_zero:
            continue
        h = h.monic(order)
        basis.append(h)
        lead.append(h.leading(order)[0])
        new = len(basis) - 1
        pairs.update((k, new) for k in range(new))

    return _reduce_basis(basis, order)


def _reduce_basis(basis, order: MonomialOrder) -> ReducedGB:
    # Minimalize: drop elements whose leading monomial is divided by another's.
    keep = []
    for i, g in enumerate(basis):
        gm = g.leading(order)[0]
        redundant = False
        for j, h in enumerate(basis):
            if i == j:
                continue
            hm = h.leading(order)[0]
            if mono_divides(hm, gm) and (hm != gm or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)

    # Tail-reduce until stable; leading monomials are already pairwise
    # non-dividing, so only tails change and the fixpoint is the reduced basis.
    current = keep
    while True:
        reduced = []
        for i, g in enumerate(current):
            others = current[:i] + current[i + 1 :]
            reduced.append(normal_form(g, others, order).monic(order) if others else g.monic(order))
        if reduced == current:
            break
        current = reduced

    current.sort(key=lambda g: order.key(g.leading(order)[0]), reverse=True)
    return ReducedGB(order, tuple(current))
