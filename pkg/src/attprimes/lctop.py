"""Attached primes of top local cohomology, decided by m-primariness.

A module M over the ambient ring is presented by its minimal primes; the
top-degree attached-prime set of H^n_a(M) is computed as the maximal-
dimension primes p with a + p m-primary.  This is the Lichtenbaum-Hartshorne
criterion specialized to the complete ambient ring, and it is exact for the
homogeneous ideals this package works with.
"""

from __future__ import annotations

from dataclasses import dataclass

from .idealops import (
    Ideal,
    PrimeIdeal,
    dim_quotient,
    ideal_intersect,
    ideal_leq,
    ideal_sum,
    is_m_primary,
    maximal_ideal,
)
from .polycore import Ring, RingMismatchError

__all__ = [
    "AttachedSet",
    "ModulePresentation",
    "present_module",
    "att_top",
    "supp_contains",
    "reduce_to_dim1",
    "check_lemma25",
    "EmptyAttachedSetError",
    "UnsupportedConstructionError",
]


class EmptyAttachedSetError(ValueError):
    """The top local cohomology vanishes; no dimension-one reduction exists."""


class UnsupportedConstructionError(ValueError):
    """The requested construction needs machinery outside this toolkit
    (typically minimal primes of a sum involving non-linear primes)."""


@dataclass(frozen=True)
class AttachedSet:
    """Canonical subset of the maximal-dimension primes of a module.

    Indices are positions into ``ModulePresentation.assh_primes`` (the
    canonically ordered maximal-dimension list), sorted and deduplicated.
    """

    indices: tuple

    def __post_init__(self):
        indices = tuple(sorted(set(self.indices)))
        if any(not isinstance(i, int) or i < 0 for i in indices):
            raise ValueError(f"bad attached-set indices {self.indices!r}")
        object.__setattr__(self, "indices", indices)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __contains__(self, index):
        return index in self.indices

    @property
    def is_empty(self) -> bool:
        return not self.indices

    def intersection(self, other: "AttachedSet") -> "AttachedSet":
        return AttachedSet(tuple(set(self.indices) & set(other.indices)))

    def __repr__(self):
        return "{" + ", ".join(str(i) for i in self.indices) + "}"


class ModulePresentation:
    """Module presented by its minimal primes.

    Dimensions of the quotients, the module dimension n, and the canonically
    ordered maximal-dimension primes are computed at construction.  The
    support test and the attached-set criterion only ever consume these.
    """

    __slots__ = ("ring", "minimal_primes", "dims", "n", "_assh_minimal_indices")

    def __init__(self, ring: Ring, minimal_primes):
        minimal_primes = tuple(minimal_primes)
        if not minimal_primes:
            raise ValueError("a module presentation needs at least one minimal prime")
        for p in minimal_primes:
            if not isinstance(p, PrimeIdeal):
                raise TypeError(f"expected PrimeIdeal, got {type(p).__name__}")
            if p.ring != ring:
                raise RingMismatchError("minimal prime from a different ring")
            if p.ideal.is_unit:
                raise ValueError("minimal primes must be proper")
        for i, p in enumerate(minimal_primes):
            for j, q in enumerate(minimal_primes):
                if i != j and ideal_leq(p.ideal, q.ideal):
                    raise ValueError(f"comparable primes at positions {i} and {j}")
        dims = tuple(dim_quotient(p.ideal) for p in minimal_primes)
        n = max(dims)
        if n < 1:
            raise ValueError("module dimension must be positive, got 0")
        assh = [i for i, d in enumerate(dims) if d == n]
        assh.sort(key=lambda i: minimal_primes[i].ideal.canonical_generators())
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "minimal_primes", minimal_primes)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_assh_minimal_indices", tuple(assh))

    def __setattr__(self, name, value):
        raise AttributeError("ModulePresentation is immutable")

    @property
    def assh_primes(self):
        """Maximal-dimension primes in canonical (rendering) order."""
        return tuple(self.minimal_primes[i] for i in self._assh_minimal_indices)

    @property
    def assh_size(self) -> int:
        return len(self._assh_minimal_indices)

    def minimal_index(self, assh_position: int) -> int:
        """Position in the declared minimal-prime list of an assh member."""
        return self._assh_minimal_indices[assh_position]

    def attached(self, positions) -> AttachedSet:
        att = AttachedSet(tuple(positions))
        if att.indices and att.indices[-1] >= self.assh_size:
            raise ValueError(f"attached-set index {att.indices[-1]} out of range")
        return att

    def full_attached(self) -> AttachedSet:
        return AttachedSet(tuple(range(self.assh_size)))

    def attached_primes(self, att: AttachedSet):
        primes = self.assh_primes
        return tuple(primes[i] for i in att)

    def intersect_attached(self, att: AttachedSet) -> Ideal:
        """Intersection of the selected assh primes; zero ideal when empty."""
        result = None
        for p in self.attached_primes(att):
            result = p.ideal if result is None else ideal_intersect(result, p.ideal)
        return Ideal.zero(self.ring) if result is None else result


def present_module(ring: Ring, primes) -> ModulePresentation:
    """Validate and assemble a module presentation from minimal primes."""
    return ModulePresentation(ring, primes)


def att_top(a: Ideal, M: ModulePresentation) -> AttachedSet:
    """Attached primes of the top local cohomology of M along a.

    The unit ideal yields the empty set and the maximal ideal yields all of
    the maximal-dimension primes; in general a member p qualifies exactly
    when a + p is m-primary.
    """
    if a.ring != M.ring:
        raise RingMismatchError("ideal and module from different rings")
    if a.is_unit:
        return AttachedSet(())
    if a == maximal_ideal(M.ring):
        return M.full_attached()
    return AttachedSet(
        tuple(
            i
            for i, p in enumerate(M.assh_primes)
            if is_m_primary(ideal_sum(a, p.ideal))
        )
    )


def supp_contains(M: ModulePresentation, Q: Ideal) -> bool:
    """Q lies in the support of M, i.e. contains some minimal prime."""
    if Q.is_unit:
        raise ValueError("support membership is only defined for proper ideals")
    return any(ideal_leq(p.ideal, Q) for p in M.minimal_primes)


def reduce_to_dim1(a: Ideal, M: ModulePresentation, *, max_coeff: int = 4) -> Ideal:
    """Ideal b with the same attached set as a and dim(R/b) <= 1.

    When every maximal-dimension prime is attached, b is the maximal ideal;
    otherwise b is the intersection of dimension-one support primes produced
    by the realization search, and has dimension exactly 1.
    """
    T = att_top(a, M)
    if T.is_empty:
        raise EmptyAttachedSetError("top local cohomology vanishes; nothing to reduce")
    if T == M.full_attached():
        return maximal_ideal(M.ring)
    from .realize import VerificationFaultError, realize_subset  # layer above

    report = realize_subset(T, M, max_coeff=max_coeff)
    b = report.ideal
    if dim_quotient(b) > 1:
        raise VerificationFaultError("realization returned an ideal of dimension > 1")
    return b


def check_lemma25(T: AttachedSet, M: ModulePresentation) -> bool:
    """Chain-search hypothesis: the primes of T intersect outside the sum of
    the complementary primes.

    The complementary primes must carry linear certificates: their sum is
    then itself a linear prime, so it equals the only maximal-dimension
    prime over it and containment can be decided by reduction.  With an
    empty complement the sum is the zero ideal by convention and the
    hypothesis holds.
    """
    T = M.attached(T)
    if T.is_empty:
        raise ValueError("the hypothesis is stated for nonempty subsets")
    complement = [i for i in range(M.assh_size) if i not in T]
    if not complement:
        return True
    primes = M.assh_primes
    for i in complement:
        if not primes[i].is_linear:
            raise UnsupportedConstructionError(
                "sum over non-linear primes needs a minimal-prime computation, "
                "which is not supported"
            )
    sigma = None
    for i in complement:
        sigma = primes[i].ideal if sigma is None else ideal_sum(sigma, primes[i].ideal)
    inter = M.intersect_attached(T)
    return not ideal_leq(inter, sigma)
