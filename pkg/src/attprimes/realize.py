"""Constructing ideals with a prescribed attached-prime set.

Any target subset T of the maximal-dimension primes is realized as the
attached set of the top local cohomology along some ideal: the full set by
the maximal ideal, the empty set by the unit ideal, and everything in
between by intersecting one dimension-one support prime Q_i over each
excluded prime q_i, where Q_i contains q_i but not the intersection of the
primes in T.  Q_i is found by a chain search that adds one linear form at a
time, dropping the dimension by exactly one per step while keeping an
avoidance witness.  Every construction is re-verified before it is returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groebner import normal_form
from .idealops import (
    Ideal,
    PrimeIdeal,
    dim_quotient,
    ideal_intersect,
    ideal_leq,
    linear_rank,
    maximal_ideal,
)
from .lctop import (
    AttachedSet,
    ModulePresentation,
    UnsupportedConstructionError,
    att_top,
    supp_contains,
)
from .polycore import Polynomial

__all__ = [
    "ConstructionFailedError",
    "VerificationFaultError",
    "QCertificate",
    "RealizationReport",
    "Dim1Search",
    "find_dim1_prime",
    "realize_subset",
    "combine_intersection",
    "enumerate_all",
    "DEFAULT_MAX_COEFF",
    "MAX_ENUMERATION_PRIMES",
]

DEFAULT_MAX_COEFF = 4
MAX_ENUMERATION_PRIMES = 12


class ConstructionFailedError(RuntimeError):
    """No candidate survived the bounded search; carries the bound used."""

    def __init__(self, message: str, bound: int):
        super().__init__(f"{message} (coefficient search bound {bound})")
        self.bound = bound


class VerificationFaultError(RuntimeError):
    """A construction failed its own re-verification; never returned silently."""


@dataclass(frozen=True)
class QCertificate:
    """Machine-checked evidence for one chosen dimension-one prime."""

    excluded_index: int          # assh position of the excluded prime q_i
    prime: PrimeIdeal            # the chosen Q_i
    rank: int                    # linear rank, certifying dim = d - rank
    dim: int                     # always 1
    witness: Polynomial          # lies in every prime of T, not in Q_i


@dataclass(frozen=True)
class RealizationReport:
    """Target subset, realizing ideal, construction path and certificates."""

    target: AttachedSet
    ideal: Ideal
    path: str                    # 'maximal' | 'unit' | 'dim1-complement' | 'general'
    certificates: tuple
    attached: AttachedSet        # re-verified, equals target


@dataclass(frozen=True)
class Dim1Search:
    """Result of the chain search for one excluded prime."""

    prime: PrimeIdeal
    witness: Polynomial
    added_forms: tuple


@dataclass
class _ChainState:
    """One step of the chain search: the current linear prime, its rank, and
    the avoidance ideal whose witness must survive every extension."""

    forms: list
    rank: int
    step: int


def _candidate_forms(ring, free_variables, max_coeff):
    """Deterministic linear-form stream over the free variables.

    Coefficient tuples are enumerated level by level (maximum magnitude
    1, 2, ...), within a level in product order with per-position value
    order 0, 1, -1, 2, -2, ...; only tuples whose first nonzero entry is
    positive are emitted, so each line of forms appears once.
    """
    for bound in range(1, max_coeff + 1):
        values = [0]
        for v in range(1, bound + 1):
            values.extend((v, -v))
        for tup in itertools.product(values, repeat=len(free_variables)):
            if max(abs(c) for c in tup) != bound:
                continue
            first = next(c for c in tup if c)
            if first < 0:
                continue
            coefficients = [0] * ring.dimension
            for var_index, c in zip(free_variables, tup):
                coefficients[var_index] = c
            yield ring.linear_form(coefficients)


def _avoidance_witness(avoid: Ideal, Q: Ideal):
    """First generator of the avoidance basis not reducing to zero mod Q."""
    basis = Q.groebner().elements
    for f in avoid.groebner().elements:
        if not normal_form(f, basis).is_zero:
            return f
    return None


def find_dim1_prime(
    q: PrimeIdeal,
    T: AttachedSet,
    M: ModulePresentation,
    *,
    max_coeff: int = DEFAULT_MAX_COEFF,
    _avoid: Ideal | None = None,
) -> Dim1Search:
    """Linear prime Q containing q, of dimension one, avoiding the primes of T.

    Implements the chain construction: starting from q, one linear form over
    the variables outside q's span is added per step, each step certified to
    keep the intersection of T's primes outside the current prime.  Support
    membership of Q is automatic from q <= Q.
    """
    if not q.is_linear:
        raise UnsupportedConstructionError(
            "chain search needs a linear-certified starting prime"
        )
    if T.is_empty:
        raise ValueError("the target subset must be nonempty")
    ring = M.ring
    avoid = M.intersect_attached(T) if _avoid is None else _avoid

    forms = list(q.ideal.generators)
    state = _ChainState(forms=forms, rank=len(forms), step=0)
    if _avoidance_witness(avoid, q.ideal) is None:
        raise ValueError("avoidance fails already at the starting prime")

    d = ring.dimension
    pivot_supports = {next(i for i, e in enumerate(f.leading()[0]) if e) for f in forms}
    free_variables = [i for i in range(d) if i not in pivot_supports]

    while state.rank < d - 1:
        accepted = None
        for form in _candidate_forms(ring, free_variables, max_coeff):
            extended = Ideal(ring, state.forms + [form])
            if linear_rank(extended) == state.rank:
                continue  # in the span of previous choices
            if _avoidance_witness(avoid, extended) is None:
                continue
            accepted = form
            break
        if accepted is None:
            raise ConstructionFailedError(
                f"no admissible linear form over {q.ideal!r} at chain step {state.step}",
                max_coeff,
            )
        state.forms.append(accepted)
        state.rank += 1
        state.step += 1

    Q = PrimeIdeal.linear(Ideal(ring, state.forms))
    witness = _avoidance_witness(avoid, Q.ideal)
    if (
        witness is None
        or dim_quotient(Q.ideal) != 1
        or not ideal_leq(q.ideal, Q.ideal)
        or not supp_contains(M, Q.ideal)
    ):
        raise VerificationFaultError(f"chain search produced an invalid prime {Q!r}")
    added = tuple(state.forms[len(q.ideal.generators) :])
    return Dim1Search(prime=Q, witness=witness, added_forms=added)


def _checked_certificate(index, Q: PrimeIdeal, witness, avoid, M) -> QCertificate:
    q = M.assh_primes[index]
    rank = linear_rank(Q.ideal)
    dim = dim_quotient(Q.ideal)
    ok = (
        dim == 1
        and ideal_leq(q.ideal, Q.ideal)
        and supp_contains(M, Q.ideal)
        and not normal_form(witness, Q.ideal.groebner().elements).is_zero
        and normal_form(witness, avoid.groebner().elements).is_zero
    )
    if not ok:
        raise VerificationFaultError(
            f"certificate check failed for excluded prime at position {index}"
        )
    return QCertificate(excluded_index=index, prime=Q, rank=rank, dim=dim, witness=witness)


def realize_subset(
    T, M: ModulePresentation, *, max_coeff: int = DEFAULT_MAX_COEFF
) -> RealizationReport:
    """Ideal whose top local cohomology has attached set exactly T.

    The full subset yields the maximal ideal and the empty subset the unit
    ideal.  For dimension-one modules the complement intersection suffices;
    otherwise one dimension-one prime is constructed per excluded prime and
    their intersection is taken.  The attached set of the result is
    re-computed and any mismatch raises instead of returning bad output.
    """
    T = M.attached(T)

    if T == M.full_attached():
        ideal = maximal_ideal(M.ring)
        return _verified_report(T, ideal, "maximal", (), M)
    if T.is_empty:
        return _verified_report(T, Ideal.unit(M.ring), "unit", (), M)

    excluded = [i for i in range(M.assh_size) if i not in T]
    avoid = M.intersect_attached(T)

    if M.n == 1:
        # Dimension-one module: the excluded primes already have dimension
        # one, so they serve as their own support primes.
        certificates = []
        ideal = None
        for i in excluded:
            q = M.assh_primes[i]
            witness = _avoidance_witness(avoid, q.ideal)
            if witness is None:
                raise VerificationFaultError(
                    f"incomparability violated at excluded prime {i}"
                )
            certificates.append(_checked_certificate(i, q, witness, avoid, M))
            ideal = q.ideal if ideal is None else ideal_intersect(ideal, q.ideal)
        return _verified_report(T, ideal, "dim1-complement", tuple(certificates), M)

    certificates = []
    ideal = None
    for i in excluded:
        search = find_dim1_prime(
            M.assh_primes[i], T, M, max_coeff=max_coeff, _avoid=avoid
        )
        certificates.append(_checked_certificate(i, search.prime, search.witness, avoid, M))
        ideal = (
            search.prime.ideal
            if ideal is None
            else ideal_intersect(ideal, search.prime.ideal)
        )
    return _verified_report(T, ideal, "general", tuple(certificates), M)


def _verified_report(T, ideal, path, certificates, M) -> RealizationReport:
    attached = att_top(ideal, M)
    if attached != T:
        raise VerificationFaultError(
            f"constructed ideal {ideal!r} has attached set {attached!r}, wanted {T!r}"
        )
    return RealizationReport(
        target=T, ideal=ideal, path=path, certificates=certificates, attached=attached
    )


def combine_intersection(
    a1: Ideal, a2: Ideal, M: ModulePresentation, *, max_coeff: int = DEFAULT_MAX_COEFF
) -> Ideal:
    """Ideal whose attached set is the intersection of those of a1 and a2.

    Routed through the realization of the intersected attached sets; the
    literal intersection a1 n a2 satisfies the same attached-set equation
    and is evaluated as an independent cross-check.
    """
    T = att_top(a1, M).intersection(att_top(a2, M))
    report = realize_subset(T, M, max_coeff=max_coeff)
    direct = att_top(ideal_intersect(a1, a2), M)
    if direct != T:
        raise VerificationFaultError(
            f"attached set of the literal intersection is {direct!r}, expected {T!r}"
        )
    return report.ideal


def enumerate_all(
    M: ModulePresentation, *, max_coeff: int = DEFAULT_MAX_COEFF
) -> dict:
    """Realize every subset of the maximal-dimension primes.

    Returns subset -> RealizationReport in mask order, after verifying that
    the verified attached sets are pairwise distinct (their number is then
    exactly 2^k for k maximal-dimension primes).
    """
    k = M.assh_size
    if k > MAX_ENUMERATION_PRIMES:
        raise ValueError(
            f"enumeration is limited to {MAX_ENUMERATION_PRIMES} maximal-dimension primes"
        )
    reports = {}
    for mask in range(1 << k):
        T = M.attached(tuple(i for i in range(k) if mask >> i & 1))
        try:
            reports[T] = realize_subset(T, M, max_coeff=max_coeff)
        except ConstructionFailedError as exc:
            raise ConstructionFailedError(f"subset {T!r}: {exc}", exc.bound) from exc
        except UnsupportedConstructionError as exc:
            raise UnsupportedConstructionError(f"subset {T!r}: {exc}") from exc
    distinct = {report.attached.indices for report in reports.values()}
    if len(distinct) != 1 << k:
        raise VerificationFaultError(
            f"expected {1 << k} distinct attached sets, found {len(distinct)}"
        )
    return reports
