"""Built-in golden corpus: four coordinate-plane primes in k[[X,Y,Z,W]].

The module R/(p1 p2 p3 p4) with p1=(X,Y), p2=(Z,W), p3=(Y,Z), p4=(X,W) has
dimension 2 and all four primes maximal-dimensional.  Thirteen named ideals
(four singles, six pairs, three triples) plus the maximal and unit ideals
exercise every attached-set value; the expected sets below are the published
ones and double as the self-test baseline.
"""

from __future__ import annotations

from dataclasses import dataclass

from .idealops import Ideal, PrimeIdeal, maximal_ideal
from .lctop import AttachedSet, ModulePresentation, present_module
from .polycore import Ring

__all__ = ["Example24", "example24", "PRIME_GENERATORS", "IDEAL_GENERATORS", "EXPECTED_ATT"]

PRIME_GENERATORS = {
    "p1": ("X", "Y"),
    "p2": ("Z", "W"),
    "p3": ("Y", "Z"),
    "p4": ("X", "W"),
}

IDEAL_GENERATORS = {
    "a1": ("Z", "W"),
    "a2": ("X", "Y"),
    "a3": ("X", "W"),
    "a4": ("Y", "Z"),
    "a12": ("Y^2+Y*Z", "Z^2+Y*Z", "X^2+X*W", "W^2+W*X"),
    "a34": ("Z^2+Z*W", "X^2+Y*X", "Y^2+Y*X", "W^2+W*Z"),
    "a13": ("Z^2+X*Z", "W^2+W*Y", "X^2+X*Z"),
    "a14": ("W^2+W*Y", "Z^2+Z*Y", "Y^2+Y*W"),
    "a23": ("X^2+X*Z", "Y^2+W*Y", "W^2+Z*W"),
    "a24": ("X^2+X*Z", "Y^2+W*Y", "Z^2+Z*W"),
    "a123": ("X", "W", "Y+Z"),
    "a234": ("X", "Y", "W+Z"),
    "a134": ("Z", "W", "Y+X"),
}

EXPECTED_ATT = {
    "a1": frozenset({"p1"}),
    "a2": frozenset({"p2"}),
    "a3": frozenset({"p3"}),
    "a4": frozenset({"p4"}),
    "a12": frozenset({"p1", "p2"}),
    "a34": frozenset({"p3", "p4"}),
    "a13": frozenset({"p1", "p3"}),
    "a14": frozenset({"p1", "p4"}),
    "a23": frozenset({"p2", "p3"}),
    "a24": frozenset({"p2", "p4"}),
    "a123": frozenset({"p1", "p2", "p3"}),
    "a234": frozenset({"p2", "p3", "p4"}),
    "a134": frozenset({"p1", "p3", "p4"}),
    "m": frozenset({"p1", "p2", "p3", "p4"}),
    "R": frozenset(),
}


@dataclass(frozen=True)
class Example24:
    ring: Ring
    primes: dict                  # name -> PrimeIdeal
    module: ModulePresentation
    ideals: dict                  # name -> Ideal, includes "m" and "R"
    expected_att: dict            # name -> frozenset of prime names
    _position_names: tuple        # assh position -> prime name

    def att_names(self, att: AttachedSet):
        """Prime names of an attached set, in canonical assh order."""
        return [self._position_names[i] for i in att]

    def assh_position(self, prime_name: str) -> int:
        return self._position_names.index(prime_name)

    def subset(self, prime_names) -> AttachedSet:
        return self.module.attached(tuple(self.assh_position(n) for n in prime_names))


def example24(ideal_generators: dict | None = None) -> Example24:
    """Assemble the corpus; generator overrides support corruption tests."""
    ring = Ring(("X", "Y", "Z", "W"))
    primes = {
        name: PrimeIdeal.linear(Ideal.parse(ring, *gens))
        for name, gens in PRIME_GENERATORS.items()
    }
    module = present_module(ring, [primes[n] for n in ("p1", "p2", "p3", "p4")])
    position_names = []
    for assh_prime in module.assh_primes:
        name = next(n for n, p in primes.items() if p.ideal == assh_prime.ideal)
        position_names.append(name)
    generators = dict(IDEAL_GENERATORS)
    if ideal_generators:
        generators.update(ideal_generators)
    ideals = {name: Ideal.parse(ring, *gens) for name, gens in generators.items()}
    ideals["m"] = maximal_ideal(ring)
    ideals["R"] = Ideal.unit(ring)
    return Example24(
        ring=ring,
        primes=primes,
        module=module,
        ideals=ideals,
        expected_att=dict(EXPECTED_ATT),
        _position_names=tuple(position_names),
    )
