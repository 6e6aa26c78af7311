"""Normal forms, S-polynomials and Buchberger's algorithm."""

import random

import pytest

from attprimes.groebner import buchberger, normal_form, s_polynomial
from attprimes.polycore import GREVLEX, Ring, RingMismatchError

from oracles import (
    macaulay_contains,
    monomials_of_degree,
    random_homogeneous,
    random_ideal_generators,
)


@pytest.fixture(scope="module")
def ring_xw():
    return Ring(("X", "W"))


class TestNormalForm:
    def test_both_terms_divisible(self, ring4):
        assert normal_form(ring4.poly("X^2+X*W"), [ring4.poly("X")]).is_zero

    def test_no_reduction_applies(self, ring4):
        f = ring4.poly("Z^2")
        assert normal_form(f, [ring4.poly("X"), ring4.poly("Y")]) == f

    def test_membership_after_basis_completion(self, ring_xw):
        gb = buchberger([ring_xw.poly("X^2+X*W"), ring_xw.poly("W^2+W*X")])
        assert normal_form(ring_xw.poly("X*W^3-X^3*W"), gb.elements).is_zero

    def test_rejects_zero_basis_element(self, ring4):
        with pytest.raises(ValueError):
            normal_form(ring4.poly("X"), [ring4.zero])

    def test_rejects_mixed_rings(self, ring4, ring2):
        with pytest.raises(RingMismatchError):
            normal_form(ring4.poly("X"), [ring2.poly("X")])

    def test_idempotent(self, ring4):
        basis = [ring4.poly("X^2+Y*Z"), ring4.poly("Y^2-Z*W")]
        f = ring4.poly("X^3+X*Y^2+Z^3")
        once = normal_form(f, basis)
        assert normal_form(once, basis) == once


class TestSPolynomial:
    def test_coprime_leads_cancel_completely(self, ring2):
        assert s_polynomial(ring2.poly("X"), ring2.poly("Y")).is_zero

    def test_self_pair(self, ring4):
        f = ring4.poly("X^2+Y*Z")
        assert s_polynomial(f, f).is_zero

    def test_adjacent_quadratics(self, ring_xw):
        # Under grevlex(X>W) the leading monomials are X^2 and X*W with
        # lcm X^2*W, and W*f - X*g cancels identically.
        f, g = ring_xw.poly("X^2+X*W"), ring_xw.poly("W^2+W*X")
        assert s_polynomial(f, g) == ring_xw.poly("W") * f - ring_xw.poly("X") * g
        assert s_polynomial(f, g).is_zero

    def test_leading_terms_cancel(self, ring4):
        f, g = ring4.poly("3*X^2*Y+Z^3"), ring4.poly("2*X*Y^2+W^3")
        s = s_polynomial(f, g)
        lcm = (2, 2, 0, 0)
        assert all(m != lcm for m in s.terms)

    def test_zero_input_rejected(self, ring4):
        with pytest.raises(ValueError):
            s_polynomial(ring4.zero, ring4.poly("X"))


class TestBuchberger:
    def test_linear_generators_row_reduce(self, ring2):
        gb = buchberger([ring2.poly("X+Y"), ring2.poly("X-Y")])
        assert [g.render() for g in gb.elements] == ["X", "Y"]

    def test_single_monomial(self, ring4):
        gb = buchberger([ring4.poly("X*Y")])
        assert [g.render() for g in gb.elements] == ["X*Y"]

    def test_corpus_pair_plus_line_prime(self, ring4):
        # a12 + p3: no pure power of W enters the leading-term ideal, so the
        # W-axis survives and the quotient stays one-dimensional.
        gb = buchberger([ring4.poly(t) for t in ("Y", "Z", "X^2+X*W", "W^2+W*X")])
        assert [g.render() for g in gb.elements] == ["X^2-W^2", "X*W+W^2", "Y", "Z"]
        supports = [{i for i, e in enumerate(m) if e} for m in gb.leading_monomials]
        assert {3} not in supports

    def test_empty_and_zero_generators(self, ring4):
        assert buchberger([]).elements == ()
        assert buchberger([ring4.zero]).elements == ()

    def test_mixed_rings_rejected(self, ring4, ring2):
        with pytest.raises(RingMismatchError):
            buchberger([ring4.poly("X"), ring2.poly("X")])

    def test_generators_reduce_to_zero(self, ring4):
        gens = [ring4.poly(t) for t in ("Y^2+Y*Z", "Z^2+Y*Z", "X^2+X*W", "W^2+W*X")]
        gb = buchberger(gens)
        for g in gens:
            assert normal_form(g, gb.elements).is_zero

    def test_chain_criterion_agrees(self, ring4):
        gens = [ring4.poly(t) for t in ("X^2+Y*Z", "Y^2+Z*W", "Z^2+X*W")]
        assert buchberger(gens).elements == buchberger(gens, chain_criterion=True).elements

    def test_permutation_invariance(self, ring4):
        rng = random.Random(7)
        gens = [ring4.poly(t) for t in ("Z^2+X*Z", "W^2+W*Y", "X^2+X*Z")]
        reference = buchberger(gens).elements
        for _ in range(6):
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert buchberger(shuffled).elements == reference

    def test_basis_is_reduced(self, ring4):
        gb = buchberger([ring4.poly(t) for t in ("X^2+X*W", "W^2+W*X", "Y*Z")])
        for i, g in enumerate(gb.elements):
            others = [h for j, h in enumerate(gb.elements) if j != i]
            assert normal_form(g, others) == g  # no term reducible by the rest
            assert g.leading()[1] == 1  # monic


class TestMembershipOracle:
    def test_against_macaulay_matrix(self):
        rng = random.Random(1203)
        ring = Ring(("X", "Y", "Z"))
        for _ in range(25):
            gens = random_ideal_generators(rng, ring)
            gb = buchberger(gens)
            degree = max(g.homogeneous_degree() for g in gens) + 1
            inside = ring.zero
            for g in gens:
                mono = rng.choice(list(monomials_of_degree(3, degree - g.homogeneous_degree())))
                inside = inside + g.mul_term(mono, rng.randint(1, 2))
            for f in (inside, random_homogeneous(rng, ring, 2)):
                assert normal_form(f, gb.elements).is_zero == macaulay_contains(gens, f)
