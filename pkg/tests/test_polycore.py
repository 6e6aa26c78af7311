"""Polynomial arithmetic, monomial orders and the expression parser."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from attprimes.polycore import (
    GREVLEX,
    LEX,
    Field,
    ParseError,
    Polynomial,
    Ring,
    RingMismatchError,
    elimination_block,
    homogeneous_components,
    monomial_compare,
    parse_polynomial,
)

from oracles import grevlex_reference, monomials_of_degree


class TestRing:
    def test_rejects_duplicate_variables(self):
        with pytest.raises(ValueError):
            Ring(("X", "X"))

    def test_rejects_too_many_variables(self):
        with pytest.raises(ValueError):
            Ring(tuple(f"x{i}" for i in range(13)))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Ring(())

    def test_field_characteristic_must_be_prime(self):
        with pytest.raises(ValueError):
            Field(6)
        assert Field(7).characteristic == 7


class TestParser:
    def test_paper_generator(self, ring4):
        f = parse_polynomial("Y^2+Y*Z", ring4)
        assert f.terms == {(0, 2, 0, 0): Fraction(1), (0, 1, 1, 0): Fraction(1)}

    def test_zero_literal(self, ring4):
        assert parse_polynomial("0", ring4).is_zero

    def test_cancellation(self, ring4):
        assert parse_polynomial("X - X", ring4).is_zero

    def test_unknown_identifier_has_position(self, ring4):
        with pytest.raises(ParseError) as err:
            parse_polynomial("X + Q", ring4)
        assert err.value.position == 4

    def test_malformed_syntax(self, ring4):
        with pytest.raises(ParseError):
            parse_polynomial("X + * Y", ring4)
        with pytest.raises(ParseError):
            parse_polynomial("(X + Y", ring4)
        with pytest.raises(ParseError):
            parse_polynomial("X Y", ring4)  # juxtaposition needs '*'

    def test_rational_constant(self, ring4):
        f = parse_polynomial("1/2*X", ring4)
        assert f.terms == {(1, 0, 0, 0): Fraction(1, 2)}

    def test_not_representable_in_prime_field(self):
        ring = Ring(("X", "Y"), Field(2))
        with pytest.raises(ParseError) as err:
            parse_polynomial("X/2", ring)
        assert "not representable" in str(err.value)
        assert parse_polynomial("X/3", ring) == ring.poly("X")  # 3 invertible mod 2

    def test_prime_field_coefficients_reduce(self):
        ring = Ring(("X", "Y"), Field(5))
        assert parse_polynomial("7*X", ring) == ring.poly("2*X")
        assert parse_polynomial("5*X", ring).is_zero

    def test_parentheses_and_powers(self, ring4):
        assert parse_polynomial("(X+Y)^2", ring4) == ring4.poly("X^2+2*X*Y+Y^2")

    def test_unary_minus(self, ring4):
        assert parse_polynomial("-X+Y", ring4) == ring4.poly("Y") - ring4.poly("X")


class TestArithmetic:
    def test_sum(self, ring4):
        assert ring4.poly("X+Y") + ring4.poly("X-Y") == ring4.poly("2*X")

    def test_product(self, ring4):
        assert ring4.poly("X+Y") * ring4.poly("X-Y") == ring4.poly("X^2-Y^2")

    def test_times_zero(self, ring4):
        assert (ring4.poly("X^2+Y*Z") * ring4.zero).is_zero

    def test_scalar(self, ring4):
        assert ring4.poly("X").scale(Fraction(1, 3)) == ring4.poly("X/3")

    def test_ring_mismatch(self, ring4, ring2):
        with pytest.raises(RingMismatchError):
            ring4.poly("X") + ring2.poly("X")


class TestMonomialOrders:
    def test_lex_single_variables(self):
        # X > Y under lex with declaration order X > Y > Z > W
        assert monomial_compare((1, 0, 0, 0), (0, 1, 0, 0), LEX) > 0

    def test_grevlex_degree_two_tie(self):
        # ties on degree broken by the reverse reading: XW < YZ
        assert monomial_compare((1, 0, 0, 1), (0, 1, 1, 0), GREVLEX) < 0

    def test_equal(self):
        assert monomial_compare((2, 1, 0, 0), (2, 1, 0, 0), GREVLEX) == 0

    def test_grevlex_matches_definition_exhaustively(self):
        monos = [m for d in range(4) for m in monomials_of_degree(3, d)]
        for a in monos:
            for b in monos:
                assert monomial_compare(a, b, GREVLEX) == grevlex_reference(a, b)

    def test_elimination_block_dominates(self):
        order = elimination_block(1)
        # any monomial containing the first variable beats every one without it
        assert monomial_compare((1, 0, 0), (0, 5, 5), order) > 0
        assert monomial_compare((0, 1, 0), (0, 0, 3), order) < 0

    @pytest.mark.parametrize(
        "order", [GREVLEX, LEX, elimination_block(1), elimination_block(2)]
    )
    def test_multiplicative_with_one_minimal(self, order):
        monos = [m for d in range(4) for m in monomials_of_degree(3, d)]
        one = (0, 0, 0)
        for a in monos:
            if a != one:
                assert monomial_compare(one, a, order) < 0
            for b in monos:
                cmp = monomial_compare(a, b, order)
                for c in monos:
                    ac = tuple(x + y for x, y in zip(a, c))
                    bc = tuple(x + y for x, y in zip(b, c))
                    assert monomial_compare(ac, bc, order) == cmp


class TestHomogeneity:
    def test_paper_generator_is_quadratic(self, ring4):
        assert ring4.poly("Y^2+Y*Z").homogeneous_degree() == 2

    def test_mixed_degrees(self, ring4):
        assert ring4.poly("X+Y^2").homogeneous_degree() is None

    def test_zero_sentinel(self, ring4):
        assert ring4.zero.homogeneous_degree() == 0

    def test_components(self, ring4):
        f = ring4.poly("X+Y^2+3")
        assert [c.render() for c in homogeneous_components(f)] == ["3", "X", "Y^2"]


# Randomized strategies: small polynomials in three variables.
_RING3 = Ring(("X", "Y", "Z"))
_monomials = st.tuples(*(st.integers(0, 3) for _ in range(3)))
_polys = st.dictionaries(_monomials, st.integers(-9, 9), max_size=5).map(
    lambda terms: Polynomial.from_terms(_RING3, terms)
)


class TestRandomizedProperties:
    @given(f=_polys, g=_polys)
    def test_exactness(self, f, g):
        assert (f + g) - g == f

    @given(f=_polys)
    @settings(max_examples=200)
    def test_render_parse_roundtrip(self, f):
        assert parse_polynomial(f.render(), _RING3) == f

    @given(f=_polys, g=_polys, h=_polys)
    def test_distributivity(self, f, g, h):
        assert f * (g + h) == f * g + f * h
