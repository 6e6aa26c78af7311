"""Exact multivariate polynomials over power-series-style ambient rings.

The ambient ring k[[X1,...,Xd]] is modelled through its polynomial subring:
an ordered tuple of named variables over an exact coefficient field
(rationals by default, or a prime field GF(p)).  Because every ideal in this
package is homogeneous, polynomial-ring answers agree with the local ones.

Polynomials are immutable term maps keyed by exponent tuples; all arithmetic
is exact.  Monomials are plain tuples of non-negative integers, one entry per
ring variable, manipulated by the ``mono_*`` helpers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

MAX_VARIABLES = 12

__all__ = [
    "MAX_VARIABLES",
    "Field",
    "RATIONALS",
    "Ring",
    "Polynomial",
    "MonomialOrder",
    "GREVLEX",
    "LEX",
    "elimination_block",
    "monomial_compare",
    "mono_mul",
    "mono_div",
    "mono_divides",
    "mono_lcm",
    "mono_degree",
    "parse_polynomial",
    "homogeneous_degree",
    "homogeneous_components",
    "RingMismatchError",
    "ParseError",
]


class RingMismatchError(ValueError):
    """Operands belong to different rings (or orders of different arity)."""


class ParseError(ValueError):
    """Rejected polynomial text, carrying the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """Exact coefficient field: characteristic 0 (rationals) or a prime p.

    Rational coefficients are ``fractions.Fraction``; prime-field
    coefficients are plain ints kept reduced to the range [0, p).
    """

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")

    def coerce(self, value):
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} vanishes in GF({p})")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def add(self, a, b):
        p = self.characteristic
        return a + b if p == 0 else (a + b) % p

    def sub(self, a, b):
        p = self.characteristic
        return a - b if p == 0 else (a - b) % p

    def mul(self, a, b):
        p = self.characteristic
        return a * b if p == 0 else (a * b) % p

    def neg(self, a):
        p = self.characteristic
        return -a if p == 0 else (-a) % p

    def invert(self, a):
        p = self.characteristic
        if p == 0:
            if a == 0:
                raise ZeroDivisionError("division by zero")
            return Fraction(1) / a
        if a % p == 0:
            raise ZeroDivisionError(f"{a} is not invertible in GF({p})")
        return pow(a, -1, p)

    def divide(self, a, b):
        return self.mul(a, self.invert(b))


RATIONALS = Field(0)


# ---------------------------------------------------------------------------
# Monomials: exponent tuples.

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent-wise difference a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a) -> int:
    return sum(a)


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


_ORDER_KINDS = ("grevlex", "lex", "elim")


@dataclass(frozen=True)
class MonomialOrder:
    """Total multiplicative monomial order with 1 minimal.

    ``elim`` is the block order whose first ``block`` variables dominate:
    any monomial meeting the block ranks above every block-free monomial,
    so projecting a Groebner basis performs elimination.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in _ORDER_KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination block must contain at least one variable")

    def key(self, exponents):
        """Sort key: larger key means larger monomial."""
        if self.kind == "grevlex":
            return _grevlex_key(exponents)
        if self.kind == "lex":
            return tuple(exponents)
        head, tail = exponents[: self.block], exponents[self.block :]
        return (_grevlex_key(head), _grevlex_key(tail))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination_block(k: int) -> MonomialOrder:
    """Block order eliminating the first k variables."""
    return MonomialOrder("elim", k)


def monomial_compare(a, b, order: MonomialOrder) -> int:
    """Return negative, zero or positive as a <, =, > b under order."""
    if len(a) != len(b):
        raise RingMismatchError("monomials have different numbers of variables")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# Rings and polynomials.

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Ring:
    """Ambient ring: ordered distinct variable names over a Field.

    Declaration order is the canonical variable order; every monomial order
    refines it.  Immutable and safe to share across threads.
    """

    __slots__ = ("variables", "field", "_index")

    def __init__(self, variables, field: Field = RATIONALS):
        variables = tuple(variables)
        if not 1 <= len(variables) <= MAX_VARIABLES:
            raise ValueError(f"need between 1 and {MAX_VARIABLES} variables, got {len(variables)}")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        for name in variables:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(variables)})

    def __setattr__(self, name, value):
        raise AttributeError("Ring is immutable")

    @property
    def dimension(self) -> int:
        return len(self.variables)

    def variable_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in {self!r}") from None

    def constant(self, value) -> "Polynomial":
        return Polynomial.from_terms(self, {(0,) * self.dimension: value})

    @property
    def zero(self) -> "Polynomial":
        return self.constant(0)

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def variable(self, name: str) -> "Polynomial":
        exps = [0] * self.dimension
        exps[self.variable_index(name)] = 1
        return Polynomial.from_terms(self, {tuple(exps): 1})

    def monomial(self, exponents, coefficient=1) -> "Polynomial":
        exponents = tuple(exponents)
        if len(exponents) != self.dimension or any(e < 0 for e in exponents):
            raise ValueError(f"bad exponent tuple {exponents} for {self!r}")
        return Polynomial.from_terms(self, {exponents: coefficient})

    def linear_form(self, coefficients) -> "Polynomial":
        """Degree-1 form with the given coefficient per variable."""
        coefficients = tuple(coefficients)
        if len(coefficients) != self.dimension:
            raise ValueError("one coefficient per variable required")
        terms = {}
        for i, c in enumerate(coefficients):
            exps = [0] * self.dimension
            exps[i] = 1
            terms[tuple(exps)] = c
        return Polynomial.from_terms(self, terms)

    def poly(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.variables == other.variables
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        k = "QQ" if self.field.characteristic == 0 else f"GF({self.field.characteristic})"
        return f"{k}[[{', '.join(self.variables)}]]"


class Polynomial:
    """Immutable exact polynomial: exponent tuple -> nonzero coefficient.

    Terms are stored in descending grevlex order; the zero polynomial has an
    empty term map.  Do not mutate ``terms``.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def from_terms(cls, ring: Ring, mapping) -> "Polynomial":
        field = ring.field
        clean = {}
        for mono, coeff in mapping.items():
            c = field.coerce(coeff)
            if c != 0:
                clean[tuple(mono)] = c
        ordered = dict(sorted(clean.items(), key=lambda kv: _grevlex_key(kv[0]), reverse=True))
        return cls(ring, ordered)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Maximum term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def leading(self, order: MonomialOrder = GREVLEX):
        """(monomial, coefficient) of the leading term, or None if zero."""
        if not self.terms:
            return None
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def _require_same_ring(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"mixed rings {self.ring!r} and {other.ring!r}")

    def __add__(self, other):
        self._require_same_ring(other)
        field = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = field.add(out.get(m, field.zero), c)
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial.from_terms(self.ring, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, {m: field.neg(c) for m, c in self.terms.items()})

    def scale(self, scalar) -> "Polynomial":
        field = self.ring.field
        c = field.coerce(scalar)
        if c == 0:
            return self.ring.zero
        return Polynomial.from_terms(self.ring, {m: field.mul(v, c) for m, v in self.terms.items()})

    def mul_term(self, monomial, coefficient) -> "Polynomial":
        """Multiply by a single term; the fast path inside division loops."""
        field = self.ring.field
        c = field.coerce(coefficient)
        if c == 0 or not self.terms:
            return self.ring.zero
        return Polynomial.from_terms(
            self.ring, {mono_mul(m, monomial): field.mul(v, c) for m, v in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._require_same_ring(other)
        field = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = field.add(out.get(m, field.zero), field.mul(c1, c2))
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial.from_terms(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one
        for _ in range(exponent):
            result = result * self
        return result

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        lead = self.leading(order)
        if lead is None:
            return self
        _, c = lead
        if c == self.ring.field.one:
            return self
        return self.scale(self.ring.field.invert(c))

    def homogeneous_degree(self):
        """Common total degree of all terms, or None when mixed.

        The zero polynomial is homogeneous of every degree; 0 is returned as
        its sentinel degree.
        """
        degree = None
        for m in self.terms:
            d = mono_degree(m)
            if degree is None:
                degree = d
            elif degree != d:
                return None
        return 0 if degree is None else degree

    @property
    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree() is not None

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def render(self) -> str:
        """Canonical text form: descending grevlex terms, '*' between factors."""
        if not self.terms:
            return "0"
        variables = self.ring.variables
        char0 = self.ring.field.characteristic == 0
        pieces = []
        for mono, coeff in sorted(self.terms.items(), key=lambda kv: _grevlex_key(kv[0]), reverse=True):
            negative = char0 and coeff < 0
            mag = -coeff if negative else coeff
            factors = []
            for name, e in zip(variables, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("-" if negative else "+", body))
        sign, body = pieces[0]
        out = [body if sign == "+" else "-" + body]
        for sign, body in pieces[1:]:
            out.append(sign + body)
        return "".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"<{self.render()} in {self.ring!r}>"


def homogeneous_degree(f: Polynomial):
    return f.homogeneous_degree()


def homogeneous_components(f: Polynomial):
    """Split into homogeneous parts, ascending degree."""
    by_degree = {}
    for m, c in f.terms.items():
        by_degree.setdefault(mono_degree(m), {})[m] = c
    return [Polynomial.from_terms(f.ring, by_degree[d]) for d in sorted(by_degree)]


# ---------------------------------------------------------------------------
# Parser for the rendering grammar.
#
#   expr   := ['-'] term (('+'|'-') term)*
#   term   := factor (('*' factor) | ('/' INT))*
#   factor := atom ['^' INT]
#   atom   := INT | VARIABLE | '(' expr ')' | '-' atom
#
# Integer coefficients, caret powers, explicit '*'.  '/' takes an integer
# literal denominator, so rational constants such as 1/2 round-trip; in a
# prime field a denominator divisible by p is rejected at its position.

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()])"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_int(self, what: str) -> tuple[int, int]:
        kind, value, pos = self.peek()
        if kind != "int":
            raise ParseError(f"expected {what}", pos)
        self.advance()
        return int(value), pos

    def expr(self) -> Polynomial:
        kind, value, _ = self.peek()
        negate = kind == "op" and value == "-"
        if negate:
            self.advance()
        result = self.term()
        if negate:
            result = -result
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                result = result + rhs if value == "+" else result - rhs
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                result = result * self.factor()
            elif kind == "op" and value == "/":
                self.advance()
                denom, pos = self.expect_int("an integer denominator")
                try:
                    inverse = self.ring.field.invert(self.ring.field.coerce(denom))
                except ZeroDivisionError:
                    raise ParseError(
                        f"coefficient 1/{denom} is not representable in this field", pos
                    ) from None
                result = result.scale(inverse)
            else:
                return result

    def factor(self) -> Polynomial:
        base = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            exponent, _ = self.expect_int("a non-negative integer exponent")
            return base**exponent
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.advance()
        if kind == "int":
            return self.ring.constant(int(value))
        if kind == "name":
            if value not in self.ring._index:
                raise ParseError(f"unknown identifier {value!r}", pos)
            return self.ring.variable(value)
        if kind == "op" and value == "(":
            inner = self.expr()
            kind, value, pos = self.advance()
            if not (kind == "op" and value == ")"):
                raise ParseError("expected ')'", pos)
            return inner
        if kind == "op" and value == "-":
            return -self.atom()
        raise ParseError(f"unexpected {value!r}" if value else "unexpected end of input", pos)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse polynomial text to canonical form; total on the grammar."""
    parser = _Parser(text, ring)
    result = parser.expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected trailing {value!r}", pos)
    return result
