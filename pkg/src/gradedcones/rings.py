"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a dictionary mapping exponent tuples to Fraction
coefficients; zero coefficients are never stored, so equality is dictionary
equality and the zero polynomial has an empty term dict.  No floating point
appears anywhere: coefficients are fractions.Fraction and exponents are
Python ints of arbitrary size.

Rings are lightweight value objects holding the variable names.  Two rings
with the same names compare equal, which lets results move freely between
independently constructed rings.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]

_IDENT_OK = str.isidentifier


def exp_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def exp_divides(a: Exponent, b: Exponent) -> bool:
    """True if the monomial with exponent a divides the one with exponent b."""
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def exp_total(a: Exponent) -> int:
    return sum(a)


def _exact(c) -> Fraction:
    """Coerce to Fraction, refusing floats: this library is exact only."""
    if isinstance(c, float):
        raise TypeError("floating point values are not accepted; pass a Fraction")
    return Fraction(c)


class PolyRing:
    """Polynomial ring Q[names].  Immutable; equality is by variable names."""

    __slots__ = ("names", "index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for n in names:
            if not _IDENT_OK(n):
                raise ValueError(f"invalid variable name {n!r}")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return "PolyRing(%s)" % ", ".join(self.names)

    # -- element constructors ------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = _exact(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def monomial(self, exponent: Sequence[int], coeff=1) -> "Polynomial":
        exponent = tuple(int(x) for x in exponent)
        if len(exponent) != self.nvars or any(x < 0 for x in exponent):
            raise ValueError(f"bad exponent {exponent} for {self!r}")
        c = _exact(coeff)
        if c == 0:
            return self.zero()
        return Polynomial(self, {exponent: c})

    def from_terms(self, terms: Mapping[Exponent, Fraction]) -> "Polynomial":
        out: dict[Exponent, Fraction] = {}
        for e, c in terms.items():
            c = _exact(c)
            if c != 0:
                out[tuple(e)] = c
        return Polynomial(self, out)

    # -- derived rings -------------------------------------------------------

    def extend(self, extra: Iterable[str]) -> "PolyRing":
        """Ring with additional variables appended after the current ones."""
        return PolyRing(self.names + tuple(extra))

    def subring(self, keep: Sequence[int]) -> "PolyRing":
        """Ring on the kept variable positions, in their current order."""
        return PolyRing(tuple(self.names[i] for i in keep))

    def fresh_name(self, stem: str) -> str:
        """A variable name based on stem that does not collide with names."""
        if stem not in self.index:
            return stem
        k = 0
        while f"{stem}{k}" in self.index:
            k += 1
        return f"{stem}{k}"

    def parse(self, text: str) -> "Polynomial":
        from .session import parse_polynomial

        return parse_polynomial(self, text)


class Polynomial:
    """Element of a PolyRing.  Treat as immutable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict[Exponent, Fraction]):
        self.ring = ring
        self.terms = terms

    # -- basic structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(exp_total(e) == 0 for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def num_terms(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        """Maximal standard degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(exp_total(e) for e in self.terms)

    def degree_component(self, d: int) -> "Polynomial":
        """The standard-degree-d part."""
        return Polynomial(
            self.ring, {e: c for e, c in self.terms.items() if exp_total(e) == d}
        )

    def support_variables(self) -> frozenset[int]:
        out = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    out.add(i)
        return frozenset(out)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("mixed rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return self.ring.zero()
            return Polynomial(self.ring, {e: k * c for e, k in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exp_add(e1, e2)
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- evaluation and substitution ------------------------------------------

    def evaluate(self, values: Sequence) -> Fraction:
        if len(values) != self.ring.nvars:
            raise ValueError("wrong number of values")
        vals = [_exact(v) for v in values]
        acc = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t *= v**k
            acc += t
        return acc

    def substitute(self, mapping: Mapping[int, "Polynomial"]) -> "Polynomial":
        """Replace variable i by mapping[i]; unmapped variables stay put."""
        acc = self.ring.zero()
        for e, c in self.terms.items():
            term = self.ring.constant(c)
            plain = [0] * self.ring.nvars
            for i, k in enumerate(e):
                if not k:
                    continue
                if i in mapping:
                    term = term * mapping[i] ** k
                else:
                    plain[i] = k
            acc = acc + term * self.ring.monomial(tuple(plain))
        return acc

    def partial(self, i: int) -> "Polynomial":
        """Formal partial derivative with respect to variable i."""
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] = k - 1
                ne = tuple(ne)
                s = out.get(ne, Fraction(0)) + c * k
                if s:
                    out[ne] = s
                else:
                    out.pop(ne, None)
        return Polynomial(self.ring, out)

    def map_variables(self, ring: PolyRing, where: Sequence[int | None]) -> "Polynomial":
        """Carry this polynomial into ring, sending variable i to position where[i].

        where[i] is None for variables that must not occur; occurrences raise.
        """
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, k in enumerate(e):
                if not k:
                    continue
                pos = where[i]
                if pos is None:
                    raise ValueError(
                        f"variable {self.ring.names[i]} has no image in {ring!r}"
                    )
                ne[pos] = k
            out[tuple(ne)] = c
        return Polynomial(ring, out)

    # -- normal forms of the coefficient vector --------------------------------

    def scaled_primitive(self) -> "Polynomial":
        """Integer-coefficient scalar multiple with content 1.

        The sign is left untouched; callers fix the sign against a term order.
        """
        if not self.terms:
            return self
        from math import gcd, lcm

        den = lcm(*[c.denominator for c in self.terms.values()])
        num = gcd(*[abs(c.numerator) for c in self.terms.values()])
        return self * Fraction(den, num)

    def __repr__(self) -> str:
        from .session import format_polynomial

        return format_polynomial(self)

    __str__ = __repr__
