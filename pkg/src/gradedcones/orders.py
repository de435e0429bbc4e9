"""Term orders on monomial exponent tuples.

An order exposes a sort key: bigger key means bigger monomial.  Keys are
nested tuples of ints, so Python tuple comparison implements the order.
Available kinds:

  lex(priority)          lexicographic, optionally with a variable priority
                         permutation (priority[0] is most significant)
  degrevlex(priority)    total degree, ties by reverse lexicographic
  weighted(weights, tie) integer weight row vector, ties by another order
  elimination(block, tie)  total degree within a variable block first; any
                         monomial meeting the block beats any monomial that
                         avoids it, which makes it an elimination order

Orders used for Groebner computations must be well-orders (the constant
monomial is minimal); weighted orders get this only from nonnegative weights
plus a well-ordered tiebreak.
"""

from __future__ import annotations

from typing import Sequence

from .rings import Exponent, Polynomial


class TermOrder:
    __slots__ = ("kind", "priority", "weights", "tiebreak", "block")

    def __init__(self, kind, priority=None, weights=None, tiebreak=None, block=None):
        self.kind = kind
        self.priority = tuple(priority) if priority is not None else None
        self.weights = tuple(int(w) for w in weights) if weights is not None else None
        self.tiebreak = tiebreak
        self.block = frozenset(block) if block is not None else None

    # -- constructors ----------------------------------------------------------

    @classmethod
    def lex(cls, priority: Sequence[int] | None = None) -> "TermOrder":
        return cls("lex", priority=priority)

    @classmethod
    def degrevlex(cls, priority: Sequence[int] | None = None) -> "TermOrder":
        return cls("degrevlex", priority=priority)

    @classmethod
    def weighted(cls, weights: Sequence[int], tiebreak: "TermOrder") -> "TermOrder":
        return cls("weighted", weights=weights, tiebreak=tiebreak)

    @classmethod
    def elimination(cls, block, tiebreak: "TermOrder") -> "TermOrder":
        """Order whose initial segment eliminates the block variables."""
        return cls("elimination", block=block, tiebreak=tiebreak)

    # -- the order itself -------------------------------------------------------

    def key(self, e: Exponent):
        kind = self.kind
        if kind == "lex":
            if self.priority is None:
                return e
            return tuple(e[p] for p in self.priority)
        if kind == "degrevlex":
            if self.priority is not None:
                e = tuple(e[p] for p in self.priority)
            return (sum(e), tuple(-x for x in reversed(e)))
        if kind == "weighted":
            w = self.weights
            if len(w) != len(e):
                raise ValueError("weight vector length does not match ring")
            return (sum(wi * xi for wi, xi in zip(w, e)), self.tiebreak.key(e))
        if kind == "elimination":
            return (sum(e[i] for i in self.block), self.tiebreak.key(e))
        raise ValueError(f"unknown order kind {kind}")

    def greater(self, a: Exponent, b: Exponent) -> bool:
        return self.key(a) > self.key(b)

    def compare(self, a: Exponent, b: Exponent) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def is_well_order(self) -> bool:
        if self.kind in ("lex", "degrevlex"):
            return True
        if self.kind == "weighted":
            return all(w >= 0 for w in self.weights) and self.tiebreak.is_well_order()
        if self.kind == "elimination":
            return self.tiebreak.is_well_order()
        return False

    def tag(self) -> tuple:
        """Hashable identity, used as a cache key for Groebner bases."""
        return (
            self.kind,
            self.priority,
            self.weights,
            self.tiebreak.tag() if self.tiebreak is not None else None,
            tuple(sorted(self.block)) if self.block is not None else None,
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, TermOrder) and self.tag() == other.tag()

    def __hash__(self) -> int:
        return hash(self.tag())

    def __repr__(self) -> str:
        return f"TermOrder{self.tag()!r}"

    # -- polynomial helpers -------------------------------------------------------

    def sorted_terms(self, p: Polynomial) -> list:
        """Terms of p as (exponent, coefficient), descending."""
        return sorted(p.terms.items(), key=lambda t: self.key(t[0]), reverse=True)

    def leading_exponent(self, p: Polynomial) -> Exponent:
        if p.is_zero():
            raise ValueError("zero polynomial has no leading term")
        return max(p.terms, key=self.key)

    def leading_coefficient(self, p: Polynomial):
        return p.terms[self.leading_exponent(p)]

    def monic(self, p: Polynomial) -> Polynomial:
        if p.is_zero():
            return p
        return p * (1 / self.leading_coefficient(p))

    def positive_leading(self, p: Polynomial) -> Polynomial:
        """Flip the sign if the leading coefficient is negative."""
        if p.is_zero():
            return p
        return -p if self.leading_coefficient(p) < 0 else p
