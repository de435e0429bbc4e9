"""The family of all ideals sharing one initial ideal, cut out exactly.

Perturb each monomial generator of J by unknown-coefficient tails, demand
that the perturbed set stays a Groebner basis with initial ideal J, and the
closure conditions on the coefficients are themselves multigraded equations:
the stratum is a cone for the head-minus-tail grading, so the same embedding
machinery applies to it.
"""

from fractions import Fraction

from gradedcones import (
    MonomialIdealSpec,
    PolyRing,
    Polynomial,
    TermOrder,
    buchberger,
    reduced_stratum,
    tail_scheme,
)

ring = PolyRing(("x", "y"))
lex = TermOrder.lex()
j = MonomialIdealSpec(ring, ((2, 0), (1, 1)), lex)

scheme = tail_scheme(j)
print("J = (x^2, x y) under lex; admissible same-degree tails:")
for cname, head, tail in scheme.legend():
    print(f"  {head} picks up {cname} * {tail}")
print("coefficient degrees (head minus tail):",
      [list(c) for c in scheme.coefficient_grading.columns])

result = reduced_stratum(j)
print("\nstratum ideal:", ", ".join(str(g) for g in result.stratum_ideal.generators))
print("so the family is the parabola C1 = -C2^2: one free parameter,")
emb = result.reduced
print("reduced form:", [str(g) for g in emb.embedded.base.generators] or "(0)",
      "in", list(emb.embedded.ring.names))

print("\nchecking a few fibers really have initial ideal J:")
for c in (0, 1, -2):
    c = Fraction(c)
    gens = [
        ring.parse("x^2") + ring.parse("y^2") * (-(c**2)),
        ring.parse("x y") + ring.parse("y^2") * c,
    ]
    gb = buchberger(gens, lex)
    heads = sorted(str(Polynomial(ring, {lex.leading_exponent(g): Fraction(1)}))
                   for g in gb.elements)
    print(f"  C2 = {c}: initial monomials {heads}")

print("\noff the stratum the initial ideal jumps:")
gb = buchberger([ring.parse("x^2 + y^2"), ring.parse("x y")], lex)
heads = sorted(str(Polynomial(ring, {lex.leading_exponent(g): Fraction(1)}))
               for g in gb.elements)
print(f"  C1 = 1, C2 = 0: initial monomials {heads}  (y^3 appeared)")

print("\nfull mode counts lower-degree tails too, when the order allows only")
print("finitely many; under degrevlex x has the tails y and 1:")
full = tail_scheme(MonomialIdealSpec(ring, ((1, 0),), TermOrder.degrevlex()), mode="full")
for cname, head, tail in full.legend():
    print(f"  {head} picks up {cname} * {tail}")
