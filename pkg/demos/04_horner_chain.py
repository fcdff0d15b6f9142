"""Turning one polynomial equation into a chain of multiaffine equations.

The polynomial a^3 + a^4 has a triple root at 0. After moving the root to 1/3
we disaggregate it Horner-style into four equations in four unknowns, each
affine in every variable. The local algebra keeps dimension 3 and the
degree keeps its value.
"""

from fractions import Fraction

from mixedindex.elindex import one_variable_degree, signed_degree
from mixedindex.gamesys import classify_monogenic
from mixedindex.generators import eliminate_chain, horner_disaggregate
from mixedindex.localpoly import Poly

root = Fraction(1, 3)
q = Poly(1, {(3,): 1, (4,): 1}).shift([-root])
print("q(a) =", q.to_text(("a",)), " root", root)

hs = horner_disaggregate(q, root)
for p in hs.system.polys:
    print("  0 =", p.to_text(hs.system.names))

print("back-substituted:", eliminate_chain(hs).to_text(("w",)))
r = signed_degree(hs.system)
print("dimension", r.dimension, "degree", r.signed_degree,
      "rank deficiency", classify_monogenic(hs.system).rank_deficiency)
print("one-variable degree of q at the root:", one_variable_degree(hs.translated_polynomial()))

# Negative scales flip the orientation of the chain, and only that.
flipped = horner_disaggregate(q, root, scales=[-1, 2, 3])
print("with one negative scale:", signed_degree(flipped.system).signed_degree)
