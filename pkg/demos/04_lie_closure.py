"""
Lie algebras generated by matrices
==================================

Bracket closure gives a canonical basis; the Killing form then tells us
whether the algebra is semisimple.
"""

from diffgalois.exact import Matrix
from diffgalois.liealg import derived_series, generated, killing_form, report

e, f = Matrix.unit(2, 0, 1), Matrix.unit(2, 1, 0)
sl2 = generated([e, f])
print("dim <e, f> =", sl2.dim)
for b in sl2.basis:
    print("  ", b)
print("Killing form:", killing_form(sl2))

# a Borel subalgebra: solvable, so the derived series dies out
borel = generated([Matrix.diag([1, -1]), e])
print("Borel: dim", borel.dim, "derived series", derived_series(borel))

# the full report, as the CLI prints it
j = Matrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
for name, y in (("J^T", j.T), ("E21 + 2 E32", Matrix.from_rows([[0, 0, 0], [1, 0, 0], [0, 2, 0]]))):
    r = report(generated([j, y]))
    print(f"<J, {name}>: dim {r['dim']}, semisimple {r['semisimple']}")
