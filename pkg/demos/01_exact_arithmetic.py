"""
Exact linear algebra over the rationals
=======================================

Everything in diffgalois runs on Fractions; nothing is ever a float.
"""

from fractions import Fraction

from diffgalois.exact import Matrix, charpoly, format_scalar, jordan_chevalley, kernel_basis, rank, rref

m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, Fraction(1, 2)]])
print("m =", m)

# reduced row echelon form, pivot columns and rank
red, pivots, r = rref(m)
print("rref:", red, "pivots", pivots, "rank", r)
print("kernel:", [[format_scalar(x) for x in v] for v in kernel_basis(m)])

# characteristic polynomial, highest degree first
print("charpoly:", [format_scalar(c) for c in charpoly(m)])

# Jordan-Chevalley: x = s + n, s semisimple, n nilpotent, both polynomials in x
x = Matrix.from_rows([[2, 1, 0], [0, 2, 0], [0, 0, 3]])
pair = jordan_chevalley(x)
print("semisimple part:", pair.semisimple)
print("nilpotent part: ", pair.nilpotent)
assert pair.semisimple @ pair.nilpotent == pair.nilpotent @ pair.semisimple
assert rank(pair.nilpotent) == 1
