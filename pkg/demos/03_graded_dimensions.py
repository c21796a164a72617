"""
Graded dimensions of L_beta
===========================

L_beta is the free Lie algebra on g generators modulo the ideal generated
by the quadratic relators read off beta.  With no 2-forms nothing is
killed and the dimensions are given by Witt's formula; on an abelian
variety the relators are all the [t_k, t_l] and L_beta is abelian.
"""

from diffgalois.freelie import graded_dims, lyndon_basis, witt_dimension
from diffgalois.geometry import abelian_model, curve_model, validate

print("Lyndon words of length 4 on 2 letters and their bracketings:")
for b in lyndon_basis(2, 4):
    print("  ", b.word, "->", b.bracketing)

for g in (2, 3):
    q = graded_dims(curve_model(g), 6)
    print(f"curve of genus {g}: {q.dims}  (Witt: {[witt_dimension(g, n) for n in range(1, 7)]})")

print("abelian 3-fold:", graded_dims(abelian_model(3), 5).dims)

# one relator on four generators: the first degrees of a surface-like algebra
beta = validate(4, 1, [(1, 1, 2, 1), (1, 3, 4, 1)], label="one symplectic relator")
print(beta.label + ":", graded_dims(beta, 4).dims)
