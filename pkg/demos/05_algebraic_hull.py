"""
Algebraic hulls and replicas
============================

The Lie algebra of a linear algebraic group contains the semisimple and
nilpotent parts of each element, and the replicas of each semisimple
element.  The algebraic hull of a Lie algebra is the smallest such
algebra containing it.
"""

from diffgalois.envelope import group_envelope, replicas
from diffgalois.exact import Matrix, block_diag, companion
from diffgalois.liealg import generated

# a unipotent Jordan block: its hull contains the identity and the nilpotent part
u = Matrix.from_rows([[1, 1], [0, 1]])
print("hull of <1 + N>:", group_envelope(generated([u])).hull.dim)

# eigenvalues 1 and 2 are Q-dependent (2 = 2 * 1), so diag(1, 2) is its own hull
print("hull of <diag(1, 2)>:", group_envelope(generated([Matrix.diag([1, 2])])).hull.dim)

# eigenvalues 1, sqrt2, -sqrt2: no relation ties 1 to sqrt2, so two replicas
s = block_diag(Matrix.identity(1), companion([1, 0, -2]))
for y in replicas(s):
    print("replica:", y)
rep = group_envelope(generated([s]))
print("hull dim", rep.hull.dim, "exact", rep.exact)
for note in rep.notes:
    print("  note:", note)

# a cube root of 2 leaves the supported eigenvalue fields: the hull is a lower bound
rep = group_envelope(generated([companion([1, 0, 0, -2])]))
print("cube root of 2: hull dim", rep.hull.dim, "exact", rep.exact)
