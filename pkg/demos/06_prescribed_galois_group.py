"""
A connection with a prescribed Galois group
===========================================

On a curve of genus at least 2 every connection is flat, and the Galois
group of a connection on the trivial bundle has Lie algebra equal to the
algebraic hull of the algebra generated by its matrices.  A semisimple
algebra is generated by two elements, so placing such a pair in A_1 and
A_2 realises any semisimple Lie algebra.
"""

from diffgalois.envelope import galois_group_of
from diffgalois.errors import GenusTooSmall
from diffgalois.forge import SUPPORTED_TARGETS, builtin_pair, forge_connection
from diffgalois.formats import connection_to_json, dumps

for name in SUPPORTED_TARGETS:
    c = forge_connection(builtin_pair(name), genus=2)
    rep = galois_group_of(c)
    inv = rep.invariants_of_hull
    print(f"{name}: rank {c.rank}, Galois Lie algebra dim {rep.hull.dim}, "
          f"semisimple {inv['semisimple']}, exact {rep.exact}")

try:
    forge_connection(builtin_pair("sl2"), genus=1)
except GenusTooSmall as err:
    print("genus 1:", err)

# the connection file the CLI would write
print(dumps(connection_to_json(forge_connection(builtin_pair("sl2"), genus=2))))
