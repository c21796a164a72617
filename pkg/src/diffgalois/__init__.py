"""Differential Galois groups of integrable connections on trivial bundles.

For a smooth projective variety X with wedge data beta and a flat
connection d_A on O_X (x) E, the differential Galois group is the
group-envelope in GL(E) of the Lie algebra generated by the coefficient
matrices A_1..A_g.  Everything is computed exactly over Q.
"""

from .connection import Connection, CurvatureReport, curvature, direct_sum, dual, is_representation, make, tensor
from .envelope import EnvelopeReport, galois_group_of, group_envelope, replicas
from .exact import JordanPair, Matrix, charpoly, jordan_chevalley, kernel_basis, rref, subspace_closure
from .forge import GeneratorPair, builtin_pair, forge_connection
from .freelie import GradedLieQuotient, expand_bracket, graded_dims, lyndon_words, relators_from_beta, witt_dimension
from .geometry import WedgeData, abelian_model, curve_model, validate
from .liealg import LieSubalgebra, center, derived_series, generated, is_perfect, is_semisimple, killing_form

__version__ = "0.1.0"
