"""
Curvature and flatness
======================

A connection d + sum A_k theta_k on a trivial bundle is flat when
sum_{k<l} beta_i^{(kl)} [A_k, A_l] = 0 for every 2-form sigma_i.
On a curve there are no 2-forms, so every connection is flat; on an
abelian surface the single relation says A_1 and A_2 commute.
"""

from diffgalois.connection import curvature, dual, is_representation, make, tensor
from diffgalois.exact import Matrix
from diffgalois.geometry import abelian_model, curve_model, validate

e, f = Matrix.unit(2, 0, 1), Matrix.unit(2, 1, 0)

on_curve = make(2, [e, f], curve_model(2))
print("genus-2 curve, A = (e, f): flat =", curvature(on_curve).flat)

on_surface = make(2, [e, f], abelian_model(2))
report = curvature(on_surface)
print("abelian surface, A = (e, f): flat =", report.flat)
print("  R_1 =", report.components[0])  # [e, f] = h

commuting = make(2, [Matrix.diag([1, 2]), Matrix.diag([3, -1])], abelian_model(2))
print("abelian surface, diagonal A: flat =", curvature(commuting).flat)

# the same check, phrased as "t_k -> A_k is a representation of A_beta"
print("representation of A_beta:", is_representation(commuting))

# custom wedge data: g=3 one-forms, one 2-form with theta1^theta2 - 2 theta2^theta3
beta = validate(3, 1, [(1, 1, 2, 1), (1, 2, 3, -2)], label="toy")
c = make(2, [Matrix.diag([1, 0]), Matrix.diag([0, 1]), Matrix.diag([5, 5])], beta)
print("toy beta:", curvature(c).flat)

# tensor products and duals of flat connections stay flat
t = tensor(commuting, dual(commuting))
print("E (x) E^dual: rank", t.rank, "flat =", curvature(t).flat)
