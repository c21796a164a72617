"""Algebraic hulls of matrix Lie algebras and differential Galois groups.

The group-envelope of a Lie subalgebra L of gl_n(Q) is the smallest
closed subgroup of GL_n whose Lie algebra contains L; its Lie algebra is
the algebraic hull of L.  It is computed as a fixed point:

1. if L is perfect it is already algebraic;
2. otherwise, for every basis element x, adjoin the nilpotent part x_n and
   a basis of the replicas of the semisimple part x_s, then close under
   the bracket; repeat until the dimension stops growing.

The replicas of a semisimple s are the matrices sum_j f(lambda_j) P_j,
where P_j are the eigenprojectors of s and f runs over the Q-linear maps
on the Q-span of the eigenvalues.  Rational replicas are computed exactly
when every eigenvalue lies in Q or in one quadratic field Q(sqrt d).
Outside that scope the loop still runs, adjoining only the replicas that
are always available (s itself and its "rational part"), and the report
is flagged ``exact=False``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from .connection import Connection, curvature
from .errors import EigenvalueFieldUnsupported, NotFlat
from .exact import Matrix, charpoly, from_sympy_poly, jordan_chevalley, polyval, squarefree_part, to_sympy_poly
from .liealg import LieSubalgebra, generated, is_perfect, report as lie_report

_t = sympy.Symbol("t")


@dataclass(frozen=True)
class EnvelopeReport:
    input: LieSubalgebra
    hull: LieSubalgebra
    exact: bool
    notes: tuple = ()
    invariants_of_hull: dict = field(default_factory=dict, compare=False, repr=False)
    kind: str = "algebraic-hull"

    def to_dict(self) -> dict:
        d = dict(self.invariants_of_hull)
        d.update(exact=self.exact, input_dim=self.input.dim, hull_dim=self.hull.dim,
                 notes=list(self.notes))
        return d


@dataclass(frozen=True)
class EigenData:
    """Factorisation of a squarefree minimal polynomial over Q.

    ``factors`` are monic irreducible coefficient lists (highest first);
    ``field`` is the squarefree d of the common quadratic field, 1 when all
    eigenvalues are rational, or None when the eigenvalues leave scope.
    """

    factors: tuple
    field: int | None


def _squarefree_int(n: int) -> int:
    sign = -1 if n < 0 else 1
    core = 1
    for p, e in sympy.factorint(abs(n)).items():
        if e % 2:
            core *= p
    return sign * core


def quadratic_field(coeffs: Sequence[Fraction]) -> int:
    """Squarefree d with the roots of the quadratic in Q(sqrt d)."""
    _, b, c = (Fraction(x) for x in coeffs)
    disc = b * b - 4 * c
    # sqrt(p/q) generates the same field as sqrt(p q)
    return _squarefree_int(disc.numerator * disc.denominator)


def eigen_data(s: Matrix) -> EigenData:
    q = squarefree_part(charpoly(s))
    _, factors = to_sympy_poly(q).factor_list()
    facs = tuple(from_sympy_poly(f.monic()) for f, _ in factors)
    fields = set()
    for f in facs:
        deg = len(f) - 1
        if deg > 2:
            return EigenData(facs, None)
        if deg == 2:
            fields.add(quadratic_field(f))
    if len(fields) > 1:
        return EigenData(facs, None)
    return EigenData(facs, fields.pop() if fields else 1)


def eigenprojectors(s: Matrix, factors: Sequence[Sequence[Fraction]]) -> list[Matrix]:
    """Rational projectors onto ker f(s), one per irreducible factor f.

    Chinese remaindering: e_f = (m/f) * ((m/f)^-1 mod f), with m the
    product of the factors (the minimal polynomial of semisimple s).
    """
    polys = [to_sympy_poly(f) for f in factors]
    m = sympy.Poly(1, _t, domain=sympy.QQ)
    for p in polys:
        m = m * p
    out = []
    for p in polys:
        cof = m.quo(p)
        inv = cof.invert(p)
        e = (cof * inv).rem(m)
        out.append(polyval(from_sympy_poly(e), s))
    return out


def rational_part(s: Matrix, data: EigenData) -> Matrix:
    """sum_f (mean of the roots of f) * E_f.

    This is the replica for f = (normalised trace down to Q); it is always
    rational, whatever the eigenvalue field.
    """
    out = Matrix.zeros(s.rows)
    if not data.factors:
        return out
    for f, e in zip(data.factors, eigenprojectors(s, data.factors)):
        deg = len(f) - 1
        mean = -Fraction(f[1]) / deg
        if mean:
            out = out + mean * e
    return out


def replicas(s: Matrix, field_spec=None) -> list[Matrix]:
    """Basis of the rational replicas of a semisimple matrix ``s``.

    With eigenvalues p_j + q_j sqrt(d) the replica space is spanned by
    sum p_j P_j and sum q_j sqrt(d) P_j (dropping zeros): the Q-span of the
    eigenvalues sits in Q + Q sqrt(d), and these are the images of the two
    coordinate functionals.  ``field_spec`` optionally pins d; a different
    field raises :class:`EigenvalueFieldUnsupported`, as do eigenvalue
    fields outside Q and quadratic extensions.
    """
    if not s.is_square:
        raise ValueError("replicas needs a square matrix")
    if s.is_zero():
        return []
    data = eigen_data(s)
    if data.field is None:
        raise EigenvalueFieldUnsupported(
            "eigenvalues generate more than a single quadratic extension of Q")
    if field_spec is not None and data.field not in (1, field_spec):
        raise EigenvalueFieldUnsupported(
            f"eigenvalues lie in Q(sqrt {data.field}), not Q(sqrt {field_spec})")
    y1 = rational_part(s, data)
    y2 = s - y1
    return [y for y in (y1, y2) if not y.is_zero()]


def _adjoin_round(L: LieSubalgebra, notes: list) -> tuple[list[Matrix], bool]:
    new: list[Matrix] = list(L.basis)
    exact = True
    for x in L.basis:
        pair = jordan_chevalley(x)
        if not pair.nilpotent.is_zero():
            new.append(pair.nilpotent)
        s = pair.semisimple
        if s.is_zero():
            continue
        try:
            new.extend(replicas(s))
        except EigenvalueFieldUnsupported as err:
            exact = False
            data = eigen_data(s)
            new.append(s)
            rp = rational_part(s, data)
            if not rp.is_zero():
                new.append(rp)
            notes.append(f"replicas truncated: {err}; charpoly {_fmt_poly(charpoly(s))}")
    return new, exact


def _fmt_poly(coeffs) -> str:
    return str(sympy.Poly([sympy.Rational(str(c)) for c in coeffs], _t).as_expr())


def group_envelope(L: LieSubalgebra) -> EnvelopeReport:
    """Lie algebra of the group-envelope of ``L`` in GL_n."""
    notes = []
    if L.dim == 0:
        notes.append("zero algebra: the envelope is the trivial group")
        return EnvelopeReport(L, L, True, tuple(notes), lie_report(L))
    if is_perfect(L):
        notes.append("perfect: [L, L] = L, hence algebraic; hull = input")
        return EnvelopeReport(L, L, True, tuple(notes), lie_report(L))
    exact = True
    cur = L
    n = L.ambient
    for rnd in range(1, n * n + 2):
        new, ok = _adjoin_round(cur, notes)
        exact = exact and ok
        nxt = generated(new, n)
        notes.append(f"round {rnd}: dim {cur.dim} -> {nxt.dim}")
        if nxt.dim == cur.dim:
            break
        cur = nxt
    return EnvelopeReport(L, cur, exact, tuple(notes), lie_report(cur))


def galois_group_of(c: Connection) -> EnvelopeReport:
    """Lie algebra data of the differential Galois group of a flat connection.

    For X proper, this is the group-envelope of the Lie algebra generated by
    A_1..A_g.  (Over non-proper X this fails: on Spec K[x, 1/x] the
    connection k dx/x has trivial Galois group while k generates a line.
    Only the proper case is modelled here.)
    """
    curv = curvature(c)
    if not curv.flat:
        bad = [i + 1 for i, r in enumerate(curv.components) if not r.is_zero()]
        raise NotFlat(f"curvature components {bad} are nonzero; the connection is not integrable")
    rep = group_envelope(generated(list(c.matrices), c.rank))
    return EnvelopeReport(rep.input, rep.hull, rep.exact, rep.notes, rep.invariants_of_hull,
                          kind="differential-galois-group")
