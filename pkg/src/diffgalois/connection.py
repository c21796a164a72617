"""Connections d_A on the trivial bundle O_X (x) E.

A connection is stored as its tuple of coefficient matrices A_1..A_g,
A_k = A(phi_k) for the basis dual to the chosen 1-forms theta_k; the
bundle itself is implicit.  Non-flat connections are ordinary values:
flatness is a property one asks about.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BetaMismatch, CountMismatch, InvariantBreach, ShapeMismatch
from .exact import Matrix, bracket, block_diag
from .freelie import evaluate_tensor, relators_from_beta
from .geometry import WedgeData


@dataclass(frozen=True)
class Connection:
    rank: int
    matrices: tuple
    beta: WedgeData

    @property
    def g(self) -> int:
        return len(self.matrices)


@dataclass(frozen=True)
class CurvatureReport:
    components: tuple
    flat: bool


def make(rank: int, matrices: Sequence[Matrix], beta: WedgeData) -> Connection:
    if rank < 1:
        raise ShapeMismatch("connection rank must be >= 1")
    matrices = tuple(matrices)
    if len(matrices) != beta.g:
        raise CountMismatch(f"{len(matrices)} matrices given but the wedge data has g={beta.g}")
    for k, a in enumerate(matrices, start=1):
        if not isinstance(a, Matrix) or a.shape != (rank, rank):
            raise ShapeMismatch(f"A_{k} has shape {getattr(a, 'shape', None)}, expected {(rank, rank)}")
    return Connection(rank, matrices, beta)


def _double_sum(c: Connection, i: int) -> Matrix:
    acc = Matrix.zeros(c.rank)
    g = c.g
    for k in range(1, g + 1):
        for l in range(1, g + 1):
            b = c.beta.coefficient(i, k, l)
            if b:
                acc = acc + b * (c.matrices[k - 1] @ c.matrices[l - 1])
    return acc


def _bracket_sum(c: Connection, i: int) -> Matrix:
    acc = Matrix.zeros(c.rank)
    for (k, l), b in c.beta.relator_terms(i).items():
        acc = acc + b * bracket(c.matrices[k - 1], c.matrices[l - 1])
    return acc


def curvature(c: Connection) -> CurvatureReport:
    """R_i = sum_{k,l} beta_i^{(kl)} A_k A_l for each 2-form sigma_i.

    Computed twice, as the full double sum and as sum_{k<l} beta [A_k, A_l];
    the two agree for alternating beta, and a disagreement is a defect.
    """
    comps = []
    for i in range(1, c.beta.h + 1):
        full = _double_sum(c, i)
        short = _bracket_sum(c, i)
        if full != short:
            raise InvariantBreach(f"curvature component {i}: double sum and bracket form differ")
        comps.append(full)
    return CurvatureReport(tuple(comps), all(r.is_zero() for r in comps))


def relation_images(c: Connection) -> list[Matrix]:
    """Images of the defining relators of A_beta under t_k -> A_k."""
    out = []
    for rel in relators_from_beta(c.beta):
        t = rel.tensor()
        out.append(evaluate_tensor(t, c.matrices) if t else Matrix.zeros(c.rank))
    return out


def is_representation(c: Connection) -> bool:
    """Whether t_k -> A_k defines a representation of A_beta.

    Evaluated on the relators of the algebra itself; agrees with
    ``curvature(c).flat``.
    """
    return all(m.is_zero() for m in relation_images(c))


def _check_beta(a: Connection, b: Connection):
    if a.beta != b.beta:
        raise BetaMismatch("connections live over different wedge data")


def tensor(a: Connection, b: Connection) -> Connection:
    """Tensor product: (A boxtimes B)_k = A_k (x) id + id (x) B_k."""
    _check_beta(a, b)
    ia, ib = Matrix.identity(a.rank), Matrix.identity(b.rank)
    mats = [x.kron(ib) + ia.kron(y) for x, y in zip(a.matrices, b.matrices)]
    return Connection(a.rank * b.rank, tuple(mats), a.beta)


def dual(c: Connection) -> Connection:
    return Connection(c.rank, tuple(-a.T for a in c.matrices), c.beta)


def direct_sum(a: Connection, b: Connection) -> Connection:
    _check_beta(a, b)
    mats = [block_diag(x, y) for x, y in zip(a.matrices, b.matrices)]
    return Connection(a.rank + b.rank, tuple(mats), a.beta)


def trivial(rank: int, beta: WedgeData) -> Connection:
    """The trivial connection d on O_X^rank (all A_k = 0)."""
    return make(rank, [Matrix.zeros(rank)] * beta.g, beta)


def rescale_forms(c: Connection, factors: Sequence) -> Connection:
    """Change of 1-form basis theta_k -> lambda_k theta_k.

    The matrices pick up lambda_k^-1 and the wedge table is rewritten to
    match, so the underlying connection is unchanged.
    """
    lam = [Fraction(f) for f in factors]
    if len(lam) != c.g or any(x == 0 for x in lam):
        raise ValueError("need one nonzero factor per 1-form")
    mats = tuple(a * (1 / x) for a, x in zip(c.matrices, lam))
    coeffs = tuple(((i, k, l), v * lam[k - 1] * lam[l - 1]) for (i, k, l), v in c.beta.coefficients)
    beta = WedgeData(c.beta.g, c.beta.h, coeffs, label=c.beta.label)
    return Connection(c.rank, mats, beta)
