"""Flat connections on curves with a prescribed semisimple Galois group.

Every semisimple Lie algebra over a field of characteristic zero is
generated by two elements (Kuranishi).  On a curve of genus g >= 2 there
are no 2-forms, so any matrices give a flat connection; putting a
generating pair x, y in A_1, A_2 and zeros elsewhere yields a connection
whose Galois group has Lie algebra generated by {x, y}, i.e. the target.

The shipped pairs are defining representations; each is certified by
bracket closure plus Cartan's criterion when it is built, never trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connection import Connection, make
from .errors import GenusTooSmall, NotSemisimple, UnknownTarget
from .exact import Matrix
from .geometry import curve_model
from .liealg import generated, is_semisimple


@dataclass(frozen=True)
class GeneratorPair:
    name: str
    x: Matrix
    y: Matrix
    expected_dim: int


def _jordan_block(n: int) -> Matrix:
    return Matrix(n, n, [1 if j == i + 1 else 0 for i in range(n) for j in range(n)])


def _weighted_lowering(n: int) -> Matrix:
    # sum_i i E_{i+1,i}.  J^T itself is no good for n >= 3: it closes up to a
    # principal sl_2 (n = 3) or lands in sp_4 (n = 4).
    return Matrix(n, n, [j + 1 if i == j + 1 else 0 for i in range(n) for j in range(n)])


def _sl(n: int):
    if n == 2:
        return Matrix.unit(2, 0, 1), Matrix.unit(2, 1, 0)
    return _jordan_block(n), _weighted_lowering(n)


# so_5 preserving the antidiagonal form, sp_4 preserving antidiag(1, 1, -1, -1):
# x sums the positive root vectors of the standard basis, y the negative ones.
_SO5 = (
    Matrix.from_rows([[0, -1, -1, -1, 0], [0, 0, -1, 0, 1], [0, 0, 0, 1, 1],
                      [0, 0, 0, 0, 1], [0, 0, 0, 0, 0]]),
    Matrix.from_rows([[0, 0, 0, 0, 0], [-1, 0, 0, 0, 0], [-1, -1, 0, 0, 0],
                      [-1, 0, 1, 0, 0], [0, 1, 1, 1, 0]]),
)
_SP4 = (
    Matrix.from_rows([[0, -1, 1, 1], [0, 0, 1, 1], [0, 0, 0, 1], [0, 0, 0, 0]]),
    Matrix.from_rows([[0, 0, 0, 0], [-1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 0]]),
)

_TARGETS = {
    "sl2": (lambda: _sl(2), 3),
    "sl3": (lambda: _sl(3), 8),
    "sl4": (lambda: _sl(4), 15),
    "so5": (lambda: _SO5, 10),
    "sp4": (lambda: _SP4, 10),
}

SUPPORTED_TARGETS = tuple(_TARGETS)


def certify_pair(name: str, x: Matrix, y: Matrix, expected_dim: int | None = None) -> GeneratorPair:
    """Check that {x, y} generates a semisimple algebra (of ``expected_dim``)."""
    L = generated([x, y])
    if expected_dim is not None and L.dim != expected_dim:
        raise NotSemisimple(f"{name}: pair generates a {L.dim}-dimensional algebra, expected {expected_dim}")
    if not is_semisimple(L):
        raise NotSemisimple(f"{name}: generated algebra (dim {L.dim}) has degenerate Killing form")
    return GeneratorPair(name, x, y, L.dim)


def builtin_pair(name: str) -> GeneratorPair:
    try:
        build, dim = _TARGETS[name]
    except KeyError:
        raise UnknownTarget(f"unknown target {name!r}; supported: {', '.join(SUPPORTED_TARGETS)}") from None
    x, y = build()
    return certify_pair(name, x, y, dim)


def forge_connection(pair: GeneratorPair, genus: int) -> Connection:
    """Connection on the trivial bundle over a genus-``genus`` curve: A_1 = x, A_2 = y, rest 0."""
    if genus < 2:
        raise GenusTooSmall(f"genus {genus} < 2: two independent 1-forms are needed")
    r = pair.x.rows
    mats = [pair.x, pair.y] + [Matrix.zeros(r)] * (genus - 2)
    return make(r, mats, curve_model(genus))
