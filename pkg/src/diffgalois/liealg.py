"""Lie subalgebras of gl_n(Q): bracket closure and structural invariants.

A :class:`LieSubalgebra` is stored by its canonical basis: the reduced
echelon basis of the subspace, with n x n matrices flattened row-major.
Equal subspaces therefore have identical bases, whatever generators they
came from.  Because the basis is reduced, the coordinates of any element
of the span are just its entries at the pivot positions.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvariantBreach, ResourceCapExceeded, ShapeMismatch
from .exact import Echelon, Matrix, bracket, kernel_basis, rank, subspace_closure, to_dense, to_sparse

DEFAULT_MAX_AMBIENT = 12


def max_ambient() -> int:
    """Ambient-dimension guard; the GALOIS_MAX_DIM environment variable overrides it."""
    env = os.environ.get("GALOIS_MAX_DIM")
    if env:
        value = int(env)
        if value < 1:
            raise ValueError("GALOIS_MAX_DIM must be positive")
        return value
    return DEFAULT_MAX_AMBIENT


def _flat(m: Matrix) -> tuple:
    return m.entries


@dataclass(frozen=True, eq=False)
class LieSubalgebra:
    ambient: int
    basis: tuple
    pivots: tuple
    structure_constants: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, LieSubalgebra):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def coordinates(self, m: Matrix) -> tuple | None:
        """Coordinates of ``m`` in the basis, or None if m is not in the span."""
        coords = tuple(m.entries[p] for p in self.pivots)
        rebuilt = Matrix.zeros(self.ambient)
        for c, b in zip(coords, self.basis):
            if c:
                rebuilt = rebuilt + c * b
        return coords if rebuilt == m else None

    def contains(self, m: Matrix) -> bool:
        return self.coordinates(m) is not None

    def contains_algebra(self, other: "LieSubalgebra") -> bool:
        return all(self.contains(b) for b in other.basis)

    def conjugate(self, p: Matrix) -> "LieSubalgebra":
        p_inv = p.inverse()
        return span([b.conjugate(p, p_inv) for b in self.basis], self.ambient, check=False)

    def bracket_algebra(self) -> "LieSubalgebra":
        """Derived algebra [L, L]."""
        prods = [bracket(x, y) for i, x in enumerate(self.basis) for y in self.basis[i + 1:]]
        return span(prods, self.ambient, check=False)


def _canonical(vectors, n: int) -> list[Matrix]:
    return [Matrix.from_flat(n, v) for v in vectors]


def _structure_constants(basis: Sequence[Matrix], pivots: Sequence[int]) -> tuple:
    d = len(basis)
    table = [[None] * d for _ in range(d)]
    n = basis[0].rows if basis else 0
    for i in range(d):
        table[i][i] = (Fraction(0),) * d
        for j in range(i + 1, d):
            br = bracket(basis[i], basis[j])
            coords = tuple(br.entries[p] for p in pivots)
            rebuilt = Matrix.zeros(n)
            for c, b in zip(coords, basis):
                if c:
                    rebuilt = rebuilt + c * b
            if rebuilt != br:
                raise InvariantBreach(f"basis is not bracket-closed: [b{i}, b{j}] left the span")
            table[i][j] = coords
            table[j][i] = tuple(-c for c in coords)
    return tuple(tuple(r) for r in table)


def _check_mats(mats: Sequence[Matrix], ambient: int | None) -> int:
    n = ambient
    for m in mats:
        if not isinstance(m, Matrix) or not m.is_square:
            raise ShapeMismatch("Lie algebra generators must be square matrices")
        if n is None:
            n = m.rows
        elif m.rows != n:
            raise ShapeMismatch(f"mixed sizes: {m.rows} vs {n}")
    n = 0 if n is None else n
    if n > max_ambient():
        raise ResourceCapExceeded(f"ambient gl_{n} exceeds the guard gl_{max_ambient()}")
    return n


def span(mats: Sequence[Matrix], ambient: int | None = None, check: bool = True) -> LieSubalgebra:
    """LieSubalgebra spanned by ``mats``, which must already be bracket-closed."""
    n = _check_mats(mats, ambient) if check else ambient
    e = Echelon()
    for m in mats:
        e.add(to_sparse(_flat(m)))
    rows = e.reduced()
    basis = tuple(Matrix.from_flat(n, to_dense(r, n * n)) for r in rows)
    pivots = tuple(min(r) for r in rows)
    return LieSubalgebra(n, basis, pivots, _structure_constants(basis, pivots))


def generated(mats: Sequence[Matrix], ambient: int | None = None) -> LieSubalgebra:
    """Smallest Lie subalgebra of gl_n containing ``mats``."""
    n = _check_mats(mats, ambient)
    if not mats:
        return LieSubalgebra(n, (), (), ())

    def comm(x, y):
        return bracket(Matrix.from_flat(n, x), Matrix.from_flat(n, y)).entries

    closed = subspace_closure([_flat(m) for m in mats], comm, antisymmetric=True)
    return span(_canonical(closed, n), n, check=False)


# -- invariants ------------------------------------------------------------

def ad_matrix(L: LieSubalgebra, i: int) -> Matrix:
    """Matrix of ad(b_i) in the basis: column j holds the coordinates of [b_i, b_j]."""
    d = L.dim
    c = L.structure_constants
    return Matrix(d, d, [c[i][j][k] for k in range(d) for j in range(d)])


def killing_form(L: LieSubalgebra) -> Matrix:
    """Gram matrix of K(x, y) = trace(ad x ad y) on the basis."""
    d = L.dim
    ads = [ad_matrix(L, i) for i in range(d)]
    out = []
    for i in range(d):
        for j in range(d):
            out.append((ads[i] @ ads[j]).trace() if j >= i else out[j * d + i])
    return Matrix(d, d, out)


def derived_series(L: LieSubalgebra) -> list[int]:
    """Dimensions of L, [L,L], [[L,L],[L,L]], ... until the series stabilises.

    A nonzero stable term is listed twice (e.g. [3, 3] for sl_2); a series
    reaching 0 stops there.
    """
    dims = [L.dim]
    cur = L
    while cur.dim:
        nxt = cur.bracket_algebra()
        if nxt.dim == cur.dim:
            dims.append(nxt.dim)
            break
        dims.append(nxt.dim)
        cur = nxt
    return dims


def center(L: LieSubalgebra) -> LieSubalgebra:
    d = L.dim
    if d == 0:
        return L
    c = L.structure_constants
    # x = sum a_i b_i is central iff sum_i a_i c[i][j][k] = 0 for all j, k
    rows = [[c[i][j][k] for i in range(d)] for j in range(d) for k in range(d)]
    ker = kernel_basis(Matrix.from_rows(rows))
    elems = []
    for v in ker:
        m = Matrix.zeros(L.ambient)
        for a, b in zip(v, L.basis):
            if a:
                m = m + a * b
        elems.append(m)
    return span(elems, L.ambient, check=False)


def is_perfect(L: LieSubalgebra) -> bool:
    return L.bracket_algebra().dim == L.dim


def killing_rank(L: LieSubalgebra) -> int:
    return rank(killing_form(L)) if L.dim else 0


def is_semisimple(L: LieSubalgebra) -> bool:
    """Cartan's criterion: the Killing form is nondegenerate."""
    return killing_rank(L) == L.dim


def jacobi_holds(L: LieSubalgebra) -> bool:
    """Check antisymmetry and the Jacobi identity on the structure constants."""
    d = L.dim
    c = L.structure_constants
    for i in range(d):
        for j in range(d):
            if any(x != -y for x, y in zip(c[i][j], c[j][i])):
                return False

    def br(u, v):
        out = [Fraction(0)] * d
        for a, x in enumerate(u):
            if not x:
                continue
            for b, y in enumerate(v):
                if y:
                    for k, z in enumerate(c[a][b]):
                        if z:
                            out[k] += x * y * z
        return out

    unit = [[Fraction(int(a == b)) for a in range(d)] for b in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                x, y, z = unit[i], unit[j], unit[k]
                s = [p + q + r for p, q, r in zip(br(x, br(y, z)), br(y, br(z, x)), br(z, br(x, y)))]
                if any(s):
                    return False
    return True


def report(L: LieSubalgebra) -> dict:
    """Plain-data summary (numbers as Fractions / ints, matrices as Matrix)."""
    return {
        "ambient": L.ambient,
        "dim": L.dim,
        "basis": list(L.basis),
        "derived_series": derived_series(L),
        "center_dim": center(L).dim,
        "perfect": is_perfect(L),
        "semisimple": is_semisimple(L),
        "killing_rank": killing_rank(L),
    }
