"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` (always in lowest terms, positive
denominator, value equality).  :class:`Matrix` is a small immutable dense
matrix of fractions; everything here is desk scale, so plain Python lists
and tuples are used throughout instead of numpy object arrays.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import sympy

from .errors import InvariantBreach, ShapeMismatch

Scalar = Fraction

_SCALAR_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a Fraction.  Anything else is rejected."""
    if not isinstance(text, str) or not _SCALAR_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(text)
    return value


def format_scalar(x) -> str:
    return str(Fraction(x))


class Matrix:
    """Immutable dense rows x cols matrix with Fraction entries (row-major)."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(e if type(e) is Fraction else Fraction(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Matrix":
        """Matrix unit E_ij of size n (0-based indices)."""
        e = [0] * (n * n)
        e[i * n + j] = 1
        return cls(n, n, e)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def from_flat(cls, n: int, vec: Sequence) -> "Matrix":
        return cls(n, n, vec)

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[Fraction]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.rows, self.cols, self.entries)))
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.to_rows())
        return f"Matrix([{body}])"

    # -- arithmetic ---------------------------------------------------------

    def _check_same(self, other):
        if not isinstance(other, Matrix) or self.shape != other.shape:
            raise ShapeMismatch(f"shape mismatch: {self.shape} vs {getattr(other, 'shape', None)}")

    def __add__(self, other):
        self._check_same(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_same(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        c = Fraction(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in cols:
                s = Fraction(0)
                for a, b in zip(r, c):
                    if a and b:
                        s += a * b
                out.append(s)
        return Matrix(self.rows, other.cols, out)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ShapeMismatch("trace of a non-square matrix")
        return sum((self.entries[i * self.cols + i] for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; (A kron B)[(i,k),(j,l)] = A[i,j] B[k,l]."""
        r, c = self.rows * other.rows, self.cols * other.cols
        out = []
        for i in range(self.rows):
            for k in range(other.rows):
                for j in range(self.cols):
                    a = self[i, j]
                    out.extend(a * b for b in other.row(k))
        return Matrix(r, c, out)

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        red, pivots = _rref_rows(aug, 2 * n)
        if pivots[:n] != list(range(n)) or len(pivots) > n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix(n, n, [x for r in red for x in r[n:]])

    def conjugate(self, p: "Matrix", p_inv: "Matrix | None" = None) -> "Matrix":
        """Return P M P^-1."""
        if p_inv is None:
            p_inv = p.inverse()
        return p @ self @ p_inv


def bracket(a: Matrix, b: Matrix) -> Matrix:
    """Commutator [a, b] = ab - ba."""
    return a @ b - b @ a


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    rows = []
    c0 = 0
    for b in blocks:
        for r in b.to_rows():
            rows.append([0] * c0 + r + [0] * (m - c0 - b.cols))
        c0 += b.cols
    return Matrix(n, m, [x for r in rows for x in r])


def companion(coeffs: Sequence) -> Matrix:
    """Companion matrix of the monic polynomial with high-to-low ``coeffs``.

    ``companion([1, 0, -2])`` has characteristic polynomial t^2 - 2.
    """
    coeffs = [Fraction(c) for c in coeffs]
    if not coeffs or coeffs[0] != 1:
        raise ValueError("companion() needs a monic polynomial")
    n = len(coeffs) - 1
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    for i in range(n):
        rows[i][n - 1] = -coeffs[n - i]
    return Matrix.from_rows(rows)


# -- elimination -----------------------------------------------------------

def _rref_rows(rows: list[list[Fraction]], ncols: int):
    """Gauss-Jordan in place on a list of row lists. Returns (rows, pivots)."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row echelon form, pivot columns and rank."""
    rows, pivots = _rref_rows(m.to_rows(), m.cols)
    return Matrix(m.rows, m.cols, [x for r in rows for x in r]), pivots, len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


def kernel_basis(m: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space {v : m v = 0}, one tuple per vector.

    The basis is the standard one read off the reduced echelon form: one
    vector per free column, with a 1 in that column.
    """
    red, pivots, _ = rref(m)
    free = [j for j in range(m.cols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r, f]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, rhs: Sequence) -> tuple[Fraction, ...] | None:
    """One solution x of m x = rhs, or None when the system is inconsistent."""
    aug = [list(m.row(i)) + [Fraction(rhs[i])] for i in range(m.rows)]
    red, pivots = _rref_rows(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        x[p] = red[r][m.cols]
    return tuple(x)


# -- polynomials (coefficient lists, highest degree first) -----------------

def charpoly(m: Matrix) -> list[Fraction]:
    """Monic characteristic polynomial det(tI - m), highest degree first.

    Faddeev-LeVerrier recursion; exact over Q because every division is by
    an integer.
    """
    if not m.is_square:
        raise ShapeMismatch("charpoly needs a square matrix")
    n = m.rows
    coeffs = [Fraction(1)]
    ident = Matrix.identity(n)
    mk = Matrix.zeros(n)
    for k in range(1, n + 1):
        mk = m @ mk + coeffs[-1] * ident
        coeffs.append(-(m @ mk).trace() / k)
    return coeffs


def polyval(coeffs: Sequence, m: Matrix) -> Matrix:
    """Evaluate a polynomial (highest degree first) at a square matrix."""
    n = m.rows
    acc = Matrix.zeros(n)
    ident = Matrix.identity(n)
    for c in coeffs:
        acc = acc @ m + Fraction(c) * ident
    return acc


_t = sympy.Symbol("t")


def to_sympy_poly(coeffs: Sequence) -> sympy.Poly:
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in map(Fraction, coeffs)],
                      _t, domain=sympy.QQ)


def from_sympy_poly(p: sympy.Poly) -> list[Fraction]:
    return [Fraction(int(c.numerator), int(c.denominator)) for c in p.all_coeffs()]


def squarefree_part(coeffs: Sequence) -> list[Fraction]:
    """Monic squarefree part p / gcd(p, p')."""
    p = to_sympy_poly(coeffs)
    if p.degree() <= 0:
        return [Fraction(1)]
    q = p.quo(p.gcd(p.diff(_t))).monic()
    return from_sympy_poly(q)


def poly_derivative(coeffs: Sequence) -> list[Fraction]:
    n = len(coeffs) - 1
    return [Fraction(c) * (n - i) for i, c in enumerate(coeffs[:-1])] or [Fraction(0)]


@dataclass(frozen=True)
class JordanPair:
    semisimple: Matrix
    nilpotent: Matrix


def jordan_chevalley(m: Matrix) -> JordanPair:
    """Additive Jordan-Chevalley decomposition m = s + n over Q.

    Newton iteration s <- s - q(s) q'(s)^-1 where q is the squarefree part
    of the characteristic polynomial.  Every iterate is a polynomial in m,
    so s stays rational and commutes with m.
    """
    if not m.is_square:
        raise ShapeMismatch("jordan_chevalley needs a square matrix")
    n = m.rows
    if n == 0:
        return JordanPair(m, m)
    q = squarefree_part(charpoly(m))
    dq = poly_derivative(q)
    s = m
    # quadratic convergence: the nilpotency index halves each step
    for _ in range(n.bit_length() + 2):
        qs = polyval(q, s)
        if qs.is_zero():
            return JordanPair(s, m - s)
        s = s - qs @ polyval(dq, s).inverse()
    raise InvariantBreach("Jordan-Chevalley Newton iteration did not converge")


def is_nilpotent(m: Matrix) -> bool:
    return all(c == 0 for c in charpoly(m)[1:])


# -- spans -----------------------------------------------------------------

class Echelon:
    """Incrementally built row echelon basis of a subspace of Q^N.

    Vectors are sparse ``{column: Fraction}`` dicts; any orderable column
    keys work (ints for flattened matrices, words for tensor coordinates).
    Rows are kept normalised with a leading 1 but not back-reduced;
    :meth:`reduced` produces the canonical (reduced) basis on demand.
    """

    def __init__(self):
        self._rows: dict = {}

    def __len__(self):
        return len(self._rows)

    def copy(self) -> "Echelon":
        e = Echelon()
        e._rows = dict(self._rows)
        return e

    def residue(self, vec: dict) -> dict:
        v = {k: x for k, x in vec.items() if x}
        rows = self._rows
        while v:
            lead = min(v)
            row = rows.get(lead)
            if row is None:
                return v
            c = v[lead]
            for k, x in row.items():
                y = v.get(k, 0) - c * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        return v

    def contains(self, vec: dict) -> bool:
        return not self.residue(vec)

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return True when it enlarged the span."""
        r = self.residue(vec)
        if not r:
            return False
        lead = min(r)
        c = r[lead]
        self._rows[lead] = {k: x / c for k, x in r.items()}
        return True

    def pivots(self) -> list:
        return sorted(self._rows)

    def reduced(self) -> list[dict]:
        """Reduced echelon basis, sorted by pivot."""
        out: dict = {}
        for p in sorted(self._rows, reverse=True):
            row = dict(self._rows[p])
            for q in list(row):
                if q != p and q in out:
                    c = row.get(q)
                    if c:
                        for k, x in out[q].items():
                            y = row.get(k, 0) - c * x
                            if y:
                                row[k] = y
                            else:
                                row.pop(k, None)
            out[p] = row
        return [out[p] for p in sorted(out)]


def to_sparse(vec: Sequence) -> dict:
    return {i: Fraction(x) for i, x in enumerate(vec) if x}


def to_dense(vec: dict, dim: int) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * dim
    for k, x in vec.items():
        out[k] = x
    return tuple(out)


def span_basis(vectors: Iterable[Sequence], dim: int) -> list[tuple[Fraction, ...]]:
    """Canonical (reduced echelon) basis of the span of dense vectors."""
    e = Echelon()
    for v in vectors:
        if len(v) != dim:
            raise ShapeMismatch(f"expected vectors of length {dim}, got {len(v)}")
        e.add(to_sparse(v))
    return [to_dense(r, dim) for r in e.reduced()]


def subspace_closure(vectors: Sequence[Sequence], product: Callable,
                     antisymmetric: bool = False) -> list[tuple[Fraction, ...]]:
    """Smallest subspace containing ``vectors`` and closed under ``product``.

    ``product(u, v)`` takes and returns dense vectors of the common length.
    With ``antisymmetric=True`` only one ordering of each pair is formed and
    squares are skipped.  New elements are only multiplied against elements
    already present, so every pair is formed once.  The returned basis is
    the reduced echelon basis, hence independent of input order.
    """
    vectors = [tuple(Fraction(x) for x in v) for v in vectors]
    if not vectors:
        return []
    dim = len(vectors[0])
    if any(len(v) != dim for v in vectors):
        raise ShapeMismatch("subspace_closure: vectors of different lengths")
    span = Echelon()
    elems: list[tuple] = []
    for v in vectors:
        if span.add(to_sparse(v)):
            elems.append(v)
    i = 0
    while i < len(elems):
        x = elems[i]
        for j in range(i + 1):
            y = elems[j]
            if antisymmetric and i == j:
                continue
            prods = [product(x, y)] if antisymmetric else [product(x, y), product(y, x)]
            for p in prods:
                if len(p) != dim:
                    raise ShapeMismatch("product left the ambient space")
                if span.add(to_sparse(p)):
                    elems.append(tuple(p))
        i += 1
    return [to_dense(r, dim) for r in span.reduced()]
