from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import fractions, matrices, rect_matrices
from oracles import from_sympy, to_sympy
from diffgalois.errors import ShapeMismatch
from diffgalois.exact import (Matrix, bracket, charpoly, companion, format_scalar, is_nilpotent,
                              jordan_chevalley, kernel_basis, parse_scalar, polyval, rank, rref,
                              solve, subspace_closure)

E = Matrix.unit


def test_scalar_parsing():
    assert parse_scalar("3") == 3
    assert parse_scalar("-1/2") == Fraction(-1, 2)
    assert parse_scalar("4/6") == Fraction(2, 3)
    for bad in ["1.5", "1/-2", " 1", "", "1/", "a", "1e3"]:
        with pytest.raises(ValueError):
            parse_scalar(bad)
    with pytest.raises(ZeroDivisionError):
        parse_scalar("1/0")


@given(fractions)
def test_scalar_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


def test_rref_examples():
    i2 = Matrix.identity(2)
    assert rref(i2) == (i2, [0, 1], 2)
    red, piv, r = rref(Matrix.from_rows([[1, 2], [2, 4]]))
    assert red == Matrix.from_rows([[1, 2], [0, 0]]) and piv == [0] and r == 1
    z = Matrix.zeros(3)
    assert rref(z) == (z, [], 0)


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(2)) == []
    (v,) = kernel_basis(Matrix.from_rows([[1, 2], [2, 4]]))
    assert v == (-2, 1)
    assert len(kernel_basis(Matrix.zeros(1, 3))) == 3


@given(rect_matrices())
def test_rref_matches_sympy(m):
    red, piv, r = rref(m)
    sred, spiv = to_sympy(m).rref()
    assert red == from_sympy(sred)
    assert tuple(piv) == spiv


@given(rect_matrices())
def test_rref_idempotent_and_rank_nullity(m):
    red, _, r = rref(m)
    assert rref(red)[0] == red
    ker = kernel_basis(m)
    assert r + len(ker) == m.cols
    for v in ker:
        assert m @ Matrix(m.cols, 1, v) == Matrix.zeros(m.rows, 1)


@given(rect_matrices(), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_solve(m, x):
    rhs = (m @ Matrix(m.cols, 1, x[:m.cols] + [0] * (m.cols - len(x[:m.cols])))).entries
    sol = solve(m, rhs)
    assert sol is not None
    assert (m @ Matrix(m.cols, 1, sol)).entries == rhs


def test_solve_inconsistent():
    assert solve(Matrix.from_rows([[1, 1], [1, 1]]), [0, 1]) is None


def test_charpoly_examples():
    assert charpoly(Matrix.diag([1, 2])) == [1, -3, 2]
    assert charpoly(Matrix.zeros(2)) == [1, 0, 0]
    assert charpoly(companion([1, 0, -2])) == [1, 0, -2]
    with pytest.raises(ShapeMismatch):
        charpoly(Matrix.zeros(2, 3))


@given(st.integers(1, 4).flatmap(matrices))
def test_charpoly_matches_sympy(m):
    t = sympy.Symbol("t")
    expected = [Fraction(int(c.p), int(c.q)) for c in to_sympy(m).charpoly(t).all_coeffs()]
    assert charpoly(m) == expected
    # Cayley-Hamilton
    assert polyval(charpoly(m), m).is_zero()


def test_jordan_chevalley_examples():
    n = Matrix.from_rows([[0, 1], [0, 0]])
    jp = jordan_chevalley(n)
    assert jp.semisimple == Matrix.zeros(2) and jp.nilpotent == n
    d = Matrix.diag([1, 2])
    jp = jordan_chevalley(d)
    assert jp.semisimple == d and jp.nilpotent == Matrix.zeros(2)
    jp = jordan_chevalley(Matrix.from_rows([[1, 1], [0, 1]]))
    assert jp.semisimple == Matrix.identity(2) and jp.nilpotent == n
    with pytest.raises(ShapeMismatch):
        jordan_chevalley(Matrix.zeros(2, 1))


def _is_polynomial_in(s: Matrix, m: Matrix) -> bool:
    """Solve s = sum c_k m^k (k < n) as a linear system in the c_k."""
    n = m.rows
    powers = [Matrix.identity(n)]
    for _ in range(1, n):
        powers.append(powers[-1] @ m)
    system = Matrix(n * n, n, [p.entries[i] for i in range(n * n) for p in powers])
    return solve(system, s.entries) is not None


def _squarefree_minpoly(s: Matrix) -> bool:
    t = sympy.Symbol("t")
    S = to_sympy(s)
    p = S.charpoly(t).as_expr()
    q = sympy.Poly(sympy.sqf_part(p), t) if S.rows else None
    # s semisimple iff the squarefree part of its charpoly kills it
    val = sympy.zeros(S.rows)
    for c in q.all_coeffs():
        val = val * S + c * sympy.eye(S.rows)
    return val.is_zero_matrix


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: matrices(n, -2, 2)))
def test_jordan_chevalley_invariants(m):
    jp = jordan_chevalley(m)
    s, n = jp.semisimple, jp.nilpotent
    assert s + n == m
    assert s @ n == n @ s
    assert is_nilpotent(n)
    p = n
    for _ in range(m.rows - 1):
        p = p @ n
    assert p.is_zero()
    assert _squarefree_minpoly(s)
    assert _is_polynomial_in(s, m)


def test_jordan_chevalley_against_sympy_jordan_form():
    m = Matrix.from_rows([[2, 1, 0, 0], [0, 2, 0, 0], [0, 0, 0, -2], [0, 0, 1, 0]])
    m = m.conjugate(Matrix.from_rows([[1, 1, 0, 2], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]]))
    P, J = to_sympy(m).jordan_form()
    D = sympy.diag(*[J[i, i] for i in range(J.rows)])
    expected = from_sympy(sympy.simplify(P * D * P.inv()))
    assert jordan_chevalley(m).semisimple == expected


def test_subspace_closure_examples():
    zero = lambda u, v: (Fraction(0),) * len(u)  # noqa: E731
    assert subspace_closure([(1, 2, 0)], zero) == [(1, 2, 0)]

    def comm(u, v):
        return bracket(Matrix.from_flat(2, u), Matrix.from_flat(2, v)).entries

    sl2 = subspace_closure([E(2, 0, 1).entries, E(2, 1, 0).entries], comm)
    assert len(sl2) == 3
    h = (E(2, 0, 0) - E(2, 1, 1)).entries
    assert sorted(sl2) == sorted([h, E(2, 0, 1).entries, E(2, 1, 0).entries])
    gl2 = [E(2, i, j).entries for i in range(2) for j in range(2)]
    assert len(subspace_closure(gl2, comm)) == 4
    with pytest.raises(ShapeMismatch):
        subspace_closure([(1, 0), (1, 0, 0)], zero)


@settings(max_examples=40, deadline=None)
@given(st.lists(matrices(2, -2, 2), min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_subspace_closure_closed_monotone_idempotent(mats, r):
    def comm(u, v):
        return bracket(Matrix.from_flat(2, u), Matrix.from_flat(2, v)).entries

    vecs = [m.entries for m in mats]
    basis = subspace_closure(vecs, comm, antisymmetric=True)
    assert subspace_closure(basis, comm, antisymmetric=True) == basis
    k = rank(Matrix.from_rows(basis)) if basis else 0
    assert k == len(basis)
    for u in basis:
        for v in basis:
            assert rank(Matrix.from_rows(basis + [comm(u, v)])) == k
    # the non-antisymmetric path agrees
    assert subspace_closure(vecs, comm) == basis
    # monotone: more generators, bigger closure
    bigger = subspace_closure(vecs + [E(2, 0, 0).entries], comm, antisymmetric=True)
    assert all(rank(Matrix.from_rows(bigger + [u])) == len(bigger) for u in basis)
    shuffled = list(vecs)
    r.shuffle(shuffled)
    assert subspace_closure(shuffled, comm, antisymmetric=True) == basis


def test_matrix_basics():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    assert a.T == Matrix.from_rows([[1, 3], [2, 4]])
    assert a.inverse() @ a == Matrix.identity(2)
    assert a.trace() == 5
    assert a.kron(Matrix.identity(1)) == a
    k = Matrix.identity(2).kron(a)
    assert k[2, 2] == 1 and k[3, 3] == 4 and k[0, 2] == 0
    with pytest.raises(ZeroDivisionError):
        Matrix.from_rows([[1, 2], [2, 4]]).inverse()
    with pytest.raises(ShapeMismatch):
        a @ Matrix.zeros(3)
    with pytest.raises(AttributeError):
        a.rows = 3
    assert hash(a) == hash(Matrix.from_rows([[1, 2], [3, 4]]))
