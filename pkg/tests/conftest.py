import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from diffgalois.exact import Matrix  # noqa: E402


def rand_matrix(rng: random.Random, r: int, c: int | None = None, lo=-3, hi=3, density=1.0) -> Matrix:
    c = r if c is None else c
    return Matrix(r, c, [rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(r * c)])


def rand_unimodular(rng: random.Random, n: int) -> Matrix:
    """Random integer matrix with determinant 1 (product of elementary matrices)."""
    p = Matrix.identity(n)
    for _ in range(2 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        e = [[int(a == b) for b in range(n)] for a in range(n)]
        e[i][j] = rng.choice([-2, -1, 1, 2])
        p = p @ Matrix.from_rows(e)
    return p


@pytest.fixture
def rng():
    return random.Random(20240611)


def matrices(n, lo=-3, hi=3):
    return st.lists(st.integers(lo, hi), min_size=n * n, max_size=n * n).map(lambda e: Matrix(n, n, e))


def rect_matrices(max_rows=4, max_cols=4, lo=-4, hi=4):
    return st.tuples(st.integers(1, max_rows), st.integers(1, max_cols)).flatmap(
        lambda rc: st.lists(st.integers(lo, hi), min_size=rc[0] * rc[1], max_size=rc[0] * rc[1]).map(
            lambda e: Matrix(rc[0], rc[1], e)))


fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30).map(Fraction)


def _block(rng: random.Random, kind: int) -> Matrix:
    """Random element of Q[C] for C the companion of t^2 - kind (kind 0: a rational scalar)."""
    a, b = rng.randint(-2, 2), rng.randint(-2, 2)
    if kind == 0:
        return Matrix.from_rows([[a]])
    return Matrix.from_rows([[a, kind * b], [b, a]])


def scoped_envelope_input(rng: random.Random) -> tuple[int, list[Matrix]]:
    """Generators whose Lie closure keeps every eigenvalue in Q or one Q(sqrt d).

    Three shapes: upper triangular (rational spectrum), arbitrary 2x2
    (spectrum in a quadratic field), and block upper triangular with
    diagonal blocks in Q[C_d].  Each is conjugated by a unimodular matrix.
    """
    shape = rng.choice(["triangular", "two", "blocks"])
    count = rng.randint(1, 2)
    if shape == "two":
        n = 2
        mats = [rand_matrix(rng, 2, lo=-2, hi=2) for _ in range(count)]
    elif shape == "triangular":
        n = rng.randint(2, 3)
        mats = [Matrix(n, n, [rng.randint(-2, 2) if i <= j else 0 for i in range(n) for j in range(n)])
                for _ in range(count)]
    else:
        d = rng.choice([2, 3, -1, 5])
        layout = rng.choice([(1, 2), (2, 1), (2, 2)])
        n = sum(layout)
        mats = []
        for _ in range(count):
            m = [[0] * n for _ in range(n)]
            off = 0
            for size in layout:
                blk = _block(rng, 0 if size == 1 else d).to_rows()
                for i in range(size):
                    for j in range(size):
                        m[off + i][off + j] = blk[i][j]
                off += size
            # strictly upper block part
            for j in range(layout[0], n):
                for i in range(layout[0]):
                    m[i][j] = rng.randint(-1, 1)
            mats.append(Matrix.from_rows(m))
    p = rand_unimodular(rng, n)
    pi = p.inverse()
    return n, [m.conjugate(p, pi) for m in mats]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "acceptance_results", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(results):
        terminalreporter.write_line(line[1])
