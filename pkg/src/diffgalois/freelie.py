"""Free Lie algebras, Lyndon bases and the graded quotient L_beta.

Conventions
-----------
* Generators are the integers ``1..g``; a word is a tuple of generators.
* A bracket tree is either a generator (int) or a pair ``(left, right)``
  meaning [left, right].
* Elements of the tensor algebra are sparse dicts ``{word: Fraction}``.
  The free Lie algebra sits inside via [x, y] = xy - yx, and every
  computation on L_beta happens in these coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import divisors, mobius

from .errors import ResourceCapExceeded, ShapeMismatch
from .exact import Echelon, Matrix, bracket
from .geometry import WedgeData

DEFAULT_MAX_DEGREE = 6
DEFAULT_MAX_COORDS = 100_000


# -- words -----------------------------------------------------------------

def is_lyndon(word: Sequence[int]) -> bool:
    """Strictly smaller than every proper rotation."""
    w = tuple(word)
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


def lyndon_words(g: int, n: int) -> list[tuple[int, ...]]:
    """All Lyndon words of length ``n`` over ``1..g`` in lexicographic order.

    Duval's algorithm enumerates every Lyndon word of length <= n in
    lexicographic order; the ones of exact length n are kept.
    """
    if g < 1 or n < 1:
        raise ValueError("lyndon_words needs g >= 1 and n >= 1")
    out = []
    w = [0]  # letters are 0-based internally
    while w:
        if len(w) == n:
            out.append(tuple(c + 1 for c in w))
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == g - 1:
            w.pop()
        if w:
            w[-1] += 1
    return out


def witt_dimension(g: int, n: int) -> int:
    """Dimension of the degree-n part of the free Lie algebra on g generators."""
    if g < 1 or n < 1:
        raise ValueError("witt_dimension needs g >= 1 and n >= 1")
    total = sum(int(mobius(d)) * g ** (n // d) for d in divisors(n))
    return total // n


def standard_bracketing(word: Sequence[int]):
    """Bracket tree of a Lyndon word via its standard factorisation.

    w = uv with v the longest proper suffix that is Lyndon; the tree is
    [b(u), b(v)].  For words like 1..12 this is right-normed.
    """
    w = tuple(word)
    if not is_lyndon(w):
        raise ValueError(f"{w} is not a Lyndon word")
    if len(w) == 1:
        return w[0]
    i = next(i for i in range(1, len(w)) if is_lyndon(w[i:]))
    return (standard_bracketing(w[:i]), standard_bracketing(w[i:]))


def tree_degree(tree) -> int:
    if isinstance(tree, int):
        return 1
    return tree_degree(tree[0]) + tree_degree(tree[1])


@dataclass(frozen=True)
class LyndonBasisElement:
    word: tuple
    bracketing: object
    degree: int


def lyndon_basis(g: int, n: int) -> list[LyndonBasisElement]:
    return [LyndonBasisElement(w, standard_bracketing(w), len(w)) for w in lyndon_words(g, n)]


# -- tensor coordinates ----------------------------------------------------

def tensor_product(x: dict, y: dict) -> dict:
    out: dict = {}
    for u, a in x.items():
        for v, b in y.items():
            k = u + v
            s = out.get(k, 0) + a * b
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def tensor_bracket(x: dict, y: dict) -> dict:
    out = tensor_product(x, y)
    for k, c in tensor_product(y, x).items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def tensor_of(tree) -> dict:
    """Sparse tensor-algebra expansion of a bracket tree."""
    if isinstance(tree, int):
        return {(tree,): Fraction(1)}
    return tensor_bracket(tensor_of(tree[0]), tensor_of(tree[1]))


def word_index(word: Sequence[int], g: int) -> int:
    """Position of ``word`` among all g^n words of its length, lexicographically."""
    idx = 0
    for c in word:
        idx = idx * g + (c - 1)
    return idx


def expand_bracket(tree, g: int) -> tuple[Fraction, ...]:
    """Dense coordinate vector (length g^degree) of a bracket tree."""
    n = tree_degree(tree)
    out = [Fraction(0)] * (g ** n)
    for w, c in tensor_of(tree).items():
        if any(not 1 <= x <= g for x in w):
            raise ValueError(f"generator out of range in {w}")
        out[word_index(w, g)] = c
    return tuple(out)


def evaluate_tensor(elem: dict, mats: Sequence[Matrix]) -> Matrix:
    """Image of a tensor element under t_k -> mats[k-1] (an algebra map)."""
    if not mats:
        raise ShapeMismatch("need at least one matrix to evaluate")
    r = mats[0].rows
    acc = Matrix.zeros(r)
    for w, c in elem.items():
        prod = mats[w[0] - 1]
        for x in w[1:]:
            prod = prod @ mats[x - 1]
        acc = acc + c * prod
    return acc


# -- relators --------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticRelator:
    """sum_{k<l} c_kl [t_k, t_l], stored as sorted ((k, l), c) pairs."""

    terms: tuple

    def tensor(self) -> dict:
        out: dict = {}
        for (k, l), c in self.terms:
            out[(k, l)] = out.get((k, l), 0) + c
            out[(l, k)] = out.get((l, k), 0) - c
        return {w: c for w, c in out.items() if c}

    def evaluate(self, mats: Sequence[Matrix]) -> Matrix:
        """sum c_kl [A_k, A_l]."""
        r = mats[0].rows
        acc = Matrix.zeros(r)
        for (k, l), c in self.terms:
            acc = acc + c * bracket(mats[k - 1], mats[l - 1])
        return acc


def relators_from_beta(beta: WedgeData) -> list[QuadraticRelator]:
    """The h quadratic Lie relators, one per 2-form (possibly zero)."""
    return [QuadraticRelator(tuple(sorted(beta.relator_terms(i).items())))
            for i in range(1, beta.h + 1)]


# -- the graded quotient ---------------------------------------------------

@dataclass(frozen=True)
class DegreeComponent:
    """Degree-n piece of L_beta = L / K_beta.

    ``words`` are Lyndon words whose standard brackets map to a basis of the
    quotient; ``basis`` holds their tensor expansions.  ``ideal_basis`` is an
    echelon basis of the ideal's degree-n part, in the same coordinates.
    """

    degree: int
    dim: int
    free_dim: int
    ideal_dim: int
    words: tuple
    basis: tuple
    ideal_basis: tuple


@dataclass(frozen=True)
class GradedLieQuotient:
    generator_count: int
    relators: tuple
    max_degree: int
    components: tuple

    @property
    def dims(self) -> list[int]:
        return [c.dim for c in self.components]

    def component(self, n: int) -> DegreeComponent:
        return self.components[n - 1]


def graded_dims(beta: WedgeData, max_degree: int = DEFAULT_MAX_DEGREE,
                max_coords: int = DEFAULT_MAX_COORDS) -> GradedLieQuotient:
    """Graded pieces of L_beta up to ``max_degree``.

    The degree-n part of the Lie ideal K_beta is built recursively:
    I_2 is spanned by the relators and I_n = sum_{k<n} [L_{n-k}, I_k]
    with L_m the degree-m part of the free Lie algebra.  Then
    dim L_beta,n = Witt(g, n) - dim I_n.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    g = beta.g
    if g ** max_degree > max_coords:
        raise ResourceCapExceeded(
            f"g^N = {g}^{max_degree} = {g ** max_degree} coordinates exceeds cap {max_coords}")
    relators = tuple(relators_from_beta(beta))
    if g == 0:
        comps = tuple(DegreeComponent(n, 0, 0, 0, (), (), ()) for n in range(1, max_degree + 1))
        return GradedLieQuotient(0, relators, max_degree, comps)

    free: dict[int, list[dict]] = {}
    ideal: dict[int, list[dict]] = {}
    comps = []
    for n in range(1, max_degree + 1):
        basis = lyndon_basis(g, n)
        free[n] = [tensor_of(b.bracketing) for b in basis]
        span = Echelon()
        if n == 2:
            for r in relators:
                span.add(r.tensor())
        for k in range(2, n):
            for y in ideal[k]:
                if not y:
                    continue
                for x in free[n - k]:
                    span.add(tensor_bracket(x, y))
        ideal[n] = span.reduced()
        ideal_dim = len(ideal[n])
        if ideal_dim == 0:
            # standard Lyndon brackets are a basis of the free Lie algebra
            chosen = list(range(len(basis)))
        else:
            quotient = span.copy()
            chosen = [i for i, x in enumerate(free[n]) if quotient.add(x)]
        comps.append(DegreeComponent(
            degree=n,
            dim=witt_dimension(g, n) - ideal_dim,
            free_dim=len(basis),
            ideal_dim=ideal_dim,
            words=tuple(basis[i].word for i in chosen),
            basis=tuple(free[n][i] for i in chosen),
            ideal_basis=tuple(ideal[n]),
        ))
    return GradedLieQuotient(g, relators, max_degree, tuple(comps))
