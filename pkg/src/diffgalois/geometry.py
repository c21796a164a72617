"""Wedge data of a smooth projective variety.

A :class:`WedgeData` records the alternating map
H^0(X, Omega^1) x H^0(X, Omega^1) -> H^0(X, Omega^2) through its structure
constants: ``theta_k ^ theta_l = sum_i beta[i, k, l] sigma_i``.  Indices
are 1-based throughout, matching the usual notation for these tables.

The package never computes cohomology: the table is an input, either one
of the standard models below or a user-supplied file.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .errors import IndexOutOfRange, NotAlternating


@dataclass(frozen=True)
class WedgeData:
    """Alternating wedge table, stored only for k < l and only nonzero entries.

    ``coefficients`` is a tuple of ``((i, k, l), value)`` pairs sorted by key,
    which keeps the object hashable and its equality canonical.  The label
    is provenance only and does not take part in equality.
    """

    one_form_count: int
    two_form_count: int
    coefficients: tuple = ()
    label: str = field(default="", compare=False)

    def __post_init__(self):
        g, h = self.one_form_count, self.two_form_count
        if g < 0 or h < 0:
            raise IndexOutOfRange("form counts must be non-negative")
        clean = {}
        for (i, k, l), v in self.coefficients:
            if not (1 <= i <= h and 1 <= k <= g and 1 <= l <= g):
                raise IndexOutOfRange(f"index (i={i}, k={k}, l={l}) out of range for g={g}, h={h}")
            if k >= l:
                raise NotAlternating(i, k, l, "stored entries must have k < l")
            v = Fraction(v)
            if v:
                clean[(i, k, l)] = v
        object.__setattr__(self, "coefficients", tuple(sorted(clean.items())))

    @property
    def g(self) -> int:
        return self.one_form_count

    @property
    def h(self) -> int:
        return self.two_form_count

    def table(self) -> dict:
        return dict(self.coefficients)

    def coefficient(self, i: int, k: int, l: int) -> Fraction:
        """Full alternating table entry beta_i^{(kl)}, for any k, l."""
        if k == l:
            return Fraction(0)
        t = self.table()
        if k < l:
            return t.get((i, k, l), Fraction(0))
        return -t.get((i, l, k), Fraction(0))

    def relator_terms(self, i: int) -> dict:
        """``{(k, l): beta_i^{(kl)}}`` over k < l for the i-th 2-form."""
        return {(k, l): v for (j, k, l), v in self.coefficients if j == i}


def curve_model(genus: int) -> WedgeData:
    """A smooth projective curve of the given genus: no 2-forms at all."""
    if genus < 0:
        raise IndexOutOfRange("genus must be non-negative")
    return WedgeData(genus, 0, (), label=f"curve of genus {genus}")


def abelian_model(dim: int) -> WedgeData:
    """An abelian variety of dimension ``dim``.

    The wedge map is the full exterior square: sigma_(k,l) = theta_k ^ theta_l
    for k < l, numbered in lexicographic order of (k, l).
    """
    if dim < 1:
        raise IndexOutOfRange("abelian variety dimension must be >= 1")
    pairs = list(combinations(range(1, dim + 1), 2))
    coeffs = tuple(((i, k, l), Fraction(1)) for i, (k, l) in enumerate(pairs, start=1))
    return WedgeData(dim, len(pairs), coeffs, label=f"abelian variety of dimension {dim}")


def validate(g: int, h: int, entries: Iterable, label: str = "") -> WedgeData:
    """Build WedgeData from a raw table.

    ``entries`` is an iterable of ``(i, k, l, value)`` or a mapping
    ``{(i, k, l): value}``.  Both triangles may be given; a full table is
    cross-checked for antisymmetry instead of being silently symmetrised.
    """
    if isinstance(entries, Mapping):
        entries = [(i, k, l, v) for (i, k, l), v in entries.items()]
    seen: dict = {}
    for i, k, l, v in entries:
        if not (1 <= i <= h and 1 <= k <= g and 1 <= l <= g):
            raise IndexOutOfRange(f"index (i={i}, k={k}, l={l}) out of range for g={g}, h={h}")
        v = Fraction(v)
        if (i, k, l) in seen and seen[(i, k, l)] != v:
            raise NotAlternating(i, k, l, "conflicting duplicate entries")
        seen[(i, k, l)] = v
    stored = {}
    for (i, k, l), v in seen.items():
        if k == l:
            if v:
                raise NotAlternating(i, k, l, "diagonal entry must vanish")
            continue
        a, b = (k, l) if k < l else (l, k)
        sign = 1 if k < l else -1
        partner = seen.get((i, l, k))
        if partner is not None and partner != -v:
            raise NotAlternating(i, a, b, f"beta^({k}{l})={v} but beta^({l}{k})={partner}")
        stored[(i, a, b)] = sign * v
    return WedgeData(g, h, tuple(stored.items()), label=label)
