"""Fox calculus, Alexander polynomials, determinants and branched-cover homology."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import PresentationError
from .laurent import ONE, LaurentPoly, gcd_all, poly_det, resultant
from .wirtinger import FinitePresentation, Word, free_reduce, tietze_simplify


def fox_derivative(word: Sequence[int], j: int) -> dict[Word, int]:
    """Fox derivative of ``word`` with respect to generator ``j`` (1-based).

    The result is an element of the integral group ring of the free group,
    returned as ``{freely reduced word: coefficient}`` with zero terms removed.
    """
    out: dict[Word, int] = defaultdict(int)
    prefix: list[int] = []
    for x in word:
        if x == j:
            out[free_reduce(prefix)] += 1
        prefix.append(x)
        if x == -j:
            out[free_reduce(prefix)] -= 1
    return {w: c for w, c in out.items() if c}


@dataclass(frozen=True)
class AlexanderMatrix:
    """Fox Jacobian with every generator sent to ``t``; rows are relators."""

    entries: tuple[tuple[LaurentPoly, ...], ...]
    cols: int

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def evaluate(self, t: int) -> list[list]:
        return [[e(t) for e in row] for row in self.entries]


def _check_wirtinger_like(p: FinitePresentation) -> None:
    from .finite import smith_normal_form
    mat = p.exponent_matrix()
    if any(sum(row) for row in mat):
        raise PresentationError("relators must have exponent sum 0 for every generator -> t")
    diag = smith_normal_form(mat, p.generator_count)
    if diag != [1] * (p.generator_count - 1) + [0]:
        raise PresentationError("abelianization does not identify all generators with t")


def alexander_matrix(p: FinitePresentation) -> AlexanderMatrix:
    _check_wirtinger_like(p)
    n = p.generator_count
    rows = []
    for r in p.relators:
        row = []
        for j in range(1, n + 1):
            terms: dict[int, int] = defaultdict(int)
            for w, c in fox_derivative(r, j).items():
                terms[sum(1 if x > 0 else -1 for x in w)] += c
            row.append(LaurentPoly.from_dict(terms))
        rows.append(tuple(row))
    return AlexanderMatrix(tuple(rows), n)


def elementary_ideal_generators(m: AlexanderMatrix) -> list[LaurentPoly]:
    """All (n-1)-minors of an r x n Alexander matrix, deleting each column in turn."""
    n = m.cols
    k = n - 1
    if k == 0:
        return [ONE]
    minors = []
    for drop in range(n):
        cols = [j for j in range(n) if j != drop]
        for rows in combinations(range(m.rows), k):
            minors.append(poly_det([[m.entries[i][j] for j in cols] for i in rows]))
    return minors


def alexander_polynomial(p: FinitePresentation, simplify: bool = True) -> LaurentPoly:
    """Generator of the first elementary ideal, in normal form.

    With ``simplify`` the presentation is first reduced by Tietze moves; the
    elementary ideals do not change, and the minors get much smaller.
    """
    if simplify:
        p = tietze_simplify(p)
    g = gcd_all(elementary_ideal_generators(alexander_matrix(p)))
    if g.is_zero():
        raise PresentationError("all minors vanish: not a knot group presentation")
    return g.normalized()


def determinant(p: FinitePresentation) -> int:
    return abs(alexander_polynomial(p)(-1))


def _torus_args(p: int, q: int) -> None:
    if p < 2 or q < 2 or math.gcd(p, q) != 1:
        raise ValueError(f"torus knot needs coprime p, q >= 2, got ({p},{q})")


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """(1 - t^pq)(1 - t) / ((1 - t^p)(1 - t^q)) by exact division."""
    _torus_args(p, q)
    one_minus = lambda k: ONE - LaurentPoly.monomial(k)  # noqa: E731
    num = one_minus(p * q) * one_minus(1)
    den = one_minus(p) * one_minus(q)
    return num.divexact(den).normalized()


def torus_determinant(p: int, q: int) -> int:
    _torus_args(p, q)
    if p % 2 == 0:
        return q
    if q % 2 == 0:
        return p
    return 1


def branched_cover_h1_order(delta: LaurentPoly, m: int) -> int:
    """Order of H_1 of the m-fold cyclic branched cover; 0 means infinite.

    Equals ``|prod_{i=1}^{m-1} delta(zeta_m^i)|``, computed exactly as the
    resultant of ``delta`` and ``1 + t + ... + t^(m-1)``.
    """
    if m < 2:
        raise ValueError("branched covers need m >= 2")
    if delta.is_zero():
        return 0
    return abs(resultant(delta, LaurentPoly([1] * m)))


__all__ = [
    "AlexanderMatrix",
    "alexander_matrix",
    "alexander_polynomial",
    "branched_cover_h1_order",
    "determinant",
    "elementary_ideal_generators",
    "fox_derivative",
    "torus_alexander",
    "torus_determinant",
]
