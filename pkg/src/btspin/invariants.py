"""Memoized invariants of knot diagrams.

Diagrams are immutable and hashable, so repeated decisions over the same
knots reuse earlier work.
"""

from __future__ import annotations

from functools import lru_cache

from .alexander import alexander_polynomial, branched_cover_h1_order
from .codec import KnotDiagram
from .finite import builtin_groups, count_homs
from .groups import orbifold_group
from .laurent import LaurentPoly
from .wirtinger import FinitePresentation, tietze_simplify, wirtinger_presentation

# groups used to certify non-triviality of a knot group (Z has exactly |G| homs)
_WITNESS_GROUPS = ("S3", "D5", "A4", "SL(2,Z3)")


@lru_cache(maxsize=512)
def knot_group_simplified(d: KnotDiagram) -> FinitePresentation:
    return tietze_simplify(wirtinger_presentation(d))


@lru_cache(maxsize=512)
def knot_alexander(d: KnotDiagram) -> LaurentPoly:
    return alexander_polynomial(knot_group_simplified(d), simplify=False)


def knot_determinant(d: KnotDiagram) -> int:
    return abs(knot_alexander(d)(-1))


@lru_cache(maxsize=2048)
def cover_h1_order(d: KnotDiagram, m: int) -> int:
    return branched_cover_h1_order(knot_alexander(d), m)


@lru_cache(maxsize=2048)
def orbifold_hom_vector(d: KnotDiagram, m: int) -> tuple[tuple[str, int], ...]:
    """Hom counts from the order-m orbifold group of ``d`` into every built-in group."""
    p = tietze_simplify(orbifold_group(knot_group_simplified(d), m))
    return tuple(
        (G.name, count_homs(p, G, simplify=False, conjugate_generators=True))
        for G in builtin_groups()
    )


@lru_cache(maxsize=512)
def nontriviality(d: KnotDiagram) -> tuple[bool | None, str]:
    """Computed certificate: (True, reason) if provably knotted, (False, reason) if
    provably trivial, (None, reason) if undecided."""
    if d.is_trivial_diagram():
        return False, "0-crossing diagram"
    p = knot_group_simplified(d)
    if p.generator_count == 1 and not p.relators:
        return False, "knot group simplifies to Z"
    delta = knot_alexander(d)
    if delta != LaurentPoly.const(1):
        return True, f"Alexander polynomial {delta} != 1"
    for G in builtin_groups():
        if G.name in _WITNESS_GROUPS:
            c = count_homs(p, G, simplify=False, conjugate_generators=True)
            if c > G.order:
                return True, f"{c} homomorphisms to {G.name} (Z has {G.order})"
    return None, "no certificate found"
