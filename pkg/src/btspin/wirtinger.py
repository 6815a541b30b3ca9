"""Finitely presented groups, Wirtinger presentations and Tietze simplification.

A word is a tuple of nonzero ints: ``k`` stands for the k-th generator
(1-based) and ``-k`` for its inverse.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .codec import KnotDiagram
from .errors import PresentationError

Word = tuple[int, ...]

DEFAULT_BUDGET = 10_000


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word: Iterable[int]) -> Word:
    w = free_reduce(word)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def inverse(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def power(gen: int, k: int) -> Word:
    """``x_gen ** k`` as a word."""
    return (gen if k > 0 else -gen,) * abs(k)


def commutator(a: Word, b: Word) -> Word:
    return free_reduce(a + b + inverse(a) + inverse(b))


def exponent_sums(word: Sequence[int], n: int) -> list[int]:
    row = [0] * n
    for x in word:
        row[abs(x) - 1] += 1 if x > 0 else -1
    return row


def _cyclic_key(word: Word) -> Word:
    """Canonical representative of the cyclic word up to rotation and inversion."""
    if not word:
        return word
    cands = []
    for w in (word, inverse(word)):
        cands.extend(w[i:] + w[:i] for i in range(len(w)))
    return min(cands)


@dataclass(frozen=True)
class FinitePresentation:
    """Generators (by display name) and relator words.

    Relators are freely reduced on construction and empty relators dropped.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise PresentationError("a presentation needs at least one generator")
        rels = []
        for r in self.relators:
            r = free_reduce(r)
            for x in r:
                if x == 0 or abs(x) > len(gens):
                    raise PresentationError(f"letter {x} out of range for {len(gens)} generators")
            if r:
                rels.append(r)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def numbered(cls, n: int, relators: Iterable[Sequence[int]], prefix: str = "x"):
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)), tuple(tuple(r) for r in relators))

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    @property
    def relator_count(self) -> int:
        return len(self.relators)

    def exponent_matrix(self) -> list[list[int]]:
        return [exponent_sums(r, self.generator_count) for r in self.relators]

    def word_str(self, word: Sequence[int]) -> str:
        if not word:
            return "1"
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = self.generators[abs(word[i]) - 1]
            k = (j - i) * (1 if word[i] > 0 else -1)
            parts.append(name if k == 1 else f"{name}^{k}")
            i = j
        return " ".join(parts)

    def __str__(self):
        gens = ", ".join(self.generators)
        if not self.relators:
            return f"<{gens} | >"
        rels = ", ".join(self.word_str(r) for r in self.relators)
        return f"<{gens} | {rels}>"

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [list(r) for r in self.relators],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "FinitePresentation":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["generators"]), tuple(tuple(r) for r in data["relators"]))


def wirtinger_presentation(d: KnotDiagram) -> FinitePresentation:
    """One generator per over-arc, one relator per crossing.

    At a crossing with over-arc ``x_i``, incoming under-arc ``x_j`` and
    outgoing under-arc ``x_k`` the relator is ``x_k^-1 x_i^e x_j x_i^-e``
    with ``e`` the crossing sign.  The 0-crossing diagram gives ``<x1 | >``.
    """
    if not d.crossings:
        return FinitePresentation(("x1",), ())
    n_edges = d.arcs
    under_out = {c.c for c in d.crossings}
    # Edge labels follow the orientation; a new arc begins after each under-pass.
    arc_of = [0] * (n_edges + 1)
    cur = 0
    for e in range(1, n_edges + 1):
        if e > 1 and e in under_out:
            cur += 1
        arc_of[e] = cur
    if 1 not in under_out:
        for e in range(n_edges, 0, -1):
            if arc_of[e] != cur:
                break
            arc_of[e] = 0
        count = cur
    else:
        count = cur + 1
    gen = {e: arc_of[e] + 1 for e in range(1, n_edges + 1)}
    relators = []
    for c in d.crossings:
        over = gen[c.b]
        j, k = gen[c.a], gen[c.c]
        e = c.sign
        relators.append((-k, e * over, j, -e * over))
    return FinitePresentation.numbered(count, relators)


# -- Tietze transformations ----------------------------------------------------

def _substitute(word: Word, gen: int, image: Word) -> Word:
    inv = inverse(image)
    out: list[int] = []
    for x in word:
        if x == gen:
            out.extend(image)
        elif x == -gen:
            out.extend(inv)
        else:
            out.append(x)
    return free_reduce(out)


def _dedupe(relators: Iterable[Word]) -> tuple[list[Word], int]:
    out, keys, removed = [], set(), 0
    for r in relators:
        r = cyclic_reduce(r)
        if not r:
            removed += 1
            continue
        key = _cyclic_key(r)
        if key in keys:
            removed += 1
            continue
        keys.add(key)
        out.append(r)
    return out, removed


def _eliminable(relators: list[Word], n: int):
    """Lowest generator occurring exactly once in some relator, with the shortest such relator."""
    for g in range(1, n + 1):
        best = None
        for idx, r in enumerate(relators):
            occ = [i for i, x in enumerate(r) if abs(x) == g]
            if len(occ) == 1 and (best is None or len(r) < len(relators[best[0]])):
                best = (idx, occ[0])
        if best is not None:
            return g, best
    return None


def tietze_simplify(p: FinitePresentation, budget: int = DEFAULT_BUDGET) -> FinitePresentation:
    """Shrink a presentation with isomorphism-preserving moves.

    Moves: cyclic/free reduction of relators, deletion of trivial or duplicate
    relators (equal up to rotation and inversion), and elimination of a
    generator that occurs exactly once in some relator.  Elimination goes
    lowest generator first, using the shortest qualifying relator.  At most
    ``budget`` deletions/eliminations are performed.
    """
    names = list(p.generators)
    relators, removed = _dedupe(p.relators)
    moves = removed
    while moves < budget and len(names) > 1:
        hit = _eliminable(relators, len(names))
        if hit is None:
            break
        g, (ri, pos) = hit
        r = relators[ri]
        # r = u x^e v = 1  =>  x^e = u^-1 v^-1
        u, v, e = r[:pos], r[pos + 1:], 1 if r[pos] > 0 else -1
        image = free_reduce(inverse(u) + inverse(v))
        if e < 0:
            image = inverse(image)
        rest = [_substitute(w, g, image) for k, w in enumerate(relators) if k != ri]
        # renumber generators above g
        renum = [tuple(x - (1 if x > g else -1 if x < -g else 0) for x in w) for w in rest]
        del names[g - 1]
        relators, removed = _dedupe(renum)
        moves += 1 + removed
    return FinitePresentation(tuple(names), tuple(relators))
