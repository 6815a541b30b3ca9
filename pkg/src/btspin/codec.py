"""Knot notation: PD codes, Gauss codes, braid words and a small table of named knots.

PD convention: ``X(a,b,c,d)`` lists the four edge labels counterclockwise,
starting with the incoming under-strand, so the under-strand runs a -> c.  The
crossing is positive when the over-strand runs d -> b.  The direction of the
over-strand is not taken from label arithmetic; it is recovered by walking
the knot, so codes with arbitrary labels are accepted.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import DiagramError, ParseError


class Crossing(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def labels(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def over_in(self) -> int:
        return self.d if self.sign > 0 else self.b

    @property
    def over_out(self) -> int:
        return self.b if self.sign > 0 else self.d


@dataclass(frozen=True)
class KnotDiagram:
    """An oriented knot diagram in canonical form.

    Edge labels run 1..2N along the orientation, so edge ``k`` is followed by
    edge ``k + 1`` (and edge 2N by edge 1).  Crossings are sorted by their
    incoming under-edge.
    """

    crossings: tuple[Crossing, ...]
    name: str | None = field(default=None, compare=False)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def arcs(self) -> int:
        """Number of edge labels (twice the crossing count)."""
        return 2 * len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def is_trivial_diagram(self) -> bool:
        return not self.crossings

    def mirror(self) -> "KnotDiagram":
        flipped = [(c.a, c.d, c.c, c.b) for c in self.crossings]
        return diagram_from_tuples(flipped, name=self.name and f"{self.name}*")

    def __str__(self):
        return emit_pd(self)


# -- PD codes -----------------------------------------------------------------

_GROUP = re.compile(r"[\(\[]([^\(\)\[\]]*)[\)\]]")
_ALLOWED_REST = re.compile(r"^[\sXxPD,;\[\]\(\)]*$")


def parse_pd(text: str, name: str | None = None) -> KnotDiagram:
    """Parse a PD code such as ``X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)``.

    Square or round brackets, an optional ``PD[...]`` wrapper and an optional
    ``X`` prefix per crossing are accepted.  The empty string is the
    0-crossing unknot diagram.
    """
    groups = _GROUP.findall(text)
    rest = _GROUP.sub("", text)
    if not _ALLOWED_REST.match(rest):
        raise ParseError(f"unexpected characters in PD code: {rest.strip()!r}")
    tuples = []
    for g in groups:
        if not g.strip():
            if len(groups) == 1:
                continue
            raise ParseError("empty crossing tuple")
        parts = [p.strip() for p in g.split(",")]
        if len(parts) != 4:
            raise ParseError(f"crossing must have 4 labels, got {len(parts)}: ({g})")
        try:
            labels = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"non-integer label in ({g})") from None
        if any(v <= 0 for v in labels):
            raise ParseError(f"labels must be positive: ({g})")
        tuples.append(labels)
    return diagram_from_tuples(tuples, name=name)


def emit_pd(d: KnotDiagram) -> str:
    return ",".join(f"X({c.a},{c.b},{c.c},{c.d})" for c in d.crossings)


def diagram_from_tuples(tuples: Sequence[Sequence[int]], name: str | None = None) -> KnotDiagram:
    """Validate raw PD 4-tuples and return the canonical diagram."""
    if not tuples:
        return KnotDiagram((), name)
    where: dict[int, list[tuple[int, int]]] = {}
    for ci, t in enumerate(tuples):
        for pos, lab in enumerate(t):
            where.setdefault(lab, []).append((ci, pos))
    bad = sorted(lab for lab, occ in where.items() if len(occ) != 2)
    if bad:
        raise DiagramError(f"labels must occur exactly twice; offending: {bad}")

    def other_end(lab, ci, pos):
        e1, e2 = where[lab]
        return e2 if e1 == (ci, pos) else e1

    # Walk the strand starting on an incoming under-edge, which fixes the
    # orientation: every under-strand must be traversed from position 0 to 2.
    order: list[int] = []
    over_in: dict[int, int] = {}
    seen = set()
    first = tuples[0][0]
    lab, (ci, pos) = first, (0, 0)
    while True:
        order.append(lab)
        if (ci, pos) in seen:
            raise DiagramError("diagram is not a single closed strand")
        if pos == 2:
            raise DiagramError(f"inconsistent orientation at crossing {ci + 1}")
        out_pos = (pos + 2) % 4
        seen.update([(ci, pos), (ci, out_pos)])
        if pos in (1, 3):
            over_in[ci] = pos
        lab = tuples[ci][out_pos]
        ci, pos = other_end(lab, ci, out_pos)
        if lab == first and (ci, pos) == (0, 0):
            break
    if len(order) != len(where):
        raise DiagramError(
            f"diagram has more than one component ({len(order)} of {len(where)} edges on the first)"
        )
    k = order.index(min(order))
    order = order[k:] + order[:k]

    relabel = {old: i + 1 for i, old in enumerate(order)}
    crossings = []
    for ci, t in enumerate(tuples):
        a, b, c, d = (relabel[x] for x in t)
        sign = 1 if over_in[ci] == 3 else -1
        crossings.append(Crossing(a, b, c, d, sign))
    crossings.sort(key=lambda c: c.a)
    return KnotDiagram(tuple(crossings), name)


# -- Gauss codes --------------------------------------------------------------

_GAUSS_ITEM = re.compile(r"^([OoUu])\s*(\d+)\s*([+\-−])?$")


def parse_gauss(text: str, name: str | None = None) -> KnotDiagram:
    """Parse an oriented Gauss code like ``O1+,U2-,O3+,U1+,O2-,U3+``.

    Each crossing must appear once as ``O`` and once as ``U``; the sign may be
    given on either passage (or both, in which case they must agree).
    """
    items = [s.strip() for s in re.split(r"[,\s]+", text.strip()) if s.strip()]
    if not items:
        return KnotDiagram((), name)
    passes = []
    for it in items:
        m = _GAUSS_ITEM.match(it)
        if not m:
            raise ParseError(f"bad Gauss code entry {it!r}")
        kind = m.group(1).upper()
        sign = {None: 0, "+": 1, "-": -1, "−": -1}[m.group(3)]
        passes.append((kind, int(m.group(2)), sign))
    by_id: dict[int, dict[str, int]] = {}
    signs: dict[int, int] = {}
    n = len(passes)
    for idx, (kind, cid, sign) in enumerate(passes):
        slot = by_id.setdefault(cid, {})
        if kind in slot:
            raise ParseError(f"crossing {cid} has two {kind} passages")
        slot[kind] = idx
        if sign:
            if signs.get(cid, sign) != sign:
                raise ParseError(f"conflicting signs for crossing {cid}")
            signs[cid] = sign
    for cid, slot in by_id.items():
        if len(slot) != 2:
            raise ParseError(f"crossing {cid} must appear once over and once under")
        if cid not in signs:
            raise ParseError(f"crossing {cid} has no sign")
    # edge k (1-based) leaves passage k-1 and enters passage k (cyclically)
    tuples = []
    for cid in sorted(by_id):
        u, o = by_id[cid]["U"], by_id[cid]["O"]
        u_in, u_out = u if u else n, u + 1
        o_in, o_out = o if o else n, o + 1
        if signs[cid] > 0:
            tuples.append((u_in, o_out, u_out, o_in))
        else:
            tuples.append((u_in, o_in, u_out, o_out))
    return diagram_from_tuples(tuples, name=name)


# -- braids -------------------------------------------------------------------

@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strand_count < 1:
            raise ParseError("strand count must be positive")
        for x in self.letters:
            if x == 0 or abs(x) > self.strand_count - 1:
                raise ParseError(
                    f"generator index {x} out of range for {self.strand_count} strands"
                )

    def permutation(self) -> tuple[int, ...]:
        """Image of each starting position at the top of the braid."""
        pos = list(range(self.strand_count))  # pos[strand] = current position
        at = list(range(self.strand_count))  # at[position] = strand
        for x in self.letters:
            i = abs(x) - 1
            at[i], at[i + 1] = at[i + 1], at[i]
            pos[at[i]], pos[at[i + 1]] = i, i + 1
        return tuple(pos)

    def components(self) -> int:
        perm = self.permutation()
        seen, count = set(), 0
        for s in range(self.strand_count):
            if s in seen:
                continue
            count += 1
            while s not in seen:
                seen.add(s)
                s = perm[s]
        return count

    def __str__(self):
        return ",".join(str(x) for x in self.letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse ``"1,-2,1,-2"`` (signed generator indices) into a knot-closing braid word."""
    tokens = [s for s in re.split(r"[,\s]+", text.strip()) if s]
    try:
        letters = tuple(int(s) for s in tokens)
    except ValueError:
        raise ParseError(f"braid letters must be integers: {text!r}") from None
    b = BraidWord(strands, letters)
    if b.components() != 1:
        raise DiagramError(f"braid closure has {b.components()} components, expected a knot")
    return b


def torus_braid(p: int, q: int) -> BraidWord:
    """The braid ``(s1 s2 ... s_{p-1})^q`` on ``p`` strands, whose closure is T(p,q)."""
    if p < 2 or q < 2:
        raise ParseError(f"torus knot parameters must be >= 2, got ({p},{q})")
    if math.gcd(p, q) != 1:
        raise ParseError(f"T({p},{q}) is not a knot: gcd is {math.gcd(p, q)}")
    return BraidWord(p, tuple(range(1, p)) * q)


def braid_to_diagram(b: BraidWord, name: str | None = None) -> KnotDiagram:
    """Diagram of the braid closure, one crossing per letter.

    Strands run upward; a positive letter puts the strand coming from the
    left over the one coming from the right, which is a positive crossing.
    """
    if b.components() != 1:
        raise DiagramError("braid closure is not a knot")
    if not b.letters:
        return KnotDiagram((), name)
    current = list(range(1, b.strand_count + 1))
    nxt = b.strand_count + 1
    raw = []
    for x in b.letters:
        i = abs(x) - 1
        left_in, right_in = current[i], current[i + 1]
        left_out, right_out = nxt, nxt + 1  # outgoing at positions i and i+1
        nxt += 2
        if x > 0:
            # left strand over: under runs right_in -> left_out
            raw.append([right_in, right_out, left_out, left_in])
        else:
            # right strand over: under runs left_in -> right_out
            raw.append([left_in, right_in, right_out, left_out])
        current[i], current[i + 1] = left_out, right_out
    close = {current[k]: k + 1 for k in range(b.strand_count)}
    tuples = [[close.get(v, v) for v in t] for t in raw]
    return diagram_from_tuples(tuples, name=name)


# -- named knots --------------------------------------------------------------

_TORUS_NAME = re.compile(r"^T\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)$", re.IGNORECASE)

# name -> (PD code or braid spec, display name)
_TABLE = {
    "unknot": ("pd", ""),
    "0_1": ("pd", ""),
    "trefoil": ("braid", (2, "1,1,1")),
    "3_1": ("braid", (2, "1,1,1")),
    "figure8": ("pd", "X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)"),
    "4_1": ("pd", "X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)"),
    "5_1": ("braid", (2, "1,1,1,1,1")),
    "5_2": ("pd", "X(1,4,2,5),X(3,8,4,9),X(5,10,6,1),X(9,6,10,7),X(7,2,8,3)"),
    "6_1": ("pd", "X(1,4,2,5),X(7,10,8,11),X(3,9,4,8),X(9,3,10,2),X(5,12,6,1),X(11,6,12,7)"),
    "granny": ("braid", (3, "1,1,1,2,2,2")),
    "square": ("braid", (3, "1,1,1,-2,-2,-2")),
    "4_1#4_1": ("braid", (5, "1,-2,1,-2,3,-4,3,-4")),
    "3_1#5_1": ("braid", (3, "1,1,1,2,2,2,2,2")),
}

_ALIASES = {"figure-eight": "figure8", "figure_eight": "figure8", "3_1#3_1": "granny"}


def canonical_name(name: str) -> str:
    key = name.strip()
    m = _TORUS_NAME.match(key)
    if m:
        p, q = sorted((int(m.group(1)), int(m.group(2))))
        return f"T({p},{q})"
    key = key.lower()
    key = _ALIASES.get(key, key)
    if key not in _TABLE:
        raise ParseError(f"unknown knot name {name!r}")
    return key


def torus_parameters(name: str) -> tuple[int, int] | None:
    m = _TORUS_NAME.match(name.strip())
    if not m:
        return None
    return tuple(sorted((int(m.group(1)), int(m.group(2)))))


def named_knot(name: str) -> KnotDiagram:
    """Diagram for a built-in name (``unknot``, ``trefoil``, ``4_1``, ``T(3,5)``, ...)."""
    key = canonical_name(name)
    pq = torus_parameters(key)
    if pq is not None:
        return braid_to_diagram(torus_braid(*pq), name=key)
    kind, data = _TABLE[key]
    if kind == "pd":
        return parse_pd(data, name=key)
    strands, word = data
    return braid_to_diagram(parse_braid(word, strands), name=key)


def known_names() -> list[str]:
    return sorted(_TABLE) + ["T(p,q)"]
