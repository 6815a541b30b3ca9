"""Homomorphisms into small finite groups, and abelianizations via Smith normal form."""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Hashable, Iterable, Sequence

from .errors import CapExceeded, PresentationError
from .wirtinger import FinitePresentation, tietze_simplify

DEFAULT_MAX_ORDER = 24
DEFAULT_MAX_GENERATORS = 12
CAP_ENV = "BTSPIN_HOM_CAP"


def default_generator_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_MAX_GENERATORS
    try:
        cap = int(raw)
    except ValueError:
        raise PresentationError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise PresentationError(f"{CAP_ENV} must be positive")
    return cap


# -- group tables ---------------------------------------------------------------

@dataclass(frozen=True)
class FiniteGroupTable:
    name: str
    order: int
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    def __post_init__(self):
        if len(self.mul) != self.order or any(len(r) != self.order for r in self.mul):
            raise ValueError(f"{self.name}: multiplication table is not {self.order}x{self.order}")

    def validate(self) -> None:
        """Exhaustively check the group axioms; raises ``ValueError``."""
        n, m, e = self.order, self.mul, self.identity
        for a in range(n):
            if m[e][a] != a or m[a][e] != a:
                raise ValueError(f"{self.name}: {e} is not an identity")
            if m[a][self.inverse[a]] != e or m[self.inverse[a]][a] != e:
                raise ValueError(f"{self.name}: bad inverse for {a}")
        for a in range(n):
            ma = m[a]
            for b in range(n):
                mab = m[ma[b]]
                mb = m[b]
                for c in range(n):
                    if mab[c] != ma[mb[c]]:
                        raise ValueError(f"{self.name}: not associative at {(a, b, c)}")

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mul[x][g]
            k += 1
        return k

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        classes = []
        for g in range(self.order):
            if g in seen:
                continue
            cls = sorted({self.mul[self.mul[h][g]][self.inverse[h]] for h in range(self.order)})
            seen.update(cls)
            classes.append(tuple(cls))
        return classes

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "mul": [x for row in self.mul for x in row],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "FiniteGroupTable":
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["order"])
        flat = [int(x) for x in data["mul"]]
        if len(flat) != n * n:
            raise ValueError(f"mul must have order^2 = {n * n} entries, got {len(flat)}")
        if any(not 0 <= x < n for x in flat):
            raise ValueError("mul entries must be element indices")
        mul = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        return table_from_mul(data.get("name", "G"), mul)


def table_from_mul(name: str, mul: Sequence[Sequence[int]]) -> FiniteGroupTable:
    n = len(mul)
    ids = [e for e in range(n) if all(mul[e][a] == a == mul[a][e] for a in range(n))]
    if len(ids) != 1:
        raise ValueError(f"{name}: no unique identity")
    e = ids[0]
    inv = []
    for a in range(n):
        cands = [b for b in range(n) if mul[a][b] == e]
        if len(cands) != 1:
            raise ValueError(f"{name}: element {a} has no unique inverse")
        inv.append(cands[0])
    g = FiniteGroupTable(name, n, tuple(tuple(r) for r in mul), e, tuple(inv))
    g.validate()
    return g


def _closure(name: str, gens: Iterable[Hashable], op: Callable, identity: Hashable) -> FiniteGroupTable:
    elems = {identity}
    frontier = [identity]
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = op(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    ordered = [identity] + sorted(elems - {identity})
    index = {x: i for i, x in enumerate(ordered)}
    mul = tuple(tuple(index[op(a, b)] for b in ordered) for a in ordered)
    return table_from_mul(name, mul)


def cyclic_group(k: int) -> FiniteGroupTable:
    if k < 1:
        raise ValueError("cyclic group order must be positive")
    mul = tuple(tuple((a + b) % k for b in range(k)) for a in range(k))
    return FiniteGroupTable(f"Z/{k}", k, mul, 0, tuple((-a) % k for a in range(k)))


def _perm_mul(a, b):
    # apply a, then b
    return tuple(b[i] for i in a)


def permutation_group(name: str, gens: Iterable[Sequence[int]]) -> FiniteGroupTable:
    gens = [tuple(g) for g in gens]
    n = len(gens[0])
    return _closure(name, gens, _perm_mul, tuple(range(n)))


def dihedral_group(n: int) -> FiniteGroupTable:
    """Symmetries of the regular n-gon (order 2n), named ``D{n}``."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return permutation_group(f"D{n}", [rot, ref])


def _mat_mul_mod(p):
    def op(a, b):
        return (
            (a[0] * b[0] + a[1] * b[2]) % p,
            (a[0] * b[1] + a[1] * b[3]) % p,
            (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p,
        )
    return op


def _quat_mul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


@lru_cache(maxsize=None)
def builtin_groups() -> tuple[FiniteGroupTable, ...]:
    groups = [cyclic_group(k) for k in range(1, 13)]
    groups.append(permutation_group("S3", [(1, 0, 2), (1, 2, 0)]))
    groups.extend(dihedral_group(n) for n in (4, 5, 6))
    groups.append(_closure("Q8", [(0, 1, 0, 0), (0, 0, 1, 0)], _quat_mul, (1, 0, 0, 0)))
    groups.append(permutation_group("A4", [(1, 2, 0, 3), (1, 0, 3, 2)]))
    groups.append(_closure("SL(2,Z3)", [(1, 1, 0, 1), (1, 0, 1, 1)], _mat_mul_mod(3), (1, 0, 0, 1)))
    return tuple(groups)


_ALIASES = {"C": "Z/", "Z": "Z/"}


def builtin_group(name: str) -> FiniteGroupTable:
    key = name.strip().replace(" ", "")
    for g in builtin_groups():
        if g.name.lower() == key.lower():
            return g
    if key[:1].upper() in _ALIASES and key[1:].isdigit():
        return builtin_group(f"Z/{key[1:]}")
    if key.upper() in ("SL(2,3)", "SL2Z3", "SL(2,F3)"):
        return builtin_group("SL(2,Z3)")
    raise KeyError(f"unknown built-in group {name!r}")


# -- homomorphism enumeration --------------------------------------------------

def _compile(p: FinitePresentation, G: FiniteGroupTable):
    """Choose an assignment order and the relators that close at each step."""
    n = p.generator_count
    supports = [set(abs(x) - 1 for x in r) for r in p.relators]
    occurrences = [sum(1 for r in p.relators for x in r if abs(x) - 1 == g) for g in range(n)]
    order: list[int] = []
    done: set[int] = set()
    closed: set[int] = set()
    checks: list[list[int]] = []
    while len(order) < n:
        def score(g):
            completes = sum(
                1 for i, s in enumerate(supports) if i not in closed and s <= done | {g}
            )
            return (completes, occurrences[g], -g)
        g = max((g for g in range(n) if g not in done), key=score)
        order.append(g)
        done.add(g)
        now = [i for i, s in enumerate(supports) if i not in closed and s <= done]
        closed.update(now)
        checks.append(now)
    # letters as (generator, inverted?) pairs for table evaluation
    words = [[(abs(x) - 1, x < 0) for x in r] for r in p.relators]
    return order, checks, words


def _search(p, G, domains, on_hit):
    order, checks, words = _compile(p, G)
    mul, inv, e = G.mul, G.inverse, G.identity
    assign = [0] * p.generator_count

    def holds(ri):
        x = e
        for g, neg in words[ri]:
            y = assign[g]
            x = mul[x][inv[y] if neg else y]
        return x == e

    def rec(depth):
        if depth == len(order):
            on_hit(assign)
            return
        g = order[depth]
        for val in domains[g]:
            assign[g] = val
            if all(holds(ri) for ri in checks[depth]):
                rec(depth + 1)

    rec(0)


def _check_caps(p, G, max_order, max_gens):
    max_gens = default_generator_cap() if max_gens is None else max_gens
    if G.order > max_order:
        raise CapExceeded(f"group {G.name} has order {G.order} > cap {max_order}")
    if p.generator_count > max_gens:
        raise CapExceeded(
            f"presentation has {p.generator_count} generators > cap {max_gens}"
        )


def enumerate_homs(
    p: FinitePresentation,
    G: FiniteGroupTable,
    max_order: int = DEFAULT_MAX_ORDER,
    max_gens: int | None = None,
) -> list[tuple[int, ...]]:
    """All generator assignments satisfying every relator, in lexicographic order."""
    _check_caps(p, G, max_order, max_gens)
    hits: list[tuple[int, ...]] = []
    domains = [range(G.order)] * p.generator_count
    _search(p, G, domains, lambda a: hits.append(tuple(a)))
    hits.sort()
    return hits


def count_homs(
    p: FinitePresentation,
    G: FiniteGroupTable,
    simplify: bool = True,
    conjugate_generators: bool = False,
    max_order: int = DEFAULT_MAX_ORDER,
    max_gens: int | None = None,
) -> int:
    """Number of homomorphisms from the presented group to ``G``.

    ``conjugate_generators`` may be set when all generators are known to be
    conjugate in the group (Wirtinger generators and anything Tietze leaves of
    them); images are then restricted to one conjugacy class at a time.
    """
    if simplify:
        p = tietze_simplify(p)
    _check_caps(p, G, max_order, max_gens)
    total = 0

    def hit(_):
        nonlocal total
        total += 1

    if conjugate_generators:
        for cls in G.conjugacy_classes():
            _search(p, G, [cls] * p.generator_count, hit)
    else:
        _search(p, G, [range(G.order)] * p.generator_count, hit)
    return total


def brute_force_count(p: FinitePresentation, G: FiniteGroupTable) -> int:
    """Unpruned count over all of G^n; only for small cases."""
    mul, inv, e = G.mul, G.inverse, G.identity
    n = 0
    for assign in product(range(G.order), repeat=p.generator_count):
        ok = True
        for r in p.relators:
            x = e
            for letter in r:
                y = assign[abs(letter) - 1]
                x = mul[x][inv[y] if letter < 0 else y]
            if x != e:
                ok = False
                break
        n += ok
    return n


# -- Smith normal form -----------------------------------------------------------

def smith_normal_form(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    The diagonal has one entry per column (missing rows count as zero rows),
    nonnegative, each nonzero entry dividing the next, zeros last.
    """
    a = [list(map(int, r)) for r in matrix]
    ncols = ncols if ncols is not None else (len(a[0]) if a else 0)
    rows = len(a)
    diag: list[int] = []
    t = 0
    while t < min(rows, ncols):
        # smallest nonzero entry in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, ncols):
                v = a[i][j]
                if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, ncols):
                q = a[t][j] // piv
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, ncols) if a[i][j] % piv),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                dirty = True
            # move the smallest nonzero entry of row/column t to the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, ncols) if a[t][j]]
            _, i, j = min(cands)
            a[t], a[i] = a[i], a[t]
            for r in a:
                r[t], r[j] = r[j], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    diag += [0] * (ncols - len(diag))
    return diag


@dataclass(frozen=True, eq=False)
class SmithForm:
    """Invariant factors of an abelian group; compares by isomorphism type."""

    diagonal: tuple[int, ...]

    def __eq__(self, other):
        if not isinstance(other, SmithForm):
            return NotImplemented
        return (self.free_rank, self.torsion) == (other.free_rank, other.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.diagonal if d == 0)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)

    def is_cyclic(self, m: int) -> bool:
        """True if the group is Z/m (m = 0 meaning Z)."""
        nontrivial = tuple(d for d in self.diagonal if d != 1)
        return nontrivial == (m,) or (m == 1 and not nontrivial)

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "1"


def abelianization(p: FinitePresentation) -> SmithForm:
    return SmithForm(tuple(smith_normal_form(p.exponent_matrix(), p.generator_count)))


def gcd_count(m: int, k: int) -> int:
    """Homomorphisms Z/m -> Z/k."""
    return math.gcd(m, k)
