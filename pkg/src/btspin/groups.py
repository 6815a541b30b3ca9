"""Presentations attached to a branched twist spin and the (m, n) bookkeeping.

For a Wirtinger presentation ``<x1..xl | r1..rl>`` of K and a canonical pair
(m, n) with m >= 2, the complement of K^{m,n} has group

    <x1..xl, h | r1..rl, [x_i, h] (all i), x1^m h^beta>,   n*beta = 1 (mod m),

and dividing out the central element h leaves the orbifold group
``<x1..xl | r1..rl, x1^m>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .codec import KnotDiagram, braid_to_diagram, named_knot, torus_braid, torus_parameters
from .errors import BtSpinError, LabelError
from .wirtinger import FinitePresentation, commutator, power, wirtinger_presentation


@dataclass(frozen=True, order=True)
class MNPair:
    m: int
    n: int

    def __post_init__(self):
        m, n = self.m, self.n
        ok = (m, n) in ((0, 1), (1, 1)) or (m >= 2 and 1 <= n < 2 * m and math.gcd(m, n) == 1)
        if not ok:
            raise BtSpinError(f"({m},{n}) is not a canonical pair; use normalize_mn")

    def __str__(self):
        return f"{self.m}/{self.n}"


def normalize_mn(m: int, n: int) -> MNPair:
    """Canonical representative of (m, n) using K^{m,n} = K^{m,n+2m}.

    Negative m is rejected (orientation reversal is left to the caller), as is
    m = 1 with n != 1.
    """
    if m < 0:
        raise BtSpinError(f"m must be >= 0 (got {m}); reverse the orientation of S^4 instead")
    if n < 1:
        raise BtSpinError(f"n must be >= 1 (got {n})")
    if math.gcd(m, n) != 1:
        raise BtSpinError(f"m and n must be coprime, got gcd({m},{n}) = {math.gcd(m, n)}")
    if m in (0, 1):
        if n != 1:
            raise BtSpinError(f"({m},{n}): only (1,1) is supported for m = 1")
        return MNPair(m, 1)
    return MNPair(m, n % (2 * m))


def parse_mn(text: str) -> tuple[int, int]:
    """Parse ``"m/n"`` (or ``"m,n"``) into integers without normalizing."""
    for sep in ("/", ","):
        if sep in text:
            a, b = text.split(sep, 1)
            try:
                return int(a), int(b)
            except ValueError:
                break
    raise BtSpinError(f"expected m/n, got {text!r}")


def beta(m: int, n: int) -> int:
    """Least positive beta with n * beta = 1 (mod m)."""
    if m < 2:
        raise BtSpinError("beta is defined for m >= 2")
    if math.gcd(m, n) != 1:
        raise BtSpinError(f"m and n must be coprime, got ({m},{n})")
    return pow(n, -1, m)


def btspin_group(p: FinitePresentation, mn: MNPair) -> FinitePresentation:
    if mn.m < 2:
        raise BtSpinError(
            f"no twisted presentation for {mn}: for (0,1) the group is the knot group itself, "
            "and K^(1,1) is the trivial 2-knot"
        )
    l = p.generator_count
    h = l + 1
    rels = list(p.relators)
    rels += [commutator((i,), (h,)) for i in range(1, l + 1)]
    rels.append(power(1, mn.m) + power(h, beta(mn.m, mn.n)))
    return FinitePresentation(p.generators + ("h",), tuple(rels))


def orbifold_group(p: FinitePresentation, m: int) -> FinitePresentation:
    if m < 2:
        raise BtSpinError("orbifold group needs m >= 2")
    return FinitePresentation(p.generators, p.relators + (power(1, m),))


def torus_group(p: int, q: int) -> FinitePresentation:
    """<mu, lambda | mu^p lambda^-q>."""
    if p < 2 or q < 2 or math.gcd(p, q) != 1:
        raise BtSpinError(f"torus knot needs coprime p, q >= 2, got ({p},{q})")
    return FinitePresentation(("mu", "lambda"), (power(1, p) + power(2, -q),))


class KnotClass(str, Enum):
    TRIVIAL = "trivial"
    TORUS = "torus"
    HYPERBOLIC = "hyperbolic"
    SATELLITE = "satellite"
    COMPOSITE = "composite"
    UNKNOWN = "unknown"


# default labels for the built-in names
_NAMED_LABELS = {
    "unknot": KnotClass.TRIVIAL,
    "0_1": KnotClass.TRIVIAL,
    "trefoil": KnotClass.TORUS,
    "3_1": KnotClass.TORUS,
    "5_1": KnotClass.TORUS,
    "figure8": KnotClass.HYPERBOLIC,
    "4_1": KnotClass.HYPERBOLIC,
    "5_2": KnotClass.HYPERBOLIC,
    "6_1": KnotClass.HYPERBOLIC,
    "granny": KnotClass.COMPOSITE,
    "square": KnotClass.COMPOSITE,
    "4_1#4_1": KnotClass.COMPOSITE,
    "3_1#5_1": KnotClass.COMPOSITE,
}
_NAMED_TORUS = {"trefoil": (2, 3), "3_1": (2, 3), "5_1": (2, 5)}


@dataclass(frozen=True)
class BtSpinSpec:
    """A knot together with (m, n) and user-declared classification labels.

    ``knot`` is either a diagram or a torus pair ``(p, q)``.  ``prime`` and
    ``sufficiently_large`` are tri-state (None = unknown).
    """

    knot: KnotDiagram | tuple[int, int]
    mn: MNPair
    class_label: KnotClass = KnotClass.UNKNOWN
    torus: tuple[int, int] | None = None
    prime: bool | None = None
    sufficiently_large: bool | None = None
    figure_eight: bool = False

    def __post_init__(self):
        label = KnotClass(self.class_label)
        object.__setattr__(self, "class_label", label)
        if isinstance(self.knot, tuple):
            p, q = sorted(self.knot)
            if label not in (KnotClass.TORUS, KnotClass.UNKNOWN):
                raise LabelError(f"T({p},{q}) cannot be labeled {label.value}")
            object.__setattr__(self, "knot", (p, q))
            object.__setattr__(self, "class_label", KnotClass.TORUS)
            if self.torus is not None and tuple(sorted(self.torus)) != (p, q):
                raise LabelError("torus parameters disagree with the knot")
            object.__setattr__(self, "torus", (p, q))
        label = self.class_label
        if label is KnotClass.TORUS:
            if self.torus is None:
                raise LabelError("torus label needs (p, q)")
            p, q = sorted(self.torus)
            if p < 2 or math.gcd(p, q) != 1:
                raise LabelError(f"torus label needs coprime p, q >= 2, got {self.torus}")
            object.__setattr__(self, "torus", (p, q))
        elif self.torus is not None:
            raise LabelError(f"torus parameters given with label {label.value}")
        if label is KnotClass.TRIVIAL and isinstance(self.knot, KnotDiagram):
            if not self.knot.is_trivial_diagram() and not _simplifies_to_z(self.knot):
                raise LabelError("trivial label needs a diagram certified trivial")
        if self.figure_eight and label not in (KnotClass.HYPERBOLIC, KnotClass.UNKNOWN):
            raise LabelError(f"figure-eight knot is hyperbolic, not {label.value}")
        if self.figure_eight:
            object.__setattr__(self, "class_label", KnotClass.HYPERBOLIC)
        implied = self.implied_prime()
        if self.prime is not None and implied is not None and self.prime != implied:
            raise LabelError(f"{self.class_label.value} knot cannot have prime={self.prime}")
        if self.class_label is KnotClass.SATELLITE and self.sufficiently_large is False:
            raise LabelError("satellite knots are sufficiently large")

    # -- derived labels ---------------------------------------------------------
    def implied_prime(self) -> bool | None:
        return {
            KnotClass.TRIVIAL: False,
            KnotClass.TORUS: True,
            KnotClass.HYPERBOLIC: True,
            KnotClass.COMPOSITE: False,
        }.get(self.class_label)

    @property
    def is_prime(self) -> bool | None:
        implied = self.implied_prime()
        return implied if implied is not None else self.prime

    @property
    def is_sufficiently_large(self) -> bool | None:
        if self.class_label is KnotClass.SATELLITE:
            return True
        return self.sufficiently_large

    @property
    def label_text(self) -> str:
        if self.class_label is KnotClass.TORUS:
            return f"torus({self.torus[0]},{self.torus[1]})"
        return self.class_label.value

    @cached_property
    def diagram(self) -> KnotDiagram:
        if isinstance(self.knot, KnotDiagram):
            return self.knot
        p, q = self.knot
        return braid_to_diagram(torus_braid(p, q), name=f"T({p},{q})")

    @property
    def name(self) -> str:
        return self.diagram.name or "<diagram>"

    @classmethod
    def named(cls, name: str, mn: MNPair, **labels) -> "BtSpinSpec":
        """Spec for a built-in knot name, with its known class as default label."""
        from .codec import canonical_name
        key = canonical_name(name)
        pq = torus_parameters(key)
        if pq is not None:
            return cls(pq, mn, KnotClass.TORUS, **labels)
        label = labels.pop("class_label", _NAMED_LABELS.get(key, KnotClass.UNKNOWN))
        torus = labels.pop("torus", _NAMED_TORUS.get(key) if label is KnotClass.TORUS else None)
        fig8 = labels.pop("figure_eight", key in ("figure8", "4_1"))
        return cls(named_knot(key), mn, label, torus=torus, figure_eight=fig8, **labels)


def _simplifies_to_z(d: KnotDiagram) -> bool:
    from .invariants import knot_group_simplified
    p = knot_group_simplified(d)
    return p.generator_count == 1 and not p.relators


def knot_group(d: KnotDiagram) -> FinitePresentation:
    return wirtinger_presentation(d)
