"""Rule-based comparison of two branched twist spins.

Each rule encodes one published criterion.  ``decide`` walks the catalog in
order and stops at the first rule that settles the question; rules later in
the catalog that reach the same outcome are recorded as corroboration.
Labels that are ``unknown`` never satisfy a label precondition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .alexander import torus_alexander
from .codec import KnotDiagram
from .errors import LabelError
from .finite import abelianization
from .groups import BtSpinSpec, KnotClass, beta, btspin_group, orbifold_group
from .invariants import (
    cover_h1_order,
    knot_alexander,
    knot_determinant,
    knot_group_simplified,
    nontriviality,
    orbifold_hom_vector,
)
from .wirtinger import wirtinger_presentation


class Outcome(str, Enum):
    DISTINCT = "DISTINCT"
    EQUIVALENT = "EQUIVALENT"
    REDUCES_TO_1KNOT = "REDUCES_TO_1KNOT"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Firing:
    rule: str
    statement: str
    evidence: dict
    role: str = "decisive"

    def to_json(self) -> dict:
        return {"rule": self.rule, "statement": self.statement, "role": self.role, "evidence": self.evidence}


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    justification: tuple[Firing, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def rules(self) -> list[str]:
        return [f.rule for f in self.justification]

    @property
    def decisive(self) -> Firing | None:
        return self.justification[0] if self.justification else None

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "rules": self.rules,
            "justification": [f.to_json() for f in self.justification],
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        lines = [f"outcome: {self.outcome.value}"]
        for f in self.justification:
            ev = ", ".join(f"{k}={_fmt(v)}" for k, v in f.evidence.items())
            lines.append(f"  [{f.role}] {f.rule}: {f.statement}")
            if ev:
                lines.append(f"      evidence: {ev}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


def _fmt(v):
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return str(v)


# -- label helpers ----------------------------------------------------------------

_KNOWN_NONTRIVIAL = {KnotClass.TORUS, KnotClass.HYPERBOLIC, KnotClass.SATELLITE, KnotClass.COMPOSITE}


def _triviality(s: BtSpinSpec) -> tuple[bool | None, str]:
    """(True, why) if K is the unknot, (False, why) if knotted, (None, why) if undecided."""
    if s.class_label is KnotClass.TRIVIAL:
        return True, "labeled trivial"
    if s.class_label in _KNOWN_NONTRIVIAL:
        return False, f"labeled {s.label_text}"
    if s.prime:
        return False, "declared prime"
    knotted, why = nontriviality(s.diagram)
    return (None if knotted is None else not knotted), why


def _not_composite(s: BtSpinSpec) -> bool:
    return s.class_label in (KnotClass.TRIVIAL, KnotClass.TORUS, KnotClass.HYPERBOLIC) or s.is_prime is True


def _not_torus(s: BtSpinSpec) -> bool:
    return s.class_label in (KnotClass.TRIVIAL, KnotClass.HYPERBOLIC, KnotClass.SATELLITE, KnotClass.COMPOSITE)


def _either(a, b, test):
    """Run an asymmetric test both ways; return the first non-None result."""
    r = test(a, b)
    return r if r is not None else test(b, a)


# -- rules ------------------------------------------------------------------------

@dataclass(frozen=True)
class Rule:
    id: str
    outcome: Outcome
    statement: str
    check: Callable[[BtSpinSpec, BtSpinSpec], dict | None]


def _r_m(a, b):
    if a.mn.m == b.mn.m:
        return None
    ev = {"m": [a.mn.m, b.mn.m]}
    for side, s in (("a", a), ("b", b)):
        if s.mn.m == 1:
            continue
        trivial, why = _triviality(s)
        if trivial is not False:
            return None
        ev[f"knotted_{side}"] = why
    return ev


def _r_11(a, b):
    if a.mn.m == b.mn.m == 1:
        return {"mn": [str(a.mn), str(b.mn)]}
    return None


def _r_01(a, b):
    if (a.mn.m, b.mn.m) == (0, 0) and a.is_prime and b.is_prime:
        return {"mn": [str(a.mn), str(b.mn)], "prime": [True, True]}
    return None


def _same_m(a, b, least):
    return a.mn.m == b.mn.m and a.mn.m >= least


def _r_t1(a, b):
    if not _same_m(a, b, 2):
        return None

    def one_way(x, y):
        tx, wx = _triviality(x)
        if tx is not True:
            return None
        ty, wy = _triviality(y)
        if ty is not False:
            return None
        return {"trivial": wx, "non_trivial": wy}

    return _either(a, b, one_way)


def _r_t2c(a, b):
    if not _same_m(a, b, 2):
        return None

    def one_way(x, y):
        if x.class_label is KnotClass.COMPOSITE and _not_composite(y):
            return {"composite": x.name, "not_composite": f"{y.name} ({y.label_text})"}
        return None

    return _either(a, b, one_way)


def _r_t2t(a, b):
    if not _same_m(a, b, 2):
        return None

    def one_way(x, y):
        if x.class_label is KnotClass.TORUS and _not_torus(y):
            return {"torus": x.label_text, "not_torus": f"{y.name} ({y.label_text})"}
        return None

    return _either(a, b, one_way)


def _r_t3(a, b):
    if not _same_m(a, b, 3):
        return None

    def one_way(x, y):
        if x.class_label is KnotClass.HYPERBOLIC and y.class_label is KnotClass.SATELLITE:
            ev = {"hyperbolic": x.name, "satellite": y.name}
            if x.mn.m == 3 and x.figure_eight:
                ev["case"] = "m=3 figure-eight branch (3-torus cover argument)"
            return ev
        return None

    return _either(a, b, one_way)


def _r_h(a, b):
    if _same_m(a, b, 3) and a.class_label is b.class_label is KnotClass.HYPERBOLIC:
        ev = {"m": a.mn.m}
        if a.mn.m == 3 and (a.figure_eight or b.figure_eight):
            ev["case"] = "m=3 figure-eight branch (3-torus cover argument)"
        return ev
    return None


def _r_sl(a, b):
    if not _same_m(a, b, 2):
        return None
    if a.is_prime and b.is_prime and a.is_sufficiently_large and b.is_sufficiently_large:
        return {"m": a.mn.m, "prime": [True, True], "sufficiently_large": [True, True]}
    return None


def _r_d1(a, b):
    if not _same_m(a, b, 2) or a.mn.m % 2:
        return None
    da, db = knot_determinant(a.diagram), knot_determinant(b.diagram)
    if da != db:
        return {"m": a.mn.m, "determinants": [da, db]}
    return None


def _r_d2(a, b):
    def one_way(x, y):
        if x.mn.m >= 2 and x.mn.m % 2 == 0 and y.mn.m % 2 == 1:
            dx = knot_determinant(x.diagram)
            if dx != 1:
                return {"m": [x.mn.m, y.mn.m], "determinant_even_side": dx}
        return None

    return _either(a, b, one_way)


def _torus_even_first(s):
    p, q = s.torus
    return (q, p) if q % 2 == 0 else (p, q)


def _r_tt(a, b):
    if not _same_m(a, b, 2) or a.mn.m % 2:
        return None
    if not (a.class_label is b.class_label is KnotClass.TORUS):
        return None

    def one_way(x, y):
        p1, q1 = _torus_even_first(x)
        p2, q2 = _torus_even_first(y)
        if p1 % 2:
            return None
        if p2 % 2 == 0 and q1 != q2:
            return {"case": "both have an even parameter, odd parameters differ", "torus": [x.label_text, y.label_text]}
        if p2 % 2 and q2 % 2:
            return {"case": "second knot has both parameters odd", "torus": [x.label_text, y.label_text]}
        return None

    return _either(a, b, one_way)


_HOM_LABELS = (KnotClass.HYPERBOLIC, KnotClass.SATELLITE, KnotClass.COMPOSITE)


def _r_hom(a, b):
    if not _same_m(a, b, 2):
        return None
    if a.class_label not in _HOM_LABELS or b.class_label not in _HOM_LABELS:
        return None
    va = orbifold_hom_vector(a.diagram, a.mn.m)
    vb = orbifold_hom_vector(b.diagram, b.mn.m)
    for (name, ca), (_, cb) in zip(va, vb):
        if ca != cb:
            return {"m": a.mn.m, "group": name, "hom_counts": [ca, cb]}
    return None


RULES: tuple[Rule, ...] = (
    Rule("R-M", Outcome.DISTINCT,
         "different m give inequivalent branched twist spins of non-trivial knots", _r_m),
    Rule("R-11", Outcome.EQUIVALENT,
         "every (1,1) branched twist spin is the trivial 2-knot", _r_11),
    Rule("R-01", Outcome.REDUCES_TO_1KNOT,
         "spun knots of prime knots have the knot group as group; knot complements determine prime knots", _r_01),
    Rule("R-T1", Outcome.DISTINCT,
         "m >= 2: the unknot and a non-trivial knot give inequivalent branched twist spins", _r_t1),
    Rule("R-T2c", Outcome.DISTINCT,
         "m >= 2: a composite and a non-composite knot give inequivalent branched twist spins", _r_t2c),
    Rule("R-T2t", Outcome.DISTINCT,
         "m >= 2: a torus and a non-torus knot give inequivalent branched twist spins", _r_t2t),
    Rule("R-T3", Outcome.DISTINCT,
         "m >= 3: a hyperbolic and a satellite knot give inequivalent branched twist spins", _r_t3),
    Rule("R-H", Outcome.REDUCES_TO_1KNOT,
         "m >= 3, both hyperbolic: equivalent exactly when the 1-knots are", _r_h),
    Rule("R-SL", Outcome.REDUCES_TO_1KNOT,
         "m >= 2, both prime and sufficiently large: equivalent exactly when the 1-knots are", _r_sl),
    Rule("R-D1", Outcome.DISTINCT,
         "m even: different knot determinants |Delta(-1)| give inequivalent branched twist spins", _r_d1),
    Rule("R-D2", Outcome.DISTINCT,
         "one m even with |Delta(-1)| != 1, the other m odd: inequivalent", _r_d2),
    Rule("R-TT", Outcome.DISTINCT,
         "m even, torus knots T(p1,q1), T(p2,q2) with p1 even and determinants forced apart", _r_tt),
    Rule("R-HOM", Outcome.DISTINCT,
         "m >= 2, both knots non-trivial and non-torus: the orbifold group is an invariant, "
         "and its hom counts differ", _r_hom),
)

RULES_BY_ID = {r.id: r for r in RULES}


# -- validation ---------------------------------------------------------------------

def check_labels(s: BtSpinSpec) -> None:
    """Computational consistency checks on the declared labels."""
    if s.class_label in _KNOWN_NONTRIVIAL:
        knotted, why = nontriviality(s.diagram)
        if knotted is False:
            raise LabelError(f"{s.name} is labeled {s.label_text} but {why}")
    if s.class_label is KnotClass.TORUS and isinstance(s.knot, KnotDiagram):
        expected = torus_alexander(*s.torus)
        got = knot_alexander(s.diagram)
        if got != expected:
            raise LabelError(
                f"{s.name} is labeled {s.label_text} but its Alexander polynomial is {got}, "
                f"not {expected}"
            )


def decide(a: BtSpinSpec, b: BtSpinSpec, corroborate: bool = True) -> Verdict:
    check_labels(a)
    check_labels(b)
    decisive = None
    for i, rule in enumerate(RULES):
        ev = rule.check(a, b)
        if ev is not None:
            decisive = (i, rule, ev)
            break
    if decisive is None:
        return Verdict(Outcome.UNKNOWN, (), ("no rule applies; equal invariants prove nothing",))
    i, rule, ev = decisive
    chain = [Firing(rule.id, rule.statement, ev)]
    if corroborate:
        for later in RULES[i + 1:]:
            if later.outcome is rule.outcome:
                ev2 = later.check(a, b)
                if ev2 is not None:
                    chain.append(Firing(later.id, later.statement, ev2, role="corroborating"))
    return Verdict(rule.outcome, tuple(chain))


# -- invariant report ----------------------------------------------------------------

def hom_guard(s: BtSpinSpec) -> bool:
    """Whether orbifold hom counts are invariants of K^{m,n} for this spec."""
    return s.mn.m >= 2 and s.class_label in _HOM_LABELS


def invariant_report(s: BtSpinSpec) -> dict:
    d = s.diagram
    w = wirtinger_presentation(d)
    delta = knot_alexander(d)
    rep: dict = {
        "knot": s.name,
        "class": s.label_text,
        "mn": str(s.mn),
        "crossings": d.crossing_count,
        "wirtinger": {"generators": w.generator_count, "relators": w.relator_count},
        "alexander": str(delta),
        "alexander_coefficients": delta.to_json(),
        "determinant": knot_determinant(d),
    }
    m = s.mn.m
    if m >= 2:
        simple = knot_group_simplified(d)
        rep["beta"] = beta(m, s.mn.n)
        rep["branched_cover_h1_order"] = cover_h1_order(d, m)
        rep["abelianization"] = {
            "btspin_group": str(abelianization(btspin_group(simple, s.mn))),
            "orbifold_group": str(abelianization(orbifold_group(simple, m))),
        }
        if hom_guard(s):
            rep["orbifold_hom_counts"] = dict(orbifold_hom_vector(d, m))
        else:
            rep["orbifold_hom_counts"] = None
    elif m == 0:
        rep["group"] = "knot group (spun knot)"
        rep["abelianization"] = {"knot_group": str(abelianization(w))}
    else:
        rep["group"] = "Z (trivial 2-knot)"
    return rep


def report_text(rep: dict) -> str:
    lines = []
    for k, v in rep.items():
        if isinstance(v, dict):
            lines.append(f"{k}:")
            lines.extend(f"  {kk}: {vv}" for kk, vv in v.items())
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False)
