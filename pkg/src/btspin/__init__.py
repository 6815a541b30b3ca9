"""Invariants and a rule-based distinguishability checker for branched twist spins K^{m,n}."""

from .alexander import (
    alexander_matrix,
    alexander_polynomial,
    branched_cover_h1_order,
    determinant,
    fox_derivative,
    torus_alexander,
    torus_determinant,
)
from .codec import (
    BraidWord,
    Crossing,
    KnotDiagram,
    braid_to_diagram,
    emit_pd,
    named_knot,
    parse_braid,
    parse_gauss,
    parse_pd,
    torus_braid,
)
from .decide import RULES, Outcome, Verdict, check_labels, decide, invariant_report
from .errors import BtSpinError, CapExceeded, DiagramError, LabelError, ParseError, PresentationError
from .finite import (
    FiniteGroupTable,
    SmithForm,
    abelianization,
    builtin_group,
    builtin_groups,
    count_homs,
    smith_normal_form,
)
from .groups import (
    BtSpinSpec,
    KnotClass,
    MNPair,
    beta,
    btspin_group,
    normalize_mn,
    orbifold_group,
    torus_group,
)
from .laurent import LaurentPoly
from .wirtinger import FinitePresentation, tietze_simplify, wirtinger_presentation

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "BtSpinError",
    "BtSpinSpec",
    "CapExceeded",
    "Crossing",
    "DiagramError",
    "FiniteGroupTable",
    "FinitePresentation",
    "KnotClass",
    "KnotDiagram",
    "LabelError",
    "LaurentPoly",
    "MNPair",
    "Outcome",
    "ParseError",
    "PresentationError",
    "RULES",
    "SmithForm",
    "Verdict",
    "abelianization",
    "alexander_matrix",
    "alexander_polynomial",
    "beta",
    "braid_to_diagram",
    "branched_cover_h1_order",
    "btspin_group",
    "builtin_group",
    "builtin_groups",
    "check_labels",
    "count_homs",
    "decide",
    "determinant",
    "emit_pd",
    "fox_derivative",
    "invariant_report",
    "named_knot",
    "normalize_mn",
    "orbifold_group",
    "parse_braid",
    "parse_gauss",
    "parse_pd",
    "smith_normal_form",
    "tietze_simplify",
    "torus_alexander",
    "torus_braid",
    "torus_determinant",
    "torus_group",
    "wirtinger_presentation",
]
