"""Command-line interface: ``btspin {invariants,compare,group,table,homs}``."""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from typing import Sequence

from .alexander import torus_alexander, torus_determinant
from .codec import (
    braid_to_diagram,
    canonical_name,
    parse_braid,
    parse_gauss,
    parse_pd,
    torus_parameters,
)
from .decide import decide, dumps, hom_guard, invariant_report, report_text
from .errors import BtSpinError, CapExceeded
from .finite import (
    DEFAULT_MAX_ORDER,
    FiniteGroupTable,
    builtin_group,
    builtin_groups,
    count_homs,
)
from .groups import BtSpinSpec, KnotClass, MNPair, btspin_group, normalize_mn, orbifold_group, parse_mn, torus_group
from .wirtinger import tietze_simplify, wirtinger_presentation


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_knot_options(p: argparse.ArgumentParser, suffix: str = "") -> None:
    g = p.add_argument_group(f"knot{suffix}")
    g.add_argument(f"--knot{suffix}", help="built-in name: unknot, trefoil/3_1, figure8/4_1, T(p,q), ...")
    g.add_argument(f"--pd{suffix}", help="PD code, e.g. 'X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)'")
    g.add_argument(f"--gauss{suffix}", help="Gauss code, e.g. 'O1+,U2+,O3+,U1+,O2+,U3+'")
    g.add_argument(f"--braid{suffix}", help="braid word, e.g. '1,-2,1,-2' (needs --strands)")
    g.add_argument(f"--strands{suffix}", type=int)
    g.add_argument(f"--class{suffix}", dest=f"cls{suffix}",
                   help="trivial | torus(p,q) | hyperbolic | satellite | composite | unknown")
    g.add_argument(f"--prime{suffix}", choices=("yes", "no", "unknown"), default="unknown")
    g.add_argument(f"--sufficiently-large{suffix}", dest=f"suff{suffix}",
                   choices=("yes", "no", "unknown"), default="unknown")
    g.add_argument(f"--figure-eight{suffix}", dest=f"fig8{suffix}", action="store_true")


_TRI = {"yes": True, "no": False, "unknown": None}
_TORUS_LABEL = re.compile(r"^torus\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)$")


def _mn(text: str | None, what: str) -> MNPair:
    if text is None:
        raise BtSpinError(f"{what} is required (syntax m/n)")
    m, n = parse_mn(text)
    mn = normalize_mn(m, n)
    if (mn.m, mn.n) != (m, n):
        print(f"note: {what} {m}/{n} normalized to {mn} (K^(m,n) = K^(m,n+2m))", file=sys.stderr)
    return mn


def _spec(args, suffix: str, mn: MNPair) -> BtSpinSpec:
    get = lambda k: getattr(args, f"{k}{suffix}")  # noqa: E731
    sources = [k for k in ("knot", "pd", "gauss", "braid") if get(k) is not None]
    if len(sources) != 1:
        raise BtSpinError(f"give exactly one of --knot{suffix}/--pd{suffix}/--gauss{suffix}/--braid{suffix}")
    labels = {"prime": _TRI[get("prime")], "sufficiently_large": _TRI[get("suff")]}
    cls_text = get("cls")
    label, torus = None, None
    if cls_text:
        cls_text = cls_text.strip().lower()
        m = _TORUS_LABEL.match(cls_text)
        if m:
            label, torus = KnotClass.TORUS, (int(m.group(1)), int(m.group(2)))
        else:
            try:
                label = KnotClass(cls_text)
            except ValueError:
                raise BtSpinError(f"unknown class {cls_text!r}") from None
    if get("fig8"):
        labels["figure_eight"] = True
    src = sources[0]
    if src == "knot":
        name = canonical_name(get("knot"))
        if label is not None:
            labels["class_label"] = label
            if torus is not None:
                labels["torus"] = torus
        pq = torus_parameters(name)
        if pq is not None:
            if label not in (None, KnotClass.TORUS):
                raise BtSpinError(f"{name} is a torus knot, not {label.value}")
            return BtSpinSpec(pq, mn, KnotClass.TORUS, prime=labels["prime"],
                              sufficiently_large=labels["sufficiently_large"])
        return BtSpinSpec.named(name, mn, **labels)
    if src == "pd":
        d = parse_pd(get("pd"), name="pd")
    elif src == "gauss":
        d = parse_gauss(get("gauss"), name="gauss")
    else:
        if get("strands") is None:
            raise BtSpinError(f"--braid{suffix} needs --strands{suffix}")
        d = braid_to_diagram(parse_braid(get("braid"), get("strands")), name="braid")
    return BtSpinSpec(d, mn, label or KnotClass.UNKNOWN, torus=torus, **labels)


def _emit(args, command: str, result, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(dumps({"command": command, "result": result}) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


# -- commands -------------------------------------------------------------------

def cmd_invariants(args) -> None:
    spec = _spec(args, "", _mn(args.mn, "--mn"))
    rep = invariant_report(spec)
    _emit(args, "invariants", rep, report_text(rep))


def cmd_compare(args) -> None:
    mn1 = _mn(args.mn1 or args.mn, "--mn1" if args.mn1 else "--mn")
    mn2 = _mn(args.mn2 or args.mn, "--mn2" if args.mn2 else "--mn")
    a, b = _spec(args, "1", mn1), _spec(args, "2", mn2)
    v = decide(a, b)
    header = f"{a.name} ({a.label_text}) at {a.mn}  vs  {b.name} ({b.label_text}) at {b.mn}"
    result = {"knot1": a.name, "knot2": b.name, "mn1": str(a.mn), "mn2": str(b.mn), **v.to_json()}
    _emit(args, "compare", result, header + "\n" + v.to_text())


def cmd_group(args) -> None:
    spec = _spec(args, "", _mn(args.mn, "--mn"))
    if args.torus_form:
        if spec.class_label is not KnotClass.TORUS:
            raise BtSpinError("--torus-form needs a torus knot")
        pres, kind = torus_group(*spec.torus), "torus"
    else:
        w = wirtinger_presentation(spec.diagram)
        if args.orbifold:
            pres, kind = orbifold_group(w, spec.mn.m), "orbifold"
        elif spec.mn.m >= 2:
            pres, kind = btspin_group(w, spec.mn), "btspin"
        else:
            pres, kind = w, "knot"
    if args.simplify:
        pres = tietze_simplify(pres)
    _emit(args, "group", {"kind": kind, "mn": str(spec.mn), "presentation": pres.to_json(),
                          "text": str(pres)}, str(pres))


def cmd_table(args) -> None:
    cells = []
    ps = range(args.pmin, args.pmax + 1)
    qs = range(args.qmin, args.qmax + 1)
    grid: dict[tuple[int, int], str] = {}
    for p in ps:
        for q in qs:
            if p < 2 or q < 2 or math.gcd(p, q) != 1:
                grid[p, q] = "."
                continue
            det = torus_determinant(p, q)
            via_poly = abs(torus_alexander(p, q)(-1))
            if det != via_poly:
                raise BtSpinError(f"determinant mismatch at T({p},{q}): {det} vs {via_poly}")
            cells.append({"p": p, "q": q, "determinant": det})
            grid[p, q] = str(det)
    width = max([len(v) for v in grid.values()] + [len(str(args.qmax)), 3])
    lines = ["p\\q".rjust(width) + " " + " ".join(str(q).rjust(width) for q in qs)]
    for p in ps:
        lines.append(str(p).rjust(width) + " " + " ".join(grid[p, q].rjust(width) for q in qs))
    _emit(args, "table", {"cells": cells}, "\n".join(lines))


def cmd_homs(args) -> None:
    spec = _spec(args, "", _mn(args.mn, "--mn"))
    w = wirtinger_presentation(spec.diagram)
    target = args.target
    if target == "orbifold":
        pres, conj = orbifold_group(w, spec.mn.m), True
    elif target == "btspin":
        pres, conj = btspin_group(w, spec.mn), False
    else:
        pres, conj = w, True
    groups: list[FiniteGroupTable] = []
    for name in args.group or []:
        try:
            groups.append(builtin_group(name))
        except KeyError as e:
            raise BtSpinError(str(e.args[0])) from None
    for path in args.group_file or []:
        with open(path, encoding="utf-8") as fh:
            try:
                groups.append(FiniteGroupTable.from_json(json.load(fh)))
            except (ValueError, KeyError) as e:
                raise BtSpinError(f"{path}: {e}") from None
    if not groups:
        groups = list(builtin_groups())
    simple = tietze_simplify(pres)
    counts = {}
    for G in groups:
        counts[G.name] = count_homs(simple, G, simplify=False, conjugate_generators=conj,
                                    max_order=args.max_order, max_gens=args.max_gens)
    invariant = target == "btspin" or (target == "orbifold" and hom_guard(spec)) or \
        (target == "knot" and spec.mn.m == 0)
    result = {"target": target, "mn": str(spec.mn), "counts": counts, "invariant_of_2knot": invariant}
    lines = [f"{name}: {c}" for name, c in counts.items()]
    if not invariant:
        lines.append("note: these counts are not known to be invariants of K^(m,n) for this input")
    _emit(args, "homs", result, "\n".join(lines))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="btspin", description="Invariants and comparison of branched twist spins.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    common = argparse.ArgumentParser(add_help=False)
    # accepted after the subcommand too; SUPPRESS keeps the top-level value otherwise
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", parents=[common], help="invariant report for one K^(m,n)")
    _add_knot_options(p)
    p.add_argument("--mn", required=True, help="m/n")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("compare", parents=[common], help="decide whether two branched twist spins are distinct")
    _add_knot_options(p, "1")
    _add_knot_options(p, "2")
    p.add_argument("--mn", help="m/n for both knots")
    p.add_argument("--mn1")
    p.add_argument("--mn2")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("group", parents=[common], help="print a group presentation")
    _add_knot_options(p)
    p.add_argument("--mn", required=True)
    p.add_argument("--orbifold", action="store_true", help="quotient by the central element h")
    p.add_argument("--torus-form", action="store_true", help="<mu, lambda | mu^p lambda^-q> for T(p,q)")
    p.add_argument("--simplify", action="store_true", help="apply Tietze simplification")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("table", parents=[common], help="torus knot determinants over a (p,q) grid")
    p.add_argument("--pmin", type=int, default=2)
    p.add_argument("--pmax", type=int, default=9)
    p.add_argument("--qmin", type=int, default=2)
    p.add_argument("--qmax", type=int, default=9)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("homs", parents=[common], help="homomorphism counts into finite groups")
    _add_knot_options(p)
    p.add_argument("--mn", required=True)
    p.add_argument("--target", choices=("orbifold", "btspin", "knot"), default="orbifold")
    p.add_argument("--group", action="append", help="built-in group name (repeatable; default: all)")
    p.add_argument("--group-file", action="append", help="JSON group table (order, flattened mul)")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p.add_argument("--max-gens", type=int, default=None,
                   help="generator cap after simplification (default: $BTSPIN_HOM_CAP or 12)")
    p.set_defaults(func=cmd_homs)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except CapExceeded as e:
        print(f"btspin: resource cap exceeded: {e}", file=sys.stderr)
        return 2
    except BtSpinError as e:
        print(f"btspin: error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
