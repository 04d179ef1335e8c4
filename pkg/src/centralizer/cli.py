"""Command-line front end.

Exit codes: 0 success, 1 input/parse error, 2 field mismatch, 3 inequivalent
(only with --exit-verdict), 4 selftest failure, 5 computation limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from typing import Sequence

from .equivalence import PERMUTATION_NOTE, EquivalenceVerdict, Relation, decide, decide_all
from .fields import Field, FieldError, FieldMismatchError, make_field
from .isoclass import CapacityError
from .matrixio import read_matrix_file
from .parsing import ParseError
from .permutation import CycleType, cycle_type_profile, p_split
from .poly import format_poly
from .profile import DivisorProfile, profile
from .structure import structure_report

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_FIELD = 2
EXIT_INEQUIVALENT = 3
EXIT_SELFTEST = 4
EXIT_CAPACITY = 5

RELATION_FLAGS = {"morita": Relation.M, "derived": Relation.D, "ad": Relation.AD, "sm": Relation.SM}
RELATION_NAMES = {
    Relation.M: "Morita",
    Relation.D: "derived",
    Relation.AD: "almost nu-stable derived",
    Relation.SM: "stable of Morita type",
}


class Style:
    def __init__(self, stream):
        self.enabled = "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()

    def paint(self, text: str, code: str) -> str:
        return f"\033[{code}m{text}\033[0m" if self.enabled else text

    def yes_no(self, flag: bool) -> str:
        return self.paint("yes", "32") if flag else self.paint("no", "31")


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _cli_field(args) -> Field | None:
    if args.char is None:
        if args.ext != 1:
            raise FieldError("--ext needs --char")
        return None
    return make_field(args.char, args.ext)


def load_profile(spec: str, args) -> tuple[DivisorProfile, dict]:
    """Profile of a matrix file or (with --perm) a cycle type, plus a description."""
    declared = _cli_field(args)
    if args.perm:
        field = declared if declared is not None else make_field(0, 1)
        ct = CycleType.parse(spec)
        return cycle_type_profile(ct, field), {"cycle_type": str(ct)}
    m = read_matrix_file(spec)
    if declared is not None and declared != m.field:
        raise FieldMismatchError(f"{spec} declares {m.field}, but the command line asks for {declared}")
    return profile(m), {"file": os.path.basename(spec)}


def _set(values) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


def render_analysis(p: DivisorProfile, source: dict, style: Style) -> str:
    report = structure_report(p)
    mult = p.multiplicities()
    label = source.get("file") or f"permutation of cycle type {source['cycle_type']}"
    lines = [
        f"input: {label}",
        f"field: {p.field}",
        f"n: {p.n}",
        f"characteristic polynomial: {format_poly(p.characteristic_polynomial())}",
        f"minimal polynomial: {format_poly(p.minimal_polynomial())}",
        "elementary divisors:",
    ]
    lines += [f"  {d}" + (f"  (x{mult[d]})" if mult[d] > 1 else "") for d in p.distinct()]
    lines.append("maximal divisors:")
    for b in p.blocks:
        lines.append(f"  {b.divisor}  P = {_set(b.pset)}" + ("  reducible" if b.reducible else ""))
    lines.append("structure:")
    lines.append(f"  algebra dimension: {report.algebra_dim}")
    lines.append(f"  dominant dimension: {report.dominant_dimension}")
    lines.append(f"  representation-finite: {style.yes_no(report.representation_finite)}")
    lines.append(f"  principal cyclic: {style.yes_no(report.principal_cyclic)}")
    for b in report.blocks:
        lines.append(
            f"  block {format_poly(b.base)}: Loewy length {b.loewy_length}, {b.simple_count} simple(s), "
            f"Cartan {[list(r) for r in b.cartan]}" + (", semisimple" if b.semisimple else "")
        )
    return "\n".join(lines)


def analysis_dict(p: DivisorProfile, source: dict) -> dict:
    return {"input": source, "profile": p.to_dict(), "structure": structure_report(p).to_dict()}


def render_verdict(v: EquivalenceVerdict, style: Style) -> str:
    head = f"{v.relation.value} ({RELATION_NAMES[v.relation]}): "
    head += style.paint("equivalent", "32") if v.equivalent else style.paint("not equivalent", "31")
    lines = [head]
    if v.equivalent:
        lines += [f"  {w.left} -> {w.right}  [{w.mode}]" for w in v.witness]
    elif v.reason["kind"] == "size_mismatch":
        lines.append(f"  {v.reason['left']} vs {v.reason['right']} maximal divisors")
    else:
        lines.append("  unmatched: " + ", ".join(v.reason["unmatched_left"]))
    lines.append(f"  theorem: {v.theorem_gloss}")
    lines += [f"  hypothesis: {h}" for h in v.hypotheses]
    lines += [f"  note: {n}" for n in v.notes]
    return "\n".join(lines)


def cmd_analyze(args, out, style: Style) -> int:
    p, source = load_profile(args.input, args)
    if args.json:
        out.write(_dumps(analysis_dict(p, source)) + "\n")
    else:
        out.write(render_analysis(p, source, style) + "\n")
    return EXIT_OK


def cmd_compare(args, out, style: Style) -> int:
    a, _ = load_profile(args.a, args)
    b, _ = load_profile(args.b, args)
    if a.field != b.field:
        raise FieldMismatchError(f"inputs are over different fields: {a.field} and {b.field}")
    if args.relation == "all":
        verdicts = decide_all(a, b, permutations=args.perm)
    else:
        v = decide(RELATION_FLAGS[args.relation], a, b)
        if args.perm and v.relation in (Relation.M, Relation.D):
            v = replace(v, notes=(PERMUTATION_NOTE,))
        verdicts = [v]
    if args.json:
        out.write(_dumps({"field": a.field.to_dict(), "verdicts": [v.to_dict() for v in verdicts]}) + "\n")
    else:
        out.write("\n".join(render_verdict(v, style) for v in verdicts) + "\n")
    if args.exit_verdict and not all(v.equivalent for v in verdicts):
        return EXIT_INEQUIVALENT
    return EXIT_OK


def split_dict(specs: Sequence[str], field: Field) -> dict:
    p = field.characteristic
    cts = [CycleType.parse(s) for s in specs]
    parts = []
    for ct in cts:
        reg, sing = p_split(ct, p)
        parts.append({"cycle_type": str(ct), "regular": str(reg), "singular": str(sing)})
    d: dict = {"field": field.to_dict(), "inputs": parts}
    if len(cts) == 2:
        splits = [p_split(ct, p) for ct in cts]
        pairs = {
            "full": (cts[0], cts[1]),
            "regular": (splits[0][0], splits[1][0]),
            "singular": (splits[0][1], splits[1][1]),
        }
        d["derived"] = {
            key: decide(Relation.D, cycle_type_profile(x, field), cycle_type_profile(y, field)).to_dict()
            for key, (x, y) in pairs.items()
        }
    return d


def cmd_split(args, out, style: Style) -> int:
    field = _cli_field(args) or make_field(0, 1)
    d = split_dict(args.specs, field)
    if args.json:
        out.write(_dumps(d) + "\n")
        return EXIT_OK
    lines = [f"field: {field}"]
    for part in d["inputs"]:
        lines.append(f"{part['cycle_type']}:")
        lines.append(f"  regular:  {part['regular']}")
        lines.append(f"  singular: {part['singular']}")
    if "derived" in d:
        lines.append("derived equivalent:")
        for key in ("full", "regular", "singular"):
            v = d["derived"][key]
            extra = ""
            if v["reason"] and v["reason"]["kind"] == "size_mismatch":
                extra = f"  ({v['reason']['left']} vs {v['reason']['right']} maximal divisors)"
            lines.append(f"  {key + ':':<10}{style.yes_no(v['equivalent'])}{extra}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_selftest(args, out, style: Style) -> int:
    from .oracle import run_selftest

    out.write(f"{'check':<48}{'cases':>7}  result\n")

    def show(res):
        mark = style.paint("PASS", "32") if res.passed else style.paint("FAIL", "31")
        out.write(f"{res.name:<48}{res.cases:>7}  {mark}\n")
        for f in res.failures[:5]:
            out.write(f"    {f}\n")
        out.flush()

    results = run_selftest(show, quick=args.quick)
    return EXIT_OK if all(r.passed for r in results) else EXIT_SELFTEST


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are input errors; exit 2 is reserved for field mismatches
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="centralizer",
        description="Elementary-divisor profiles and equivalences of centralizer matrix algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def field_opts(p):
        p.add_argument("--char", type=int, default=None, help="characteristic (0 for Q)")
        p.add_argument("--ext", type=int, default=1, help="extension degree k for GF(p^k)")

    pa = sub.add_parser("analyze", help="profile and structure report of one matrix")
    pa.add_argument("input", help="JSON matrix file, or a cycle type with --perm")
    pa.add_argument("--perm", action="store_true", help="treat the input as a cycle type such as 15,1^4")
    pa.add_argument("--json", action="store_true")
    field_opts(pa)
    pa.set_defaults(func=cmd_analyze)

    pc = sub.add_parser("compare", help="decide M / D / AD / SM between two matrices")
    pc.add_argument("a")
    pc.add_argument("b")
    pc.add_argument("--perm", action="store_true", help="treat both inputs as cycle types")
    pc.add_argument("--relation", choices=[*RELATION_FLAGS, "all"], default="all")
    pc.add_argument("--json", action="store_true")
    pc.add_argument("--exit-verdict", action="store_true", help="exit 3 when some verdict is inequivalent")
    field_opts(pc)
    pc.set_defaults(func=cmd_compare)

    ps = sub.add_parser("split", help="p-regular / p-singular split of cycle types")
    ps.add_argument("specs", nargs="+", metavar="SPEC")
    ps.add_argument("--json", action="store_true")
    field_opts(ps)
    ps.set_defaults(func=cmd_split)

    pt = sub.add_parser("selftest", help="run the oracle corpus")
    pt.add_argument("--quick", action="store_true", help="smaller corpus")
    pt.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "split" and len(args.specs) > 2:
            parser.error("split takes one or two cycle types")
    except SystemExit as exc:
        return exc.code
    style = Style(out)
    try:
        return args.func(args, out, style)
    except FieldMismatchError as exc:
        err.write(f"error: field mismatch: {exc}\n")
        return EXIT_FIELD
    except ParseError as exc:
        err.write(f"error: parse error at {exc}\n")
        return EXIT_PARSE
    except CapacityError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAPACITY
    except (OSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
