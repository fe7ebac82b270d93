"""``singan`` command line front end.

Exit codes: 0 success, 1 usage error, 2 input or validation error,
3 an asserted verification claim failed.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import catalog, document
from .boundary import BoundaryError, BoundarySpec, triple_classify
from .classify import analyze
from .cycles import Cycle
from .graph import GraphError, GraphFile, parse_graph_file, parse_rational, serialize_graph
from .reider import ReiderQuery, reider_check, smooth_point_criterion
from .verify import (
    NotLogTerminalError,
    verify_fundamental_minimality,
    verify_laufer_order_independence,
    verify_prop_2_10,
    verify_tech_lemma,
)

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_CLAIM = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational_arg(s: str) -> Fraction:
    try:
        return parse_rational(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an exact rational like 3 or 7/2, got {s!r}")


def load(source: str) -> GraphFile:
    """Read a graph file, or ``catalog:NAME`` for a built-in entry."""
    if source.startswith("catalog:"):
        entry = catalog.builtin(source[len("catalog:"):])
        return GraphFile(entry.graph)
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror or exc}")
    return parse_graph_file(text)


def _spec(gf: GraphFile) -> BoundarySpec:
    return BoundarySpec.from_lines(gf.curves)


def _yn(flag) -> str:
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def _analysis_text(doc: dict, report) -> str:
    inv = report.invariants
    c = doc["classification"]
    lines = [
        f"vertices        {inv.graph.n}",
        f"Z               {inv.Z}",
        f"Delta           {inv.Delta}",
        f"p_a(Z)          {inv.pa_Z}",
        f"delta_y         {doc['invariants']['delta_y']}",
        f"Z^2             {inv.Z2}",
        f"Delta^2         {doc['invariants']['Delta2']}",
        f"shape           {c['shape']}",
    ]
    lines += _flag_lines(c)
    t = doc["triple"]
    if t is not None:
        lines += [
            f"b'              {Cycle(inv.graph, tuple(Fraction(x) for x in t['b_prime'].values()))}",
            f"lt triple       {_yn(t['is_lt_triple'])}",
            f"lc triple       {_yn(t['is_lc_triple'])}",
            f"mu              {t['mu'] if t['mu'] is not None else 'undefined (germ not log-terminal)'}",
        ]
    return "\n".join(lines) + "\n"


def _flag_lines(c: dict) -> list[str]:
    out = [
        f"smooth          {_yn(c['is_smooth'])}",
        f"rational        {_yn(c['is_rational'])}",
        f"RDP             {_yn(c['is_rdp'])}",
        f"elliptic Gor.   {_yn(c['is_elliptic_gorenstein'])}",
        f"log-terminal    {_yn(c['is_log_terminal'])}",
        f"log-canonical   {_yn(c['is_log_canonical'])}",
    ]
    if c["multiplicity"] is not None:
        out.append(f"multiplicity    {c['multiplicity']}")
    if c["truly_lc_type"] is not None:
        out.append(f"truly lc type   {c['truly_lc_type']}")
    return out


def cmd_analyze(args, out) -> int:
    gf = load(args.file)
    report = analyze(gf.graph)
    spec = _spec(gf)
    triple = triple_classify(gf.graph, report.invariants, spec) if gf.curves else None
    doc = document.analysis_document(gf.graph, report, spec if gf.curves else None, triple)
    out.write(document.dumps(doc) if args.json else _analysis_text(doc, report))
    return EXIT_OK


def cmd_classify(args, out) -> int:
    gf = load(args.file)
    report = analyze(gf.graph)
    doc = document.classification_document(gf.graph, report)
    if args.json:
        out.write(document.dumps(doc))
    else:
        c = doc["classification"]
        out.write("\n".join([f"shape           {c['shape']}"] + _flag_lines(c)) + "\n")
    return EXIT_OK


def cmd_reider(args, out) -> int:
    gf = load(args.file)
    spec = _spec(gf)
    if args.adjoint:
        spec.check_adjoint()
    try:
        q = ReiderQuery(args.m2, args.mc, True, args.mc_positive)
    except ValueError as exc:
        raise InputError(str(exc))
    report = analyze(gf.graph)
    triple = triple_classify(gf.graph, report.invariants, spec)
    if report.is_smooth:
        doc = document.reider_document(
            gf.graph, spec, triple, q, None, smooth_point_criterion(spec, q),
            note="out of scope of Theorems 6-7: y is smooth",
        )
    else:
        doc = document.reider_document(gf.graph, spec, triple, q, reider_check(report, triple, q))
    out.write(document.dumps(doc))
    return EXIT_OK


def _verification_text(res) -> str:
    d = res.details
    lines = [
        f"claim           {res.claim}",
        f"search space    {res.search_space}",
        f"asserted        {_yn(res.asserted)}",
        f"holds           {_yn(res.holds)}",
    ]
    if res.extremal_value is not None:
        lines.append(f"extremal value  {document.rat(res.extremal_value)}")
    if res.witness is not None:
        lines.append(f"witness         {res.witness}")
    if "delta_y" in d:
        lines.append(f"delta_y         {document.rat(d['delta_y'])}")
    if "Z" in d:
        lines.append(f"Z               {d['Z']}")
    return "\n".join(lines) + "\n"


def cmd_verify(args, out) -> int:
    gf = load(args.file)
    g = gf.graph
    if args.claim == "prop210":
        res = verify_prop_2_10(g, headroom=args.headroom, exercise_lc=args.exercise_lc)
    elif args.claim == "fundcycle":
        try:
            res = verify_fundamental_minimality(g, args.cap)
        except ValueError as exc:
            raise InputError(str(exc))
    elif args.claim == "tech":
        res = verify_tech_lemma(g)
    else:
        res = verify_laufer_order_independence(g, trials=args.trials, seed=args.seed)
    doc = document.verification_document(res)
    out.write(document.dumps(doc) if args.json else _verification_text(res))
    return EXIT_CLAIM if res.failed else EXIT_OK


def _expected_doc(entry) -> dict:
    names = entry.graph.names
    out = {}
    for key, val in entry.expected.items():
        if isinstance(val, tuple):
            out[key] = {n: document.rat(x) for n, x in zip(names, val)}
        elif isinstance(val, Fraction):
            out[key] = document.rat(val)
        else:
            out[key] = val
    return out


def cmd_catalog(args, out) -> int:
    if args.action == "list":
        for name in catalog.list_names():
            out.write(name + "\n")
        return EXIT_OK
    if not args.name:
        raise InputError("catalog show needs an entry name")
    entry = catalog.builtin(args.name)
    if args.graph:
        out.write(serialize_graph(entry.graph))
        return EXIT_OK
    if args.json:
        doc = {
            "schema_version": document.SCHEMA_VERSION,
            "kind": "catalog-entry",
            "name": entry.name,
            "provenance": entry.provenance,
            "derived": entry.derived,
            "misprint": entry.misprint or None,
            "expected": _expected_doc(entry),
            "graph": document.graph_echo(entry.graph),
        }
        out.write(document.dumps(doc))
        return EXIT_OK
    lines = [f"{'name':<24}{entry.name}", f"{'provenance':<24}{entry.provenance}"]
    if entry.derived:
        lines.append(f"{'derived':<24}yes (computed here, not published)")
    if entry.misprint:
        lines.append(f"{'misprint':<24}{entry.misprint}")
    for key, val in _expected_doc(entry).items():
        if isinstance(val, dict):
            val = " ".join(f"{n}={x}" for n, x in val.items())
        lines.append(f"{key:<24}{val}")
    out.write("\n".join(lines) + "\n" + serialize_graph(entry.graph))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="singan", description="Invariants of normal surface singularities from dual graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="full invariant report")
    a.add_argument("file", help="graph file, or catalog:NAME")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classify", help="classification flags only")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser("reider", help="which freeness criteria have their hypotheses met")
    r.add_argument("file")
    r.add_argument("--m2", type=_rational_arg, required=True, help="M^2")
    r.add_argument("--mc", type=_rational_arg, required=True, help="min M.C over curves through y")
    r.add_argument("--mc-positive", action="store_true", help="assert M.C > 0 for every C through y")
    r.add_argument("--adjoint", action="store_true", help="require boundary coefficients < 1")
    r.set_defaults(func=cmd_reider)

    v = sub.add_parser("verify", help="bounded brute-force checks")
    v.add_argument("claim", choices=["prop210", "fundcycle", "tech", "laufer"])
    v.add_argument("file")
    v.add_argument("--headroom", type=int, default=2)
    v.add_argument("--cap", type=int, default=None)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--exercise-lc", action="store_true")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("catalog", help="built-in fixture graphs")
    k.add_argument("action", choices=["list", "show"])
    k.add_argument("name", nargs="?")
    k.add_argument("--json", action="store_true")
    k.add_argument("--graph", action="store_true", help="print the entry as a graph file")
    k.set_defaults(func=cmd_catalog)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "headroom", 0) < 0 or (getattr(args, "trials", 1) or 0) < 1:
        err.write("singan: error: --headroom must be >= 0 and --trials >= 1\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (InputError, GraphError, BoundaryError, NotLogTerminalError) as exc:
        err.write(f"singan: error: {exc}\n")
        return EXIT_INPUT
    except catalog.UnknownEntryError as exc:
        err.write(f"singan: error: {exc.args[0]}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
