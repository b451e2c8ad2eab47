"""Command-line front end: ``gis <subcommand> ...``.

Exit codes: 0 success, 1 domain error (unknown vertex, non-composable path,
bad graph file), 2 usage or literal syntax error, 3 ``verify`` found failures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .brandt import format_brandt
from .errors import GisError, ParseError
from .gis import (RELATIONS, enumerate_dclass, enumerate_jclass, format_element, green, multiply,
                  parse_element)
from .graph import read_graph, scc
from .paths import (KINDS, cycle_factorize, enumerate_paths, factor_at_component, factor_at_vertex,
                    format_path, parse_path)
from .polycyclic import format_poly, parse_word, poly_multiply, poly_reduce
from .structure import (brandt_to_dclass, component_structure, cycles_to_poly, dclass_to_brandt,
                        embed_jclass, local_structure, poly_to_cycles, structural_report,
                        unembed_jclass)
from .verify import verify_suite


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _anchor(args, g):
    if (args.vertex is None) == (args.component is None):
        raise UsageError("give exactly one of --vertex or --component")
    if args.vertex is not None:
        return "vertex", g.check_vertex(args.vertex)
    block = frozenset(v.strip() for v in args.component.split(",") if v.strip())
    for v in block:
        g.check_vertex(v)
    return "component", scc(g).check_block(block)


def cmd_analyze(args, out):
    report = structural_report(read_graph(args.graph), args.bound)
    out.write(report.to_json() if args.json else report.to_text())
    return 0


def cmd_mul(args, out):
    g = read_graph(args.graph)
    xs = [parse_element(g, text) for text in args.elements]
    acc = xs[0]
    for x in xs[1:]:
        acc = multiply(g, acc, x)
    text = format_element(acc)
    out.write(_dump({"product": text}) + "\n" if args.json else text + "\n")
    return 0


def cmd_green(args, out):
    g = read_graph(args.graph)
    x, y = parse_element(g, args.x), parse_element(g, args.y)
    value = green(g, args.rel, x, y)
    if args.json:
        out.write(_dump({"relation": args.rel, "x": format_element(x), "y": format_element(y),
                         "related": value}) + "\n")
    else:
        out.write(str(value).lower() + "\n")
    return 0


def cmd_enum(args, out):
    g = read_graph(args.graph)
    mode, anchor = _anchor(args, g)
    kind = args.set
    if kind in ("D_e", "J_A"):
        if (kind == "D_e") != (mode == "vertex"):
            raise UsageError(f"--set {kind} needs --{'vertex' if kind == 'D_e' else 'component'}")
        elems = (enumerate_dclass(g, anchor, args.bound) if kind == "D_e"
                 else enumerate_jclass(g, anchor, args.bound))
        members = [format_element(x) for x in elems]
        complete = None
    else:
        if kind.endswith("_A") != (mode == "component"):
            raise UsageError(f"--set {kind} needs --{'component' if kind.endswith('_A') else 'vertex'}")
        ps = enumerate_paths(g, kind, anchor, args.bound)
        members = [format_path(p) for p in ps]
        complete = ps.complete
    if args.json:
        doc = {"set": kind, "anchor": anchor if mode == "vertex" else sorted(anchor),
               "bound": args.bound, "members": members}
        if complete is not None:
            doc["complete"] = complete
        out.write(_dump(doc) + "\n")
    else:
        for m in members:
            out.write(m + "\n")
        if complete is not None:
            out.write(f"# {len(members)} members, complete={str(complete).lower()}\n")
    return 0


def cmd_factor(args, out):
    g = read_graph(args.graph)
    mode, anchor = _anchor(args, g)
    u = parse_path(g, args.path)
    if args.cycles:
        if mode != "vertex":
            raise UsageError("--cycles needs --vertex")
        parts = [format_path(p) for p in cycle_factorize(g, u, anchor)]
        out.write(_dump({"factors": parts}) + "\n" if args.json else " ".join(parts) + "\n")
        return 0
    u1, u2 = (factor_at_vertex if mode == "vertex" else factor_at_component)(g, u, anchor)
    if args.json:
        out.write(_dump({"u1": format_path(u1), "u2": format_path(u2)}) + "\n")
    else:
        out.write(f"u1={format_path(u1)} u2={format_path(u2)}\n")
    return 0


def cmd_iso_check(args, out):
    g = read_graph(args.graph)
    mode, anchor = _anchor(args, g)
    x = parse_element(g, args.element)
    doc = {"element": format_element(x)}
    if mode == "vertex":
        ls = local_structure(g, anchor, args.bound)
        h = dclass_to_brandt(ls, x)
        doc["brandt"] = format_brandt(h)
        doc["round_trip"] = brandt_to_dclass(ls, h) == x
        if x.u is None or (x.u.src == anchor and x.v.src == anchor):
            p = cycles_to_poly(ls, x)
            doc["polycyclic"] = format_poly(p)
            doc["round_trip"] = doc["round_trip"] and poly_to_cycles(ls, p) == x
    else:
        cst = component_structure(g, anchor, args.bound)
        t = embed_jclass(cst, x)
        doc["brandt"] = format_brandt(t)
        doc["round_trip"] = unembed_jclass(cst, t) == x
    if args.json:
        out.write(_dump(doc) + "\n")
    else:
        for key in ("element", "polycyclic", "brandt"):
            if key in doc:
                out.write(f"{key}: {doc[key]}\n")
        out.write(f"round_trip: {str(doc['round_trip']).lower()}\n")
    return 0 if doc["round_trip"] else 1


def cmd_poly(args, out):
    alphabet = [a.strip() for a in args.alphabet.split(",") if a.strip()] if args.alphabet else []
    if args.op == "reduce":
        if len(args.words) != 1:
            raise UsageError("poly reduce takes exactly one word")
        result = poly_reduce(alphabet, parse_word(args.words[0]))
    else:
        if len(args.words) < 2:
            raise UsageError("poly mul takes at least two words")
        vals = [poly_reduce(alphabet, parse_word(w)) for w in args.words]
        result = vals[0]
        for v in vals[1:]:
            result = poly_multiply(result, v)
    text = format_poly(result)
    out.write(_dump({"result": text}) + "\n" if args.json else text + "\n")
    return 0


def cmd_verify(args, out):
    report = verify_suite(read_graph(args.graph), args.bound, args.seed, args.samples)
    if args.json:
        out.write(report.to_json())
    else:
        color = os.environ.get("GIS_COLOR", "1") != "0" and getattr(out, "isatty", lambda: False)()
        out.write(report.to_text(color=color))
    return 0 if report.passed else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gis", description="Graph inverse semigroup toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="graph JSON file")
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        p.set_defaults(func=func)
        return p

    def anchored(p):
        p.add_argument("--vertex")
        p.add_argument("--component", help="comma-separated vertices of a strongly connected component")

    p = graph_cmd("analyze", cmd_analyze, "structure report")
    p.add_argument("--bound", type=int, default=4)

    p = graph_cmd("mul", cmd_mul, "multiply elements")
    p.add_argument("elements", nargs="+", metavar="ELEMENT")

    p = graph_cmd("green", cmd_green, "Green's relation query")
    p.add_argument("--rel", choices=RELATIONS, required=True)
    p.add_argument("x")
    p.add_argument("y")

    p = graph_cmd("enum", cmd_enum, "enumerate a path set or D/J class")
    p.add_argument("--set", choices=KINDS + ("D_e", "J_A"), required=True)
    p.add_argument("--bound", type=int, default=4)
    anchored(p)

    p = graph_cmd("factor", cmd_factor, "first-visit or cycle factorization of a path")
    p.add_argument("path")
    p.add_argument("--cycles", action="store_true", help="cut a cycle into first-return cycles")
    anchored(p)

    p = graph_cmd("iso-check", cmd_iso_check, "images of an element under the structure maps")
    p.add_argument("element")
    p.add_argument("--bound", type=int, default=4)
    anchored(p)

    p = sub.add_parser("poly", help="polycyclic monoid words")
    p.add_argument("op", choices=("reduce", "mul"))
    p.add_argument("words", nargs="+", metavar="WORD")
    p.add_argument("--alphabet", default="", help="comma-separated labels")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly)

    p = graph_cmd("verify", cmd_verify, "run the verification suite")
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10_000, help="random associativity triples")
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    if hasattr(out, "reconfigure"):
        out.reconfigure(encoding="utf-8")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "bound", 0) < 0:
        err.write("gis: error: --bound must be non-negative\n")
        return 2
    try:
        return args.func(args, out)
    except (UsageError, ParseError) as exc:
        err.write(f"gis: error: {exc}\n")
        return 2
    except GisError as exc:
        err.write(f"gis: error: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"gis: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
