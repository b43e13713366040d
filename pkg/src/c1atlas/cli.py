"""Command-line surface: queries, sweeps, diagram rendering, verification.

Subcommands

  roots     print the positive roots of a system
  grading   print the levels of a parabolic grading (optionally as a diagram)
  strings   print a root string or a phi-string
  analyze   run the elimination pipeline for one (space, j) or the whole sweep
  shape     shape operators of a model orbit, with the total-geodesy verdict
  classify  assemble the action catalog of one or more catalog spaces
  catalog   list catalog entries
  verify    run the invariant battery

Every subcommand accepts --format json|text.  Exit codes: 0 success, 1 data
errors, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import nilcon
from .catalog import default_catalog, find_space, load_catalog
from .chevalley import build_algebra
from .classify import classify, load_tg_table
from .errors import C1AtlasError
from .rootsys import Root, RootSystem, RootSystemType, build_root_system, level_one
from .scalars import GAUSSIAN, RATIONAL
from .shapeops import OrbitSubalgebra, SolvableModel, shape_operator
from .verify import run_verify


def _root_system_from(args) -> RootSystem:
    rank = args.rank
    if rank is None:
        fixed = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
        if args.type not in fixed:
            raise C1AtlasError(f"--rank is required for family {args.type}")
        rank = fixed[args.type]
    return build_root_system(RootSystemType(args.type, rank))


def _parse_coeffs(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise C1AtlasError(f"bad coefficient vector {text!r}") from exc


def _emit(args, payload_json, payload_text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload_json, indent=2, ensure_ascii=False))
    else:
        print(payload_text)


def _load_selected_catalog(args):
    if getattr(args, "catalog", None):
        return load_catalog(args.catalog)
    return default_catalog()


# -- subcommand handlers ------------------------------------------------------

def _cmd_roots(args) -> int:
    rs = _root_system_from(args)
    rows = [
        {"coeffs": list(lam.coeffs), "height": lam.height, "length_sq": str(rs.length_sq(lam))}
        for lam in rs.positives
    ]
    text = "\n".join(
        f"{str(lam):24s} height {lam.height:3d}  length^2 {str(rs.length_sq(lam))}"
        for lam in rs.positives
    )
    _emit(args, rows, f"{rs.rtype}: {len(rs.positives)} positive roots\n{text}")
    return 0


def _cmd_grading(args) -> int:
    rs = _root_system_from(args)
    if args.hasse:
        print(render_hasse(rs, args.j, dot=args.dot))
        return 0
    phi = frozenset(range(1, rs.rank + 1)) - {args.j}
    grading = rs.grading(phi)
    if args.level is not None:
        roots = grading.level(args.level)
        _emit(
            args,
            [list(lam.coeffs) for lam in roots],
            f"level {args.level} of the grading at a{args.j} ({len(roots)} roots)\n"
            + "\n".join(str(lam) for lam in roots),
        )
        return 0
    payload = {
        "j": args.j,
        "levels": {str(nu): [list(r.coeffs) for r in grading.level(nu)] for nu in sorted(grading.levels)},
        "level_zero_positives": [list(r.coeffs) for r in grading.sigma_phi_pos],
    }
    lines = [f"grading of {rs.rtype} at a{args.j}"]
    lines.append(f"  level 0 (subsystem): {len(grading.sigma_phi_pos)} roots")
    for nu in sorted(grading.levels):
        lines.append(f"  level {nu}: {len(grading.level(nu))} roots")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_strings(args) -> int:
    rs = _root_system_from(args)
    lam = Root(_parse_coeffs(args.root))
    if args.beta:
        beta = Root(_parse_coeffs(args.beta))
        roots = rs.root_string(lam, beta)
        label = f"string of {lam} along {beta}"
    else:
        phi = frozenset(int(x) for x in args.phi.split(",")) if args.phi else frozenset()
        roots = sorted(rs.phi_string(lam, phi))
        label = f"phi-string of {lam} over {sorted(phi)}"
    _emit(
        args,
        [list(r.coeffs) for r in roots],
        f"{label}: {len(roots)} roots\n" + "\n".join(str(r) for r in roots),
    )
    return 0


def _cmd_analyze(args) -> int:
    catalog = _load_selected_catalog(args)
    if args.all:
        verdicts = nilcon.analyze_all(catalog)
    else:
        if not args.space or args.j is None:
            raise C1AtlasError("analyze needs --space and --j, or --all")
        verdicts = [nilcon.analyze(find_space(catalog, args.space), args.j)]
    _emit(
        args,
        [v.to_json() for v in verdicts],
        nilcon.verdict_table(verdicts),
    )
    return 0


def _cmd_shape(args) -> int:
    catalog = _load_selected_catalog(args)
    space = find_space(catalog, args.space)
    if space.split_flag:
        scalars = RATIONAL
    elif space.complexified_flag:
        scalars = GAUSSIAN
    else:
        raise C1AtlasError(
            f"{space.name} is neither split nor complexified; no exact model here"
        )
    rs = space.root_system()
    if args.w != "zero":
        raise C1AtlasError("only --w zero is supported")
    algebra = build_algebra(rs, scalars)
    orbit = OrbitSubalgebra(SolvableModel(algebra), args.j)
    ops = [shape_operator(orbit, xi) for xi in orbit.normal_basis()]
    tg = all(op.is_zero for op in ops)
    payload = {
        "space": space.name,
        "j": args.j,
        "w": "zero",
        "totally_geodesic": tg,
        "tangent_basis": [list(map(str, key)) for key in orbit.h_keys],
        "operators": [
            {
                "xi": [list(map(str, k)) + [str(v)] for k, v in op.xi_key],
                "matrix": [[str(x) for x in row] for row in op.matrix],
                "charpoly": [str(c) for c in op.charpoly()],
            }
            for op in ops
        ],
    }
    lines = [f"{space.name}, j = {args.j}, w = 0"]
    lines.append(f"tangent basis: {', '.join('*'.join(map(str, k)) for k in orbit.h_keys)}")
    for op in ops:
        xi_label = " + ".join(f"({v})*{'*'.join(map(str, k))}" for k, v in op.xi_key)
        lines.append(f"A_xi for xi = {xi_label}:")
        if op.is_zero:
            lines.append("  0")
        else:
            for row in op.matrix:
                lines.append("  [" + ", ".join(str(x) for x in row) + "]")
        lines.append("  charpoly: " + ", ".join(str(c) for c in op.charpoly()))
    lines.append(
        "singular orbit is totally geodesic" if tg else "singular orbit is NOT totally geodesic"
    )
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_classify(args) -> int:
    catalog = _load_selected_catalog(args)
    tg_table = load_tg_table(args.tg_table) if args.tg_table else None
    if args.all:
        names = [entry.name for entry in catalog]
        blocks_json = []
        blocks_text = []
        for name in names:
            ac = classify([find_space(catalog, name)], tg_table)
            blocks_json.append(ac.to_json())
            blocks_text.append(ac.text())
        _emit(args, blocks_json, "\n\n".join(blocks_text))
        return 0
    if not args.space:
        raise C1AtlasError("classify needs --space (repeatable) or --all")
    factors = [find_space(catalog, name) for name in args.space]
    ac = classify(factors, tg_table)
    _emit(args, ac.to_json(), ac.text())
    return 0


def _cmd_catalog(args) -> int:
    catalog = _load_selected_catalog(args)
    entries = [
        e
        for e in catalog
        if (args.family is None or e.rtype.family == args.family)
        and (args.min_rank is None or e.rank >= args.min_rank)
    ]
    payload = [
        {
            "name": e.name,
            "family": e.rtype.family,
            "rank": e.rank,
            "mults": {str(k): v for k, v in e.mult},
            "dim": e.dim,
            "split": e.split_flag,
            "complexified": e.complexified_flag,
            "aliases": list(e.aliases),
        }
        for e in entries
    ]
    width = max((len(e.name) for e in entries), default=4)
    lines = [
        f"{e.name.ljust(width)}  {str(e.rtype):5s} dim {e.dim:4d}  mults "
        + " ".join(f"{k}:{v}" for k, v in e.mult)
        for e in entries
    ]
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_verify(args) -> int:
    ok, lines = run_verify(full=args.full)
    print("\n".join(lines))
    print("verify:", "OK" if ok else "FAILED")
    return 0 if ok else 1


def render_hasse(rs: RootSystem, j: int, dot: bool = False) -> str:
    """Diagram of the level-one roots with simple-root covering edges.

    Nodes are identified by their coefficient vectors (stable across runs);
    an edge labelled a_i joins lam to lam + a_i when both are level one.
    """
    nodes = level_one(rs, j)
    node_set = set(nodes)
    edges = []
    for lam in nodes:
        for i in range(1, rs.rank + 1):
            up = lam.shifted(rs.simple(i))
            if Root(up) in node_set:
                edges.append((lam, Root(up), i))
    if dot:
        out = ["digraph level_one {"]
        out.append('  rankdir="LR";')
        for lam in nodes:
            ident = "n" + "_".join(map(str, lam.coeffs))
            out.append(f'  {ident} [label="{lam}"];')
        for a, b, i in edges:
            ia = "n" + "_".join(map(str, a.coeffs))
            ib = "n" + "_".join(map(str, b.coeffs))
            out.append(f'  {ia} -> {ib} [label="a{i}"];')
        out.append("}")
        return "\n".join(out)
    lines = [f"level-one roots of {rs.rtype} at a{j}: {len(nodes)} nodes"]
    for lam in nodes:
        lines.append(f"  {lam}  (height {lam.height})")
    lines.append("edges:")
    for a, b, i in edges:
        lines.append(f"  {a} --a{i}--> {b}")
    return "\n".join(lines)


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="c1atlas",
        description="exact root-system and shape-operator toolkit for "
        "cohomogeneity-one actions on noncompact symmetric spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, catalog=False):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if catalog:
            p.add_argument("--catalog", help="path to an alternative catalog JSON")

    def add_type(p):
        p.add_argument("--type", required=True, help="family: A B C D E6 E7 E8 F4 G2 BC")
        p.add_argument("--rank", type=int, help="rank (omit for fixed-rank families)")

    p = sub.add_parser("roots", help="positive roots of a system")
    add_type(p)
    add_common(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("grading", help="parabolic grading levels at a simple root")
    add_type(p)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--level", type=int)
    p.add_argument("--hasse", action="store_true", help="render the level-one diagram")
    p.add_argument("--dot", action="store_true", help="DOT output for --hasse")
    add_common(p)
    p.set_defaults(func=_cmd_grading)

    p = sub.add_parser("strings", help="root strings and phi-strings")
    add_type(p)
    p.add_argument("--root", required=True, help="coefficients, e.g. 1,0,1")
    p.add_argument("--beta", help="direction root coefficients")
    p.add_argument("--phi", help="comma-separated simple indices")
    add_common(p)
    p.set_defaults(func=_cmd_strings)

    p = sub.add_parser("analyze", help="nilpotent-construction elimination verdicts")
    p.add_argument("--space")
    p.add_argument("--j", type=int)
    p.add_argument("--all", action="store_true")
    add_common(p, catalog=True)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("shape", help="shape operators of a model orbit")
    p.add_argument("--space", required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--w", default="zero")
    add_common(p, catalog=True)
    p.set_defaults(func=_cmd_shape)

    p = sub.add_parser("classify", help="assemble the action catalog of a space")
    p.add_argument("--space", action="append", help="catalog name; repeat for products")
    p.add_argument("--all", action="store_true")
    p.add_argument("--tg-table", help="path to the totally-geodesic-orbit table")
    add_common(p, catalog=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("catalog", help="list catalog entries")
    p.add_argument("--family")
    p.add_argument("--min-rank", type=int)
    add_common(p, catalog=True)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("verify", help="run the invariant battery")
    p.add_argument("--full", action="store_true", help="include the exhaustive F4 checks")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except C1AtlasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
