"""Command line entry point wiring all modules together.

Exit codes: 0 success or verification pass, 1 verification failure
(violations printed), 2 usage, format or capacity errors. All randomness
sits behind explicit seeds, so every artifact is reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import covers, graphs, planes, reduction
from .errors import AffineCoverError, CapacityError
from .geom import cover_by_lines, min_line_cover, validate_drawing2
from .geom.io import read_drawing2, read_lines, write_drawing2, write_lines
from .geom.svg import export_svg


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _report_out(payload: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def cmd_gen_stacked(args) -> int:
    g, tree = graphs.stacked_triangulation(args.depth)
    _write(args.out, graphs.write_graph(g))
    print(f"stacked depth {args.depth}: {g.n} vertices, {g.m} edges, "
          f"{len(tree.frontier())} frontier faces", file=sys.stderr)
    return 0


def cmd_gen_g0(args) -> int:
    _write(args.out, graphs.write_graph(graphs.anchor_gadget()))
    return 0


def cmd_gen_spiral(args) -> int:
    g, inner = graphs.make_spiral(args.levels)
    _write(args.out, graphs.write_graph(g))
    print(f"spiral with {args.levels} levels: inner face degree {len(inner)}",
          file=sys.stderr)
    return 0


def cmd_reduce(args) -> int:
    g = graphs.read_graph(_read(args.graph))
    red = reduction.build_reduction(g, args.attachment)
    prefix = args.out or (Path(args.graph).stem + "-reduced")
    Path(prefix + ".graph").write_text(graphs.write_graph(red.graph))
    Path(prefix + ".reduction.json").write_text(reduction.reduction_to_json(red))
    print(f"wrote {prefix}.graph and {prefix}.reduction.json "
          f"(n={red.graph.n}, m={red.graph.m}, L={red.path_length})",
          file=sys.stderr)
    return 0


def cmd_forward_draw(args) -> int:
    g = graphs.read_graph(_read(args.graph))
    lev = graphs.read_levels(_read(args.levels))
    if args.attachment is not None:
        attachment = args.attachment
    else:
        attachment = lev.order_within[1][-1]
    red = reduction.build_reduction(g, attachment)
    pos = reduction.forward_draw(g, lev, red)
    prefix = args.out or (Path(args.graph).stem + "-twoline")
    Path(prefix + ".drawing").write_text(write_drawing2(pos))
    Path(prefix + ".reduction.json").write_text(reduction.reduction_to_json(red))
    print(f"wrote {prefix}.drawing and {prefix}.reduction.json", file=sys.stderr)
    return 0


def cmd_extract_levels(args) -> int:
    red = reduction.reduction_from_json(_read(args.reduction))
    pos = read_drawing2(_read(args.drawing))
    lev = reduction.extract_levels(red, pos)
    _write(args.out, graphs.write_levels(lev))
    return 0


def cmd_solve_pi12(args) -> int:
    g = graphs.read_graph(_read(args.graph))
    space = covers.SearchSpace(radius=args.radius)
    interval = covers.cover_interval(g, args.k_max, space)
    payload = {"lower": interval.lower,
               "upper": interval.upper if interval.upper is not None else "unknown"}
    if interval.certificate is not None:
        prefix = args.out or (Path(args.graph).stem + "-cert")
        Path(prefix + ".drawing").write_text(
            write_drawing2(interval.certificate.positions))
        Path(prefix + ".lines").write_text(write_lines(interval.certificate.lines))
        payload["certificate"] = prefix + ".drawing"
        payload["lines"] = prefix + ".lines"
    _report_out(payload, args.format)
    return 0


def cmd_stacked_draw(args) -> int:
    result = covers.stacked_line_drawing(args.depth)
    prefix = args.out or f"stacked-{args.depth}"
    Path(prefix + ".drawing").write_text(
        write_drawing2(result.certificate.positions))
    Path(prefix + ".lines").write_text(write_lines(result.certificate.lines))
    _report_out({"achieved": result.achieved, "target": result.target,
                 "meets_target": result.meets_target,
                 "certificate": prefix + ".drawing"}, args.format)
    return 0


def cmd_gen_two_planes(args) -> int:
    d = planes.tight_construction(args.n)
    _write(args.out, planes.write_two_plane(d))
    print(f"n={args.n}: {d.m} edges (bound {5 * args.n - 19})", file=sys.stderr)
    return 0


def cmd_random_3d(args) -> int:
    worst = 0
    all_pass = True
    rows = []
    for seed in range(args.seeds):
        d = planes.random_two_plane(args.n, seed)
        rep = planes.bound_check(d)
        worst = max(worst, d.m)
        all_pass = all_pass and rep.passed
        rows.append({"seed": seed, "m": d.m, "passed": rep.passed})
    payload = {"n": args.n, "seeds": args.seeds, "bound": 5 * args.n - 19,
               "max_m": worst, "all_pass": all_pass}
    if args.format == "json":
        payload["runs"] = rows
        text = json.dumps(payload, sort_keys=True) + "\n"
    else:
        table = ["seed m pass"]
        table += [f"{r['seed']} {r['m']} {'yes' if r['passed'] else 'NO'}"
                  for r in rows]
        table += [f"{key}: {value}" for key, value in payload.items()]
        text = "\n".join(table) + "\n"
    _write(args.out, text)
    return 0 if all_pass else 1


def cmd_verify_2d(args) -> int:
    g = graphs.read_graph(_read(args.graph))
    pos = read_drawing2(_read(args.drawing))
    report = validate_drawing2(g, pos)
    covered = True
    if args.lines is not None:
        lines = read_lines(_read(args.lines))
        covered = cover_by_lines([pos[v] for v in range(g.n)], lines)
    payload = {"drawing_ok": report.ok, "covered": covered,
               "violations": [str(v) for v in report.violations]}
    _report_out(payload, args.format)
    return 0 if report.ok and covered else 1


def cmd_verify_3d(args) -> int:
    d = planes.read_two_plane(_read(args.drawing))
    report = d.validate()
    payload = {"ok": report.ok, "violations": [str(v) for v in report.violations]}
    _report_out(payload, args.format)
    return 0 if report.ok else 1


def cmd_bound_check(args) -> int:
    d = planes.read_two_plane(_read(args.drawing))
    report = d.validate()
    if not report.ok:
        _report_out({"ok": False, "violations": [str(v) for v in report.violations]},
                    args.format)
        return 1
    rep = planes.bound_check(d)
    _report_out(rep.to_dict(), args.format)
    return 0 if rep.passed else 1


def cmd_export_svg(args) -> int:
    pos = read_drawing2(_read(args.drawing))
    edges = ()
    if args.graph is not None:
        edges = sorted(graphs.read_graph(_read(args.graph)).edges)
    lines = read_lines(_read(args.lines)) if args.lines is not None else ()
    Path(args.out).write_text(export_svg(pos, edges, lines))
    return 0


def cmd_min_cover(args) -> int:
    pos = read_drawing2(_read(args.drawing))
    k, lines = min_line_cover(list(pos.values()))
    _report_out({"k": k, "lines": write_lines(lines).splitlines()}, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affinecover",
        description="exact lab for line and plane covers of graph drawings")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("gen-stacked", cmd_gen_stacked, help="universal stacked triangulation")
    p.add_argument("depth", type=int)
    p.add_argument("--out")

    p = add("gen-g0", cmd_gen_g0, help="anchor gadget: two K4 sharing an edge")
    p.add_argument("--out")

    p = add("gen-spiral", cmd_gen_spiral, help="triangulated spiral")
    p.add_argument("levels", type=int)
    p.add_argument("--out")

    p = add("reduce", cmd_reduce, help="assemble the two-line instance")
    p.add_argument("graph")
    p.add_argument("attachment", type=int)
    p.add_argument("--out", help="output prefix")

    p = add("forward-draw", cmd_forward_draw,
            help="draw the instance from a leveled witness")
    p.add_argument("graph")
    p.add_argument("levels")
    p.add_argument("--attachment", type=int)
    p.add_argument("--out", help="output prefix")

    p = add("extract-levels", cmd_extract_levels,
            help="recover a leveling from a two-line drawing")
    p.add_argument("reduction")
    p.add_argument("drawing")
    p.add_argument("--out")

    p = add("solve-pi12", cmd_solve_pi12, help="interval and certificate search")
    p.add_argument("graph")
    p.add_argument("k_max", type=int)
    p.add_argument("radius", type=int, nargs="?", default=4)
    p.add_argument("--out", help="certificate prefix")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("stacked-draw", cmd_stacked_draw,
            help="few-line certificate for a stacked triangulation")
    p.add_argument("depth", type=int)
    p.add_argument("--out", help="certificate prefix")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("gen-two-planes", cmd_gen_two_planes,
            help="edge-maximal two-plane drawing")
    p.add_argument("n", type=int)
    p.add_argument("--out")

    p = add("random-3d", cmd_random_3d, help="seeded random saturated drawings")
    p.add_argument("n", type=int)
    p.add_argument("seeds", type=int)
    p.add_argument("--out", help="report path (default stdout)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("verify-2d", cmd_verify_2d, help="validate a plane drawing and cover")
    p.add_argument("graph")
    p.add_argument("drawing")
    p.add_argument("lines", nargs="?")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("verify-3d", cmd_verify_3d, help="validate a two-plane drawing")
    p.add_argument("drawing")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("bound-check", cmd_bound_check, help="edge bound for two-plane drawings")
    p.add_argument("drawing")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("export-svg", cmd_export_svg, help="render a drawing deterministically")
    p.add_argument("drawing")
    p.add_argument("out")
    p.add_argument("--graph")
    p.add_argument("--lines")

    p = add("min-cover", cmd_min_cover, help="exact minimum line cover of points")
    p.add_argument("drawing")
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return 2
    except AffineCoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
