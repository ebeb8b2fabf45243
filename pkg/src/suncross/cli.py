"""Command line interface over the whole package.

Exit codes: 0 on success, 1 when a drawing or property check fails, 2 on
usage errors, 3 when a search stops on its budget before reaching an
answer.  Commands that produce a file are silent on success; diagnostics
go to standard error.  SUNCROSS_BUDGET_SECONDS sets the default budget
for `exact` (whole search) and `sweep` (per cell).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Any

from .analysis import (check_F_hypothesis, check_lemma_m2, check_lemma_m3,
                       drawing_shape)
from .construction import construct_sunlet_drawing
from .drawing import validate_good_drawing
from .errors import (InvalidParameterError, ResourceLimitError, SuncrossError,
                     UsageError)
from .exact import Budget, SOLVED, crossing_number_exact
from .graph import (Graph, cartesian_product, make_complete,
                    make_complete_bipartite, make_complete_tripartite,
                    make_cycle, make_path, make_star, make_sunlet,
                    sunlet_star)
from .heuristic import heuristic_minimize, sweep_cell
from .serialize import (DRAWING_FORMAT, SWEEP_FORMAT, analysis_report_payload,
                        drawing_from_payload, drawing_to_payload,
                        dumps_canonical, graph_from_payload, graph_to_payload,
                        load_json, sweep_cell_payload, sweep_report_payload,
                        write_json)
from .svg import render_svg

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

BUDGET_ENV = "SUNCROSS_BUDGET_SECONDS"


def _default_budget(flag_value: float | None) -> float | None:
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return None
    try:
        return float(raw)
    except ValueError:
        raise UsageError(
            f"{BUDGET_ENV} must be a number, got {raw!r}") from None


def _emit(payload: Any, output: str | None) -> None:
    if output is None:
        sys.stdout.write(dumps_canonical(payload))
    else:
        write_json(output, payload)


def _load_graph(path: str) -> Graph:
    """Graph from a graph file, or the base graph of a drawing file."""
    obj = load_json(path)
    if isinstance(obj, dict) and obj.get("format") == DRAWING_FORMAT:
        return drawing_from_payload(obj).base
    return graph_from_payload(obj)


def _load_drawing(path: str):
    return drawing_from_payload(load_json(path))


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "sunlet-star":
        g = sunlet_star(args.n, args.m)
    elif args.family == "sunlet":
        g = make_sunlet(args.n)
    elif args.family == "star":
        g = make_star(args.m)
    elif args.family == "cycle":
        g = make_cycle(args.n)
    elif args.family == "path":
        g = make_path(args.n)
    elif args.family == "complete":
        g = make_complete(args.n)
    elif args.family == "complete-bipartite":
        g = make_complete_bipartite(args.a, args.b)
    elif args.family == "complete-tripartite":
        g = make_complete_tripartite(args.a, args.b, args.c)
    else:
        g = cartesian_product(_load_graph(args.left), _load_graph(args.right))
    _emit(graph_to_payload(g), args.output)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    d = construct_sunlet_drawing(args.n, args.m)
    _emit(drawing_to_payload(d), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        d = _load_drawing(args.drawing)
    except UsageError as exc:
        # an unreadable file fails verification rather than usage
        print(f"format: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = validate_good_drawing(d)
    if report.ok:
        print(f"crossings: {len(d.crossings)}, valid")
        return EXIT_OK
    print(f"crossings: {len(d.crossings)}, invalid")
    for violation in report.violations:
        print(f"{violation.category}: {violation.message}", file=sys.stderr)
    return EXIT_INVALID


def cmd_exact(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    budget_seconds = _default_budget(args.budget_seconds)
    budget = (Budget(seconds=budget_seconds)
              if budget_seconds is not None else None)
    result = crossing_number_exact(g, args.max_k, budget)
    if result.status == SOLVED:
        print(f"cr = {result.value}")
        if args.output is not None:
            write_json(args.output, drawing_to_payload(result.witness))
        return EXIT_OK
    if result.lower_bound > args.max_k:
        # every size up to max_k was exhausted, so the bound is proven
        print(f"cr > {args.max_k} (proven cr >= {result.lower_bound})")
        return EXIT_OK
    print(f"unresolved: budget exhausted, proven cr >= {result.lower_bound}",
          file=sys.stderr)
    return EXIT_BUDGET


def cmd_heuristic(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    seed_drawing = (_load_drawing(args.start)
                    if args.start is not None else None)
    d = heuristic_minimize(g, seed_drawing=seed_drawing,
                           passes=args.passes, rng_seed=args.rng_seed)
    _emit(drawing_to_payload(d), args.output)
    if args.output is not None:
        print(f"crossings: {len(d.crossings)}")
    return EXIT_OK


def _check_resume(obj: Any, args: argparse.Namespace,
                  budget: float | None, path: str) -> dict[tuple[int, int], dict]:
    if not isinstance(obj, dict) or obj.get("format") != SWEEP_FORMAT:
        raise UsageError(f"{path} is not a sweep report")
    fixed = {"n_max": args.n_max, "m_max": args.m_max,
             "rng_seed": args.rng_seed, "budget_seconds": budget}
    for key, want in fixed.items():
        if obj.get(key) != want:
            raise UsageError(
                f"existing report {path} was made with {key}="
                f"{obj.get(key)!r}, rerun with matching arguments")
    cells = {}
    for cell in obj.get("cells", ()):
        try:
            cells[(int(cell["n"]), int(cell["m"]))] = cell
        except (KeyError, TypeError, ValueError):
            raise UsageError(f"{path} has a malformed cell entry") from None
    return cells


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.n_max < 3 or args.m_max < 1:
        raise UsageError(
            f"need --n-max >= 3 and --m-max >= 1, got "
            f"({args.n_max}, {args.m_max})")
    budget = _default_budget(args.budget_seconds)
    if os.path.exists(args.output):
        done = _check_resume(load_json(args.output), args, budget, args.output)
    else:
        done = {}
    out_dir = os.path.dirname(os.path.abspath(args.output))
    stem = os.path.splitext(os.path.basename(args.output))[0]

    def save() -> None:
        write_json(args.output,
                   sweep_report_payload(args.n_max, args.m_max, args.rng_seed,
                                        budget, list(done.values())))

    for n in range(3, args.n_max + 1):
        for m in range(1, args.m_max + 1):
            if (n, m) in done:
                continue
            cell = sweep_cell(n, m, budget, args.rng_seed)
            witness_path = None
            if cell.witness is not None:
                witness_path = f"{stem}-witness-n{n}-m{m}.json"
                write_json(os.path.join(out_dir, witness_path),
                           drawing_to_payload(cell.witness))
            done[(n, m)] = sweep_cell_payload(cell, witness_path)
            # rewrite after every cell so an interrupted run resumes
            save()
    save()
    matches = sum(1 for cell in done.values() if cell["match"])
    print(f"cells: {len(done)}, matching the closed form: {matches}")
    for cell in sorted(done.values(), key=lambda c: (c["n"], c["m"])):
        if not cell["match"]:
            print(f"  n={cell['n']} m={cell['m']}: best {cell['best']} "
                  f"vs bound {cell['upper_bound']}")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    d = _load_drawing(args.drawing)
    report = validate_good_drawing(d)
    if not report.ok:
        for violation in report.violations:
            print(f"{violation.category}: {violation.message}",
                  file=sys.stderr)
        return EXIT_INVALID
    n, m = drawing_shape(d)
    f_load = None
    if m == 2:
        sections = [check_lemma_m2(d, i) for i in range(n)]
    elif m == 3:
        sections = [check_lemma_m3(d, i) for i in range(n)]
        f_load = check_F_hypothesis(d)
    else:
        raise UsageError(
            f"section inequalities are defined for m = 2 and m = 3, "
            f"drawing has m = {m}")
    for s in sections:
        word = "holds" if s.holds else "FAILS"
        print(f"section {s.section}: total {s.total} >= {s.required} {word}")
    if f_load is not None:
        loads = ", ".join(f"F_{i}:{count}" for i, count in f_load.per_section)
        capped = "<= 2 everywhere" if f_load.hypothesis_holds else "exceeded"
        print(f"F loads: {loads} (cap {capped})")
    if args.output is not None:
        write_json(args.output,
                   analysis_report_payload(n, m, len(d.crossings),
                                           sections, f_load))
    return EXIT_OK if all(s.holds for s in sections) else EXIT_INVALID


def cmd_svg(args: argparse.Namespace) -> int:
    d = _load_drawing(args.drawing)
    text = render_svg(d, labels=not args.no_labels)
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def _add_output(p: argparse.ArgumentParser, required: bool = False) -> None:
    p.add_argument("-o", "--output", required=required,
                   help="output file (default: standard output)"
                   if not required else "output file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="suncross",
        description="Drawings and crossing numbers of sunlet-star products.")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command")

    gen = sub.add_parser("gen", help="write a graph file for a named family")
    fam = gen.add_subparsers(dest="family", required=True, metavar="family")
    p = fam.add_parser("sunlet-star", help="product of a sunlet and a star")
    p.add_argument("--n", type=int, required=True, help="ring length")
    p.add_argument("--m", type=int, required=True, help="star leaves")
    _add_output(p)
    p = fam.add_parser("sunlet", help="cycle with one pendant per vertex")
    p.add_argument("--n", type=int, required=True, help="ring length")
    _add_output(p)
    p = fam.add_parser("star", help="one center, m leaves")
    p.add_argument("--m", type=int, required=True, help="star leaves")
    _add_output(p)
    p = fam.add_parser("cycle", help="cycle on n vertices")
    p.add_argument("--n", type=int, required=True)
    _add_output(p)
    p = fam.add_parser("path", help="path with n edges")
    p.add_argument("--n", type=int, required=True, help="edge count")
    _add_output(p)
    p = fam.add_parser("complete", help="complete graph on n vertices")
    p.add_argument("--n", type=int, required=True)
    _add_output(p)
    p = fam.add_parser("complete-bipartite", help="complete bipartite graph")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    _add_output(p)
    p = fam.add_parser("complete-tripartite", help="complete tripartite graph")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    _add_output(p)
    p = fam.add_parser("product", help="cartesian product of two graph files")
    p.add_argument("left", help="first factor graph file")
    p.add_argument("right", help="second factor graph file")
    _add_output(p)
    gen.set_defaults(func=cmd_gen)

    p = sub.add_parser("construct",
                       help="closed-form drawing of a sunlet-star product")
    p.add_argument("--n", type=int, required=True, help="ring length")
    p.add_argument("--m", type=int, required=True, help="star leaves")
    _add_output(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="validate a drawing file")
    p.add_argument("drawing", help="drawing file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact",
                       help="exact crossing number by exhaustive search")
    p.add_argument("graph", help="graph file (or drawing file, for its base)")
    p.add_argument("--max-k", type=int, required=True,
                   help="largest crossing count to try")
    p.add_argument("--budget-seconds", type=float, default=None,
                   help=f"wall clock budget (default ${BUDGET_ENV})")
    p.add_argument("-o", "--output", help="write the witness drawing here")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("heuristic", help="planarization heuristic drawing")
    p.add_argument("graph", help="graph file (or drawing file, for its base)")
    p.add_argument("--passes", type=int, default=4,
                   help="independent restarts (default 4)")
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--start", help="drawing file to improve on")
    _add_output(p)
    p.set_defaults(func=cmd_heuristic)

    p = sub.add_parser("sweep",
                       help="grid comparison against the closed-form count")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--budget-seconds", type=float, default=None,
                   help=f"per-cell budget (default ${BUDGET_ENV})")
    p.add_argument("--rng-seed", type=int, default=0)
    _add_output(p, required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("analyze",
                       help="section inequality ledger for a drawing")
    p.add_argument("drawing", help="drawing file over a sunlet-star product")
    _add_output(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("svg", help="render a drawing file as SVG")
    p.add_argument("drawing", help="drawing file")
    p.add_argument("--no-labels", action="store_true",
                   help="skip vertex labels")
    _add_output(p)
    p.set_defaults(func=cmd_svg)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, InvalidParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SuncrossError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
