"""Command-line interface.

Exit codes: 0 success (verification passed, theorem matched), 1 a
verification check failed or the searched chromatic number disagrees with
the closed form, 2 usage error, 3 search budget exhausted before a verdict.
"""

from __future__ import annotations

import argparse
import sys

from .chromatic import MATCH, STATUS_EXACT, SearchBudget, verify_theorem
from .coloring import Coloring, color_board
from .formats import ColoringFormatError, export_coloring_json, export_dimacs, import_coloring_json
from .latin import CellRangeError, UsageError, build_graph
from .render import FORMAT_SVG, FORMAT_TEXT, RenderSpec, render_grid, render_labels
from .verify import (
    check_proper,
    expected_class_sizes,
    label_sequence_check,
    parity_structure,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latincolor",
        description="Cyclic Latin square graphs: closed-form colorings, "
        "verification, and exact chromatic numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_order(p: argparse.ArgumentParser) -> None:
        p.add_argument("--order", type=int, required=True, metavar="N", help="board order n >= 1")

    p = sub.add_parser("generate", help="print the cyclic Latin square labels")
    add_order(p)

    p = sub.add_parser("color", help="emit the closed-form coloring")
    add_order(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--paper-colors", action="store_true", help="display 1-based colors (0 shown as k)")

    p = sub.add_parser("verify", help="run the verification suite on a coloring")
    add_order(p)
    p.add_argument("--coloring", metavar="FILE", help="JSON coloring to verify (default: closed form)")

    p = sub.add_parser("chi", help="search the exact chromatic number and compare to the closed form")
    add_order(p)
    p.add_argument("--max-time", type=float, metavar="S", help="time budget per k-attempt, seconds")
    p.add_argument("--max-nodes", type=int, metavar="K", help="node budget per k-attempt")

    p = sub.add_parser("export", help="write the graph or coloring to an interchange format")
    add_order(p)
    p.add_argument("--format", choices=["dimacs", "json"], required=True)

    p = sub.add_parser("render", help="draw the colored board")
    add_order(p)
    p.add_argument("--format", choices=[FORMAT_TEXT, FORMAT_SVG], default=FORMAT_TEXT)
    p.add_argument("--extended", action="store_true", help="include the two extra columns (even orders)")
    p.add_argument("--labels", action="store_true", help="show Latin square labels in cells")
    p.add_argument("--paper-colors", action="store_true", help="display 1-based colors (0 shown as k)")

    return parser


def _cmd_generate(args: argparse.Namespace) -> int:
    print(render_labels(args.order), end="")
    return EXIT_OK


def _cmd_color(args: argparse.Namespace) -> int:
    board = color_board(args.order)
    if args.format == "json":
        print(export_coloring_json(board), end="")
    else:
        spec = RenderSpec(format=FORMAT_TEXT, paper_colors=args.paper_colors)
        print(render_grid(board, spec), end="")
    return EXIT_OK


def _load_coloring(path: str, order: int) -> Coloring:
    with open(path, encoding="utf-8") as fh:
        board = import_coloring_json(fh.read())
    if board.order != order:
        raise UsageError(f"coloring file has order {board.order}, --order says {order}")
    return board


def _cmd_verify(args: argparse.Namespace) -> int:
    n = args.order
    graph = build_graph(n)
    is_closed_form = args.coloring is None
    board = color_board(n) if is_closed_form else _load_coloring(args.coloring, n)
    report = check_proper(graph, board)

    failures: list[str] = []
    print(f"order {n}, colors {board.num_colors}")
    print(f"proper: {report.proper} ({len(report.conflicts)} conflicts)")
    if not report.proper:
        failures.append("proper")
        for a, b in report.conflicts[:10]:
            print(f"  conflict: ({a.row},{a.col}) ~ ({b.row},{b.col})")
    print(f"equitable: {report.equitable} (class sizes {report.min_class}..{report.max_class})")
    if not report.equitable:
        failures.append("equitable")

    if is_closed_form and report.class_sizes != expected_class_sizes(n):
        failures.append("class-size profile")
        print("class-size profile: MISMATCH")
    elif is_closed_form:
        print("class-size profile: ok")

    if n % 2 == 0:
        bad_parity = []
        bad_sequence = []
        for color in range(board.num_colors):
            finding = parity_structure(n, color, board)
            if not (finding.parities_opposite and finding.distinct_within_halves):
                bad_parity.append(color)
            if n >= 4 and not label_sequence_check(n, color, board):
                bad_sequence.append(color)
        print(f"half-parity structure: {'ok' if not bad_parity else f'FAIL for colors {bad_parity}'}")
        if bad_parity:
            failures.append("parity structure")
        if n >= 4:
            print(
                f"label sequence steps: {'ok' if not bad_sequence else f'FAIL for colors {bad_sequence}'}"
            )
            if bad_sequence:
                failures.append("label sequence")

    if failures:
        print(f"FAIL: {', '.join(failures)}")
        return EXIT_FAIL
    print("PASS")
    return EXIT_OK


def _cmd_chi(args: argparse.Namespace) -> int:
    budget = None
    if args.max_time is not None or args.max_nodes is not None:
        budget = SearchBudget(max_nodes=args.max_nodes, max_time=args.max_time)
    check = verify_theorem(args.order, budget)
    res = check.result
    print(f"order {args.order}: closed form chi = {check.expected_chi}")
    if res.status == STATUS_EXACT:
        print(f"search: chi = {res.chi} (exact)")
    else:
        print(f"search: inconclusive ({res.status}), bounds [{res.lower_bound}, {res.upper_bound}]")
    print(f"nodes explored: {res.stats.nodes_explored}, elapsed: {res.stats.elapsed:.3f}s")
    print(f"verdict: {check.verdict}")
    if res.status != STATUS_EXACT:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if check.verdict == MATCH else EXIT_FAIL


def _cmd_export(args: argparse.Namespace) -> int:
    n = args.order
    if args.format == "dimacs":
        print(export_dimacs(build_graph(n)), end="")
    else:
        board = color_board(n)
        report = check_proper(build_graph(n), board)
        print(export_coloring_json(board, report), end="")
    return EXIT_OK


def _cmd_render(args: argparse.Namespace) -> int:
    board = color_board(args.order)
    spec = RenderSpec(
        format=args.format,
        show_labels=args.labels,
        show_extended_columns=args.extended,
        paper_colors=args.paper_colors,
    )
    print(render_grid(board, spec), end="")
    return EXIT_OK


_COMMANDS = {
    "generate": _cmd_generate,
    "color": _cmd_color,
    "verify": _cmd_verify,
    "chi": _cmd_chi,
    "export": _cmd_export,
    "render": _cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, CellRangeError, ColoringFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
