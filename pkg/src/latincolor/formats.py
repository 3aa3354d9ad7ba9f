"""DIMACS and JSON interchange for graphs and colorings.

DIMACS output is deterministic byte-for-byte: one comment line with the
order, the "p edge" header, then "e u v" lines with u < v in lexicographic
order under the (row-1)*n + col vertex numbering.
"""

from __future__ import annotations

import json

from .coloring import Coloring
from .latin import LatinSquareGraph, UsageError
from .verify import VerificationReport


class ColoringFormatError(ValueError):
    """A coloring document failed to parse or validate."""


def export_dimacs(graph: LatinSquareGraph) -> str:
    n = graph.order
    lines = [f"c cyclic latin square graph of order {n}"]
    lines.append(f"p edge {graph.vertex_count} {graph.edge_count}")
    for u, v in graph.edges():
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def export_coloring_json(coloring: Coloring, report: VerificationReport | None = None) -> str:
    doc: dict = {
        "order": coloring.order,
        "num_colors": coloring.num_colors,
        "cells": list(coloring.cells),
    }
    if report is not None:
        doc["verification"] = {
            "proper": report.proper,
            "equitable": report.equitable,
            "class_sizes": {str(c): s for c, s in sorted(report.class_sizes.items())},
            "max_class": report.max_class,
            "min_class": report.min_class,
            "conflicts": [[list(a), list(b)] for a, b in report.conflicts],
        }
    return json.dumps(doc, indent=2) + "\n"


def import_coloring_json(text: str) -> Coloring:
    """Parse a coloring document; raises ColoringFormatError on any defect."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ColoringFormatError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise ColoringFormatError(f"expected a JSON object, got {type(doc).__name__}")
    for key in ("order", "num_colors", "cells"):
        if key not in doc:
            raise ColoringFormatError(f"missing required field {key!r}")
    order, num_colors, cells = doc["order"], doc["num_colors"], doc["cells"]
    if not isinstance(order, int) or not isinstance(num_colors, int):
        raise ColoringFormatError("fields 'order' and 'num_colors' must be integers")
    if not isinstance(cells, list) or not all(isinstance(v, int) for v in cells):
        raise ColoringFormatError("field 'cells' must be a list of integers")
    try:
        return Coloring(order, num_colors, tuple(cells))
    except UsageError as exc:
        raise ColoringFormatError(str(exc)) from exc
