"""Text and SVG grid rendering of colored boards.

Text mode prints one row per line, cells space-separated, so rendered
grids re-parse with str.split().  SVG mode draws one filled rectangle per
cell.  Colors display as residues by default; paper_colors shifts the
display to the 1-based palette where residue 0 shows as k.
"""

from __future__ import annotations

import colorsys
from dataclasses import dataclass

from .coloring import Coloring, extended_board
from .latin import Cell, UsageError, label

FORMAT_TEXT = "text"
FORMAT_SVG = "svg"

_CELL_PX = 42
_MARGIN_PX = 12
_BLANK = "-"


@dataclass(frozen=True)
class RenderSpec:
    format: str = FORMAT_TEXT
    show_labels: bool = False
    show_extended_columns: bool = False
    palette: tuple[str, ...] | None = None  # SVG fills, one per color
    paper_colors: bool = False


def default_palette(k: int) -> tuple[str, ...]:
    """k evenly spaced hues as hex fills."""
    out = []
    for i in range(k):
        r, g, b = colorsys.hsv_to_rgb(i / max(k, 1), 0.45, 0.93)
        out.append(f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}")
    return tuple(out)


def render_labels(n: int) -> str:
    """The Latin square itself: the label grid as text."""
    width = len(str(n - 1))
    lines = []
    for r in range(1, n + 1):
        lines.append(" ".join(str((r + c - 2) % n).rjust(width) for c in range(1, n + 1)))
    return "\n".join(lines) + "\n"


def _display(value: int, k: int, paper_colors: bool) -> int:
    if paper_colors:
        return k if value == 0 else value
    return value


def _board_values(coloring: Coloring, spec: RenderSpec) -> tuple[list[list[int]], int]:
    """Rows of color values to draw, plus the column count."""
    n = coloring.order
    if spec.show_extended_columns:
        if n % 2 != 0:
            raise UsageError(f"extended columns exist only for even orders, got {n}")
        ext = extended_board(n)
        return [list(ext.row_values(r)) for r in range(1, n + 1)], n + 2
    return coloring.rows(), n


def render_grid(coloring: Coloring, spec: RenderSpec) -> str:
    if spec.format == FORMAT_TEXT:
        return _render_text(coloring, spec)
    if spec.format == FORMAT_SVG:
        return _render_svg(coloring, spec)
    raise UsageError(f"unknown render format {spec.format!r}")


def _render_text(coloring: Coloring, spec: RenderSpec) -> str:
    n = coloring.order
    k = coloring.num_colors
    rows, ncols = _board_values(coloring, spec)
    tokens: list[list[str]] = []
    for r, row in enumerate(rows, start=1):
        line = []
        for c, value in enumerate(row, start=1):
            shown = str(_display(value, k, spec.paper_colors))
            if spec.show_labels:
                lab = str(label(n, Cell(r, c))) if c <= n else _BLANK
                shown = f"{lab}:{shown}"
            line.append(shown)
        tokens.append(line)
    width = max(len(t) for line in tokens for t in line)
    out = "\n".join(" ".join(t.rjust(width) for t in line) for line in tokens)
    return out + "\n"


def _render_svg(coloring: Coloring, spec: RenderSpec) -> str:
    n = coloring.order
    k = coloring.num_colors
    rows, ncols = _board_values(coloring, spec)
    palette = spec.palette if spec.palette is not None else default_palette(k)
    if len(palette) < k:
        raise UsageError(f"palette has {len(palette)} colors but the coloring uses {k}")

    w = 2 * _MARGIN_PX + ncols * _CELL_PX
    h = 2 * _MARGIN_PX + n * _CELL_PX
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        '  <style>text { font-family: sans-serif; font-size: 16px; }</style>',
    ]
    for r, row in enumerate(rows, start=1):
        for c, value in enumerate(row, start=1):
            x = _MARGIN_PX + (c - 1) * _CELL_PX
            y = _MARGIN_PX + (r - 1) * _CELL_PX
            fill = palette[value]
            lines.append(
                f'  <rect x="{x}" y="{y}" width="{_CELL_PX}" height="{_CELL_PX}" '
                f'fill="{fill}" stroke="#333"/>'
            )
            if spec.show_labels:
                text = str(label(n, Cell(r, c))) if c <= n else None
            else:
                text = str(_display(value, k, spec.paper_colors))
            if text is not None:
                tx = x + _CELL_PX // 2
                ty = y + _CELL_PX // 2
                lines.append(
                    f'  <text x="{tx}" y="{ty}" text-anchor="middle" '
                    f'dominant-baseline="central">{text}</text>'
                )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
