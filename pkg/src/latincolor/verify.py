"""Executable checks for colorings of cyclic Latin square graphs.

Properness and equitability apply to any coloring.  The parity and
label-sequence checks encode the structure that makes the even-order
shift coloring work: cells of one color have labels of a single parity
per half (opposite across halves), all distinct, stepping by 2 between
consecutive labeled rows and by 4 across a two-blank gap.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Coloring, color_board
from .latin import Cell, LatinSquareGraph, UsageError, check_order

PARITY_EVEN = "even"
PARITY_ODD = "odd"
PARITY_EMPTY = "empty"
PARITY_MIXED = "mixed"


@dataclass
class VerificationReport:
    proper: bool
    conflicts: list[tuple[Cell, Cell]]
    class_sizes: dict[int, int]
    equitable: bool
    max_class: int
    min_class: int


@dataclass
class ParityFinding:
    """Labels of one color class, split at the half-way row.

    Label lists hold (row, label) pairs in row order, board columns only
    (blank cells in the extended columns carry no label).
    """

    color: int
    first_half_labels: list[tuple[int, int]] = field(default_factory=list)
    second_half_labels: list[tuple[int, int]] = field(default_factory=list)
    first_half_parity: str = PARITY_EMPTY
    second_half_parity: str = PARITY_EMPTY
    distinct_within_halves: bool = True

    @property
    def parities_opposite(self) -> bool:
        """True when the halves cannot collide: either half empty, or pure and unequal."""
        a, b = self.first_half_parity, self.second_half_parity
        if PARITY_MIXED in (a, b):
            return False
        if PARITY_EMPTY in (a, b):
            return True
        return a != b


def color_class_sizes(coloring: Coloring) -> dict[int, int]:
    """Cell count of every declared color, zeroes included."""
    sizes = {c: 0 for c in range(coloring.num_colors)}
    for v in coloring.cells:
        sizes[v] += 1
    return sizes


def check_equitable(coloring: Coloring) -> bool:
    """True iff all declared color classes differ in size by at most 1."""
    sizes = color_class_sizes(coloring)
    return max(sizes.values()) - min(sizes.values()) <= 1


def check_proper(graph: LatinSquareGraph, coloring: Coloring) -> VerificationReport:
    """Find every monochromatic adjacent pair; also report class sizes and equitability."""
    if graph.order != coloring.order:
        raise UsageError(
            f"graph order {graph.order} != coloring order {coloring.order}"
        )
    cells = coloring.cells
    conflicts: list[tuple[Cell, Cell]] = []
    for i, nbrs in enumerate(graph.adjacency):
        ci = cells[i]
        for j in nbrs:
            if j > i and cells[j] == ci:
                conflicts.append((graph.cell_at(i + 1), graph.cell_at(j + 1)))
    sizes = color_class_sizes(coloring)
    max_class = max(sizes.values())
    min_class = min(sizes.values())
    return VerificationReport(
        proper=not conflicts,
        conflicts=conflicts,
        class_sizes=sizes,
        equitable=max_class - min_class <= 1,
        max_class=max_class,
        min_class=min_class,
    )


def _color_cells_by_row(n: int, color: int, coloring: Coloring) -> list[list[Cell]]:
    """Cells carrying `color`, grouped per row, columns ascending."""
    rows: list[list[Cell]] = []
    for r in range(1, n + 1):
        hits = [Cell(r, c) for c in range(1, n + 1) if coloring.color_at(Cell(r, c)) == color]
        rows.append(hits)
    return rows


def _require_even_order_color(n: int, color: int, coloring: Coloring | None) -> Coloring:
    check_order(n)
    if n % 2 != 0:
        raise UsageError(f"order {n} is odd; the half-structure checks need an even order")
    board = coloring if coloring is not None else color_board(n)
    if board.order != n:
        raise UsageError(f"coloring has order {board.order}, expected {n}")
    if not 0 <= color < board.num_colors:
        raise UsageError(f"color {color} out of range 0..{board.num_colors - 1}")
    return board


def parity_structure(n: int, color: int, coloring: Coloring | None = None) -> ParityFinding:
    """Collect the labels of one color per half and classify their parity.

    Defaults to the closed-form coloring; pass any order-n coloring to
    probe it instead.
    """
    board = _require_even_order_color(n, color, coloring)
    half = n // 2
    finding = ParityFinding(color=color)
    for row_cells in _color_cells_by_row(n, color, board):
        for cell in row_cells:
            lab = (cell.row + cell.col - 2) % n
            target = finding.first_half_labels if cell.row <= half else finding.second_half_labels
            target.append((cell.row, lab))
    finding.first_half_parity = _parity_of([lab for _, lab in finding.first_half_labels])
    finding.second_half_parity = _parity_of([lab for _, lab in finding.second_half_labels])
    finding.distinct_within_halves = _all_distinct(
        [lab for _, lab in finding.first_half_labels]
    ) and _all_distinct([lab for _, lab in finding.second_half_labels])
    return finding


def _parity_of(labels: list[int]) -> str:
    if not labels:
        return PARITY_EMPTY
    parities = {lab % 2 for lab in labels}
    if len(parities) > 1:
        return PARITY_MIXED
    return PARITY_EVEN if parities == {0} else PARITY_ODD


def _all_distinct(labels: list[int]) -> bool:
    return len(set(labels)) == len(labels)


def label_sequence_check(n: int, color: int, coloring: Coloring | None = None) -> bool:
    """Check the row-walk label steps of one color, per half.

    Walking rows upward inside a half: two consecutive labeled rows must
    differ in label by exactly 2 (mod n), and labeled rows three apart
    (the two rows between them blank) must differ by 4 (mod n).  Blank
    rows between labeled rows always come in pairs in the shift
    construction, so any other gap fails, as does a row holding the color
    more than once.  Halves are walked independently; no step crosses the
    half boundary.
    """
    if n < 4:
        raise UsageError(f"label sequence check needs even order >= 4, got {n}")
    board = _require_even_order_color(n, color, coloring)
    by_row = _color_cells_by_row(n, color, board)
    half = n // 2
    for lo, hi in ((1, half), (half + 1, n)):
        prev_row: int | None = None
        prev_lab = 0
        for r in range(lo, hi + 1):
            hits = by_row[r - 1]
            if len(hits) > 1:
                return False
            if not hits:
                continue
            lab = (r + hits[0].col - 2) % n
            if prev_row is not None:
                gap = r - prev_row
                if gap == 1:
                    if (lab - prev_lab) % n != 2:
                        return False
                elif gap == 3:
                    if (lab - prev_lab) % n != 4:
                        return False
                else:
                    return False
            prev_row, prev_lab = r, lab
    return True


def expected_class_sizes(n: int) -> dict[int, int]:
    """Class-size profile of the closed-form coloring.

    Odd n: every residue n times.  Even n: residues n/2, n/2+1, n+1 and 0
    (the four colors that land in the extended columns once instead of
    twice) have n-1 cells, the rest n-2.
    """
    check_order(n)
    if n % 2 == 1:
        return {c: n for c in range(n)}
    big = {n // 2, n // 2 + 1, n + 1, 0}
    return {c: (n - 1 if c in big else n - 2) for c in range(n + 2)}
