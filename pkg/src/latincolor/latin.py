"""Cyclic Latin squares and their Latin square graphs.

The order-n cyclic Latin square is the addition table of Z_n: the cell in
row i, column j (both 1-based) holds the label (i+j-2) mod n.  Its Latin
square graph has one vertex per cell, with two cells adjacent when they
share a row, a column, or a label.  The graph is 3(n-1)-regular.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple


class CellRangeError(ValueError):
    """A cell coordinate lies outside the n x n board."""


class UsageError(ValueError):
    """An operation was called outside its contract (wrong parity, mismatched orders)."""


class Cell(NamedTuple):
    row: int
    col: int


def check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"order must be a positive integer, got {n!r}")


def check_cell(n: int, cell: Cell, max_col: int | None = None) -> None:
    """Raise CellRangeError unless cell is on the board of order n.

    max_col widens the column range (used by the extended board).
    """
    row, col = cell
    cmax = max_col if max_col is not None else n
    if not 1 <= row <= n:
        raise CellRangeError(f"row {row} out of range 1..{n}")
    if not 1 <= col <= cmax:
        raise CellRangeError(f"col {col} out of range 1..{cmax}")


def label(n: int, cell: Cell) -> int:
    """Label of a cell in the order-n cyclic Latin square: (row+col-2) mod n."""
    check_order(n)
    check_cell(n, cell)
    row, col = cell
    return (row + col - 2) % n


def adjacent(n: int, a: Cell, b: Cell) -> bool:
    """True iff two distinct cells share a row, a column, or a label.

    Label equality is the same as row+col sums being congruent mod n.
    Equal cells are non-adjacent by definition.
    """
    check_order(n)
    check_cell(n, a)
    check_cell(n, b)
    if a == b:
        return False
    ar, ac = a
    br, bc = b
    return ar == br or ac == bc or (ar + ac) % n == (br + bc) % n


@dataclass(frozen=True)
class CyclicLatinSquare:
    """The addition table of Z_n, with 1-based cells and labels 0..n-1."""

    order: int

    def __post_init__(self) -> None:
        check_order(self.order)

    def label(self, cell: Cell) -> int:
        return label(self.order, cell)

    def row_labels(self, row: int) -> list[int]:
        n = self.order
        check_cell(n, (row, 1))
        return [(row + col - 2) % n for col in range(1, n + 1)]

    def grid(self) -> list[list[int]]:
        return [self.row_labels(r) for r in range(1, self.order + 1)]


class LatinSquareGraph:
    """Graph on the n^2 cells of the order-n cyclic Latin square.

    Vertices are indexed 1..n^2 by (row-1)*n + col, the order used in
    DIMACS exports.  Adjacency lists are materialized at construction;
    the `adjacent` predicate stays the source of truth and the two are
    held equal by a brute-force test.
    """

    __slots__ = ("order", "vertex_count", "adjacency")

    def __init__(self, order: int):
        check_order(order)
        n = order
        self.order = n
        self.vertex_count = n * n
        adj: list[list[int]] = [[] for _ in range(n * n)]
        for r in range(1, n + 1):
            base = (r - 1) * n
            for c in range(1, n + 1):
                i = base + (c - 1)
                nbrs = adj[i]
                for c2 in range(1, n + 1):  # same row
                    if c2 != c:
                        nbrs.append(base + (c2 - 1))
                for r2 in range(1, n + 1):  # same column
                    if r2 != r:
                        nbrs.append((r2 - 1) * n + (c - 1))
                for r2 in range(1, n + 1):  # same label: r2+c2 = r+c (mod n)
                    if r2 == r:
                        continue
                    c2 = (r + c - r2 - 1) % n + 1
                    if c2 != c:
                        nbrs.append((r2 - 1) * n + (c2 - 1))
                nbrs.sort()
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def vertex_index(self, cell: Cell) -> int:
        """1-based vertex index of a cell: (row-1)*n + col."""
        check_cell(self.order, cell)
        row, col = cell
        return (row - 1) * self.order + col

    def cell_at(self, index: int) -> Cell:
        """Inverse of vertex_index."""
        if not 1 <= index <= self.vertex_count:
            raise CellRangeError(f"vertex index {index} out of range 1..{self.vertex_count}")
        row, col = divmod(index - 1, self.order)
        return Cell(row + 1, col + 1)

    def neighbors(self, cell: Cell) -> set[Cell]:
        """All cells adjacent to `cell`; always 3(n-1) of them."""
        i = self.vertex_index(cell) - 1
        return {self.cell_at(j + 1) for j in self.adjacency[i]}

    def degree(self, cell: Cell) -> int:
        return len(self.adjacency[self.vertex_index(cell) - 1])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as 1-based index pairs (u, v) with u < v, in lexicographic order."""
        for i, nbrs in enumerate(self.adjacency):
            for j in nbrs:
                if j > i:
                    yield (i + 1, j + 1)

    def __repr__(self) -> str:
        return f"LatinSquareGraph(order={self.order})"


def build_graph(n: int) -> LatinSquareGraph:
    """Latin square graph of the order-n cyclic Latin square."""
    return LatinSquareGraph(n)
