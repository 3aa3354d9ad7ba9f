"""Closed-form optimal colorings of cyclic Latin square graphs.

Odd order n: n colors, cell (i,j) gets (j-i) mod n; every row is the
previous row shifted left by one.  Even order n: n+2 colors on an n x (n+2)
extended board of pure row shifts, except that the row just past the
half-way mark is shifted twice; the square's coloring is the restriction
to the first n columns.  Cell (i,j) gets (j-i) mod (n+2) for i <= n/2 and
(j-i-1) mod (n+2) below.

Colors are residues 0..k-1 throughout.  Display color c of a 1-based
palette {1..k} corresponds to residue c mod k (so display color k is
residue 0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .latin import Cell, UsageError, check_cell, check_order


@dataclass(frozen=True)
class Coloring:
    """Total color assignment for an n x n board, row-major, values < num_colors."""

    order: int
    num_colors: int
    cells: tuple[int, ...]

    def __post_init__(self) -> None:
        check_order(self.order)
        if self.num_colors < 1:
            raise UsageError(f"num_colors must be positive, got {self.num_colors}")
        if len(self.cells) != self.order * self.order:
            raise UsageError(
                f"expected {self.order * self.order} cell colors, got {len(self.cells)}"
            )
        bad = [v for v in self.cells if not 0 <= v < self.num_colors]
        if bad:
            raise UsageError(f"color {bad[0]} out of range 0..{self.num_colors - 1}")

    def color_at(self, cell: Cell) -> int:
        check_cell(self.order, cell)
        row, col = cell
        return self.cells[(row - 1) * self.order + (col - 1)]

    def rows(self) -> list[list[int]]:
        n = self.order
        return [list(self.cells[(r - 1) * n : r * n]) for r in range(1, n + 1)]

    def with_swapped(self, a: Cell, b: Cell) -> "Coloring":
        """Copy with the colors of two cells exchanged (mutation probe for verifiers)."""
        n = self.order
        check_cell(n, a)
        check_cell(n, b)
        ia = (a[0] - 1) * n + (a[1] - 1)
        ib = (b[0] - 1) * n + (b[1] - 1)
        cells = list(self.cells)
        cells[ia], cells[ib] = cells[ib], cells[ia]
        return Coloring(self.order, self.num_colors, tuple(cells))


@dataclass(frozen=True)
class ExtendedBoard:
    """n x (n+2) shift board carrying the even-order coloring; n+2 colors.

    Each row is a permutation of all n+2 residues.  Columns 1..n restrict
    to the coloring of the square itself; columns n+1, n+2 are the blank
    cells (they carry no Latin-square label).
    """

    order: int
    cells: tuple[int, ...]

    def __post_init__(self) -> None:
        check_order(self.order)
        if self.order % 2 != 0:
            raise UsageError(f"extended board exists only for even orders, got {self.order}")
        if len(self.cells) != self.order * (self.order + 2):
            raise UsageError(
                f"expected {self.order * (self.order + 2)} cells, got {len(self.cells)}"
            )

    @property
    def num_colors(self) -> int:
        return self.order + 2

    def color_at(self, cell: Cell) -> int:
        check_cell(self.order, cell, max_col=self.order + 2)
        row, col = cell
        return self.cells[(row - 1) * (self.order + 2) + (col - 1)]

    def row_values(self, row: int) -> tuple[int, ...]:
        check_cell(self.order, (row, 1))
        w = self.order + 2
        return self.cells[(row - 1) * w : row * w]

    def restriction(self) -> Coloring:
        """The square's coloring: columns 1..n of every row."""
        n = self.order
        w = n + 2
        cells = tuple(self.cells[r * w + c] for r in range(n) for c in range(n))
        return Coloring(n, n + 2, cells)


def color_cell_odd(n: int, cell: Cell) -> int:
    """Color of cell (i,j) in the odd-order n-coloring: (j-i) mod n."""
    check_order(n)
    if n % 2 == 0:
        raise UsageError(f"order {n} is even; use color_cell_even")
    check_cell(n, cell)
    row, col = cell
    return (col - row) % n


def color_cell_even(n: int, cell: Cell) -> int:
    """Color of cell (i,j) in the even-order (n+2)-coloring.

    (j-i) mod (n+2) in the top half (i <= n/2), (j-i-1) mod (n+2) below.
    Columns up to n+2 are accepted so the extended board can reuse the
    same formula; the square proper only has columns 1..n.
    """
    check_order(n)
    if n % 2 != 0:
        raise UsageError(f"order {n} is odd; use color_cell_odd")
    check_cell(n, cell, max_col=n + 2)
    row, col = cell
    if row <= n // 2:
        return (col - row) % (n + 2)
    return (col - row - 1) % (n + 2)


def color_board(n: int) -> Coloring:
    """Closed-form coloring of the whole board: n colors if n is odd, n+2 if even."""
    check_order(n)
    if n % 2 == 1:
        cells = tuple((c - r) % n for r in range(1, n + 1) for c in range(1, n + 1))
        return Coloring(n, n, cells)
    cells = tuple(
        color_cell_even(n, Cell(r, c)) for r in range(1, n + 1) for c in range(1, n + 1)
    )
    return Coloring(n, n + 2, cells)


def extended_board(n: int) -> ExtendedBoard:
    """The n x (n+2) shift board behind the even-order coloring."""
    check_order(n)
    if n % 2 != 0:
        raise UsageError(f"order {n} is odd; the extended board needs an even order")
    cells = tuple(
        color_cell_even(n, Cell(r, c)) for r in range(1, n + 1) for c in range(1, n + 3)
    )
    return ExtendedBoard(n, cells)
