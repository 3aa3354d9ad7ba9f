"""Cyclic Latin square graphs: constructions, optimal colorings, verification.

The order-n cyclic Latin square graph takes the n^2 cells of the addition
table of Z_n as vertices, joining cells that share a row, a column, or a
label.  Its chromatic number is n for odd n and n+2 for even n; this
package builds the closed-form optimal colorings, verifies their structure,
and confirms the chromatic numbers with an exhaustive search at small
orders.
"""

from .chromatic import (
    FOUND,
    INCONCLUSIVE,
    NOT_FOUND,
    STATUS_BOUNDS,
    STATUS_EXACT,
    STATUS_TIMEOUT,
    ChiResult,
    SearchBudget,
    SearchStats,
    TheoremCheck,
    chromatic_number,
    clique_lower_bound,
    closed_form_chi,
    exists_coloring,
    verify_theorem,
)
from .coloring import (
    Coloring,
    ExtendedBoard,
    color_board,
    color_cell_even,
    color_cell_odd,
    extended_board,
)
from .formats import (
    ColoringFormatError,
    export_coloring_json,
    export_dimacs,
    import_coloring_json,
)
from .latin import (
    Cell,
    CellRangeError,
    CyclicLatinSquare,
    LatinSquareGraph,
    UsageError,
    adjacent,
    build_graph,
    label,
)
from .render import RenderSpec, default_palette, render_grid, render_labels
from .verify import (
    ParityFinding,
    VerificationReport,
    check_equitable,
    check_proper,
    color_class_sizes,
    expected_class_sizes,
    label_sequence_check,
    parity_structure,
)

__version__ = "0.1.0"

__all__ = [
    "Cell",
    "CellRangeError",
    "ChiResult",
    "Coloring",
    "ColoringFormatError",
    "CyclicLatinSquare",
    "ExtendedBoard",
    "FOUND",
    "INCONCLUSIVE",
    "LatinSquareGraph",
    "NOT_FOUND",
    "ParityFinding",
    "RenderSpec",
    "STATUS_BOUNDS",
    "STATUS_EXACT",
    "STATUS_TIMEOUT",
    "SearchBudget",
    "SearchStats",
    "TheoremCheck",
    "UsageError",
    "VerificationReport",
    "adjacent",
    "build_graph",
    "check_equitable",
    "check_proper",
    "chromatic_number",
    "clique_lower_bound",
    "closed_form_chi",
    "color_board",
    "color_cell_even",
    "color_cell_odd",
    "color_class_sizes",
    "default_palette",
    "exists_coloring",
    "expected_class_sizes",
    "export_coloring_json",
    "export_dimacs",
    "extended_board",
    "import_coloring_json",
    "label",
    "label_sequence_check",
    "parity_structure",
    "render_grid",
    "render_labels",
    "verify_theorem",
]
