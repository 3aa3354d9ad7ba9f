"""Exact chromatic-number search for Latin square graphs.

The search is backtracking over proper k-colorings with saturation-degree
vertex selection and two symmetry breaks: the first row (an n-clique) is
pre-colored 0..n-1, and unused colors may only enter in ascending order.
The closed-form coloring supplies the upper-bound witness for free, so
`chromatic_number` only ever spends search effort refuting smaller k.

Every verdict is exhaustive: `not_found` means the whole (symmetry-reduced)
space was searched.  Budgets cut the search off cleanly at any backtrack
point, yielding `inconclusive`.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field

from .coloring import Coloring, color_board
from .latin import LatinSquareGraph, UsageError

FOUND = "found"
NOT_FOUND = "not_found"
INCONCLUSIVE = "inconclusive"

STATUS_EXACT = "exact"
STATUS_BOUNDS = "bounds"
STATUS_TIMEOUT = "timeout"

MATCH = "match"
MISMATCH = "mismatch"


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one refutation attempt; None means unbounded."""

    max_nodes: int | None = None
    max_time: float | None = None  # seconds


@dataclass
class SearchStats:
    nodes_explored: int = 0
    elapsed: float = 0.0
    budget_hit: str | None = None  # "nodes" | "time" when a limit tripped

    def add(self, other: "SearchStats") -> None:
        self.nodes_explored += other.nodes_explored
        self.elapsed += other.elapsed
        if other.budget_hit:
            self.budget_hit = other.budget_hit


@dataclass
class ChiResult:
    status: str  # "exact" | "bounds" | "timeout"
    lower_bound: int
    upper_bound: int
    chi: int | None
    witness: Coloring | None
    stats: SearchStats


@dataclass
class TheoremCheck:
    """Comparison of the searched chromatic number against the closed form."""

    order: int
    expected_chi: int
    result: ChiResult
    verdict: str  # "match" | "mismatch" | "inconclusive"


class _BudgetExhausted(Exception):
    def __init__(self, reason: str):
        self.reason = reason


def clique_lower_bound(graph: LatinSquareGraph) -> int:
    """The row-clique bound: every row is a clique of size n, so chi >= n.

    This certifies only the row bound; it is not the clique number in
    general (order 2 is K4, whose largest clique has 4 vertices).
    """
    return graph.order


def closed_form_chi(n: int) -> int:
    """Chromatic number of the order-n graph: n for odd n, n+2 for even."""
    return n if n % 2 == 1 else n + 2


class _Search:
    """One budgeted backtracking run over proper k-colorings."""

    def __init__(self, graph: LatinSquareGraph, budget: SearchBudget | None):
        self.graph = graph
        self.n = graph.order
        self.num_vertices = graph.vertex_count
        self.adj = graph.adjacency
        self.deg = tuple(len(a) for a in self.adj)
        budget = budget or SearchBudget()
        self.max_nodes = budget.max_nodes
        self.max_time = budget.max_time
        self.deadline: float | None = None
        self.nodes = 0
        self.budget_hit: str | None = None

    def _check_budget(self) -> None:
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExhausted("nodes")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _BudgetExhausted("time")

    def run(self, k: int) -> tuple[str, Coloring | None, SearchStats]:
        if k < 1:
            raise UsageError(f"k must be a positive integer, got {k}")
        n, V = self.n, self.num_vertices
        start = time.perf_counter()
        if self.max_time is not None:
            self.deadline = time.monotonic() + self.max_time
        if k < n:
            # The first row is an n-clique and needs n distinct colors:
            # the space of proper k-colorings is empty, nothing to search.
            return NOT_FOUND, None, SearchStats(0, time.perf_counter() - start)

        kmask = (1 << k) - 1
        adj, deg = self.adj, self.deg
        colors = [-1] * V
        forbid = [0] * V
        uncolored = [True] * V
        # Symmetry break: colors are interchangeable, so any proper coloring
        # can be relabeled to give first-row cell (1,j) the color j-1.
        for j in range(n):
            colors[j] = j
            uncolored[j] = False
            bit = 1 << j
            for u in adj[j]:
                forbid[u] |= bit

        if sys.getrecursionlimit() < V + 200:
            sys.setrecursionlimit(V + 1200)

        def solve(remaining: int, num_used: int) -> bool:
            self.nodes += 1
            self._check_budget()
            if remaining == 0:
                return True
            # Saturation-degree selection: most distinct neighbor colors,
            # ties to the higher-degree vertex (fail-first).
            best = -1
            best_sat = -1
            best_deg = -1
            for v in range(V):
                if not uncolored[v]:
                    continue
                sat = (forbid[v] & kmask).bit_count()
                if sat == k:
                    return False
                if sat > best_sat or (sat == best_sat and deg[v] > best_deg):
                    best, best_sat, best_deg = v, sat, deg[v]
            v = best
            allowed = ~forbid[v] & kmask
            if num_used < k:
                # New colors enter in ascending order: only color num_used
                # may be introduced here.
                allowed &= (1 << (num_used + 1)) - 1
            uncolored[v] = False
            m = allowed
            while m:
                bit = m & -m
                m ^= bit
                colors[v] = bit.bit_length() - 1
                changed: list[int] = []
                dead = False
                for u in adj[v]:
                    if uncolored[u] and not forbid[u] & bit:
                        forbid[u] |= bit
                        changed.append(u)
                        if forbid[u] & kmask == kmask:
                            dead = True
                if not dead and solve(remaining - 1, max(num_used, colors[v] + 1)):
                    return True
                for u in changed:
                    forbid[u] ^= bit
            colors[v] = -1
            uncolored[v] = True
            return False

        node_base = self.nodes
        try:
            found = solve(V - n, n)
        except _BudgetExhausted as exc:
            self.budget_hit = exc.reason
            stats = SearchStats(self.nodes - node_base, time.perf_counter() - start, exc.reason)
            return INCONCLUSIVE, None, stats
        stats = SearchStats(self.nodes - node_base, time.perf_counter() - start)
        if found:
            witness = Coloring(n, k, tuple(colors))
            return FOUND, witness, stats
        return NOT_FOUND, None, stats


def exists_coloring(
    graph: LatinSquareGraph, k: int, budget: SearchBudget | None = None
) -> tuple[str, Coloring | None, SearchStats]:
    """Exhaustively decide whether a proper k-coloring exists.

    Returns (verdict, witness, stats): verdict is "found" with a proper
    witness coloring, "not_found" after the search space is exhausted, or
    "inconclusive" if the budget ran out first.
    """
    return _Search(graph, budget).run(k)


def chromatic_number(graph: LatinSquareGraph, budget: SearchBudget | None = None) -> ChiResult:
    """Exact chromatic number by descending-k refutation.

    Starts from the closed-form coloring as the upper-bound witness and
    runs exists_coloring for k = ub-1, ub-2, ... until a refutation meets
    the bound.  A budget applies to each k-attempt separately; attempts
    that exhaust it leave that k unresolved, and the search still descends
    to tighten the lower bound (refuting k-1 proves chi >= k).
    """
    n = graph.order
    witness = color_board(n)
    upper = witness.num_colors
    lower = clique_lower_bound(graph)
    stats = SearchStats()
    unresolved: set[int] = set()

    k = upper - 1
    while k >= lower and lower < upper:
        verdict, w, s = _Search(graph, budget).run(k)
        stats.add(s)
        if verdict == FOUND:
            upper, witness = k, w
            unresolved = {u for u in unresolved if u < upper}
        elif verdict == NOT_FOUND:
            lower = k + 1
            break
        else:
            unresolved.add(k)
        k -= 1

    unresolved = {u for u in unresolved if lower <= u < upper}
    if lower == upper and not unresolved:
        return ChiResult(STATUS_EXACT, lower, upper, upper, witness, stats)
    status = STATUS_TIMEOUT if stats.budget_hit == "time" else STATUS_BOUNDS
    return ChiResult(status, lower, upper, None, witness, stats)


def verify_theorem(n: int, budget: SearchBudget | None = None) -> TheoremCheck:
    """Compare the searched chromatic number with the closed-form value."""
    from .latin import build_graph

    expected = closed_form_chi(n)
    result = chromatic_number(build_graph(n), budget)
    if result.status == STATUS_EXACT:
        verdict = MATCH if result.chi == expected else MISMATCH
    else:
        verdict = INCONCLUSIVE
    return TheoremCheck(n, expected, result, verdict)
