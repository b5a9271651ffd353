"""Exhaustive search for rainbow-free exact colorings, independent of the
closed-form classification.

The search assigns colors to vertices in a fixed order (descending degree,
ties by id) and maintains, for every 3-AP, the constraint that its three
colors must not be pairwise distinct.  Three prunings keep it exact but
fast:

* propagation: once two members of a triple hold distinct colors, the
  third member's domain shrinks to exactly those two colors;
* symmetry breaking: color c+1 may first appear only after color c, in
  assignment order, so each palette permutation class is tried once;
* surjectivity: colors not yet used need distinct future vertices whose
  domains are still unrestricted, and restricted domains only ever contain
  already-used colors.

Distances feeding the 3-AP set come from BFS on the host graph itself, so
oracle results share no code path with the factored product metric they
are checked against.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .coloring import Coloring, find_rainbow_in_graph, iter_3aps_graph
from .graphs import DomainError, Graph, connected_components

FOUND = "found"
EXHAUSTED = "exhausted"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchBudget:
    """Resource limits for one search invocation."""

    max_nodes: int = 10**8
    max_ms: float = 300_000.0
    max_vertices: int = 64


@dataclass(frozen=True)
class OracleOutcome:
    """Result of one exact-coloring search.

    ``found`` outcomes carry a witness coloring that has been re-verified
    exact and rainbow-free through the generic rainbow scan; ``exhausted``
    means no rainbow-free exact r-coloring exists; ``inconclusive`` means
    a budget was hit first.  ``nodes`` counts attempted assignments, which
    is deterministic for identical inputs.
    """

    status: str
    r: int
    coloring: Coloring | None
    nodes: int
    ms: float

    def to_json(self) -> dict:
        out: dict = {
            "status": self.status,
            "r": self.r,
            "nodes": self.nodes,
            "ms": round(self.ms, 3),
        }
        if self.coloring is not None:
            out["coloring"] = self.coloring.to_json()
        return out


class _BudgetStop(Exception):
    pass


class _SearchState:
    __slots__ = ("nodes", "deadline", "max_nodes")

    def __init__(self, budget: SearchBudget) -> None:
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.deadline = time.monotonic() + budget.max_ms / 1000.0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _BudgetStop
        if self.nodes % 2048 == 0 and time.monotonic() > self.deadline:
            raise _BudgetStop


def exists_rainbow_free_exact_coloring(
    g: Graph, r: int, budget: SearchBudget = SearchBudget()
) -> OracleOutcome:
    """Search for an exact r-coloring of g with no rainbow 3-AP.

    The graph must be connected (forests are handled by the component
    formula in the classifier, not the oracle).
    """
    if r < 1:
        raise DomainError(f"palette size must be positive, got {r}")
    if g.n == 0:
        raise DomainError("the empty graph has no colorings")
    if len(connected_components(g)) != 1:
        raise DomainError("the oracle requires a connected graph")
    start = time.monotonic()
    if g.n > budget.max_vertices:
        return OracleOutcome(INCONCLUSIVE, r, None, 0, 0.0)
    if r > g.n:
        return OracleOutcome(EXHAUSTED, r, None, 0, _ms_since(start))

    # Triples as flat watch lists: watch[v] lists the other two members of
    # every 3-AP containing v.
    watch: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for t in iter_3aps_graph(g):
        watch[t.x].append((t.y, t.z))
        watch[t.y].append((t.x, t.z))
        watch[t.z].append((t.x, t.y))

    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    state = _SearchState(budget)
    try:
        colors = _search(g.n, r, order, watch, state)
    except _BudgetStop:
        return OracleOutcome(INCONCLUSIVE, r, None, state.nodes, _ms_since(start))
    if colors is None:
        return OracleOutcome(EXHAUSTED, r, None, state.nodes, _ms_since(start))
    witness = Coloring(r, tuple(colors))
    if not witness.is_exact() or find_rainbow_in_graph(g, witness) is not None:
        raise RuntimeError("oracle produced an invalid witness coloring")
    return OracleOutcome(FOUND, r, witness, state.nodes, _ms_since(start))


def _ms_since(start: float) -> float:
    return (time.monotonic() - start) * 1000.0


def _search(
    n: int,
    r: int,
    order: list[int],
    watch: list[list[tuple[int, int]]],
    state: _SearchState,
) -> list[int] | None:
    full = (1 << r) - 1
    colors = [-1] * n
    domains = [full] * n
    # Unassigned vertices whose domain is still unrestricted; only these can
    # host a color that has not appeared yet.
    open_count = n
    trail: list[tuple[int, int]] = []

    def assign(pos: int, max_used: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        cap = max_used + 2 if max_used + 2 < r else r
        candidates = domains[v] & ((1 << cap) - 1)
        nonlocal open_count
        was_full = domains[v] == full
        while candidates:
            low = candidates & -candidates
            c = low.bit_length() - 1
            candidates ^= low
            state.tick()
            colors[v] = c
            if was_full:
                open_count -= 1
            mark = len(trail)
            ok = True
            for a, b in watch[v]:
                ca = colors[a]
                cb = colors[b]
                if ca < 0:
                    if cb < 0 or cb == c:
                        continue
                    w, other = a, cb
                elif cb < 0:
                    if ca == c:
                        continue
                    w, other = b, ca
                else:
                    # both assigned: domains already kept this triple safe
                    continue
                old = domains[w]
                new = old & ((1 << c) | (1 << other))
                if new == old:
                    continue
                if not new:
                    ok = False
                    break
                trail.append((w, old))
                domains[w] = new
                if old == full:
                    open_count -= 1
            if ok:
                new_max = c if c > max_used else max_used
                if r - 1 - new_max <= open_count and assign(pos + 1, new_max):
                    return True
            while len(trail) > mark:
                w, old = trail.pop()
                if domains[w] != full and old == full:
                    open_count += 1
                domains[w] = old
            colors[v] = -1
            if was_full:
                open_count += 1
        return False

    return colors if assign(0, -1) else None


@dataclass(frozen=True)
class BruteForceResult:
    """aw(G, 3) by scanning palette sizes upward until exhaustion.

    A rainbow-free exact r-coloring collapses to a rainbow-free exact
    (r-1)-coloring by merging two classes, so the first exhausted palette
    size equals aw.  ``outcomes`` keeps one entry per palette size tried;
    ``witness`` is the found coloring at aw - 1.
    """

    aw: int | None
    outcomes: tuple[OracleOutcome, ...]
    witness: Coloring | None

    @property
    def inconclusive(self) -> bool:
        return self.aw is None

    @property
    def nodes(self) -> int:
        return sum(o.nodes for o in self.outcomes)

    @property
    def ms(self) -> float:
        return sum(o.ms for o in self.outcomes)

    def found_at(self, r: int) -> Coloring | None:
        for o in self.outcomes:
            if o.r == r and o.status == FOUND:
                return o.coloring
        return None

    def to_json(self) -> dict:
        return {
            "aw": self.aw,
            "inconclusive": self.inconclusive,
            "nodes": self.nodes,
            "ms": round(self.ms, 3),
            "per_r": [o.to_json() for o in self.outcomes],
        }


def brute_force_aw3(
    g: Graph, budget: SearchBudget = SearchBudget(), max_r: int | None = None
) -> BruteForceResult:
    """Exact aw(G, 3) for a connected graph, or inconclusive on budget.

    ``max_r`` caps the scan when an upper bound is known a priori (4 for
    products of connected graphs); finding a rainbow-free coloring at the
    cap would contradict that bound and raises.
    """
    outcomes: list[OracleOutcome] = []
    witness: Coloring | None = None
    size = 2
    while True:
        outcome = exists_rainbow_free_exact_coloring(g, size, budget)
        outcomes.append(outcome)
        if outcome.status == INCONCLUSIVE:
            return BruteForceResult(None, tuple(outcomes), witness)
        if outcome.status == EXHAUSTED:
            return BruteForceResult(size, tuple(outcomes), witness)
        witness = outcome.coloring
        if max_r is not None and size >= max_r:
            raise RuntimeError(
                f"rainbow-free exact {size}-coloring exists but {max_r} was given as an upper bound"
            )
        size += 1
