"""Core graph machinery: immutable graphs, BFS metric data, and edge-list I/O.

Vertices are the integers 0..n-1.  Distances between vertices in different
components are recorded with the sentinel ``UNREACHABLE`` (never a large
finite stand-in), and eccentricity, diameter and radius are taken over
finite entries only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

UNREACHABLE = -1

_DOT_FILLS = ("indianred1", "steelblue1", "palegreen", "gold", "plum", "tan")


class GraphFormatError(ValueError):
    """Raised when edge-list or coloring input cannot be parsed."""


class DomainError(ValueError):
    """Raised when an operation is applied outside its domain of validity."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertex set 0..n-1.

    ``adj[v]`` is the sorted tuple of neighbours of v.  Instances are
    immutable and hashable, so they can be deduplicated and used as dict
    keys in enumeration code.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise DomainError(f"vertex count must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def path_graph(n: int) -> Graph:
    """Path on n vertices, 0-1-2-...-(n-1)."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Star with centre 0 and the given number of leaves."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from source to every vertex, UNREACHABLE where no path exists."""
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs BFS distances plus the derived metric summary.

    ``connected`` is False whenever any pair is unreachable; in that case
    eccentricities, diameter and radius describe finite distances only.
    """

    dist: tuple[tuple[int, ...], ...]
    ecc: tuple[int, ...]
    diameter: int
    radius: int
    connected: bool

    def d(self, u: int, v: int) -> int:
        return self.dist[u][v]


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; O(V * (V + E))."""
    rows = tuple(tuple(bfs_distances(g, s)) for s in range(g.n))
    connected = all(UNREACHABLE not in row for row in rows)
    ecc = tuple(max((x for x in row if x != UNREACHABLE), default=0) for row in rows)
    diameter = max(ecc, default=0)
    radius = min(ecc, default=0)
    return DistanceMatrix(rows, ecc, diameter, radius, connected)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by least vertex."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def induced_subgraph(g: Graph, keep: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``keep`` with vertices relabelled 0..k-1.

    Returns the subgraph and the back-mapping new id -> old id (ascending
    in the old ids).
    """
    old_ids = sorted(set(keep))
    index = {old: new for new, old in enumerate(old_ids)}
    edges = [
        (index[u], index[v])
        for u in old_ids
        for v in g.adj[u]
        if u < v and v in index
    ]
    return Graph.from_edges(len(old_ids), edges), old_ids


def is_tree(g: Graph) -> bool:
    """Connected and acyclic: exactly n-1 edges and one component."""
    if g.n == 0:
        return False
    return g.num_edges() == g.n - 1 and len(connected_components(g)) == 1


def is_forest(g: Graph) -> bool:
    comps = connected_components(g)
    return g.num_edges() == g.n - len(comps)


def center_and_peripheral(dm: DistanceMatrix) -> tuple[list[int], list[int]]:
    """Centre (minimum eccentricity) and peripheral (eccentricity = diameter) vertices."""
    if not dm.connected:
        raise DomainError("center/peripheral vertices are defined for connected graphs only")
    center = [v for v, e in enumerate(dm.ecc) if e == dm.radius]
    peripheral = [v for v, e in enumerate(dm.ecc) if e == dm.diameter]
    return center, peripheral


def is_isometric_embedding(sub: Graph, host: Graph, mapping: Sequence[int]) -> bool:
    """Check that ``mapping`` embeds sub into host preserving all distances.

    The mapping must be injective and carry edges to edges; violations of
    either raise DomainError since they indicate a malformed embedding
    rather than a merely non-isometric one.
    """
    if len(mapping) != sub.n:
        raise DomainError("mapping length does not match subgraph order")
    if len(set(mapping)) != sub.n:
        raise DomainError("mapping is not injective")
    for v in mapping:
        if not (0 <= v < host.n):
            raise DomainError(f"mapped vertex {v} out of range for host")
    for u, v in sub.edges():
        if mapping[v] not in host.adj[mapping[u]]:
            raise DomainError(f"edge ({u},{v}) is not preserved by the mapping")
    dm_sub = all_pairs_distances(sub)
    for u in range(sub.n):
        host_row = bfs_distances(host, mapping[u])
        for v in range(sub.n):
            if dm_sub.dist[u][v] != host_row[mapping[v]]:
                return False
    return True


# ---------------------------------------------------------------------------
# edge-list text format
#
#   line 1: vertex count n
#   then one edge "u v" per non-empty line, 0 <= u,v < n, u != v
#   '#' starts a comment; blank lines are skipped
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the plain-text edge-list format, reporting 1-based line numbers."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphFormatError(f"line {lineno}: expected vertex count, got {line!r}")
            if n < 0:
                raise GraphFormatError(f"line {lineno}: vertex count must be nonnegative")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected integer ids, got {line!r}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphFormatError("empty input: missing vertex count line")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def load_edge_list(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def to_dot(
    g: Graph,
    coloring: Sequence[int] | None = None,
    labels: Sequence[str] | None = None,
    name: str = "G",
) -> str:
    """Render as an undirected Graphviz graph.

    Vertex v becomes node ``v{v}``; ``labels`` overrides the displayed label
    (used for product coordinates), and ``coloring`` selects fill colours.
    """
    out = [f"graph {name} {{", "  node [shape=circle, style=filled, fillcolor=white];"]
    for v in range(g.n):
        label = labels[v] if labels is not None else f"v{v}"
        attrs = [f'label="{label}"']
        if coloring is not None:
            attrs.append(f'fillcolor="{_DOT_FILLS[coloring[v] % len(_DOT_FILLS)]}"')
        out.append(f"  v{v} [{', '.join(attrs)}];")
    for u, v in g.edges():
        out.append(f"  v{u} -- v{v};")
    out.append("}")
    return "\n".join(out) + "\n"
