"""Cartesian products of graphs.

Vertices (i, j) of G x H are flattened row-major as i * |V(H)| + j.
Distances in the product are the sums of factor distances, so all metric
queries go through the factors' BFS matrices; no BFS ever runs on the
product itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    UNREACHABLE,
    DistanceMatrix,
    DomainError,
    Graph,
    all_pairs_distances,
)


@dataclass(frozen=True)
class ProductGraph:
    """A Cartesian product together with its factors and their metrics."""

    graph: Graph
    factor1: Graph
    factor2: Graph
    dm1: DistanceMatrix
    dm2: DistanceMatrix

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def n1(self) -> int:
        return self.factor1.n

    @property
    def n2(self) -> int:
        return self.factor2.n

    @property
    def diameter(self) -> int:
        return self.dm1.diameter + self.dm2.diameter

    def flat(self, i: int, j: int) -> int:
        return i * self.n2 + j

    def coords(self, v: int) -> tuple[int, int]:
        return divmod(v, self.n2)

    def distance(self, a: int, b: int) -> int:
        i, j = self.coords(a)
        h, k = self.coords(b)
        d1 = self.dm1.dist[i][h]
        d2 = self.dm2.dist[j][k]
        if d1 == UNREACHABLE or d2 == UNREACHABLE:
            return UNREACHABLE
        return d1 + d2

    def distance_row(self, a: int) -> list[int]:
        """Distances from a to every product vertex via the factored formula."""
        i, j = self.coords(a)
        row1 = self.dm1.dist[i]
        row2 = self.dm2.dist[j]
        out = [UNREACHABLE] * self.n
        base = 0
        for d1 in row1:
            if d1 == UNREACHABLE:
                base += self.n2
                continue
            for d2 in row2:
                out[base] = d1 + d2 if d2 != UNREACHABLE else UNREACHABLE
                base += 1
        return out


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    """Cartesian product: (i,j) ~ (i',j') iff one coordinate is equal and the
    other pair is an edge of its factor."""
    if g.n == 0 or h.n == 0:
        raise DomainError("cartesian product requires nonempty factors")
    n2 = h.n
    edges: list[tuple[int, int]] = []
    for i in range(g.n):
        base = i * n2
        for u, v in h.edges():
            edges.append((base + u, base + v))
    for u, v in g.edges():
        bu, bv = u * n2, v * n2
        for j in range(n2):
            edges.append((bu + j, bv + j))
    return ProductGraph(
        Graph.from_edges(g.n * n2, edges),
        g,
        h,
        all_pairs_distances(g),
        all_pairs_distances(h),
    )


def product_distance(pg: ProductGraph, a: int, b: int) -> int:
    return pg.distance(a, b)


def copy_of_factor(pg: ProductGraph, which: str, index: int) -> list[int]:
    """Flat ids of one labelled copy of a factor.

    ``which="first"`` gives the copy of factor 1 at second coordinate
    ``index``; ``which="second"`` the copy of factor 2 at first coordinate
    ``index``.
    """
    if which == "first":
        if not (0 <= index < pg.n2):
            raise DomainError(f"second-factor index {index} out of range")
        return [pg.flat(i, index) for i in range(pg.n1)]
    if which == "second":
        if not (0 <= index < pg.n1):
            raise DomainError(f"first-factor index {index} out of range")
        return [pg.flat(index, j) for j in range(pg.n2)]
    raise DomainError(f"which must be 'first' or 'second', got {which!r}")


def product_labels(pg: ProductGraph) -> list[str]:
    """Human-facing 1-based coordinate labels, v1,1 .. vn1,n2."""
    return [f"v{i + 1},{j + 1}" for i in range(pg.n1) for j in range(pg.n2)]
