"""Peripheral structure of trees.

A graph is n-peripheral when it has n vertices that are pairwise a
diameter apart.  Trees that are not 3-peripheral split further by how
close they come to it:

* odd diameter: *strongly* non-3-peripheral when some peripheral vertex v
  leaves a non-3-peripheral tree after deleting every vertex at distance
  diam(T) from v; *weakly* when every peripheral vertex leaves a
  3-peripheral tree.
* even diameter: *strongly* when attaching a new leaf at any vertex never
  produces a 3-peripheral tree; *weakly* when some attachment point does.

The path on two vertices satisfies the strong condition vacuously but
behaves like neither class in product classifications, so it carries a
dedicated flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    DistanceMatrix,
    DomainError,
    Graph,
    all_pairs_distances,
    center_and_peripheral,
    induced_subgraph,
    is_tree,
)

KIND_TRIVIAL = "Trivial"
KIND_3PERIPHERAL = "ThreePeripheral"
KIND_STRONG = "StronglyNon3Peripheral"
KIND_WEAK = "WeaklyNon3Peripheral"


class NotATreeError(DomainError):
    pass


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise NotATreeError("input graph is not a tree (connected and acyclic)")


@dataclass(frozen=True)
class PeripheralWitness:
    """n distinct vertices pairwise at diameter distance."""

    ids: tuple[int, ...]


def find_n_peripheral(dm: DistanceMatrix, n: int) -> PeripheralWitness | None:
    """First (lexicographically least) set of n vertices pairwise at diameter
    distance, or None.  Only peripheral vertices can participate, so the
    search is restricted to them."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if not dm.connected:
        raise DomainError("n-peripherality is defined for connected graphs only")
    _, peripheral = center_and_peripheral(dm)
    diam = dm.diameter
    for combo in combinations(peripheral, n):
        if all(dm.dist[u][v] == diam for u, v in combinations(combo, 2)):
            return PeripheralWitness(combo)
    return None


def is_n_peripheral(dm: DistanceMatrix, n: int) -> bool:
    return find_n_peripheral(dm, n) is not None


def tree_minus(t: Graph, v: int, dm: DistanceMatrix | None = None) -> tuple[Graph, list[int]]:
    """Delete every vertex at distance diam(T) from the peripheral vertex v.

    Returns the surviving tree (relabelled 0..k-1) and the back-mapping to
    the original ids.  The survivors always form a tree whose diameter is
    exactly diam(T) - 1.
    """
    _require_tree(t)
    if t.n < 2:
        raise DomainError("tree_minus requires a tree on at least two vertices")
    if dm is None:
        dm = all_pairs_distances(t)
    if dm.ecc[v] != dm.diameter:
        raise DomainError(f"vertex {v} is not peripheral")
    keep = [u for u in range(t.n) if dm.dist[v][u] < dm.diameter]
    return induced_subgraph(t, keep)


def tree_plus(t: Graph, u: int) -> Graph:
    """Attach a new leaf (id n) to vertex u."""
    _require_tree(t)
    if not (0 <= u < t.n):
        raise DomainError(f"vertex {u} out of range")
    return Graph.from_edges(t.n + 1, t.edges() + [(u, t.n)])


@dataclass(frozen=True)
class TreeClass:
    """Classification of a tree's peripheral structure.

    ``witness`` is the peripheral vertex whose deletion set leaves a
    non-3-peripheral tree (strong, odd diameter) or the attachment vertex
    whose new leaf creates a 3-peripheral tree (weak, even diameter);
    None for the other kinds.
    """

    kind: str
    diameter: int
    is_p2: bool
    witness: int | None

    @property
    def parity(self) -> str:
        if self.diameter == 0:
            return "zero"
        return "odd" if self.diameter % 2 else "even"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "diameter": self.diameter,
            "parity": self.parity,
            "is_p2": self.is_p2,
            "witness": self.witness,
        }


def classify_tree(t: Graph, dm: DistanceMatrix | None = None) -> TreeClass:
    """Classify a tree as trivial, 3-peripheral, or strongly/weakly non-3-peripheral."""
    _require_tree(t)
    if t.n == 1:
        return TreeClass(KIND_TRIVIAL, 0, False, None)
    if dm is None:
        dm = all_pairs_distances(t)
    if is_n_peripheral(dm, 3):
        return TreeClass(KIND_3PERIPHERAL, dm.diameter, False, None)
    if t.n == 2:
        # Strong by the letter of the odd-diameter condition (deleting the
        # far endpoint leaves a single vertex), but product rules treat it
        # separately, hence the flag.
        return TreeClass(KIND_STRONG, 1, True, None)

    diam = dm.diameter
    if diam % 2 == 1:
        _, peripheral = center_and_peripheral(dm)
        for v in peripheral:
            sub, _ = tree_minus(t, v, dm)
            if not is_n_peripheral(all_pairs_distances(sub), 3):
                return TreeClass(KIND_STRONG, diam, False, v)
        return TreeClass(KIND_WEAK, diam, False, None)

    # Even diameter: a leaf attached at u can only create three pairwise-
    # diametral vertices if u sits at distance diam-1 from every peripheral
    # vertex, so only those u need checking.
    _, peripheral = center_and_peripheral(dm)
    for u in range(t.n):
        if all(dm.dist[u][v] == diam - 1 for v in peripheral):
            grown = tree_plus(t, u)
            if is_n_peripheral(all_pairs_distances(grown), 3):
                return TreeClass(KIND_WEAK, diam, False, u)
    return TreeClass(KIND_STRONG, diam, False, None)


# ---------------------------------------------------------------------------
# canonical forms and enumeration of free trees
# ---------------------------------------------------------------------------


def _encode_rooted(t: Graph, root: int) -> str:
    """Parenthesis encoding of the tree rooted at ``root`` with children's
    encodings sorted, so isomorphic rooted trees encode identically."""

    def enc(v: int, parent: int) -> str:
        kids = sorted(enc(w, v) for w in t.adj[v] if w != parent)
        return "(" + "".join(kids) + ")"

    return enc(root, -1)


def canonical_form(t: Graph) -> str:
    """Canonical encoding of a free tree: root at the centre (one or two
    vertices) and take the lexicographically smaller rooted encoding.
    Two trees are isomorphic iff their canonical forms are equal."""
    _require_tree(t)
    center, _ = center_and_peripheral(all_pairs_distances(t))
    return min(_encode_rooted(t, c) for c in center)


DEFAULT_ENUMERATION_BOUND = 10


def enumerate_trees(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[Graph]:
    """One representative per isomorphism class of trees on n vertices,
    in canonical-form order.

    Grown by attaching a leaf everywhere on each (n-1)-vertex class and
    deduplicating by canonical form; every n-vertex tree arises this way
    because deleting a leaf of it yields some (n-1)-vertex tree.
    """
    if n < 1:
        raise DomainError(f"tree order must be positive, got {n}")
    if n > bound:
        raise DomainError(f"tree order {n} exceeds the enumeration bound {bound}")
    level: dict[str, Graph] = {canonical_form(Graph.from_edges(1, [])): Graph.from_edges(1, [])}
    for _ in range(n - 1):
        grown: dict[str, Graph] = {}
        for t in level.values():
            for u in range(t.n):
                candidate = tree_plus(t, u)
                key = canonical_form(candidate)
                if key not in grown:
                    grown[key] = candidate
        level = grown
    return [level[key] for key in sorted(level)]
