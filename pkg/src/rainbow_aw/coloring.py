"""Colorings, 3-term arithmetic progressions, and rainbow structure.

A 3-AP in a graph is an ordered triple (x, y, z) of vertices with
d(x, y) = d(y, z) = d for some common difference d >= 1.  Only the two
consecutive distances are constrained; d(x, z) is unrestricted.  Triples
are visited once in canonical orientation x < z, midpoint-major and then
(x, z) lexicographic.  A triple is rainbow when its three colors are
pairwise distinct.

The constructive half builds the two-pole coloring of a tree product:
given an anchor corner a = (u1, w1) and a far corner b = (uj, wk) realizing
the product diameter D, color a vertex blue when it lies at distance D - 1
from a, red when it lies at distance D from b, and green otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .graphs import DomainError, Graph, GraphFormatError, all_pairs_distances
from .product import ProductGraph

RED, BLUE, GREEN = 0, 1, 2
COLOR_NAMES = ("red", "blue", "green")


@dataclass(frozen=True)
class Coloring:
    """An assignment of colors 0..r-1 to vertices 0..n-1."""

    r: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise DomainError(f"palette size must be positive, got {self.r}")
        for v, c in enumerate(self.colors):
            if not (0 <= c < self.r):
                raise DomainError(f"vertex {v} has color {c} outside 0..{self.r - 1}")

    def used_colors(self) -> set[int]:
        return set(self.colors)

    def is_exact(self) -> bool:
        """Every one of the r colors appears on some vertex."""
        return len(self.used_colors()) == self.r

    def merge(self, keep: int, absorb: int) -> Coloring:
        """Merge color class ``absorb`` into ``keep`` and compact the palette."""
        if keep == absorb:
            raise DomainError("cannot merge a color class with itself")
        remap = {}
        nxt = 0
        for c in range(self.r):
            if c == absorb:
                continue
            remap[c] = nxt
            nxt += 1
        remap[absorb] = remap[keep]
        return Coloring(self.r - 1, tuple(remap[c] for c in self.colors))

    def to_json(self) -> dict:
        return {"r": self.r, "colors": list(self.colors)}

    @staticmethod
    def from_json(obj: object) -> Coloring:
        if not isinstance(obj, dict) or set(obj) != {"r", "colors"}:
            raise GraphFormatError('coloring JSON must be {"r": int, "colors": [int, ...]}')
        r, colors = obj["r"], obj["colors"]
        if not isinstance(r, int) or not isinstance(colors, list) or not all(
            isinstance(c, int) for c in colors
        ):
            raise GraphFormatError("coloring JSON has non-integer entries")
        try:
            return Coloring(r, tuple(colors))
        except DomainError as exc:
            raise GraphFormatError(str(exc)) from exc


@dataclass(frozen=True)
class APTriple:
    """3-AP (x, y, z) with midpoint y and common difference d, oriented x < z."""

    x: int
    y: int
    z: int
    d: int


RowFn = Callable[[int], Sequence[int]]


def iter_3aps_rows(n: int, row_of: RowFn) -> Iterator[APTriple]:
    """Every 3-AP once, canonical orientation, given per-vertex distance rows."""
    for y in range(n):
        row = row_of(y)
        buckets: dict[int, list[int]] = {}
        for v in range(n):
            d = row[v]
            if v != y and d >= 1:
                buckets.setdefault(d, []).append(v)
        for x in range(n):
            d = row[x]
            if x == y or d < 1:
                continue
            mates = buckets[d]
            for z in mates[_first_index_after(mates, x):]:
                yield APTriple(x, y, z, d)


def _first_index_after(sorted_ids: list[int], x: int) -> int:
    # sorted_ids is ascending and contains x
    return sorted_ids.index(x) + 1


def iter_3aps(pg: ProductGraph) -> Iterator[APTriple]:
    """Every 3-AP of the product once, distances via the factored formula."""
    return iter_3aps_rows(pg.n, pg.distance_row)


def iter_3aps_graph(g: Graph) -> Iterator[APTriple]:
    """Every 3-AP of an arbitrary graph once, distances via BFS."""
    dm = all_pairs_distances(g)
    return iter_3aps_rows(g.n, lambda y: dm.dist[y])


def find_rainbow_rows(n: int, row_of: RowFn, colors: Sequence[int]) -> APTriple | None:
    """First rainbow 3-AP in enumeration order, or None.

    Midpoints are scanned in order; for each, a bucket can contain a rainbow
    pair iff it holds two distinct colors other than the midpoint's, which is
    detected in linear time before any pairs are touched.
    """
    for y in range(n):
        row = row_of(y)
        cy = colors[y]
        buckets: dict[int, list[int]] = {}
        hit = False
        for v in range(n):
            d = row[v]
            if v == y or d < 1:
                continue
            buckets.setdefault(d, []).append(v)
        for mates in buckets.values():
            first_other = -1
            for v in mates:
                cv = colors[v]
                if cv == cy:
                    continue
                if first_other == -1:
                    first_other = cv
                elif cv != first_other:
                    hit = True
                    break
            if hit:
                break
        if not hit:
            continue
        for x in range(n):
            d = row[x]
            if x == y or d < 1:
                continue
            cx = colors[x]
            mates = buckets[d]
            for z in mates[_first_index_after(mates, x):]:
                cz = colors[z]
                if cx != cy and cz != cy and cx != cz:
                    return APTriple(x, y, z, d)
    return None


def find_rainbow_3ap(pg: ProductGraph, c: Coloring) -> APTriple | None:
    """First rainbow 3-AP of the colored product, or None when rainbow-free.

    A palette with fewer than three colors present is rainbow-free by
    definition and short-circuits.
    """
    if len(c.colors) != pg.n:
        raise DomainError("coloring size does not match the product order")
    if len(c.used_colors()) < 3:
        return None
    return find_rainbow_rows(pg.n, pg.distance_row, c.colors)


def find_rainbow_in_graph(g: Graph, c: Coloring) -> APTriple | None:
    """find_rainbow_3ap for an arbitrary graph via a BFS distance matrix."""
    if len(c.colors) != g.n:
        raise DomainError("coloring size does not match the graph order")
    if len(c.used_colors()) < 3:
        return None
    dm = all_pairs_distances(g)
    return find_rainbow_rows(g.n, lambda y: dm.dist[y], c.colors)


# ---------------------------------------------------------------------------
# the two-pole coloring of a tree product
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiametralWitness:
    """Anchor corner (u1, w1) and far corner (uj, wk) of a tree product.

    Each anchor coordinate is peripheral in its factor and deleting that
    factor's far set (every vertex a diameter away) must leave a
    non-3-peripheral tree; the far corner realizes the factor diameters
    coordinate-wise, hence the product diameter.
    """

    u1: int
    w1: int
    uj: int
    wk: int

    def to_json(self) -> dict:
        return {"anchor": [self.u1, self.w1], "far": [self.uj, self.wk]}


def find_diametral_witness(t1: Graph, t2: Graph) -> DiametralWitness | None:
    """Least qualifying witness, or None when some factor has no peripheral
    vertex whose deletion set leaves a non-3-peripheral tree (which happens
    exactly for weakly non-3-peripheral factors of odd diameter)."""
    from .trees import classify_tree, is_n_peripheral, tree_minus, KIND_TRIVIAL, KIND_3PERIPHERAL

    anchors: list[int] = []
    fars: list[int] = []
    dms = []
    for t in (t1, t2):
        cls = classify_tree(t)
        if cls.kind == KIND_TRIVIAL:
            raise DomainError("factors must have at least two vertices")
        if cls.kind == KIND_3PERIPHERAL:
            raise DomainError("factors must be non-3-peripheral")
        dms.append(all_pairs_distances(t))
    if (dms[0].diameter + dms[1].diameter) % 2 != 0:
        raise DomainError("the product diameter must be even")
    for t, dm in zip((t1, t2), dms):
        anchor = None
        for v in range(t.n):
            if dm.ecc[v] != dm.diameter:
                continue
            trimmed, _ = tree_minus(t, v, dm)
            if not is_n_peripheral(all_pairs_distances(trimmed), 3):
                anchor = v
                break
        if anchor is None:
            return None
        far = min(u for u in range(t.n) if dm.dist[anchor][u] == dm.diameter)
        anchors.append(anchor)
        fars.append(far)
    return DiametralWitness(anchors[0], anchors[1], fars[0], fars[1])


def diametral_coloring(pg: ProductGraph, w: DiametralWitness) -> Coloring:
    """Color the product blue at distance D-1 from the anchor corner, red at
    distance D from the far corner, green elsewhere (D = product diameter).

    The two rules never overlap for a valid witness, and all three colors
    always appear, so the result is an exact 3-coloring.
    """
    D = pg.diameter
    a = pg.flat(w.u1, w.w1)
    b = pg.flat(w.uj, w.wk)
    if pg.distance(a, b) != D:
        raise DomainError("witness corners do not realize the product diameter")
    row_a = pg.distance_row(a)
    row_b = pg.distance_row(b)
    colors = []
    for v in range(pg.n):
        blue = row_a[v] == D - 1
        red = row_b[v] == D
        if blue and red:
            raise DomainError(f"coloring rules overlap at vertex {v}; invalid witness")
        colors.append(BLUE if blue else RED if red else GREEN)
    c = Coloring(3, tuple(colors))
    if not c.is_exact():
        raise DomainError("two-pole coloring failed to use all three colors")
    return c


@dataclass(frozen=True)
class DiametralReport:
    """Outcome of the structural checks on a two-pole coloring.

    Each field pairs a verdict with the first counterexample found (None
    when the check passes):

    * rules_disjoint: no vertex satisfies both color rules, and the
      coloring matches the rules everywhere.
    * red_blue_gap: every red-blue pair lies at distance exactly D - 1.
    * red_sphere_blue: every vertex at distance D - 1 from a red vertex
      is blue.
    * rainbow_midpoint_blue: every rainbow 3-AP has a blue midpoint.

    ``first_rainbow`` additionally records whether the coloring is
    rainbow-free outright.
    """

    rules_disjoint: bool
    rules_counterexample: tuple | None
    red_blue_gap: bool
    gap_counterexample: tuple | None
    red_sphere_blue: bool
    sphere_counterexample: tuple | None
    rainbow_midpoint_blue: bool
    midpoint_counterexample: tuple | None
    first_rainbow: APTriple | None

    @property
    def all_pass(self) -> bool:
        return (
            self.rules_disjoint
            and self.red_blue_gap
            and self.red_sphere_blue
            and self.rainbow_midpoint_blue
        )

    @property
    def rainbow_free(self) -> bool:
        return self.first_rainbow is None

    def to_json(self) -> dict:
        return {
            "rules_disjoint": self.rules_disjoint,
            "red_blue_gap": self.red_blue_gap,
            "red_sphere_blue": self.red_sphere_blue,
            "rainbow_midpoint_blue": self.rainbow_midpoint_blue,
            "rainbow_free": self.rainbow_free,
            "all_pass": self.all_pass,
        }


def verify_diametral_coloring(
    pg: ProductGraph, c: Coloring, w: DiametralWitness
) -> DiametralReport:
    """Check the two-pole coloring's defining structure by exhaustive scans."""
    if len(c.colors) != pg.n:
        raise DomainError("coloring size does not match the product order")
    D = pg.diameter
    a = pg.flat(w.u1, w.w1)
    b = pg.flat(w.uj, w.wk)
    row_a = pg.distance_row(a)
    row_b = pg.distance_row(b)

    rules_ok, rules_cx = True, None
    for v in range(pg.n):
        blue = row_a[v] == D - 1
        red = row_b[v] == D
        expected = BLUE if blue else RED if red else GREEN
        if (blue and red) or c.colors[v] != expected:
            rules_ok, rules_cx = False, (v, c.colors[v], expected)
            break

    reds = [v for v in range(pg.n) if c.colors[v] == RED]
    blues = [v for v in range(pg.n) if c.colors[v] == BLUE]

    gap_ok, gap_cx = True, None
    for x in reds:
        row_x = pg.distance_row(x)
        for y in blues:
            if row_x[y] != D - 1:
                gap_ok, gap_cx = False, (x, y, row_x[y])
                break
        if not gap_ok:
            break

    sphere_ok, sphere_cx = True, None
    for x in reds:
        row_x = pg.distance_row(x)
        for v in range(pg.n):
            if row_x[v] == D - 1 and c.colors[v] != BLUE:
                sphere_ok, sphere_cx = False, (x, v, c.colors[v])
                break
        if not sphere_ok:
            break

    midpoint_ok, midpoint_cx = True, None
    for t in iter_3aps(pg):
        cx_, cy_, cz_ = c.colors[t.x], c.colors[t.y], c.colors[t.z]
        if cx_ != cy_ and cy_ != cz_ and cx_ != cz_ and cy_ != BLUE:
            midpoint_ok, midpoint_cx = False, (t.x, t.y, t.z, t.d)
            break

    return DiametralReport(
        rules_ok,
        rules_cx,
        gap_ok,
        gap_cx,
        sphere_ok,
        sphere_cx,
        midpoint_ok,
        midpoint_cx,
        find_rainbow_3ap(pg, c),
    )


# ---------------------------------------------------------------------------
# shortest trichromatic geodesics
# ---------------------------------------------------------------------------


def shortest_trichromatic_path(pg: ProductGraph, c: Coloring) -> list[int] | None:
    """A minimum-length geodesic whose vertices carry at least three colors.

    Any minimal such geodesic has uniquely colored endpoints and a
    monochromatic interior in some third color (otherwise a strict subpath
    would already be trichromatic), so the search ranges over endpoint
    pairs and a single interior color, by increasing length.
    """
    if len(c.colors) != pg.n:
        raise DomainError("coloring size does not match the product order")
    if not c.is_exact() or c.r < 3:
        raise DomainError("an exact coloring with at least three colors is required")
    n = pg.n
    rows = [pg.distance_row(v) for v in range(n)]
    palette = sorted(c.used_colors())
    for length in range(2, pg.diameter + 1):
        for a in range(n):
            row_a = rows[a]
            for b in range(a + 1, n):
                if row_a[b] != length or c.colors[a] == c.colors[b]:
                    continue
                for z in palette:
                    if z == c.colors[a] or z == c.colors[b]:
                        continue
                    path = _geodesic_with_interior_color(pg, rows, a, b, length, z, c.colors)
                    if path is not None:
                        return path
    return None


def _geodesic_with_interior_color(
    pg: ProductGraph,
    rows: list[list[int]],
    a: int,
    b: int,
    length: int,
    z: int,
    colors: tuple[int, ...],
) -> list[int] | None:
    """Lexicographically least geodesic a..b whose interior is all color z."""
    row_a, row_b = rows[a], rows[b]
    adj = pg.graph.adj
    levels: list[list[int]] = [
        [
            v
            for v in range(pg.n)
            if colors[v] == z and row_a[v] == t and row_b[v] == length - t
        ]
        for t in range(1, length)
    ]
    forward: list[set[int]] = []
    frontier = {a}
    for level in levels:
        frontier = {v for v in level if any(u in frontier for u in adj[v])}
        if not frontier:
            return None
        forward.append(frontier)
    if not any(u in forward[-1] for u in adj[b]):
        return None
    backward = {b}
    for t in range(length - 2, -1, -1):
        forward[t] = {v for v in forward[t] if any(u in backward for u in adj[v])}
        backward = forward[t]
    path = [a]
    for t in range(length - 1):
        path.append(min(v for v in forward[t] if path[-1] in adj[v]))
    path.append(b)
    return path
