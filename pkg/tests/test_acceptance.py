"""Acceptance suite: one test per acceptance criterion, each printing a
single PASS line with its headline numbers (visible with pytest -s; the
test name itself is the pass/fail line under -v).

Every numeric claim here is either asserted against an independent
exhaustive computation inside this file or was frozen from one.
"""

from __future__ import annotations

import os
import random
import time
from itertools import combinations

import pytest

from rainbow_aw import (
    KIND_3PERIPHERAL,
    KIND_STRONG,
    KIND_WEAK,
    RULE_STRONG,
    Graph,
    all_pairs_distances,
    aw_forest_product,
    aw_tree_product,
    brute_force_aw3,
    canonical_form,
    cartesian_product,
    center_and_peripheral,
    classify_tree,
    copy_of_factor,
    crosscheck_sweep,
    diametral_coloring,
    enumerate_trees,
    find_diametral_witness,
    forest_components,
    is_n_peripheral,
    path_graph,
    sweep_pairs,
    tree_catalog,
    tree_minus,
    tree_plus,
    verify_diametral_coloring,
)

BROOM = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)])


@pytest.fixture(scope="module")
def sweep5():
    """The criterion-2 sweep, shared with criterion 5."""
    jobs = min(8, os.cpu_count() or 1)
    pairs = sweep_pairs(5)
    start = time.monotonic()
    records = crosscheck_sweep(5, jobs=jobs)
    elapsed = time.monotonic() - start
    return {"pairs": pairs, "records": records, "elapsed": elapsed, "jobs": jobs}


def test_criterion_1_grid_reproduction():
    """aw(P_m x P_n, 3) for 2 <= m <= n <= 8 matches the closed form:
    3 when m = 2 with n even or m = 3 with n odd, else 4."""
    start = time.monotonic()
    checked = 0
    for m in range(2, 9):
        for n in range(m, 9):
            if (m == 2 and n % 2 == 0) or (m == 3 and n % 2 == 1):
                expected = 3
            else:
                expected = 4
            got = aw_tree_product(path_graph(m), path_graph(n)).value
            assert got == expected, f"grid P{m} x P{n}: got {got}, expected {expected}"
            checked += 1
    elapsed = time.monotonic() - start
    assert checked == 28
    assert elapsed < 1.0, f"grid table took {elapsed:.2f} s (limit 1 s)"
    print(f"criterion 1: PASS - 28 grids 2<=m<=n<=8 match the closed form in {elapsed:.3f} s")


def test_criterion_2_oracle_agreement_sweep(sweep5):
    """Classifier versus exhaustive search on every unordered pair of
    non-isomorphic trees with 2..5 vertices: full agreement, nothing
    inconclusive, inside the 15-minute budget."""
    records = sweep5["records"]
    assert len(records) == 21  # 7 catalog trees, pairs of distinct ones
    inconclusive = [r for r in records if r.inconclusive]
    assert not inconclusive, f"{len(inconclusive)} searches hit their budget"
    disagreements = [r for r in records if not r.agree]
    assert not disagreements, "classifier and oracle disagree: " + "; ".join(
        f"{r.t1} x {r.t2}: classifier {r.classifier_aw}, oracle {r.oracle_aw}"
        for r in disagreements
    )
    assert sweep5["elapsed"] < 900.0
    rules = sorted({r.rule for r in records})
    print(
        f"criterion 2: PASS - 21/21 pairs agree, 0 inconclusive, "
        f"{sum(r.nodes for r in records)} search nodes, "
        f"{sweep5['elapsed']:.2f} s with {sweep5['jobs']} worker(s); rules seen: {', '.join(rules)}"
    )


def test_criterion_3_two_pole_witness_suite():
    """The two-pole coloring of 20 strongly-non-3-peripheral pairs with even
    product diameter (factors from the <= 7-vertex catalog) passes all four
    structural checks and contains no rainbow 3-AP, within 5 s per pair."""
    strong = [
        (t, classify_tree(t))
        for t in tree_catalog(7)
        if classify_tree(t).kind == KIND_STRONG and not classify_tree(t).is_p2
    ]
    pairs = [
        (t1, t2)
        for (t1, c1), (t2, c2) in combinations(strong, 2)
        if (c1.diameter + c2.diameter) % 2 == 0
    ]
    pairs += [(t, t) for t, c in strong]  # equal pairs always have even sum
    assert len(pairs) >= 20
    slowest = 0.0
    for t1, t2 in pairs[:20]:
        start = time.monotonic()
        witness = find_diametral_witness(t1, t2)
        assert witness is not None
        pg = cartesian_product(t1, t2)
        coloring = diametral_coloring(pg, witness)
        report = verify_diametral_coloring(pg, coloring, witness)
        assert report.rules_disjoint, (canonical_form(t1), canonical_form(t2))
        assert report.red_blue_gap, (canonical_form(t1), canonical_form(t2))
        assert report.red_sphere_blue, (canonical_form(t1), canonical_form(t2))
        assert report.rainbow_midpoint_blue, (canonical_form(t1), canonical_form(t2))
        assert report.rainbow_free, (canonical_form(t1), canonical_form(t2))
        elapsed = time.monotonic() - start
        assert elapsed < 5.0
        slowest = max(slowest, elapsed)
    print(
        f"criterion 3: PASS - 20 strongly x strongly pairs verified rainbow-free, "
        f"slowest pair {slowest:.3f} s (limit 5 s)"
    )


def test_criterion_4_structural_invariants():
    """Exhaustive structural checks on every tree with 2..9 vertices:
    far-set deletion drops the diameter by exactly one; diametral-pair
    propagation; the peripheral dichotomy; 3-peripherality forces an even
    diameter; weak/even witnesses sit at diameter-1 from every peripheral
    vertex; and every diameter path passes through every central vertex."""
    start = time.monotonic()
    trees = checked = 0
    for n in range(2, 10):
        for t in enumerate_trees(n):
            trees += 1
            dm = all_pairs_distances(t)
            diam = dm.diameter
            center, peripheral = center_and_peripheral(dm)
            three_peripheral = is_n_peripheral(dm, 3)

            for v in peripheral:
                sub, _ = tree_minus(t, v, dm)
                assert all_pairs_distances(sub).diameter == diam - 1
                checked += 1

            diametral = [
                (u, v) for u in range(t.n) for v in range(t.n) if dm.dist[u][v] == diam
            ]
            for u, v in diametral:
                for x in peripheral:
                    assert dm.dist[x][u] == diam or dm.dist[x][v] == diam
                    checked += 1
                for c in center:
                    assert dm.dist[u][c] + dm.dist[c][v] == diam
                    checked += 1
                if not three_peripheral:
                    xs = [x for x in range(t.n) if dm.dist[x][v] == diam]
                    ys = [y for y in range(t.n) if dm.dist[u][y] == diam]
                    for x in xs:
                        for y in ys:
                            assert dm.dist[x][y] == diam
                            checked += 1

            if three_peripheral:
                assert diam % 2 == 0
                checked += 1

            cls = classify_tree(t, dm)
            if cls.kind == KIND_WEAK and cls.parity == "even":
                u = cls.witness
                assert all(dm.dist[u][v] == diam - 1 for v in peripheral)
                grown = tree_plus(t, u)
                assert is_n_peripheral(all_pairs_distances(grown), 3)
                checked += 1

    elapsed = time.monotonic() - start
    assert elapsed < 120.0
    print(
        f"criterion 4: PASS - {checked} structural assertions over {trees} trees "
        f"(2..9 vertices), 0 violations, {elapsed:.2f} s (limit 120 s)"
    )


def test_criterion_5_rainbow_free_copy_structure(sweep5):
    """Every rainbow-free exact 3-coloring the criterion-2 oracle found:
    each factor copy carries at most 2 colors; copies along an edge of a
    factor with at least 3 vertices jointly carry at most 2; and in both
    orientations some color reaches every copy."""
    colorings = violations = 0
    for (t1, t2), rec in zip(sweep5["pairs"], sweep5["records"]):
        if rec.found3 is None:
            continue
        colorings += 1
        colors = rec.found3
        pg = cartesian_product(t1, t2)
        for which, host in (("first", t2), ("second", t1)):
            copies = [
                {colors[v] for v in copy_of_factor(pg, which, i)}
                for i in range(host.n)
            ]
            if any(len(s) > 2 for s in copies):
                violations += 1
            if host.n >= 3 and any(len(copies[u] | copies[v]) > 2 for u, v in host.edges()):
                violations += 1
            if not set.intersection(*copies):
                violations += 1
    assert colorings > 0, "the sweep produced no witness colorings to check"
    assert violations == 0
    print(
        f"criterion 5: PASS - {colorings} oracle witness colorings checked in both "
        f"orientations, 0 copy-structure violations"
    )


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(rng.randrange(v), v) for v in range(1, n)])


def random_forest(rng: random.Random) -> Graph:
    sizes = [rng.randint(2, 5) for _ in range(rng.randint(1, 4))]
    edges: list[tuple[int, int]] = []
    offset = 0
    for size in sizes:
        edges += [(offset + u, offset + v) for u, v in random_tree(rng, size).edges()]
        offset += size
    return Graph.from_edges(offset, edges)


def test_criterion_6_forest_formula():
    """On 50 random forest pairs (components of 2..5 vertices, at most 4 per
    forest), the component-count formula 2|P| + 3|S| + 1 equals
    1 + sum(aw_i - 1) with every component aw_i recomputed by the oracle."""
    rng = random.Random(20260816)
    start = time.monotonic()
    for trial in range(50):
        f1, f2 = random_forest(rng), random_forest(rng)
        result = aw_forest_product(f1, f2)

        oracle_sum = 0
        p = s = 0
        for c1 in forest_components(f1):
            for c2 in forest_components(f2):
                aw = brute_force_aw3(cartesian_product(c1, c2).graph, max_r=4).aw
                assert aw is not None
                oracle_sum += aw - 1
                if aw == 3:
                    p += 1
                else:
                    s += 1
        assert result.value == 1 + oracle_sum, f"trial {trial}"
        assert result.value == 2 * p + 3 * s + 1, f"trial {trial}"
        assert (result.p_count, result.s_count) == (p, s), f"trial {trial}"
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    print(
        f"criterion 6: PASS - 50 random forest pairs: both formulas agree with "
        f"oracle-recomputed component values, {elapsed:.2f} s (limit 10 s)"
    )


def test_criterion_7_broom_adjudication():
    """The broom (path 0-1-2 with extra leaves 3, 4 at vertex 2) times P4:
    the exhaustive search terminates conclusively and adjudicates between
    the two candidate readings of the classification."""
    classifier = aw_tree_product(BROOM, path_graph(4))
    search = brute_force_aw3(cartesian_product(BROOM, path_graph(4)).graph)

    broom_class = classify_tree(BROOM)
    note = (
        "adjudication note: the broom deletes to a star from either far leaf but to a "
        "path from its handle, so the definition as written makes it strongly "
        f"non-3-peripheral (classified {broom_class.kind}, witness vertex "
        f"{broom_class.witness}) and predicts aw = 4; a looser reading that lumps "
        "brooms with 3-peripheral-like factors would predict aw = 3. The exhaustive "
        f"search returns aw = {search.aw} ({search.nodes} nodes), so the "
        "definition-as-written value is the correct one and the aw = 3 reading is "
        "ruled out."
    )
    print(note)

    assert not search.inconclusive, "the adjudicating search must terminate"
    assert search.aw == 4
    assert (classifier.value, classifier.rule) == (4, RULE_STRONG)
    assert classifier.value == search.aw
    assert broom_class.kind == KIND_STRONG
    # the competing reading's hallmark: both far leaves do trim to a star
    for leaf in (3, 4):
        trimmed, _ = tree_minus(BROOM, leaf)
        assert is_n_peripheral(all_pairs_distances(trimmed), 3)
    assert classify_tree(trimmed).kind == KIND_3PERIPHERAL
    print(
        f"criterion 7: PASS - broom x P4 adjudicated: classifier 4 ({classifier.rule}) "
        f"= oracle {search.aw} in {search.nodes} nodes; see note above"
    )
