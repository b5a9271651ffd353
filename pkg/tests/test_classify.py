from __future__ import annotations

import pytest

from naive import exists_rainbow_free_exact_naive
from rainbow_aw import (
    KIND_STRONG,
    KIND_WEAK,
    NotATreeError,
    RULE_3PERIPHERAL,
    RULE_ODD,
    RULE_P2,
    RULE_STRONG,
    RULE_VALUES,
    RULE_WEAK,
    DomainError,
    Graph,
    TrivialFactorError,
    aw_forest_product,
    aw_tree_product,
    brute_force_aw3,
    cartesian_product,
    classify_tree,
    enumerate_trees,
    explain,
    find_rainbow_3ap,
    forest_components,
    path_graph,
    rule_predicates,
    star_graph,
    verify_diametral_coloring,
)

BROOM = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)])


def expected_grid_aw(m: int, n: int) -> int:
    """Paths only: 3 exactly when a two-vertex factor meets an even order,
    or a three-vertex factor meets an odd one."""
    if 2 in (m, n) and m % 2 == 0 and n % 2 == 0:
        return 3
    if 3 in (m, n) and m % 2 == 1 and n % 2 == 1:
        return 3
    return 4


class TestRules:
    def test_three_peripheral_factor(self):
        res = aw_tree_product(star_graph(3), path_graph(4))
        assert (res.value, res.rule) == (3, RULE_3PERIPHERAL)
        assert res.details == {"factor": 1, "triple": [1, 2, 3]}
        assert res.coloring is None and res.witness is None
        res = aw_tree_product(path_graph(4), star_graph(3))
        assert res.details == {"factor": 2, "triple": [1, 2, 3]}

    def test_odd_product_diameter(self):
        res = aw_tree_product(path_graph(4), path_graph(5))
        assert (res.value, res.rule) == (4, RULE_ODD)
        assert res.details == {"diameters": [3, 4]}
        assert res.coloring is None

    def test_two_vertex_factor(self):
        res = aw_tree_product(path_graph(2), path_graph(4))
        assert (res.value, res.rule) == (3, RULE_P2)
        assert res.details == {"factor": 1}

    def test_weak_factor(self):
        res = aw_tree_product(path_graph(3), path_graph(5))
        assert (res.value, res.rule) == (3, RULE_WEAK)
        assert res.details == {"factor": 1, "witness": 1}

    def test_both_strongly_ships_verified_coloring(self):
        res = aw_tree_product(path_graph(4), path_graph(4))
        assert (res.value, res.rule) == (4, RULE_STRONG)
        assert res.details["anchor"] == [0, 0]
        assert res.details["far"] == [3, 3]
        assert res.details["coloring_verified"] is True
        assert res.witness is not None and res.coloring is not None
        pg = cartesian_product(path_graph(4), path_graph(4))
        assert find_rainbow_3ap(pg, res.coloring) is None
        assert verify_diametral_coloring(pg, res.coloring, res.witness).all_pass

    def test_broom_times_p4_is_both_strongly(self):
        res = aw_tree_product(BROOM, path_graph(4))
        assert (res.value, res.rule) == (4, RULE_STRONG)
        assert brute_force_aw3(cartesian_product(BROOM, path_graph(4)).graph).aw == 4

    def test_trivial_factor_rejected(self):
        with pytest.raises(TrivialFactorError):
            aw_tree_product(Graph.from_edges(1, []), path_graph(4))
        with pytest.raises(TrivialFactorError):
            aw_tree_product(path_graph(4), Graph.from_edges(1, []))

    def test_non_tree_rejected(self):
        c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        with pytest.raises(NotATreeError):
            aw_tree_product(c4, path_graph(2))

    def test_to_json_shape_per_rule(self):
        res = aw_tree_product(path_graph(3), path_graph(5)).to_json()
        assert set(res) == {"aw", "rule", "factors", "witnesses"}
        assert res["factors"][0]["kind"] == KIND_WEAK
        assert res["witnesses"] == {"factor": 1, "witness": 1}


class TestGridClosedForm:
    def test_all_grids_up_to_8(self):
        for m in range(2, 9):
            for n in range(m, 9):
                res = aw_tree_product(path_graph(m), path_graph(n))
                assert res.value == expected_grid_aw(m, n), (m, n)

    @pytest.mark.parametrize(
        "m,n", [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4), (3, 5)]
    )
    def test_grid_values_against_oracle(self, m, n):
        res = aw_tree_product(path_graph(m), path_graph(n))
        g = cartesian_product(path_graph(m), path_graph(n)).graph
        assert brute_force_aw3(g).aw == res.value

    def test_smallest_grids_against_exhaustive_enumeration(self):
        for m, n in [(2, 2), (2, 3), (2, 4), (3, 3)]:
            g = cartesian_product(path_graph(m), path_graph(n)).graph
            value = aw_tree_product(path_graph(m), path_graph(n)).value
            assert exists_rainbow_free_exact_naive(g, value - 1)
            assert not exists_rainbow_free_exact_naive(g, value)


class TestRuleConsistency:
    def test_order_is_symmetric_in_the_factors(self):
        trees = [t for n in range(2, 7) for t in enumerate_trees(n)]
        for t1 in trees:
            for t2 in trees:
                a = aw_tree_product(t1, t2)
                b = aw_tree_product(t2, t1)
                assert (a.value, a.rule) == (b.value, b.rule)

    def test_fired_rules_always_agree_on_the_value(self):
        classes = [classify_tree(t) for n in range(2, 8) for t in enumerate_trees(n)]
        for cls1 in classes:
            for cls2 in classes:
                fired = rule_predicates(cls1, cls2)
                values = {RULE_VALUES[r] for r, hit in fired.items() if hit}
                assert len(values) == 1, (cls1, cls2, fired)

    def test_named_rule_is_the_first_fired(self):
        trees = [t for n in range(2, 7) for t in enumerate_trees(n)]
        for t1 in trees:
            for t2 in trees:
                res = aw_tree_product(t1, t2)
                fired = rule_predicates(*res.factor_classes)
                assert fired[res.rule]
                assert res.value == RULE_VALUES[res.rule]
                for rule, hit in fired.items():
                    if rule == res.rule:
                        break
                    assert not hit


class TestExplain:
    def test_rule_five_trace_uses_1_based_corners(self):
        text = explain(aw_tree_product(path_graph(4), path_graph(4)))
        assert text.startswith("aw = 4 by rule BothStrongly")
        assert f"factor 1: {KIND_STRONG}" in text
        assert "product diameter 3 + 3 = 6 (even)" in text
        assert "anchored at v1,1 with far corner v4,4" in text

    def test_rule_one_trace_names_the_triple(self):
        text = explain(aw_tree_product(star_graph(3), path_graph(4)))
        assert "aw = 3 by rule ThreePeripheralFactor" in text
        assert "[1, 2, 3]" in text

    def test_p2_trace_flags_the_factor(self):
        text = explain(aw_tree_product(path_graph(2), path_graph(4)))
        assert "two-vertex path" in text


def two_paths(a: int, b: int) -> Graph:
    edges = [(i, i + 1) for i in range(a - 1)]
    edges += [(a + i, a + i + 1) for i in range(b - 1)]
    return Graph.from_edges(a + b, edges)


class TestForests:
    def test_components_are_split_and_relabelled(self):
        comps = forest_components(two_paths(3, 4))
        assert [c.n for c in comps] == [3, 4]
        assert comps[1].edges() == [(0, 1), (1, 2), (2, 3)]

    def test_two_p3s_times_p3(self):
        res = aw_forest_product(two_paths(3, 3), path_graph(3))
        assert (res.value, res.p_count, res.s_count) == (5, 2, 0)
        assert [c.rule for c in res.components] == [RULE_WEAK, RULE_WEAK]

    def test_p2_plus_p4_times_p4(self):
        res = aw_forest_product(two_paths(2, 4), path_graph(4))
        assert (res.value, res.p_count, res.s_count) == (6, 1, 1)
        assert [(c.index1, c.index2, c.rule) for c in res.components] == [
            (0, 0, RULE_P2),
            (1, 0, RULE_STRONG),
        ]

    def test_json_shape(self):
        obj = aw_forest_product(two_paths(2, 4), path_graph(4)).to_json()
        assert set(obj) == {"aw", "p_count", "s_count", "components"}
        assert obj["components"][0] == {
            "component1": 0,
            "component2": 0,
            "sizes": [2, 4],
            "aw": 3,
            "rule": RULE_P2,
        }

    def test_tiny_forest_product_against_exhaustive_enumeration(self):
        f1 = two_paths(2, 2)
        res = aw_forest_product(f1, path_graph(2))
        assert res.value == 5
        union = cartesian_product(f1, path_graph(2)).graph
        assert exists_rainbow_free_exact_naive(union, 4)
        assert not exists_rainbow_free_exact_naive(union, 5)

    def test_input_validation(self):
        c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        with pytest.raises(DomainError):
            aw_forest_product(c4, path_graph(2))
        with pytest.raises(DomainError):
            aw_forest_product(Graph.from_edges(0, []), path_graph(2))
        with pytest.raises(TrivialFactorError):
            aw_forest_product(Graph.from_edges(3, [(0, 1)]), path_graph(2))
