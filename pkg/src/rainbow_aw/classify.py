"""Closed-form aw(G, 3) for Cartesian products of trees and forests.

For nontrivial trees T and T', aw(T x T', 3) is 3 or 4, decided by the
first matching rule:

1. some factor is 3-peripheral                            -> 3
2. diam(T) + diam(T') is odd                              -> 4
3. some factor is the two-vertex path                     -> 3
4. some factor is weakly non-3-peripheral                 -> 3
5. otherwise (both strongly, even product diameter)       -> 4

Rules 1, 3 and 4 can overlap; every overlap yields the same value, and the
first match merely names the rule.  A rule-5 answer is never reported on
classification alone: the two-pole coloring is built and machine-verified
rainbow-free first, so the 4 always ships with its constructive witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    Coloring,
    DiametralWitness,
    diametral_coloring,
    find_diametral_witness,
    find_rainbow_3ap,
)
from .graphs import (
    DomainError,
    Graph,
    all_pairs_distances,
    connected_components,
    induced_subgraph,
    is_forest,
)
from .product import ProductGraph, cartesian_product
from .trees import (
    KIND_3PERIPHERAL,
    KIND_STRONG,
    KIND_TRIVIAL,
    KIND_WEAK,
    TreeClass,
    classify_tree,
    find_n_peripheral,
)

RULE_3PERIPHERAL = "ThreePeripheralFactor"
RULE_ODD = "OddProductDiameter"
RULE_P2 = "P2Factor"
RULE_WEAK = "WeaklyFactor"
RULE_STRONG = "BothStrongly"


class TrivialFactorError(DomainError):
    pass


@dataclass(frozen=True)
class AwResult:
    """aw value with the rule that produced it and its witnesses.

    ``coloring`` is the verified rainbow-free exact 3-coloring of the
    product for rule-5 results and None otherwise (the odd-diameter rule's
    value rests on the factor diameters alone).
    """

    value: int
    rule: str
    factor_classes: tuple[TreeClass, TreeClass]
    details: dict
    witness: DiametralWitness | None = None
    coloring: Coloring | None = None

    def to_json(self) -> dict:
        return {
            "aw": self.value,
            "rule": self.rule,
            "factors": [cls.to_json() for cls in self.factor_classes],
            "witnesses": self.details,
        }


def rule_predicates(cls1: TreeClass, cls2: TreeClass) -> dict[str, bool]:
    """Each rule's full applicability condition, evaluated independently.

    Used to confirm that overlapping rules never disagree on the value;
    the classifier itself takes the first match in the fixed order.
    """
    pair = (cls1, cls2)
    even = (cls1.diameter + cls2.diameter) % 2 == 0
    non3 = all(c.kind != KIND_3PERIPHERAL for c in pair)
    return {
        RULE_3PERIPHERAL: any(c.kind == KIND_3PERIPHERAL for c in pair),
        RULE_ODD: non3 and not even,
        RULE_P2: any(c.is_p2 for c in pair) and even,
        RULE_WEAK: any(c.kind == KIND_WEAK for c in pair) and even,
        RULE_STRONG: (
            even
            and all(c.kind == KIND_STRONG for c in pair)
            and not any(c.is_p2 for c in pair)
        ),
    }


RULE_VALUES = {
    RULE_3PERIPHERAL: 3,
    RULE_ODD: 4,
    RULE_P2: 3,
    RULE_WEAK: 3,
    RULE_STRONG: 4,
}

_RULE_ORDER = (RULE_3PERIPHERAL, RULE_ODD, RULE_P2, RULE_WEAK, RULE_STRONG)


def aw_tree_product(t1: Graph, t2: Graph) -> AwResult:
    """aw(T1 x T2, 3) for nontrivial trees, with rule-dependent witnesses."""
    classes = (classify_tree(t1), classify_tree(t2))
    for idx, cls in enumerate(classes):
        if cls.kind == KIND_TRIVIAL:
            raise TrivialFactorError(
                f"factor {idx + 1} has a single vertex; products with a trivial factor "
                "collapse to the other factor and are out of scope"
            )
    fired = rule_predicates(*classes)
    rule = next(r for r in _RULE_ORDER if fired[r])

    if rule == RULE_3PERIPHERAL:
        idx = 0 if classes[0].kind == KIND_3PERIPHERAL else 1
        triple = find_n_peripheral(all_pairs_distances((t1, t2)[idx]), 3)
        assert triple is not None
        details = {"factor": idx + 1, "triple": list(triple.ids)}
        return AwResult(3, rule, classes, details)

    if rule == RULE_ODD:
        details = {"diameters": [classes[0].diameter, classes[1].diameter]}
        return AwResult(4, rule, classes, details)

    if rule == RULE_P2:
        idx = 0 if classes[0].is_p2 else 1
        return AwResult(3, rule, classes, {"factor": idx + 1})

    if rule == RULE_WEAK:
        idx = 0 if classes[0].kind == KIND_WEAK else 1
        details = {"factor": idx + 1, "witness": classes[idx].witness}
        return AwResult(3, rule, classes, details)

    witness = find_diametral_witness(t1, t2)
    if witness is None:
        raise RuntimeError("strongly non-3-peripheral factors must admit a two-pole witness")
    pg = cartesian_product(t1, t2)
    coloring = diametral_coloring(pg, witness)
    rainbow = find_rainbow_3ap(pg, coloring)
    if rainbow is not None:
        raise RuntimeError(
            f"two-pole coloring of a strongly x strongly product has a rainbow 3-AP {rainbow}; "
            "this contradicts the classification"
        )
    details = dict(witness.to_json())
    details["coloring_verified"] = True
    return AwResult(4, rule, classes, details, witness=witness, coloring=coloring)


def explain(result: AwResult) -> str:
    """Human-readable account of a classification."""
    lines = [f"aw = {result.value} by rule {result.rule}"]
    for i, cls in enumerate(result.factor_classes, start=1):
        extra = " (two-vertex path)" if cls.is_p2 else ""
        witness = f", witness vertex {cls.witness}" if cls.witness is not None else ""
        lines.append(
            f"  factor {i}: {cls.kind}{extra}, diameter {cls.diameter} ({cls.parity}){witness}"
        )
    d1 = result.factor_classes[0].diameter
    d2 = result.factor_classes[1].diameter
    lines.append(f"  product diameter {d1} + {d2} = {d1 + d2} ({'even' if (d1 + d2) % 2 == 0 else 'odd'})")
    if result.rule == RULE_3PERIPHERAL:
        lines.append(
            f"  factor {result.details['factor']} has three pairwise-diametral vertices "
            f"{result.details['triple']}, which forces a rainbow in every exact 3-coloring "
            "of the product"
        )
    elif result.rule == RULE_ODD:
        lines.append("  an odd product diameter admits a rainbow-free exact 3-coloring")
    elif result.rule == RULE_P2:
        lines.append(
            f"  factor {result.details['factor']} is the two-vertex path and the product "
            "diameter is even, so every exact 3-coloring has a rainbow 3-AP"
        )
    elif result.rule == RULE_WEAK:
        lines.append(
            f"  factor {result.details['factor']} is weakly non-3-peripheral with even "
            "product diameter, so every exact 3-coloring has a rainbow 3-AP"
        )
    else:
        a = result.details["anchor"]
        f = result.details["far"]
        lines.append(
            f"  both factors strongly non-3-peripheral: the two-pole coloring anchored at "
            f"v{a[0] + 1},{a[1] + 1} with far corner v{f[0] + 1},{f[1] + 1} was verified "
            "rainbow-free, so 3 colors do not force a rainbow"
        )
    return "\n".join(lines)


@dataclass(frozen=True)
class ComponentAw:
    """One tree-pair component of a forest product."""

    index1: int
    index2: int
    n1: int
    n2: int
    value: int
    rule: str

    def to_json(self) -> dict:
        return {
            "component1": self.index1,
            "component2": self.index2,
            "sizes": [self.n1, self.n2],
            "aw": self.value,
            "rule": self.rule,
        }


@dataclass(frozen=True)
class ForestAwResult:
    """aw of a forest product via 2|P| + 3|S| + 1.

    P and S are the product components (pairs of factor components) with
    aw 3 and 4; the equivalent disconnected-graph formula
    1 + sum(aw_i - 1) is computed alongside and must agree.
    """

    value: int
    p_count: int
    s_count: int
    components: tuple[ComponentAw, ...]

    def to_json(self) -> dict:
        return {
            "aw": self.value,
            "p_count": self.p_count,
            "s_count": self.s_count,
            "components": [c.to_json() for c in self.components],
        }


def forest_components(f: Graph) -> list[Graph]:
    """Component trees of a forest, each relabelled, ordered by least vertex."""
    if not is_forest(f):
        raise DomainError("input graph is not a forest")
    comps = []
    for verts in connected_components(f):
        sub, _ = induced_subgraph(f, verts)
        comps.append(sub)
    return comps


def aw_forest_product(f1: Graph, f2: Graph) -> ForestAwResult:
    """aw(F1 x F2, 3) for forests whose components all have >= 2 vertices."""
    parts = []
    for which, f in ((1, f1), (2, f2)):
        comps = forest_components(f)
        if not comps:
            raise DomainError(f"forest {which} is empty")
        for c in comps:
            if c.n == 1:
                raise TrivialFactorError(
                    f"forest {which} has a single-vertex component; every component "
                    "must have at least two vertices"
                )
        parts.append(comps)

    components: list[ComponentAw] = []
    p_count = s_count = 0
    alt_total = 0
    for i, c1 in enumerate(parts[0]):
        for j, c2 in enumerate(parts[1]):
            res = aw_tree_product(c1, c2)
            components.append(ComponentAw(i, j, c1.n, c2.n, res.value, res.rule))
            if res.value == 3:
                p_count += 1
            else:
                s_count += 1
            alt_total += res.value - 1
    value = 2 * p_count + 3 * s_count + 1
    if value != 1 + alt_total:
        raise RuntimeError("component-count and component-sum formulas disagree")
    return ForestAwResult(value, p_count, s_count, tuple(components))
