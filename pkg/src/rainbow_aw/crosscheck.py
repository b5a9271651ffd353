"""Cross-validation of the closed-form classifier against exhaustive search.

Each record pits aw_tree_product (closed form, factored metric) against
brute_force_aw3 (backtracking over BFS distances on the product itself);
the two share no distance code path.  Sweeps run over the catalog of
non-isomorphic trees up to a size bound and can fan out across a process
pool.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from multiprocessing import get_context

from .classify import aw_tree_product
from .graphs import Graph
from .oracle import SearchBudget, brute_force_aw3
from .product import cartesian_product
from .trees import canonical_form, enumerate_trees

PRODUCT_MAX_AW = 4


@dataclass(frozen=True)
class CrosscheckRecord:
    """One classifier-versus-oracle comparison.

    ``oracle_aw`` is None when the search hit its budget; ``agree`` is
    False in that case (an inconclusive run confirms nothing).
    ``found3`` retains the oracle's rainbow-free exact 3-coloring when one
    exists, for downstream structural checks.
    """

    t1: str
    t2: str
    classifier_aw: int
    rule: str
    oracle_aw: int | None
    nodes: int
    ms: float
    agree: bool
    found3: tuple[int, ...] | None

    @property
    def inconclusive(self) -> bool:
        return self.oracle_aw is None

    def to_json(self) -> dict:
        oracle: dict = {"nodes": self.nodes, "ms": round(self.ms, 3)}
        if self.inconclusive:
            oracle["inconclusive"] = True
        else:
            oracle["aw"] = self.oracle_aw
        return {
            "t1": self.t1,
            "t2": self.t2,
            "classifier": {"aw": self.classifier_aw, "rule": self.rule},
            "oracle": oracle,
            "agree": self.agree,
        }


def crosscheck_pair(
    t1: Graph, t2: Graph, budget: SearchBudget = SearchBudget()
) -> CrosscheckRecord:
    """Classify one tree pair and confirm by exhaustive search."""
    result = aw_tree_product(t1, t2)
    search = brute_force_aw3(cartesian_product(t1, t2).graph, budget, max_r=PRODUCT_MAX_AW)
    found3 = search.found_at(3)
    return CrosscheckRecord(
        t1=canonical_form(t1),
        t2=canonical_form(t2),
        classifier_aw=result.value,
        rule=result.rule,
        oracle_aw=search.aw,
        nodes=search.nodes,
        ms=search.ms,
        agree=search.aw == result.value,
        found3=found3.colors if found3 is not None else None,
    )


def tree_catalog(max_factor: int, min_order: int = 2) -> list[Graph]:
    """All non-isomorphic trees with min_order..max_factor vertices."""
    catalog: list[Graph] = []
    for n in range(min_order, max_factor + 1):
        catalog.extend(enumerate_trees(n))
    return catalog


def sweep_pairs(max_factor: int, include_equal: bool = False) -> list[tuple[Graph, Graph]]:
    """Unordered pairs of catalog trees, by catalog index; identical pairs
    only when requested."""
    catalog = tree_catalog(max_factor)
    pairs = []
    for i in range(len(catalog)):
        start = i if include_equal else i + 1
        for j in range(start, len(catalog)):
            pairs.append((catalog[i], catalog[j]))
    return pairs


def _pair_worker(payload: tuple) -> CrosscheckRecord:
    n1, e1, n2, e2, max_nodes, max_ms, max_vertices = payload
    budget = SearchBudget(max_nodes, max_ms, max_vertices)
    return crosscheck_pair(Graph.from_edges(n1, e1), Graph.from_edges(n2, e2), budget)


def crosscheck_sweep(
    max_factor: int,
    budget: SearchBudget = SearchBudget(),
    jobs: int = 1,
    include_equal: bool = False,
) -> list[CrosscheckRecord]:
    """Crosscheck every catalog pair, optionally across a process pool.

    Records come back in pair order regardless of worker scheduling.
    """
    pairs = sweep_pairs(max_factor, include_equal)
    if jobs <= 1:
        return [crosscheck_pair(t1, t2, budget) for t1, t2 in pairs]
    payloads = [
        (t1.n, t1.edges(), t2.n, t2.edges(), budget.max_nodes, budget.max_ms, budget.max_vertices)
        for t1, t2 in pairs
    ]
    with get_context("fork").Pool(jobs) as pool:
        return list(pool.imap(_pair_worker, payloads, chunksize=1))


def write_jsonl(records: list[CrosscheckRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_json()) + "\n")
