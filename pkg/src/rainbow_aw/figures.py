"""File-based matplotlib rendering for colorings and crosscheck reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .coloring import COLOR_NAMES, Coloring
from .crosscheck import CrosscheckRecord
from .product import ProductGraph

_FILLS = ("#e05c5c", "#5c8ee0", "#6fc276", "#e0c35c", "#b07cc6", "#c4a484")


def save_product_coloring(
    pg: ProductGraph, coloring: Coloring | None, path: str, title: str | None = None
) -> str:
    """Draw the product on the (factor 1, factor 2) index grid and save it.

    Vertices sit at integer coordinates (i, j); edges within a copy are the
    vertical runs, edges across copies the horizontal ones.
    """
    fig, ax = plt.subplots(figsize=(1.0 + 0.9 * pg.n1, 1.0 + 0.9 * pg.n2))
    for u, v in pg.graph.edges():
        (i1, j1), (i2, j2) = pg.coords(u), pg.coords(v)
        ax.plot([i1, i2], [j1, j2], color="0.6", linewidth=1.2, zorder=1)
    xs, ys, fills = [], [], []
    for v in range(pg.n):
        i, j = pg.coords(v)
        xs.append(i)
        ys.append(j)
        fills.append(_FILLS[coloring.colors[v] % len(_FILLS)] if coloring else "white")
    ax.scatter(xs, ys, s=420, c=fills, edgecolors="black", linewidths=1.0, zorder=2)
    for v in range(pg.n):
        i, j = pg.coords(v)
        ax.annotate(f"{i + 1},{j + 1}", (i, j), ha="center", va="center", fontsize=7, zorder=3)
    if coloring is not None and coloring.r <= len(COLOR_NAMES):
        handles = [
            plt.Line2D(
                [], [], marker="o", linestyle="", markersize=9,
                markerfacecolor=_FILLS[c], markeredgecolor="black", label=COLOR_NAMES[c],
            )
            for c in sorted(coloring.used_colors())
        ]
        ax.legend(handles=handles, loc="upper left", bbox_to_anchor=(1.01, 1.0), frameon=False)
    ax.set_xticks(range(pg.n1))
    ax.set_yticks(range(pg.n2))
    ax.set_xlabel("factor 1 vertex")
    ax.set_ylabel("factor 2 vertex")
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.margins(0.12)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_crosscheck_figures(records: list[CrosscheckRecord], base: str) -> list[str]:
    """Render a sweep's agreement summary and aw grid next to its report.

    ``base`` is the report path without extension; the figures land at
    ``{base}_summary.png`` and ``{base}_grid.png``.
    """
    paths = []

    agree = sum(1 for r in records if r.agree)
    disagree = sum(1 for r in records if not r.agree and not r.inconclusive)
    inconclusive = sum(1 for r in records if r.inconclusive)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    ax1.bar(
        ["agree", "disagree", "inconclusive"],
        [agree, disagree, inconclusive],
        color=["#6fc276", "#e05c5c", "#e0c35c"],
    )
    ax1.set_title(f"classifier vs oracle ({len(records)} pairs)")
    ax1.set_ylabel("pairs")
    for x, count in enumerate([agree, disagree, inconclusive]):
        ax1.annotate(str(count), (x, count), ha="center", va="bottom")
    aw3 = sum(1 for r in records if r.classifier_aw == 3)
    aw4 = sum(1 for r in records if r.classifier_aw == 4)
    ax2.bar(["aw = 3", "aw = 4"], [aw3, aw4], color=["#5c8ee0", "#b07cc6"])
    ax2.set_title("classified values")
    fig.tight_layout()
    summary_path = f"{base}_summary.png"
    fig.savefig(summary_path, dpi=150)
    plt.close(fig)
    paths.append(summary_path)

    keys = sorted({r.t1 for r in records} | {r.t2 for r in records})
    index = {k: i for i, k in enumerate(keys)}
    size = len(keys)
    grid = [[float("nan")] * size for _ in range(size)]
    marks = []
    for r in records:
        i, j = index[r.t1], index[r.t2]
        for a, b in ((i, j), (j, i)):
            grid[a][b] = r.classifier_aw
        if not r.agree:
            marks.append((i, j))
            marks.append((j, i))
    fig, ax = plt.subplots(figsize=(1.5 + 0.45 * size, 1.2 + 0.45 * size))
    im = ax.imshow(grid, cmap="coolwarm", vmin=3, vmax=4, origin="lower")
    for i, j in marks:
        ax.annotate("x", (j, i), ha="center", va="center", fontsize=12, fontweight="bold")
    ax.set_xticks(range(size))
    ax.set_yticks(range(size))
    ax.set_xticklabels(range(1, size + 1), fontsize=7)
    ax.set_yticklabels(range(1, size + 1), fontsize=7)
    ax.set_xlabel("tree catalog index")
    ax.set_ylabel("tree catalog index")
    ax.set_title("aw(T_i x T_j, 3); x marks disagreement")
    fig.colorbar(im, ax=ax, ticks=[3, 4], shrink=0.7)
    fig.tight_layout()
    grid_path = f"{base}_grid.png"
    fig.savefig(grid_path, dpi=150)
    plt.close(fig)
    paths.append(grid_path)
    return paths
