"""Decision-diagram pictures rendered with matplotlib.

The drawing is a straightforward layered layout: one row per variable
actually tested, terminals at the bottom, dashed arcs for 0-branches.
It is meant for eyeballing small diagrams; anything past a few hundred
nodes is refused rather than drawn unreadably.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bdd import Ref


def draw_diagram(
    f: Ref,
    path: str | Path,
    title: str | None = None,
    max_nodes: int = 400,
) -> Path:
    """Save a picture of the diagram rooted at ``f``; returns the path."""
    mgr = f.manager
    handles = sorted(mgr._reachable(mgr._handle(f)))
    if len(handles) > max_nodes:
        raise ValueError(
            f"diagram has {len(handles)} nodes; refusing to draw more than {max_nodes}"
        )

    levels = sorted({mgr._var[u] for u in handles})
    terminals = {mgr._handle(f)} if f.is_terminal else set()
    for u in handles:
        terminals.update(t for t in (mgr._low[u], mgr._high[u]) if t < 2)
    level_row = {v: i for i, v in enumerate(levels)}
    term_row = len(levels)

    pos: dict[int, tuple[float, float]] = {}
    by_level: dict[int, list[int]] = {}
    for u in handles:
        by_level.setdefault(mgr._var[u], []).append(u)
    width = max(
        [len(v) for v in by_level.values()] + [len(terminals), 1]
    )
    for v, nodes in by_level.items():
        for i, u in enumerate(sorted(nodes)):
            pos[u] = ((i + 1) * width / (len(nodes) + 1), -level_row[v])
    for i, t in enumerate(sorted(terminals)):
        pos[t] = ((i + 1) * width / (len(terminals) + 1), -term_row)

    fig, ax = plt.subplots(figsize=(max(4.0, width * 1.1), max(3.0, (term_row + 1) * 0.9)))
    for u in handles:
        x, y = pos[u]
        for child, style in ((mgr._low[u], "--"), (mgr._high[u], "-")):
            cx, cy = pos[child]
            ax.plot([x, cx], [y, cy], style, color="gray", linewidth=1, zorder=1)
    for u in handles:
        x, y = pos[u]
        ax.add_patch(plt.Circle((x, y), 0.22, facecolor="white", edgecolor="black", zorder=2))
        ax.text(x, y, mgr.var_name(mgr._var[u]), ha="center", va="center", fontsize=7, zorder=3)
    for t in terminals:
        x, y = pos[t]
        ax.add_patch(
            plt.Rectangle((x - 0.2, y - 0.2), 0.4, 0.4, facecolor="white", edgecolor="black", zorder=2)
        )
        ax.text(x, y, str(t), ha="center", va="center", fontsize=8, zorder=3)
    ax.set_xlim(0, width + 1)
    ax.set_ylim(-term_row - 0.7, 0.7)
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
    out = Path(path)
    fig.savefig(out, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return out
