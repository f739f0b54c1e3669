"""Figures for classification reports, written straight to image files."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .classify import ClassRecord  # noqa: E402


def _save(fig, path: str | Path) -> Path:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_distance_profile(rec: ClassRecord, path: str | Path) -> Path:
    """Bar chart of how many codes in the cell reach each minimum distance."""
    ds = sorted(rec.per_d)
    counts = [rec.per_d[d] for d in ds]
    colors = ["tab:red" if d == rec.optimal_d else "tab:gray" for d in ds]
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.bar(range(len(ds)), counts, color=colors, tick_label=[str(d) for d in ds])
    ax.set_xlabel("minimum distance d")
    ax.set_ylabel("free codes")
    ax.set_title(f"[{rec.n},{rec.k}] hull-rank {rec.hull_rank}: {rec.optimal_count} optimal, "
                 f"{len(rec.representatives)} classes")
    for x, c in zip(range(len(ds)), counts):
        ax.annotate(str(c), (x, c), ha="center", va="bottom", fontsize=8)
    ax.margins(y=0.12)
    return _save(fig, path)


def plot_census(n: int, k: int, table: Mapping[int, tuple[int, int]], path: str | Path) -> Path:
    """Code counts per hull-rank, with the best distance written over each bar."""
    ls = sorted(table)
    counts = [table[l][0] for l in ls]
    fig, ax = plt.subplots(figsize=(5, 3.2))
    bars = ax.bar(range(len(ls)), counts, color="tab:blue", tick_label=[str(l) for l in ls])
    for bar, l in zip(bars, ls):
        ax.annotate(f"d={table[l][1]}", (bar.get_x() + bar.get_width() / 2, bar.get_height()),
                    ha="center", va="bottom", fontsize=8)
    ax.set_xlabel("hull-rank l")
    ax.set_ylabel("free codes")
    ax.set_title(f"free [{n},{k}] codes by hull-rank")
    ax.margins(y=0.12)
    return _save(fig, path)
