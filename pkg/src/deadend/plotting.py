"""Figures written next to the TSV/DOT reports."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .core import format_end  # noqa: E402
from .enumeration import CensusRow, DayPoset  # noqa: E402

SERIES = (
    ("ends", "Left dead ends", "o"),
    ("atoms", "atoms", "s"),
    ("molecules", "molecules", "^"),
    ("nontrivial_molecules", "non-trivial molecules", "v"),
)


def census_figure(rows: Sequence[CensusRow], path: str | Path, title: str | None = None) -> Path:
    """Log-scale counts per day; unavailable cells are simply left out."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for attr, label, marker in SERIES:
        pts = [(r.day, getattr(r, attr)) for r in rows if getattr(r, attr)]
        if pts:
            xs, ys = zip(*pts)
            ax.plot(xs, ys, marker=marker, label=label)
    ax.set_yscale("log")
    ax.set_xlabel("born by day")
    ax.set_ylabel("count")
    ax.set_xticks([r.day for r in rows])
    ax.grid(True, which="major", alpha=0.3)
    ax.legend(frameon=False)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _levels(games: list[int], covers: list[tuple[int, int]]) -> dict[int, int]:
    below: dict[int, list[int]] = {g: [] for g in games}
    for upper, lower in covers:
        below[upper].append(lower)
    level: dict[int, int] = {}

    def height(g: int) -> int:
        if g not in level:
            level[g] = 1 + max((height(h) for h in below[g]), default=-1)
        return level[g]

    for g in games:
        height(g)
    return level


def hasse_figure(poset: DayPoset, path: str | Path, labels: bool = True) -> Path:
    games = poset.nonzero()
    covers = poset.covers()
    level = _levels(games, covers)
    rows: dict[int, list[int]] = {}
    for g in games:
        rows.setdefault(level[g], []).append(g)
    pos = {}
    for y, row in rows.items():
        for i, g in enumerate(row):
            pos[g] = (i - (len(row) - 1) / 2, y)
    width = max(4.0, 0.9 * max(len(r) for r in rows.values()))
    fig, ax = plt.subplots(figsize=(min(width, 40.0), 1.2 * len(rows) + 1))
    for upper, lower in covers:
        (x0, y0), (x1, y1) = pos[lower], pos[upper]
        ax.plot([x0, x1], [y0, y1], color="0.6", lw=0.6, zorder=1)
    xs, ys = zip(*(pos[g] for g in games))
    ax.scatter(xs, ys, s=12, color="k", zorder=2)
    if labels:
        for g in games:
            x, y = pos[g]
            ax.annotate(format_end(g, poset.store), (x, y), fontsize=6, ha="center", va="bottom",
                        xytext=(0, 3), textcoords="offset points")
    ax.set_axis_off()
    ax.set_title(f"non-zero Left dead ends born by day {poset.day}")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
