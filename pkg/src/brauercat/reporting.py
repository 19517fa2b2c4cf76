"""
File outputs for verification reports: delimited tables and figures.

CSV writers mirror the report structure exactly; figures are rendered
with the Agg backend so they work headless.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import PathPatch
from matplotlib.path import Path as MplPath

from .diagrams import BOTTOM, TOP, Diagram
from .matrices import FaithfulnessReport
from .reports import CheckReport

_PASS_COLOR = "#2a9d8f"
_FAIL_COLOR = "#e76f51"


def save_check_csv(report: CheckReport, path: str | Path) -> None:
    """One row per checked instance: group, instance, passed."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["group", "instance", "passed"])
        for r in report.results:
            writer.writerow([r.group, r.instance, "yes" if r.passed else "no"])


def save_check_figure(report: CheckReport, path: str | Path) -> None:
    """Horizontal stacked bars of pass/fail counts per group."""
    counts = report.group_counts()
    groups = list(counts)
    passed = [counts[g][0] for g in groups]
    failed = [counts[g][1] for g in groups]
    fig, ax = plt.subplots(figsize=(8, max(2.0, 0.4 * len(groups) + 1.2)))
    ypos = range(len(groups))
    ax.barh(ypos, passed, color=_PASS_COLOR, label="passed")
    ax.barh(ypos, failed, left=passed, color=_FAIL_COLOR, label="failed")
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(groups)
    ax.invert_yaxis()
    ax.set_xlabel("instances")
    ax.set_title(report.summary())
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_faithfulness_csv(rows: list[FaithfulnessReport], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["n", "p", "basis", "dimension", "rank", "injective"])
        for r in rows:
            writer.writerow([r.n, r.p, "noncrossing" if r.tl_only else "all",
                             r.dimension, r.rank, "yes" if r.injective else "no"])


def save_faithfulness_figure(rows: list[FaithfulnessReport], path: str | Path) -> None:
    """Dimension next to achieved rank, one bar pair per report row."""
    labels = [f"n={r.n} p={r.p}{' TL' if r.tl_only else ''}" for r in rows]
    dims = [r.dimension for r in rows]
    ranks = [r.rank for r in rows]
    xpos = range(len(rows))
    fig, ax = plt.subplots(figsize=(max(4.0, 1.4 * len(rows)), 4))
    ax.bar([x - 0.2 for x in xpos], dims, width=0.4, color="#577590", label="dimension")
    ax.bar([x + 0.2 for x in xpos], ranks, width=0.4, color=_PASS_COLOR, label="rank")
    ax.set_xticks(list(xpos))
    ax.set_xticklabels(labels)
    ax.set_ylabel("count")
    ax.set_title("basis dimension versus image rank")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_diagram_figure(d: Diagram, path: str | Path, title: str | None = None) -> None:
    """Dots-and-arcs picture of one diagram."""
    fig, ax = plt.subplots(figsize=(max(2.5, 0.8 * max(d.top, d.bottom, 1)), 2.5))

    def xy(v: tuple[int, int]) -> tuple[float, float]:
        row, i = v
        return float(i - 1), 1.0 if row == TOP else 0.0

    for a, b in d.pairs:
        (xa, ya), (xb, yb) = xy(a), xy(b)
        if ya == yb:
            bend = 0.25 + 0.12 * abs(xb - xa)
            ctrl = ya - bend if ya == 1.0 else ya + bend
            verts = [(xa, ya), (xa, ctrl), (xb, ctrl), (xb, yb)]
        else:
            verts = [(xa, ya), (xa, 0.5), (xb, 0.5), (xb, yb)]
        codes = [MplPath.MOVETO, MplPath.CURVE4, MplPath.CURVE4, MplPath.CURVE4]
        ax.add_patch(PathPatch(
            MplPath(verts, codes), facecolor="none", edgecolor="#264653", linewidth=1.6))

    for i in range(1, d.top + 1):
        ax.plot(i - 1, 1.0, "o", color="#264653", markersize=5)
    for j in range(1, d.bottom + 1):
        ax.plot(j - 1, 0.0, "o", color="#264653", markersize=5)
    ax.set_xlim(-0.6, max(d.top, d.bottom, 1) - 0.4)
    ax.set_ylim(-0.3, 1.3)
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
