"""Render a verification report to files: JSON, a delimited per-check
table, and a few diagnostic figures.

Output is deterministic for a given report (no timestamps, fixed layout),
so report directories can be diffed across runs.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .checks import VerificationReport
from .explore import ExplorationAtlas
from .intmat import IntMatrix

_STATUS_COLOR = {"PASS": "#2a9d4e", "FAIL": "#c93434", "SKIPPED": "#9a9a9a"}


def write_csv(report: VerificationReport, path: Path) -> None:
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["check", "status", "seeds_covered", "witness_path", "note"])
        for r in report.results:
            w.writerow([
                r.check,
                r.status,
                r.seeds_covered,
                ",".join(str(k) for k in r.witness_path) if r.witness_path else "",
                r.note or "",
            ])


def _draw_quiver(B0: IntMatrix, path: Path) -> None:
    """Directed-graph picture of the exchange matrix: vertex i points to j
    when the (i, j) entry is positive, annotated with the weight pair."""
    n = B0.rows
    fig, ax = plt.subplots(figsize=(5, 5))
    pos = [(math.cos(2 * math.pi * i / n - math.pi / 2),
            math.sin(2 * math.pi * i / n - math.pi / 2)) for i in range(n)]
    for i in range(n):
        ax.add_patch(plt.Circle(pos[i], 0.09, color="#1f6fb2", zorder=3))
        ax.annotate(str(i + 1), pos[i], color="white", ha="center", va="center",
                    zorder=4, fontsize=11)
    for i in range(n):
        for j in range(n):
            if B0[i, j] > 0:
                src, dst = pos[i], pos[j]
                dx, dy = dst[0] - src[0], dst[1] - src[1]
                d = math.hypot(dx, dy) or 1.0
                ux, uy = dx / d, dy / d
                start = (src[0] + 0.12 * ux, src[1] + 0.12 * uy)
                end = (dst[0] - 0.12 * ux, dst[1] - 0.12 * uy)
                ax.annotate("", end, start, zorder=2,
                            arrowprops={"arrowstyle": "-|>", "color": "#444444",
                                        "lw": 1.4, "shrinkA": 0, "shrinkB": 0})
                weight = (B0[i, j], -B0[j, i])
                if weight != (1, 1):
                    mid = ((start[0] + end[0]) / 2 - 0.08 * uy,
                           (start[1] + end[1]) / 2 + 0.08 * ux)
                    ax.annotate(f"({weight[0]},{weight[1]})", mid, ha="center",
                                va="center", fontsize=9, color="#444444")
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title("exchange matrix as a directed graph")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)


def _draw_layers(report: VerificationReport, path: Path) -> None:
    sizes = report.layer_sizes
    fig, ax = plt.subplots(figsize=(6, 3.2))
    ax.bar(range(len(sizes)), sizes, color="#1f6fb2")
    for i, s in enumerate(sizes):
        ax.annotate(str(s), (i, s), ha="center", va="bottom", fontsize=9)
    ax.set_xlabel("mutation distance from origin")
    ax.set_ylabel("new labeled seeds")
    state = "closed" if report.closed else "truncated"
    ax.set_title(f"search growth ({state}, {report.seed_count} seeds)")
    ax.set_xticks(range(len(sizes)))
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)


def _draw_checks(report: VerificationReport, path: Path) -> None:
    names = [r.check for r in report.results]
    colors = [_STATUS_COLOR[r.status] for r in report.results]
    fig, ax = plt.subplots(figsize=(6, 0.45 * len(names) + 1.2))
    y = range(len(names) - 1, -1, -1)
    ax.barh(list(y), [1] * len(names), color=colors)
    for yi, r in zip(y, report.results):
        ax.annotate(f"{r.check}: {r.status}", (0.02, yi), va="center",
                    fontsize=9, color="white")
    ax.set_xlim(0, 1)
    ax.axis("off")
    verdict = "all checks passed" if report.passed else f"{report.failures} check(s) failed"
    ax.set_title(verdict)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)


def _draw_distinct(report: VerificationReport, atlas: ExplorationAtlas, path: Path) -> None:
    """Seeds against the number of distinct C-matrices, G-matrices and
    cluster variables; equal bars for C and G is the injectivity picture."""
    cs = {json.dumps(e.c.to_lists()) for e in atlas.entries}
    gs = {json.dumps(e.g.to_lists()) for e in atlas.entries}
    labels = ["labeled seeds", "distinct C", "distinct G", "distinct variables"]
    values = [len(atlas), len(cs), len(gs), report.variable_count]
    fig, ax = plt.subplots(figsize=(6, 3.2))
    ax.bar(labels, values, color=["#444444", "#1f6fb2", "#2a9d4e", "#b57614"])
    for i, v in enumerate(values):
        ax.annotate(str(v), (i, v), ha="center", va="bottom", fontsize=10)
    ax.set_title("how much each matrix family separates seeds")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)


def write_report(report: VerificationReport, outdir: str | Path,
                 atlas: ExplorationAtlas | None = None) -> list[Path]:
    """Write report.json, report.csv and figures/ under ``outdir``."""
    out = Path(outdir)
    figdir = out / "figures"
    figdir.mkdir(parents=True, exist_ok=True)

    written = [out / "report.json"]
    written[0].write_text(report.to_json(indent=2) + "\n")
    write_csv(report, out / "report.csv")
    written.append(out / "report.csv")

    B0 = IntMatrix(report.instance["B0"])
    _draw_quiver(B0, figdir / "exchange_quiver.png")
    written.append(figdir / "exchange_quiver.png")
    _draw_layers(report, figdir / "layer_growth.png")
    written.append(figdir / "layer_growth.png")
    _draw_checks(report, figdir / "check_status.png")
    written.append(figdir / "check_status.png")
    if atlas is not None:
        _draw_distinct(report, atlas, figdir / "distinct_counts.png")
        written.append(figdir / "distinct_counts.png")
    return written
