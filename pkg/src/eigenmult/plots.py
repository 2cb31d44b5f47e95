"""Figure rendering for sweep reports.

The report path can drop two PNGs next to the delimited output: the joint
distribution of multiplicity against the structural bound, and the outcome
tallies.  Rendering is deterministic for a given report.
"""

from __future__ import annotations

from collections import Counter
from pathlib import Path
from typing import List

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_STYLE = {
    "figure.figsize": (6.0, 4.2),
    "figure.dpi": 120,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "font.size": 10,
}


def render_report_figures(report, out_prefix) -> List[str]:
    """Write the report's figures with the given path prefix; returns paths."""
    prefix = Path(out_prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    written = []
    with plt.rc_context(_STYLE):
        written.append(_multiplicity_vs_bound(report, prefix))
        written.append(_outcome_bars(report, prefix))
    return [p for p in written if p]


def _multiplicity_vs_bound(report, prefix: Path) -> str:
    pairs = Counter(
        (r.bound, r.m) for r in report.records if r.bound is not None and not r.error
    )
    fig, ax = plt.subplots()
    if pairs:
        xs = [b for (b, _m) in pairs]
        ys = [m for (_b, m) in pairs]
        sizes = [12 + 28 * (pairs[k] ** 0.5) for k in pairs]
        ax.scatter(xs, ys, s=sizes, alpha=0.7, edgecolor="none", zorder=3)
        top = max(max(xs), max(ys)) + 1
        ax.plot([0, top], [0, top], lw=1, ls="--", color="tab:red", label="m = bound")
        ax.plot(
            [1, top], [0, top - 1], lw=1, ls=":", color="tab:green",
            label="m = bound - 1",
        )
        ax.legend(loc="upper left")
    ax.set_xlabel("structural bound 2c + q_s")
    ax.set_ylabel("multiplicity m")
    mode = report.parameters.get("mode")
    s = report.parameters.get("s")
    ax.set_title(f"multiplicity vs bound (mode={mode}, s={s})")
    path = str(prefix) + "_mult_vs_bound.png"
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path


def _outcome_bars(report, prefix: Path) -> str:
    summary = report.summary
    keys = ["records", "equalities", "optimals", "disagreements", "errors"]
    vals = [summary.get(k, 0) for k in keys]
    fig, ax = plt.subplots()
    colors = ["tab:blue", "tab:orange", "tab:green", "tab:red", "tab:purple"]
    bars = ax.bar(keys, vals, color=colors)
    for bar, v in zip(bars, vals):
        ax.text(
            bar.get_x() + bar.get_width() / 2, bar.get_height(), str(v),
            ha="center", va="bottom", fontsize=9,
        )
    ax.set_ylabel("count")
    ax.set_title("sweep outcomes")
    path = str(prefix) + "_outcomes.png"
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path
