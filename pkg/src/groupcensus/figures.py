"""Matplotlib renderings written next to the delimited reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .census import CensusReport  # noqa: E402
from .report import Row  # noqa: E402


def render_centralizer_sizes(report: CensusReport, path: Path, title: str) -> None:
    """Bar chart of distinct-centralizer sizes vs multiplicity."""
    sizes = [s for s, _ in report.centralizer_size_multiset]
    counts = [m for _, m in report.centralizer_size_multiset]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(range(len(sizes)), counts, color="#4878a8")
    ax.set_xticks(range(len(sizes)))
    ax.set_xticklabels([str(s) for s in sizes], rotation=45, fontsize=8)
    ax.set_xlabel("centralizer size")
    ax.set_ylabel("distinct centralizers")
    ax.set_title(
        f"{title}: |G|={report.order}, cent={report.cent_count}, "
        f"nacent={report.nacent_count}"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_status_summary(rows: list[Row], path: Path, title: str) -> None:
    """Horizontal bar of row counts per verification status."""
    counts: dict[str, int] = {}
    for r in rows:
        counts[r.status] = counts.get(r.status, 0) + 1
    labels = sorted(counts)
    colors = {
        "match": "#3a8f4e",
        "mismatch": "#b43535",
        "reinterpreted": "#c9932b",
        "inconclusive": "#888888",
    }
    fig, ax = plt.subplots(figsize=(6, 0.8 + 0.5 * len(labels)))
    ax.barh(labels, [counts[s] for s in labels],
            color=[colors.get(s, "#555555") for s in labels])
    for i, s in enumerate(labels):
        ax.text(counts[s], i, f" {counts[s]}", va="center")
    ax.set_xlabel("rows")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
