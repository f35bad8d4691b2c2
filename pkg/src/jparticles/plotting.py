"""Figures written next to the CLI reports."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .chart import CorpusReport  # noqa: E402
from .cooc import CoocMatrix, ReconciliationReport  # noqa: E402


def plot_reconciliation(empirical: CoocMatrix, derived: CoocMatrix,
                        report: ReconciliationReport, path) -> Path:
    """Heatmap of counts; dots mark licensed pairs, crosses attested-unlicensed."""
    path = Path(path)
    counts = empirical.cells.astype(float)
    fig, ax = plt.subplots(figsize=(8, 7))
    im = ax.imshow(np.log10(counts + 1), cmap="Blues", aspect="auto")
    cbar = fig.colorbar(im, ax=ax, shrink=0.8)
    cbar.set_label("log10(count + 1)")

    for i, left in enumerate(empirical.rows):
        for j, right in enumerate(empirical.columns):
            n = int(counts[i, j])
            if n:
                color = "white" if counts[i, j] > 100 else "black"
                ax.text(j, i + 0.28, str(n), ha="center", va="center", fontsize=6, color=color)
            if derived[left, right]:
                ax.plot(j, i - 0.15, "o", ms=4, mfc="none", mec="tab:green")
    for left, right, _ in report.attested_unlicensed:
        ax.plot(empirical.columns.index(right), empirical.rows.index(left), "x",
                ms=10, mew=2, color="tab:red")

    ax.set_xticks(range(len(empirical.columns)), empirical.columns, rotation=45)
    ax.set_yticks(range(len(empirical.rows)), empirical.rows)
    ax.set_xlabel("right particle")
    ax.set_ylabel("left particle")
    ax.set_title(f"Particle pairs: licensed (o) vs attested; x = unlicensed, count >= {report.threshold}",
                 fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_corpus(report: CorpusReport, path) -> Path:
    path = Path(path)
    lines = report.checked
    labels = [("* " if not ln.item.grammatical else "") + " ".join(ln.item.tokens) for ln in lines]
    values = [ln.analyses for ln in lines]
    colors = ["tab:green" if ln.passed else "tab:red" for ln in lines]

    fig, ax = plt.subplots(figsize=(9, 0.35 * max(len(lines), 1) + 1.2))
    ax.barh(range(len(lines)), values, color=colors)
    ax.set_yticks(range(len(lines)), labels, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("number of analyses")
    ax.set_title(f"Corpus: {report.passed}/{report.total} expectations met", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
