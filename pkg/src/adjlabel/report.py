"""Figures for the stats and bounds reports (rendered off-screen to files)."""

from __future__ import annotations

from collections import Counter
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .combinat import lower_bound  # noqa: E402
from .schemes import SchemeError, SchemeParams, params_for  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "legend.frameon": False,
    "figure.figsize": (6.0, 3.6),
}


def plot_label_contents(contents: Sequence[int], params: SchemeParams, path: str) -> None:
    """Histogram of used bits per label, against L and the indexing lower bound."""
    counts = Counter(contents)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        xs = sorted(counts)
        ax.bar(xs, [counts[x] for x in xs], width=0.8, color="0.55", label="labels")
        ax.axvline(params.L, color="C3", lw=1.2, label=f"L = {params.L}")
        lb = lower_bound(params.family, params.n, indexing=True)
        ax.axvline(lb, color="C0", lw=1.2, ls="--", label=f"lower bound = {lb}")
        ax.set_xlabel("bits before padding")
        ax.set_ylabel("vertices")
        ax.set_title(f"{params.family}, n={params.n}, {params.mode}")
        ax.legend(loc="upper left")
        fig.tight_layout()
        fig.savefig(path, dpi=120)
        plt.close(fig)


def length_table(family: str, ns: Sequence[int]) -> list[dict[str, int | None]]:
    rows = []
    for n in ns:
        row: dict[str, int | None] = {"n": n, "lower_bound": lower_bound(family, n, indexing=True)}
        for mode in ("standard", "tight", "naive"):
            try:
                row[mode] = params_for(family, n, mode).L
            except SchemeError:
                row[mode] = None
        rows.append(row)
    return rows


def plot_length_gaps(family: str, rows: list[dict[str, int | None]], path: str) -> None:
    """Label length minus the indexing lower bound, per mode, over n."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        for mode, marker in (("standard", "o"), ("tight", "s"), ("naive", "^")):
            pts = [(r["n"], r[mode] - r["lower_bound"]) for r in rows if r[mode] is not None]
            if pts:
                ax.plot(*zip(*pts), marker=marker, ms=3, lw=1, label=mode)
        ax.set_xlabel("n")
        ax.set_ylabel("L - lower bound (bits)")
        ax.set_title(family)
        ax.legend()
        fig.tight_layout()
        fig.savefig(path, dpi=120)
        plt.close(fig)
