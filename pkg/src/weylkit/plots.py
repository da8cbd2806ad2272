"""Figure rendering for verification reports.

Uses the non-interactive matplotlib backend; every figure goes straight to
a file next to the delimited report output.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def ratio_figure(trials, path: str, title: str = "empirical inequality ratios") -> None:
    """Scatter of per-trial ratios grouped by grid size, with per-grid maxima.

    Accepts trial dictionaries (grid_n / trial / ratio keys) or objects with
    the same attributes.
    """

    def get(t, key):
        return t[key] if isinstance(t, dict) else getattr(t, key)

    grids = sorted({get(t, "grid_n") for t in trials})
    fig, ax = plt.subplots(figsize=(6, 4))
    for i, n in enumerate(grids):
        ratios = [get(t, "ratio") for t in trials if get(t, "grid_n") == n]
        xs = [i + 0.0] * len(ratios)
        ax.plot(xs, ratios, "o", alpha=0.5, label=f"N={n}")
        ax.plot([i - 0.2, i + 0.2], [max(ratios)] * 2, "k-", linewidth=2)
    ax.set_xticks(range(len(grids)))
    ax.set_xticklabels([f"N={n}" for n in grids])
    ax.set_ylabel("LHS / RHS")
    ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
