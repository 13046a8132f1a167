"""Optional matplotlib rendering of convergence tables."""

from __future__ import annotations

import math

from .degeneration import ConvergenceTable


def save_convergence_plot(table: ConvergenceTable, path: str) -> None:
    """Log-log decay plot of every deviation column, one line per
    observable, written as a PNG."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    series: dict[str, tuple[list[float], list[float]]] = {}
    for row in table.rows:
        xs, ys = series.setdefault(row.observable, ([], []))
        xs.append(row.driver)
        ys.append(row.deviation if row.deviation > 0.0 else math.nan)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for name, (xs, ys) in series.items():
        ax.plot(xs, ys, marker="o", label=name)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("driver")
    ax.set_ylabel("deviation from limit")
    ax.set_title(table.case_tag)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
