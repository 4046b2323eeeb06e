"""Figure rendering for geography scans.

Consumes the cells the scanner produces and writes a static figure next to
the CSV; the CSV stays the machine-readable boundary.
"""

from __future__ import annotations

from typing import List, Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .geography import GeographyCell


def render_geography(cells: List[GeographyCell], path: str, title: Optional[str] = None) -> str:
    """Render a scan as a heatmap of the minimal admissible n.

    Cells without a min_n (second Segre number <= 0) are left blank.  Guide
    lines mark c1^2 = c2 (where no n ever works) and c1^2 = 3 c2 (the
    Bogomolov-Miyaoka-Yau bound).  Returns ``path``.
    """
    if not cells:
        raise ValueError("nothing to plot: no cells")
    c1_values = sorted({cell.c1_sq for cell in cells})
    c2_values = sorted({cell.c2 for cell in cells})
    c1_index = {v: i for i, v in enumerate(c1_values)}
    c2_index = {v: i for i, v in enumerate(c2_values)}

    grid = np.full((len(c1_values), len(c2_values)), np.nan)
    for cell in cells:
        if cell.min_n is not None:
            grid[c1_index[cell.c1_sq], c2_index[cell.c2]] = cell.min_n

    fig, ax = plt.subplots(figsize=(7.0, 5.5))
    mesh = ax.pcolormesh(
        np.asarray(c2_values, dtype=float),
        np.asarray(c1_values, dtype=float),
        np.ma.masked_invalid(grid),
        shading="nearest",
        cmap="viridis",
    )
    fig.colorbar(mesh, ax=ax, label="minimal generically-finite n")

    c2_lo, c2_hi = min(c2_values), max(c2_values)
    span = np.asarray([c2_lo, c2_hi], dtype=float)
    ax.plot(span, span, color="crimson", linewidth=1.0, label=r"$c_1^2 = c_2$")
    ax.plot(span, 3.0 * span, color="black", linewidth=1.0, linestyle="--", label=r"$c_1^2 = 3c_2$")

    ax.set_xlim(c2_lo - 0.5, c2_hi + 0.5)
    ax.set_ylim(min(c1_values) - 0.5, max(c1_values) + 0.5)
    ax.set_xlabel(r"$c_2$ (topological Euler number)")
    ax.set_ylabel(r"$c_1^2$ (canonical self-intersection)")
    ax.set_title(title or "Surface geography: minimal admissible symmetric power")
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
