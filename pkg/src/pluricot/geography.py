"""Lattice scans of the (c1^2, c2) plane.

Each integer point gets admissibility flags (Noether divisibility, the
Bogomolov-Miyaoka-Yau bound c1^2 <= 3 c2, the Noether line c1^2 >= 2chi - 6)
and, when the second Segre number is positive, the smallest n for which the
quadratic finiteness criterion holds (period m = 1, since no global-generation
period is attached to a bare lattice point).  Flags are advisory: no flag
filters output rows, because boundary behaviour is exactly what one scans
for.  A scanned point is not an existence claim; nothing here decides whether
a surface with those Chern numbers exists, let alone one with strongly
semi-ample cotangent bundle.

Output is a deterministic CSV (library boundary; rendering lives elsewhere):

    c1_sq,c2,noether_ok,bmy_ok,segre_positive,u_num,u_den,min_n

with booleans as 0/1, u = c1^2/c2 as an exact reduced fraction pair (empty
when c2 <= 0), min_n empty when absent, LF line endings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .chern import SurfaceInvariants
from .criteria import corollary_c_threshold
from .errors import ResourceLimitError

CSV_HEADER = "c1_sq,c2,noether_ok,bmy_ok,segre_positive,u_num,u_den,min_n"

#: Default ceiling on the number of scanned cells.
DEFAULT_MAX_CELLS = 10_000_000


@dataclass(frozen=True)
class GeographyCell:
    """Classification of a single lattice point of the Chern plane."""

    c1_sq: int
    c2: int
    noether_ok: bool
    bmy_ok: bool
    noether_line_ok: bool
    segre_positive: bool
    min_n: Optional[int]
    u: Optional[Fraction]


def classify_point(c1_sq: int, c2: int) -> GeographyCell:
    """Flags and minimal admissible n for one lattice point.

    min_n is present exactly when c1_sq - c2 > 0; it is computed with
    period m = 1 and is always >= 3.
    """
    surface = SurfaceInvariants(c1_sq=c1_sq, c2=c2)
    segre_positive = surface.segre > 0
    min_n = corollary_c_threshold(surface, m=1).min_n if segre_positive else None
    return GeographyCell(
        c1_sq=c1_sq,
        c2=c2,
        noether_ok=surface.noether_ok,
        bmy_ok=c1_sq <= 3 * c2,
        # c1^2 >= 2 chi(O) - 6 with chi(O) = (c1^2+c2)/12, cleared of denominators.
        noether_line_ok=5 * c1_sq >= c2 - 36,
        segre_positive=segre_positive,
        min_n=min_n,
        u=Fraction(c1_sq, c2) if c2 > 0 else None,
    )


def scan(
    c1_sq_range: Tuple[int, int],
    c2_range: Tuple[int, int],
    max_cells: int = DEFAULT_MAX_CELLS,
) -> List[GeographyCell]:
    """Classify every lattice point of a rectangle, in row-major order.

    Ranges are inclusive.  Rows run over ascending c1_sq, columns over
    ascending c2, so output order is a pure function of the ranges.  Raises
    :class:`ResourceLimitError` when the rectangle exceeds ``max_cells``.
    """
    c1_lo, c1_hi = c1_sq_range
    c2_lo, c2_hi = c2_range
    if c1_lo > c1_hi or c2_lo > c2_hi:
        raise ValueError(
            f"empty scan range: c1_sq in [{c1_lo}, {c1_hi}], c2 in [{c2_lo}, {c2_hi}]"
        )
    cells = (c1_hi - c1_lo + 1) * (c2_hi - c2_lo + 1)
    if cells > max_cells:
        raise ResourceLimitError(f"scan of {cells} cells exceeds the limit of {max_cells}")
    return [
        classify_point(c1, c2)
        for c1 in range(c1_lo, c1_hi + 1)
        for c2 in range(c2_lo, c2_hi + 1)
    ]


def _csv_row(cell: GeographyCell) -> str:
    u_num = str(cell.u.numerator) if cell.u is not None else ""
    u_den = str(cell.u.denominator) if cell.u is not None else ""
    min_n = str(cell.min_n) if cell.min_n is not None else ""
    return ",".join(
        (
            str(cell.c1_sq),
            str(cell.c2),
            "1" if cell.noether_ok else "0",
            "1" if cell.bmy_ok else "0",
            "1" if cell.segre_positive else "0",
            u_num,
            u_den,
            min_n,
        )
    )


def to_csv(cells: List[GeographyCell]) -> str:
    """Render cells to the CSV schema; byte-identical across runs."""
    lines = [CSV_HEADER]
    lines.extend(_csv_row(cell) for cell in cells)
    return "\n".join(lines) + "\n"


def write_csv(cells: List[GeographyCell], path: str) -> int:
    """Write the CSV to ``path`` with LF endings; returns the row count."""
    with open(path, "w", encoding="ascii", newline="") as handle:
        handle.write(to_csv(cells))
    return len(cells)
