"""Deterministic ASCII renderings of shapes, strips and decompositions.

Each box of the grid shows its content, inner (removed) boxes show ``*``
and strip ownership is shown with the strip index.
"""

from __future__ import annotations

from .shapes import ShiftedSkewShape, SkewShape
from .strips import CuttingStrip, OutsideDecomposition


def _grid_text(rows: list[list[str]]) -> str:
    width = max((len(v) for row in rows for v in row if v), default=1)
    lines = []
    for row in rows:
        lines.append(" ".join((v or "").rjust(width) for v in row).rstrip())
    return "\n".join(line for line in lines if line.strip()) or "(empty)"


def render_shape(shape: SkewShape | ShiftedSkewShape) -> str:
    """Grid of contents with ``*`` marking the inner boxes."""
    if not shape.cells and not shape.inner.parts:
        return "(empty)"
    shifted = isinstance(shape, ShiftedSkewShape)
    depth = len(shape.outer)
    if depth == 0:
        return "(empty)"
    width = (depth + shape.outer.part(1) - 1) if shifted else shape.outer.part(1)
    rows = []
    for i in range(1, depth + 1):
        row = []
        for j in range(1, width + 1):
            if shifted:
                inside = i + shape.inner.part(i) <= j < i + shape.outer.part(i)
                in_inner = i <= j < i + shape.inner.part(i)
            else:
                inside = shape.inner.part(i) < j <= shape.outer.part(i)
                in_inner = 1 <= j <= shape.inner.part(i)
            if inside:
                row.append(str(j - i))
            elif in_inner:
                row.append("*")
            else:
                row.append("")
        rows.append(row)
    return _grid_text(rows)


def render_strip(strip: CuttingStrip) -> str:
    """Grid of the cutting strip's boxes labelled by content."""
    positions = strip.positions
    min_i = min(i for i, _ in positions.values())
    min_j = min(j for _, j in positions.values())
    max_i = max(i for i, _ in positions.values())
    max_j = max(j for _, j in positions.values())
    rows = [["" for _ in range(max_j - min_j + 1)] for _ in range(max_i - min_i + 1)]
    for c, (i, j) in positions.items():
        rows[i - min_i][j - min_j] = str(c)
    return _grid_text(rows)


def render_decomposition(dec: OutsideDecomposition) -> str:
    """Shape grid with each box labelled by its strip's 1-based index."""
    shape = dec.shape
    if not shape.cells:
        return "(empty)"
    owner = dec.cell_owner
    shifted = dec.shifted
    depth = len(shape.outer)
    width = (depth + shape.outer.part(1) - 1) if shifted else shape.outer.part(1)
    rows = []
    for i in range(1, depth + 1):
        row = []
        for j in range(1, width + 1):
            if (i, j) in owner:
                row.append(str(owner[(i, j)] + 1))
            elif (i, j) in shape.cells:
                row.append("?")
            else:
                if shifted:
                    in_inner = i <= j < i + shape.inner.part(i)
                else:
                    in_inner = 1 <= j <= shape.inner.part(i)
                row.append("*" if in_inner else "")
        rows.append(row)
    text = _grid_text(rows)
    nulls = [
        f"theta_{index + 1} ~ phi[{s.ref.a},{s.ref.b}] (null)"
        for index, s in enumerate(dec.strips)
        if s.ref.is_null
    ]
    legend = [
        f"theta_{index + 1} ~ phi[{s.ref.a},{s.ref.b}]"
        for index, s in enumerate(dec.strips)
        if not s.ref.is_null
    ]
    return "\n".join([text, *legend, *nulls])
