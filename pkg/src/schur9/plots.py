"""Matplotlib figure rendering for shapes, decompositions and lattice paths.

Figures are written to files next to the delimited report output; all
drawing uses the non-interactive Agg backend.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
from matplotlib.patches import Rectangle

from .shapes import ShiftedSkewShape
from .strips import OutsideDecomposition

STRIP_COLORS = ["#4878cf", "#d65f5f", "#6acc65", "#b47cc7", "#c4ad66", "#77bedb",
                "#ee854a", "#82c6e2"]


def _draw_cells(ax, cells, contents=True, face="#f0f0f0", edge="#404040"):
    for (i, j) in cells:
        ax.add_patch(Rectangle((j - 1, -i), 1, 1, facecolor=face, edgecolor=edge))
        if contents:
            ax.text(j - 0.5, -i + 0.5, str(j - i), ha="center", va="center", fontsize=9)


def _finish(ax, title):
    ax.set_aspect("equal")
    ax.autoscale_view()
    ax.set_axis_off()
    ax.set_title(title)


def plot_shape(shape, path: str | Path, title: str | None = None) -> Path:
    """Content diagram of a (shifted) skew shape; inner boxes shaded."""
    fig, ax = plt.subplots(figsize=(6, 4))
    shifted = isinstance(shape, ShiftedSkewShape)
    inner_cells = []
    for i in range(1, len(shape.outer) + 1):
        lo = i if shifted else 1
        hi = (i + shape.inner.part(i)) if shifted else (shape.inner.part(i) + 1)
        inner_cells.extend((i, j) for j in range(lo, hi))
    for (i, j) in inner_cells:
        ax.add_patch(Rectangle((j - 1, -i), 1, 1, facecolor="#d9d9d9", edgecolor="#808080"))
        ax.text(j - 0.5, -i + 0.5, "*", ha="center", va="center", color="#606060")
    _draw_cells(ax, sorted(shape.cells))
    _finish(ax, title or f"{shape.outer}/{shape.inner}")
    path = Path(path)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_strip(strip, path: str | Path, title: str | None = None) -> Path:
    """The cutting strip drawn with one box per content."""
    fig, ax = plt.subplots(figsize=(6, 4))
    positions = strip.positions
    min_i = min(i for i, _ in positions.values())
    for c, (i, j) in positions.items():
        row, col = i - min_i + 1, j + 1
        ax.add_patch(Rectangle((col - 1, -row), 1, 1, facecolor="#eef3fb", edgecolor="#404040"))
        ax.text(col - 0.5, -row + 0.5, str(c), ha="center", va="center", fontsize=9)
    _finish(ax, title or strip.spec_string())
    path = Path(path)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_decomposition(dec: OutsideDecomposition, path: str | Path,
                       title: str | None = None) -> Path:
    """The shape with each strip colored and labelled by index."""
    fig, ax = plt.subplots(figsize=(6, 4))
    shape = dec.shape
    shifted = dec.shifted
    for i in range(1, len(shape.outer) + 1):
        lo = i if shifted else 1
        hi = (i + shape.inner.part(i)) if shifted else (shape.inner.part(i) + 1)
        for j in range(lo, hi):
            ax.add_patch(Rectangle((j - 1, -i), 1, 1, facecolor="#d9d9d9", edgecolor="#808080"))
    for index, strip in enumerate(dec.strips):
        color = STRIP_COLORS[index % len(STRIP_COLORS)]
        for (i, j) in strip.cells:
            ax.add_patch(Rectangle((j - 1, -i), 1, 1, facecolor=color, edgecolor="#303030", alpha=0.75))
            ax.text(j - 0.5, -i + 0.5, str(index + 1), ha="center", va="center", fontsize=9)
    nulls = ", ".join(
        f"{i + 1}:phi[{s.ref.a},{s.ref.b}]" for i, s in enumerate(dec.strips) if s.ref.is_null
    )
    _finish(ax, (title or f"decomposition of {shape}") + (f"  (null {nulls})" if nulls else ""))
    path = Path(path)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_paths(pt, path: str | Path, title: str | None = None) -> Path:
    """The lattice with the path tuple overlaid; contents increase rightward."""
    fig, ax = plt.subplots(figsize=(7, 5))
    lattice = pt.lattice
    n = lattice.n
    c_lo = (lattice.strip.c_min - 1) if not lattice.shifted else -1
    c_hi = lattice.strip.c_max
    for k in range(0, n + 2):
        for c in range(c_lo, c_hi + 1):
            ax.plot([c], [-k], marker=".", color="#b0b0b0", markersize=3)
    for index, p in enumerate(pt.paths):
        color = STRIP_COLORS[index % len(STRIP_COLORS)]
        xs = [pt_[1] for pt_ in p.points]
        ys = [-pt_[0] for pt_ in p.points]
        ax.plot(xs, ys, color=color, linewidth=2, marker="o", markersize=3,
                label=f"path {index + 1}")
        ax.annotate(f"P{index + 1}", (xs[0], ys[0]), textcoords="offset points",
                    xytext=(-10, 0), color=color)
        ax.annotate(f"Q{index + 1}", (xs[-1], ys[-1]), textcoords="offset points",
                    xytext=(6, 0), color=color)
    ax.set_yticks([-k for k in range(0, n + 2)])
    ax.set_yticklabels([str(k) for k in range(0, n + 2)])
    ax.set_xticks(list(range(c_lo, c_hi + 1)))
    ax.set_xlabel("content")
    ax.set_ylabel("level")
    ax.legend(loc="upper left", fontsize=8)
    ax.set_title(title or "lattice paths")
    path = Path(path)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_report_figures(report, shape, dec, out_dir: str | Path, stem: str) -> list[Path]:
    """The standard figure set accompanying one verification report."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    if shape is not None and shape.cells:
        written.append(plot_shape(shape, out_dir / f"{stem}_shape.png"))
    if dec is not None:
        written.append(plot_strip(dec.strip, out_dir / f"{stem}_strip.png"))
        written.append(plot_decomposition(dec, out_dir / f"{stem}_decomposition.png"))
    return written
