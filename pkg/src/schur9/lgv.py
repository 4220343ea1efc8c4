"""Lattice path model: the tableau <-> non-intersecting paths bijection.

The lattice has points ``(level k, content c)`` with k in 0..n+1.  An entry in
a box of content ``c`` becomes a horizontal or diagonal edge ending at
``(k, c)``; paths are completed by vertical runs whose direction in column
``c`` is fixed by how the cutting strip's box of content ``c + 1`` is
approached.  In the shifted model every content step carries both a
horizontal and a diagonal edge (primed and unprimed entries), and curved
edges from ``c = -1`` to ``c = 0`` accommodate the diagonal boxes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .strips import EAST, NORTH, CuttingStrip, OutsideDecomposition, Strip
from .tableaux import PrimedTableau, Tableau
from .weights import WeightPolynomial, monomial, posvar, xlevel, xvar, yvar

Point = tuple[int, int]  # (level, content)

# edge styles
HORIZONTAL = "H"
DIAGONAL = "D"
CURVE_UP = "CU"
CURVE_DOWN = "CD"

DOWN = "down"
UP = "up"


class ShapeMismatch(ValueError):
    """Tableau and decomposition do not live on the same shape."""


@dataclass(frozen=True)
class Lattice:
    n: int
    strip: CuttingStrip
    shifted: bool

    def edge_style(self, c: int) -> str:
        """Unshifted approach into content c: horizontal or diagonal."""
        if c == self.strip.c_min:
            return DIAGONAL  # the lowest-content column is approached diagonally
        return HORIZONTAL if self.strip.direction(c) == EAST else DIAGONAL

    def vertical_direction(self, c: int) -> str:
        """Direction of the vertical edges in column c."""
        if c >= self.strip.c_max:
            return DOWN
        if c < self.strip.c_min:
            return UP
        return DOWN if self.strip.direction(c + 1) == EAST else UP


def build_lattice(phi: CuttingStrip, n: int, shifted: bool) -> Lattice:
    return Lattice(n, phi, shifted)


@dataclass(frozen=True)
class LatticePath:
    strip_index: int
    start: Point
    end: Point
    points: tuple[Point, ...]
    edges: tuple[tuple[int, int, str], ...]  # (content, level, style)
    valid: bool


@dataclass(frozen=True)
class PathTuple:
    lattice: Lattice
    decomposition: OutsideDecomposition
    paths: tuple[LatticePath, ...]

    @property
    def valid(self) -> bool:
        return all(p.valid for p in self.paths)


@dataclass(frozen=True)
class WeightMode:
    kind: str  # "first" | "ninth" | "tenth"


FIRST = WeightMode("first")
NINTH = WeightMode("ninth")
TENTH = WeightMode("tenth")


def _entry_level(entry) -> tuple[int, bool]:
    if isinstance(entry, tuple):
        return entry
    return entry, False


def _edge_geometry(lattice: Lattice, c: int, k: int, primed: bool) -> tuple[int, str]:
    """Start level and style of the weighted edge ending at (k, c)."""
    phi = lattice.strip
    if lattice.shifted and c == 0:
        return k, CURVE_DOWN if primed else CURVE_UP
    if not lattice.shifted:
        if lattice.edge_style(c) == HORIZONTAL:
            return k, HORIZONTAL
        return k + 1, DIAGONAL
    direction = phi.direction(c)
    if direction == EAST:
        return (k - 1, DIAGONAL) if primed else (k, HORIZONTAL)
    return (k, HORIZONTAL) if primed else (k + 1, DIAGONAL)


def _strip_path(lattice: Lattice, strip: Strip, index: int,
                entries: dict) -> LatticePath:
    phi = lattice.strip
    n = lattice.n
    a, b = strip.ref.a, strip.ref.b
    cells = strip.cells
    levels = {}
    for cell in cells:
        k, primed = _entry_level(entries[cell])
        levels[cell[1] - cell[0]] = (k, primed)

    valid = True
    points: list[Point] = []
    edges: list[tuple[int, int, str]] = []

    def run_to(level: int, column: int) -> None:
        nonlocal valid
        current = points[-1][0]
        if level != current:
            direction = lattice.vertical_direction(column)
            if (level > current) != (direction == DOWN):
                valid = False
            step = 1 if level > current else -1
            for mid in range(current + step, level + step, step):
                points.append((mid, column))

    diagonal_start = lattice.shifted and a == 0
    if diagonal_start:
        start = (levels[0][0], -1)
    else:
        enters_below = (not lattice.shifted and a == phi.c_min) or phi.direction(a) == NORTH
        start = (n + 1, a - 1) if enters_below else (0, a - 1)
    points.append(start)
    for c in range(a, b + 1):
        k, primed = levels[c]
        start_level, style = _edge_geometry(lattice, c, k, primed)
        if style in (CURVE_UP, CURVE_DOWN):
            pass  # the curved edge leaves directly from the start point
        else:
            run_to(start_level, c - 1)
        points.append((k, c))
        edges.append((c, k, style))
    leaves_up = b < phi.c_max and phi.direction(b + 1) == NORTH
    end = (0, b) if leaves_up else (n + 1, b)
    run_to(end[0], b)
    return LatticePath(index, start, end, tuple(points), tuple(edges), valid)


def tableau_to_paths(tableau: Tableau | PrimedTableau, dec: OutsideDecomposition,
                     n: int | None = None) -> PathTuple:
    """Map a (possibly non-semistandard) filling to its tuple of paths."""
    if tableau.shape.cells != dec.shape.cells:
        raise ShapeMismatch("tableau shape does not match the decomposition")
    shifted = isinstance(tableau, PrimedTableau)
    lattice = build_lattice(dec.strip, n if n is not None else _alphabet_size(tableau), shifted)
    entries = dict(tableau.entries)
    paths = [
        _strip_path(lattice, strip, index, entries)
        for index, strip in enumerate(dec.strips)
        if strip.cells
    ]
    return PathTuple(lattice, dec, tuple(paths))


def _alphabet_size(tableau) -> int:
    best = 0
    for _, entry in tableau.entries:
        k, _ = _entry_level(entry)
        best = max(best, k)
    return best


def paths_to_tableau(pt: PathTuple, dec: OutsideDecomposition):
    """Invert the path map; requires a path per cell-bearing strip."""
    cell_strips = [s for s in dec.strips if s.cells]
    if len(cell_strips) != len(pt.paths):
        raise ShapeMismatch("path tuple does not match the decomposition")
    shifted = dec.shifted
    phi = dec.strip
    entries = {}
    for strip, path in zip(cell_strips, pt.paths):
        by_content = {cell[1] - cell[0]: cell for cell in strip.cells}
        if sorted(by_content) != [c for c, _, _ in path.edges]:
            raise ShapeMismatch("path contents do not match the strip")
        for c, k, style in path.edges:
            if not shifted:
                entries[by_content[c]] = k
            else:
                if style == CURVE_UP:
                    primed = False
                elif style == CURVE_DOWN:
                    primed = True
                elif phi.direction(c) == EAST:
                    primed = style == DIAGONAL
                else:
                    primed = style == HORIZONTAL
                entries[by_content[c]] = (k, primed)
    ordered = tuple(sorted(entries.items()))
    if shifted:
        return PrimedTableau(dec.shape, ordered)
    return Tableau(dec.shape, ordered)


def is_nonintersecting(pt: PathTuple) -> bool:
    """True iff no two paths share a lattice point."""
    seen: set[Point] = set()
    for path in pt.paths:
        points = set(path.points)
        if points & seen:
            return False
        seen |= points
    return True


def _translate_cell(strip: Strip, phi: CuttingStrip, c: int):
    """Cell position of content c on the strip's translate of phi."""
    anchor = strip.anchor
    base = phi.positions[strip.ref.a]
    pos = phi.positions[c]
    return anchor[0] + pos[0] - base[0], anchor[1] + pos[1] - base[1]


def path_weight(pt: PathTuple, mode: WeightMode) -> WeightPolynomial:
    """Product of the edge weights of the whole tuple under the mode."""
    atoms = []
    cell_strips = [s for s in pt.decomposition.strips if s.cells]
    for path, strip in zip(pt.paths, cell_strips):
        for c, k, style in path.edges:
            primed = style == CURVE_DOWN or (
                pt.lattice.shifted
                and style != CURVE_UP
                and (
                    (pt.lattice.strip.direction(c) == EAST and style == DIAGONAL)
                    or (pt.lattice.strip.direction(c) == NORTH and style == HORIZONTAL)
                )
            )
            if mode.kind == "first":
                atoms.append(xlevel(k))
            elif mode.kind == "ninth":
                atoms.append(yvar(k, c) if primed else xvar(k, c))
            else:
                i, j = _translate_cell(strip, pt.lattice.strip, c)
                atoms.append(posvar(k, i, j))
    return monomial(atoms)


def lgv_swap(pt: PathTuple) -> PathTuple | None:
    """Swap tails at the lowest rightmost intersection of some pair.

    Returns None when the tuple is non-intersecting.
    """
    best: tuple[Point, int, int] | None = None
    for i in range(len(pt.paths)):
        for j in range(i + 1, len(pt.paths)):
            shared = set(pt.paths[i].points) & set(pt.paths[j].points)
            for point in shared:
                key = (point[1], point[0])  # rightmost, then lowest
                if best is None or key > (best[0][1], best[0][0]):
                    best = (point, i, j)
    if best is None:
        return None
    point, i, j = best
    path_i, path_j = pt.paths[i], pt.paths[j]
    cut_i = path_i.points.index(point)
    cut_j = path_j.points.index(point)
    new_i_points = path_i.points[:cut_i] + path_j.points[cut_j:]
    new_j_points = path_j.points[:cut_j] + path_i.points[cut_i:]
    new_i_edges = tuple(e for e in path_i.edges if e[0] <= point[1]) + tuple(
        e for e in path_j.edges if e[0] > point[1]
    )
    new_j_edges = tuple(e for e in path_j.edges if e[0] <= point[1]) + tuple(
        e for e in path_i.edges if e[0] > point[1]
    )
    paths = list(pt.paths)
    paths[i] = LatticePath(path_i.strip_index, path_i.start, path_j.end,
                           new_i_points, new_i_edges, path_i.valid)
    paths[j] = LatticePath(path_j.strip_index, path_j.start, path_i.end,
                           new_j_points, new_j_edges, path_j.valid)
    return PathTuple(pt.lattice, pt.decomposition, tuple(paths))


def enumerate_fillings(shape, n: int, shifted: bool) -> Iterable:
    """Every filling of the shape (no tableau constraints), for oracles."""
    cells = sorted(shape.cells)
    if shifted:
        alphabet = [((e + 1) // 2, e % 2 == 1) for e in range(1, 2 * n + 1)]
    else:
        alphabet = list(range(1, n + 1))
    def rec(pos, acc):
        if pos == len(cells):
            if shifted:
                yield PrimedTableau(shape, tuple(zip(cells, acc)))
            else:
                yield Tableau(shape, tuple(zip(cells, acc)))
            return
        for value in alphabet:
            yield from rec(pos + 1, acc + [value])
    yield from rec(0, [])


def dot_export(pt: PathTuple) -> str:
    """A DOT digraph of the path tuple for visual inspection."""
    lines = ["digraph lattice {", "  rankdir=LR;"]
    for index, path in enumerate(pt.paths):
        for a, b in zip(path.points, path.points[1:]):
            lines.append(
                f'  "k{a[0]}c{a[1]}" -> "k{b[0]}c{b[1]}" [label="p{index + 1}"];'
            )
    lines.append("}")
    return "\n".join(lines)
