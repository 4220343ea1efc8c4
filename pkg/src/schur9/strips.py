"""Cutting strips, outside decompositions, the # operation and realizations.

A cutting strip is stored as a direction profile: for every content ``c`` in
``(c_min, c_max]`` the box of content ``c`` sits either East (right) or North
(above) of the box of content ``c - 1``.  The first box is by convention
approached diagonally.  Everything else (cells, translates, strips, realized
skew shapes) is derived from the profile.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .shapes import (
    Cell,
    ContainmentError,
    Partition,
    ShiftedSkewShape,
    StrictPartition,
    frobenius,
    shape_from_cells,
)

EAST = "E"
NORTH = "N"


class ProfileMismatch(ValueError):
    """The cutting strip does not cover the shape's content range."""


class UndefinedShift(ValueError):
    """Shift parameter requested for an empty or null strip combination."""


@dataclass(frozen=True)
class CuttingStrip:
    """Direction profile of a strip with one box per content in [c_min, c_max]."""

    c_min: int
    c_max: int
    profile: tuple[str, ...]  # directions for contents c_min+1 .. c_max

    def __post_init__(self) -> None:
        if self.c_max < self.c_min:
            raise ValueError("cutting strip must contain at least one box")
        if len(self.profile) != self.c_max - self.c_min:
            raise ValueError("profile length must equal c_max - c_min")
        if any(d not in (EAST, NORTH) for d in self.profile):
            raise ValueError("profile entries must be 'E' or 'N'")

    def direction(self, c: int) -> str:
        """Approach direction of the box of content ``c`` (c_min is diagonal)."""
        if not self.c_min < c <= self.c_max:
            raise KeyError(f"content {c} outside profile range")
        return self.profile[c - self.c_min - 1]

    @cached_property
    def positions(self) -> dict[int, Cell]:
        """Relative box positions, box of content c_min at (0, 0)."""
        pos = {self.c_min: (0, 0)}
        i, j = 0, 0
        for c in range(self.c_min + 1, self.c_max + 1):
            if self.direction(c) == EAST:
                j += 1
            else:
                i -= 1
            pos[c] = (i, j)
        return pos

    def spec_string(self) -> str:
        return f"profile:{self.c_min}:{''.join(self.profile)}"


@dataclass(frozen=True)
class StripRef:
    """An interval phi_{a,b} of a cutting strip.

    ``a == b + 1`` denotes a null strip (a single edge), ``a > b + 1`` the
    empty combination.
    """

    strip: CuttingStrip
    a: int
    b: int

    @property
    def is_null(self) -> bool:
        return self.a == self.b + 1

    @property
    def is_empty(self) -> bool:
        return self.a > self.b + 1

    @property
    def n_rows(self) -> int:
        """Number of rows of the strip shape (north steps + 1)."""
        if self.is_null or self.is_empty:
            raise UndefinedShift(f"phi[{self.a},{self.b}] has no rows")
        return 1 + sum(
            1 for c in range(self.a + 1, self.b + 1) if self.strip.direction(c) == NORTH
        )

    def interval_str(self) -> str:
        return f"phi[{self.a},{self.b}]"


@dataclass(frozen=True)
class Strip:
    """A constituent strip of an outside decomposition."""

    ref: StripRef
    cells: tuple[Cell, ...]  # ordered by content; empty for null strips
    anchor: Cell | None  # cell of content a (None for null strips)

    @property
    def diag_row(self) -> int | None:
        """Row of the content-0 cell, when the strip crosses the diagonal."""
        for i, j in self.cells:
            if i == j:
                return i
        return None


@dataclass(frozen=True)
class OutsideDecomposition:
    shape: object  # SkewShape | ShiftedSkewShape
    strip: CuttingStrip
    shifted: bool
    strips: tuple[Strip, ...]
    d: int = 0  # number of diagonal strips (shifted only)
    r: int = 0  # d, or d+1 when the parity null strip is present

    @cached_property
    def cell_owner(self) -> dict[Cell, int]:
        owner: dict[Cell, int] = {}
        for index, strip in enumerate(self.strips):
            for cell in strip.cells:
                owner[cell] = index
        return owner

    @property
    def s(self) -> int:
        return len(self.strips)


def profile_from_cells(cells) -> CuttingStrip:
    """Read the direction profile off an explicit strip cell set."""
    by_content = {j - i: (i, j) for i, j in cells}
    if len(by_content) != len(cells):
        raise ValueError("not a strip: repeated contents")
    contents = sorted(by_content)
    if contents != list(range(contents[0], contents[-1] + 1)):
        raise ValueError("not a strip: contents not consecutive")
    profile = []
    for c in contents[1:]:
        pi, pj = by_content[c - 1]
        i, j = by_content[c]
        if (i, j) == (pi, pj + 1):
            profile.append(EAST)
        elif (i, j) == (pi - 1, pj):
            profile.append(NORTH)
        else:
            raise ValueError("not a strip: boxes not edgewise connected")
    return CuttingStrip(contents[0], contents[-1], tuple(profile))


def _outer_rim_cells(outer: Partition) -> list[Cell]:
    cells = []
    for i in range(1, len(outer) + 1):
        for j in range(1, outer.part(i) + 1):
            if outer.part(i + 1) < j + 1:
                cells.append((i, j))
    return cells


def canonical_cutting_strip(kind: str, shape, M: int = 0) -> CuttingStrip:
    """Build one of the named cutting strips for the given shape.

    ``kind`` is one of ``row``, ``col``, ``hook`` (corner at content ``M``),
    ``inner`` or ``outer``.
    """
    shifted = isinstance(shape, ShiftedSkewShape)
    if not shape.cells:
        raise ValueError("cutting strip requires a nonempty shape")
    if shifted:
        c_min, c_max = 0, shape.outer.part(1) - 1
    else:
        c_min = 1 - len(shape.outer)
        c_max = shape.outer.part(1) - 1
    span = range(c_min + 1, c_max + 1)

    if kind == "row":
        return CuttingStrip(c_min, c_max, tuple(EAST for _ in span))
    if kind == "col":
        return CuttingStrip(c_min, c_max, tuple(NORTH for _ in span))
    if kind == "hook":
        return CuttingStrip(c_min, c_max, tuple(NORTH if c <= M else EAST for c in span))
    if kind == "inner":
        # One box per content hugging the inner boundary of the shape; the
        # strip may stick out of the diagram when the boundary touches it.
        if shifted:
            mu = shape.inner
            rows = {c: 1 + sum(1 for p in mu.parts if p > c) for c in range(c_min, c_max + 1)}
        else:
            mu = shape.inner
            depth = len(shape.outer)
            rows = {
                c: 1 + sum(1 for k in range(1, depth + 1) if mu.part(k) - k >= c)
                for c in range(c_min, c_max + 1)
            }
        return profile_from_cells([(rows[c], rows[c] + c) for c in range(c_min, c_max + 1)])
    if kind == "outer":
        if shifted:
            lam = shape.outer
            inner = StrictPartition(tuple(p for p in lam.parts[1:] if p > 0))
            rim = ShiftedSkewShape(lam, inner)
            return profile_from_cells(rim.cells)
        return profile_from_cells(_outer_rim_cells(shape.outer))
    raise ValueError(f"unknown cutting strip kind {kind!r}")


def merge_bracket_pairs(lam: StrictPartition, mu: StrictPartition):
    """Bracket-match the merged parts of strict lam and mu (shifted case).

    Returns ``(diagonal, matched)`` where ``diagonal`` lists the unmatched
    lam parts as intervals ``(0, lam_i - 1)`` in order of increasing index,
    and ``matched`` lists intervals ``(mu_k, lam_j - 1)`` sorted by start
    content.  Equal parts merge with the lam part on the left, so a lam part
    matches an equal mu part and yields a null interval.
    """
    items: list[tuple[int, str, int]] = []
    li, mi = 0, 0
    lparts, mparts = lam.parts, mu.parts
    while li < len(lparts) or mi < len(mparts):
        if mi >= len(mparts) or (li < len(lparts) and lparts[li] >= mparts[mi]):
            items.append((lparts[li], "L", li + 1))
            li += 1
        else:
            items.append((mparts[mi], "M", mi + 1))
            mi += 1
    stack: list[tuple[int, int]] = []  # (lam value, lam index)
    matched: list[tuple[int, int]] = []  # (mu value, lam value)
    for value, tag, _ in items:
        if tag == "L":
            stack.append((value, _))
        else:
            if not stack:
                raise ContainmentError(f"{mu} is not contained in {lam}")
            lam_value, _ = stack.pop()
            matched.append((value, lam_value))
    diagonal = [(0, value - 1) for value, _ in sorted(stack, key=lambda t: t[1])]
    matched_intervals = sorted((mu_v, lam_v - 1) for mu_v, lam_v in matched)
    return diagonal, matched_intervals


def frobenius_bracket_pairs(lam: Partition, mu: Partition):
    """Bracket-match Frobenius data of lam and mu (unshifted rim case).

    Returns three interval lists in the canonical order of the rim
    decompositions: strips crossing the diagonal (increasing start content),
    strips above it (increasing start content), strips below it (decreasing
    end content).
    """
    lf, mf = frobenius(lam), frobenius(mu)
    alpha, beta = lf.arms, lf.legs
    gamma, delta = mf.arms, mf.legs

    # legs: ascending -beta ("(") and -delta (")"), "(" first on ties
    legs = sorted(
        [(-b, 0, j + 1) for j, b in enumerate(beta)] + [(-d, 1, l + 1) for l, d in enumerate(delta)]
    )
    # arms: ascending gamma ("(") and alpha (")"), "(" first on ties
    arms = sorted(
        [(g, 0, k + 1) for k, g in enumerate(gamma)] + [(a, 1, i + 1) for i, a in enumerate(alpha)]
    )
    stack: list[tuple[str, int]] = []  # ("beta", j) or ("gamma", k)
    crossing: list[tuple[int, int]] = []
    above: list[tuple[int, int]] = []
    below: list[tuple[int, int]] = []
    sequence = [("legs", value, brace, idx) for value, brace, idx in legs] + [
        ("arms", value, brace, idx) for value, brace, idx in arms
    ]
    for part, value, brace, idx in sequence:
        if brace == 0:
            stack.append((("beta", idx) if part == "legs" else ("gamma", idx)))
        else:
            if not stack:
                raise ContainmentError(f"{mu} is not contained in {lam}")
            kind, open_idx = stack.pop()
            if part == "legs":  # closing a delta against a beta
                assert kind == "beta", "delta matched against gamma"
                below.append((-beta[open_idx - 1], -delta[idx - 1] - 1))
            elif kind == "gamma":
                above.append((gamma[open_idx - 1] + 1, alpha[idx - 1]))
            else:
                crossing.append((-beta[open_idx - 1], alpha[idx - 1]))
    assert not stack, "unbalanced Frobenius bracket matching"
    crossing.sort()
    above.sort()
    below.sort(key=lambda ab: -ab[1])
    return crossing, above, below


def _geometric_strips(shape, phi: CuttingStrip) -> list[Strip]:
    positions = phi.positions
    by_translate: dict[int, dict[int, Cell]] = {}
    for cell in shape.cells:
        i, j = cell
        c = j - i
        if not phi.c_min <= c <= phi.c_max:
            raise ProfileMismatch(f"strip does not cover content {c}")
        t = i - positions[c][0]
        by_translate.setdefault(t, {})[c] = cell
    strips: list[Strip] = []
    for t in sorted(by_translate):
        contents = sorted(by_translate[t])
        run_start = 0
        for pos in range(1, len(contents) + 1):
            if pos == len(contents) or contents[pos] != contents[pos - 1] + 1:
                run = contents[run_start:pos]
                cells = tuple(by_translate[t][c] for c in run)
                strips.append(Strip(StripRef(phi, run[0], run[-1]), cells, cells[0]))
                run_start = pos
    return strips


def decompose(shape, phi: CuttingStrip, kind: str | None = None) -> OutsideDecomposition:
    """Cut the shape into strips by superposing diagonal translates of phi.

    ``kind`` tags the canonical cutting strips: for ``inner`` and ``outer``
    the null strips demanded by the rim corollaries are included, via the
    bracket pairing of the shape's labels.  Strips are ordered canonically:
    unshifted by start content (rim kinds use the crossing/above/below
    order), shifted with diagonal strips first by increasing diagonal row,
    then the parity null strip, then the rest by start content.
    """
    shifted = isinstance(shape, ShiftedSkewShape)
    cell_strips = _geometric_strips(shape, phi)

    if not shifted:
        if kind in ("inner", "outer"):
            crossing, above, below = frobenius_bracket_pairs(shape.outer, shape.inner)
            ordered: list[Strip] = []
            available = {id(s): s for s in cell_strips}
            for a, b in crossing + above + below:
                if a == b + 1:
                    ordered.append(Strip(StripRef(phi, a, b), (), None))
                    continue
                match = next(
                    s for s in available.values() if (s.ref.a, s.ref.b) == (a, b)
                )
                del available[id(match)]
                ordered.append(match)
            assert not available, "bracket pairing missed a geometric strip"
            return OutsideDecomposition(shape, phi, False, tuple(ordered))
        cell_strips.sort(key=lambda s: (s.ref.a, s.ref.b))
        return OutsideDecomposition(shape, phi, False, tuple(cell_strips))

    diagonal = sorted((s for s in cell_strips if s.ref.a == 0), key=lambda s: s.diag_row)
    rest = sorted((s for s in cell_strips if s.ref.a > 0), key=lambda s: (s.ref.a, s.ref.b))
    d = len(diagonal)
    assert d == len(shape.diagonal_cells)
    strips = list(diagonal)
    r = d
    if d % 2 == 1:
        strips.append(Strip(StripRef(phi, 0, -1), (), None))
        r = d + 1
    if kind in ("inner", "outer"):
        _, matched = merge_bracket_pairs(shape.outer, shape.inner)
        nulls = [ab for ab in matched if ab[0] == ab[1] + 1]
        geometric = sorted((s.ref.a, s.ref.b) for s in rest)
        expected = sorted(ab for ab in matched if ab[0] <= ab[1])
        assert geometric == expected, "rim bracket pairing disagrees with geometry"
        rest = sorted(
            rest + [Strip(StripRef(phi, a, b), (), None) for a, b in nulls],
            key=lambda s: (s.ref.a, s.ref.b),
        )
    strips.extend(rest)
    return OutsideDecomposition(shape, phi, True, tuple(strips), d=d, r=r)


def hash_op(p: StripRef, q: StripRef) -> StripRef:
    """The # operation: glue the start of p to the end of q along the strip."""
    if p.strip is not q.strip and p.strip != q.strip:
        raise ValueError("strips must share the same cutting strip")
    return StripRef(p.strip, p.a, q.b)


def shift_param(p: StripRef, q: StripRef) -> int:
    """Content offset aligning (p # q) with its realized skew shape."""
    combined = hash_op(p, q)
    if combined.is_empty or combined.is_null:
        raise UndefinedShift(f"shift parameter undefined for {combined.interval_str()}")
    return combined_shift(combined)


def combined_shift(ref: StripRef) -> int:
    if ref.strip.c_min == 0:
        return ref.a  # shifted strips anchor their first box on the diagonal
    return ref.a + ref.n_rows - 1


def realize_strip(ref: StripRef):
    """Realize phi_{a,b} as a concrete (shifted) skew shape plus its shift.

    The unshifted representative is the unique one whose outer rim is the
    strip itself; the shifted representative anchors the first box on the
    main diagonal.  Conventional contents equal the phi contents minus m.
    """
    if ref.is_null or ref.is_empty:
        raise ValueError("cannot realize a null or empty strip")
    positions = ref.strip.positions
    base = positions[ref.a]
    rel = {c: (positions[c][0] - base[0], positions[c][1] - base[1]) for c in range(ref.a, ref.b + 1)}
    shifted = ref.strip.c_min == 0
    rows = ref.n_rows
    if shifted:
        cells = [(i + rows, j + rows) for i, j in rel.values()]
        m = ref.a
    else:
        min_i = min(i for i, _ in rel.values())
        cells = [(i - min_i + 1, j + 1) for i, j in rel.values()]
        m = ref.a + rows - 1
    shape = shape_from_cells(cells, shifted=shifted)
    return shape, m


def bar(ref: StripRef) -> StripRef:
    """Extend a shifted strip to the main diagonal: (rho # theta) = phi_{0,b}."""
    if ref.strip.c_min != 0:
        raise ValueError("bar extension applies to shifted cutting strips")
    return StripRef(ref.strip, 0, ref.b)


def double_strip(bp: StripRef, bq: StripRef) -> ShiftedSkewShape | None:
    """Abut two diagonal extensions with bp's content-0 box above-left of bq's.

    Returns the shifted skew shape of the union when it is a standard
    diagram, or None when the configuration is non-regular.
    """
    for ref in (bp, bq):
        if ref.a != 0:
            raise ValueError("double strips require phi_{0,b} intervals")
    if bp.is_null or bq.is_null:
        raise ValueError("null strips are resolved before double_strip")
    positions = bp.strip.positions
    cells = [(positions[c][0], positions[c][1]) for c in range(0, bp.b + 1)]
    cells += [(positions[c][0] + 1, positions[c][1] + 1) for c in range(0, bq.b + 1)]
    if len(set(cells)) != len(cells):
        return None
    try:
        shape = shape_from_cells(cells, shifted=True)
    except ValueError:
        return None
    return shape


@dataclass(frozen=True)
class StripSpec:
    """Parsed command-line strip specification."""

    kind: str  # row | col | hook | inner | outer | profile
    hook_corner: int = 0
    c_min: int = 0
    letters: str = ""

    @classmethod
    def parse(cls, text: str) -> "StripSpec":
        text = text.strip()
        if text in ("row", "col", "inner", "outer", "hook"):
            return cls(text)
        if text.startswith("hook@"):
            return cls("hook", hook_corner=int(text[5:]))
        if text.startswith("profile:"):
            try:
                _, c_min, letters = text.split(":")
            except ValueError as exc:
                raise ValueError(f"bad strip spec {text!r}") from exc
            letters = letters.upper()
            if any(ch not in "EN" for ch in letters):
                raise ValueError(f"profile letters must be E or N, got {letters!r}")
            return cls("profile", c_min=int(c_min), letters=letters)
        raise ValueError(f"unknown strip spec {text!r}")

    def build(self, shape) -> CuttingStrip:
        shifted = isinstance(shape, ShiftedSkewShape)
        if self.kind == "profile":
            strip = CuttingStrip(self.c_min, self.c_min + len(self.letters), tuple(self.letters))
            if shifted and strip.c_min != 0:
                raise ProfileMismatch("shifted cutting strips must start at content 0")
            lo = min(shape.contents, default=strip.c_min)
            hi = max(shape.contents, default=strip.c_max)
            if not (strip.c_min <= lo and hi <= strip.c_max):
                raise ProfileMismatch(
                    f"profile spans [{strip.c_min},{strip.c_max}] but the shape spans [{lo},{hi}]"
                )
            return strip
        return canonical_cutting_strip(self.kind, shape, M=self.hook_corner)

    def __str__(self) -> str:
        if self.kind == "profile":
            return f"profile:{self.c_min}:{self.letters}"
        if self.kind == "hook" and self.hook_corner:
            return f"hook@{self.hook_corner}"
        return self.kind
