"""Partitions, strict partitions, Frobenius coordinates and (shifted) skew diagrams.

Cells are 1-based ``(row, col)`` pairs and the content of a cell is
``col - row``, so contents are constant along diagonals.  All values are
immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

Cell = tuple[int, int]


class ContainmentError(ValueError):
    """Raised when an inner shape is not contained in an outer shape."""


def _check_weakly_decreasing(parts: Sequence[int], what: str) -> None:
    for prev, cur in zip(parts, parts[1:]):
        if cur > prev:
            raise ValueError(f"{what} must be weakly decreasing, got {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"{what} must be non-negative, got {parts}")


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers, stored normalized."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        _check_weakly_decreasing(parts, "partition")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a comma-separated list such as ``"9,6,4,2"``; "" is empty."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(tok) for tok in text.split(",")))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "-"

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def contains(self, other: "Partition") -> bool:
        return all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))

    def remove_part(self, index: int) -> "Partition":
        """Drop the part at 1-based ``index``."""
        parts = list(self.parts)
        del parts[index - 1]
        return Partition(tuple(parts))


@dataclass(frozen=True)
class StrictPartition:
    """A strictly decreasing sequence of non-negative integers.

    A single trailing zero is permitted when constructed through
    :meth:`with_trailing_zero`; it is needed for the parity padding of the
    Pfaffian corollaries and is preserved by equality.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        body = parts[:-1] if parts and parts[-1] == 0 else parts
        for prev, cur in zip(parts, parts[1:]):
            if cur >= prev:
                raise ValueError(f"strict partition must strictly decrease, got {parts}")
        if any(p <= 0 for p in body):
            raise ValueError(f"strict partition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "StrictPartition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(tok) for tok in text.split(",")))

    def with_trailing_zero(self) -> "StrictPartition":
        if self.parts and self.parts[-1] == 0:
            return self
        return StrictPartition(self.parts + (0,))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "-"

    def part(self, i: int) -> int:
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def contains(self, other: "StrictPartition") -> bool:
        return all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))

    def remove_part(self, index: int) -> "StrictPartition":
        parts = list(self.parts)
        del parts[index - 1]
        return StrictPartition(tuple(parts))


@dataclass(frozen=True)
class FrobeniusCoords:
    """Arm and leg lengths ``(alpha | beta)`` of a partition's main diagonal."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.arms) != len(self.legs):
            raise ValueError("arms and legs must have equal length")
        for seq, what in ((self.arms, "arms"), (self.legs, "legs")):
            for prev, cur in zip(seq, seq[1:]):
                if cur >= prev:
                    raise ValueError(f"{what} must strictly decrease, got {seq}")
            if any(v < 0 for v in seq):
                raise ValueError(f"{what} must be non-negative, got {seq}")

    @property
    def rank(self) -> int:
        return len(self.arms)

    def __str__(self) -> str:
        arms = ",".join(map(str, self.arms))
        legs = ",".join(map(str, self.legs))
        return f"({arms}|{legs})"


def conjugate(p: Partition) -> Partition:
    """Column lengths of the diagram of ``p``."""
    if not p.parts:
        return Partition(())
    return Partition(tuple(sum(1 for part in p.parts if part >= j) for j in range(1, p.parts[0] + 1)))


def frobenius(p: Partition) -> FrobeniusCoords:
    """Frobenius coordinates: ``alpha_i = p_i - i``, ``beta_i = p'_i - i``."""
    conj = conjugate(p)
    rank = 0
    while p.part(rank + 1) >= rank + 1:
        rank += 1
    arms = tuple(p.part(i) - i for i in range(1, rank + 1))
    legs = tuple(conj.part(i) - i for i in range(1, rank + 1))
    return FrobeniusCoords(arms, legs)


def from_frobenius(coords: FrobeniusCoords) -> Partition:
    """Rebuild the partition with the given arm and leg lengths."""
    rank = coords.rank
    parts = [coords.arms[i] + i + 1 for i in range(rank)]
    # Rows below the diagonal are read off the column lengths beta_j + j.
    row = rank + 1
    while True:
        length = sum(1 for j in range(rank) if coords.legs[j] + j + 1 >= row)
        if length == 0:
            break
        parts.append(length)
        row += 1
    return Partition(tuple(parts))


@dataclass(frozen=True)
class SkewShape:
    """The skew Young diagram of ``outer/inner``."""

    outer: Partition
    inner: Partition
    cells: frozenset[Cell] = field(init=False)

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise ContainmentError(f"{self.inner} is not contained in {self.outer}")
        cells = frozenset(
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        )
        object.__setattr__(self, "cells", cells)

    @staticmethod
    def content(cell: Cell) -> int:
        return cell[1] - cell[0]

    @property
    def size(self) -> int:
        return len(self.cells)

    @cached_property
    def contents(self) -> tuple[int, ...]:
        return tuple(sorted({self.content(c) for c in self.cells}))

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


@dataclass(frozen=True)
class ShiftedSkewShape:
    """The shifted skew diagram of strict ``outer/inner``.

    Row ``i`` occupies columns ``i + inner_i .. i + outer_i - 1``, so cells on
    the main diagonal have content 0 and all contents are non-negative.
    """

    outer: StrictPartition
    inner: StrictPartition
    cells: frozenset[Cell] = field(init=False)

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise ContainmentError(f"{self.inner} is not contained in {self.outer}")
        cells = frozenset(
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(i + self.inner.part(i), i + self.outer.part(i))
        )
        object.__setattr__(self, "cells", cells)

    @staticmethod
    def content(cell: Cell) -> int:
        return cell[1] - cell[0]

    @property
    def size(self) -> int:
        return len(self.cells)

    @cached_property
    def contents(self) -> tuple[int, ...]:
        return tuple(sorted({self.content(c) for c in self.cells}))

    @property
    def diagonal_cells(self) -> tuple[Cell, ...]:
        """Cells of content 0, sorted by row."""
        return tuple(sorted(c for c in self.cells if c[1] == c[0]))

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


def skew_shape(outer: Partition, inner: Partition) -> SkewShape:
    return SkewShape(outer, inner)


def shifted_skew_shape(outer: StrictPartition, inner: StrictPartition) -> ShiftedSkewShape:
    return ShiftedSkewShape(outer, inner)


def shape_from_cells(cells: Sequence[Cell], shifted: bool, allow_gaps: bool = False):
    """Recover the (shifted) skew shape whose cell set is ``cells``.

    Rows must be contiguous; raises ValueError otherwise.  With
    ``allow_gaps`` empty intermediate rows are permitted (a disconnected
    diagram) and their outer/inner labels are synthesized, smallest first.
    Used to validate strip realizations, double strips and reflections.
    """
    if not cells:
        return ShiftedSkewShape(StrictPartition(()), StrictPartition(())) if shifted else SkewShape(Partition(()), Partition(()))
    rows: dict[int, list[int]] = {}
    for i, j in cells:
        rows.setdefault(i, []).append(j)
    row_ids = sorted(rows)
    full_range = list(range(row_ids[0], row_ids[-1] + 1))
    if row_ids != full_range and not allow_gaps:
        raise ValueError("rows are not consecutive")
    # Normalize by a diagonal translation so the top row is row 1; this
    # preserves contents in the shifted case.
    offset = row_ids[0] - 1
    outer_parts: list[int | None] = []
    inner_parts: list[int | None] = []
    for i in full_range:
        if i not in rows:
            outer_parts.append(None)
            inner_parts.append(None)
            continue
        cols = sorted(rows[i])
        if cols != list(range(cols[0], cols[0] + len(cols))):
            raise ValueError(f"row {i} is not contiguous")
        lo, hi = cols[0] - offset, cols[-1] - offset
        r = i - offset
        if shifted:
            outer_parts.append(hi - r + 1)
            inner_parts.append(lo - r)
        else:
            outer_parts.append(hi)
            inner_parts.append(lo - 1)
    # Fill empty rows bottom-up with the smallest admissible equal pair.
    floor = 0
    for pos in range(len(outer_parts) - 1, -1, -1):
        if outer_parts[pos] is None:
            value = floor + 1 if shifted else floor
            outer_parts[pos] = inner_parts[pos] = value
            floor = value
        else:
            floor = max(outer_parts[pos], inner_parts[pos])
    if shifted:
        while inner_parts and inner_parts[-1] == 0:
            inner_parts.pop()
        shape = ShiftedSkewShape(StrictPartition(tuple(outer_parts)), StrictPartition(tuple(inner_parts)))
    else:
        while inner_parts and inner_parts[-1] == 0:
            inner_parts.pop()
        shape = SkewShape(Partition(tuple(outer_parts)), Partition(tuple(inner_parts)))
    if shape.cells != frozenset((i - offset, j - offset) for i, j in cells):
        raise ValueError("cells do not form a skew diagram")
    return shape


def reflect_antidiagonal(s: ShiftedSkewShape) -> ShiftedSkewShape:
    """Reflect through the SW-NE anti-diagonal through ``(1, outer_1)``.

    Contents of corresponding cells are preserved; the map is an involution.
    """
    if not s.cells:
        return s
    const = 1 + s.outer.part(1)
    image = [(const - j, const - i) for (i, j) in s.cells]
    shape = shape_from_cells(image, shifted=True, allow_gaps=True)
    assert isinstance(shape, ShiftedSkewShape)
    return shape
