"""Semistandard and primed shifted tableaux, and the weight sums over them.

The ninth-variation functions are computed directly from their tableau
definitions: the Schur sum assigns ``x[k, j-i]`` to an entry ``k`` in the cell
``(i, j)``; the Q sum assigns ``x[k, j-i]`` to ``k`` and ``y[k, j-i]`` to
``k'``.  Enumeration is backtracking in row-major order with early pruning,
which keeps the acceptance-scale shapes comfortably fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .shapes import Cell, FrobeniusCoords, SkewShape, ShiftedSkewShape
from .weights import ONE, WeightPolynomial, xvar, yvar


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    entries: tuple[tuple[Cell, int], ...]  # sorted by cell

    def entry(self, cell: Cell) -> int:
        return dict(self.entries)[cell]


@dataclass(frozen=True)
class PrimedTableau:
    shape: ShiftedSkewShape
    entries: tuple[tuple[Cell, tuple[int, bool]], ...]  # cell -> (level, primed)

    def entry(self, cell: Cell) -> tuple[int, bool]:
        return dict(self.entries)[cell]


@dataclass(frozen=True)
class SignedLabel:
    """A regularized strict label with the sorting-permutation sign.

    ``sign`` is 0 exactly when the raw sequence had a repeated part, in which
    case ``label`` is None.
    """

    sign: int
    label: object | None


def _neighbors(cells: Sequence[Cell]) -> list[tuple[Cell, int, int]]:
    """Row-major cells with indices of their left and up neighbors (or -1)."""
    order = sorted(cells)
    index = {cell: pos for pos, cell in enumerate(order)}
    out = []
    for cell in order:
        i, j = cell
        out.append((cell, index.get((i, j - 1), -1), index.get((i - 1, j), -1)))
    return out


def enumerate_ssyt(shape: SkewShape, n: int) -> Iterator[Tableau]:
    """All semistandard fillings with entries in 1..n, in lexicographic order."""
    plan = _neighbors(sorted(shape.cells))
    if not plan:
        if n >= 0:
            yield Tableau(shape, ())
        return
    values = [0] * len(plan)

    def fill(pos: int) -> Iterator[Tableau]:
        if pos == len(plan):
            yield Tableau(shape, tuple((plan[k][0], values[k]) for k in range(len(plan))))
            return
        cell, left, up = plan[pos]
        lo = 1
        if left >= 0:
            lo = max(lo, values[left])
        if up >= 0:
            lo = max(lo, values[up] + 1)
        for e in range(lo, n + 1):
            values[pos] = e
            yield from fill(pos + 1)

    yield from fill(0)


def schur9(shape: SkewShape, n: int) -> WeightPolynomial:
    """The ninth-variation skew Schur function of the shape over 1..n."""
    plan = _neighbors(sorted(shape.cells))
    if not plan:
        return WeightPolynomial({(): 1})
    terms: dict[tuple, int] = {}
    values = [0] * len(plan)
    atoms = [xvar(0, 0)] * len(plan)

    def fill(pos: int) -> None:
        if pos == len(plan):
            mono = tuple(sorted(atoms))
            terms[mono] = terms.get(mono, 0) + 1
            return
        cell, left, up = plan[pos]
        lo = 1
        if left >= 0:
            lo = max(lo, values[left])
        if up >= 0:
            lo = max(lo, values[up] + 1)
        c = cell[1] - cell[0]
        for e in range(lo, n + 1):
            values[pos] = e
            atoms[pos] = xvar(e, c)
            fill(pos + 1)

    fill(0)
    return WeightPolynomial(terms)


# Primed entries are encoded as integers: k' -> 2k-1, k -> 2k, so the order
# 1' < 1 < 2' < 2 < ... is plain integer comparison.


def _primed_lo(values: list[int], left: int, up: int) -> int:
    lo = 1
    if left >= 0:
        e = values[left]
        # weakly increasing along the row; equal primed entries forbidden
        lo = max(lo, e + 1 if e % 2 == 1 else e)
    if up >= 0:
        e = values[up]
        # weakly increasing down the column; equal unprimed entries forbidden
        lo = max(lo, e + 1 if e % 2 == 0 else e)
    return lo


def enumerate_primed(shape: ShiftedSkewShape, n: int) -> Iterator[PrimedTableau]:
    """All primed shifted fillings from 1' < 1 < ... < n' < n."""
    plan = _neighbors(sorted(shape.cells))
    if not plan:
        if n >= 0:
            yield PrimedTableau(shape, ())
        return
    values = [0] * len(plan)

    def fill(pos: int) -> Iterator[PrimedTableau]:
        if pos == len(plan):
            entries = tuple(
                (plan[k][0], ((values[k] + 1) // 2, values[k] % 2 == 1)) for k in range(len(plan))
            )
            yield PrimedTableau(shape, entries)
            return
        _, left, up = plan[pos]
        for e in range(_primed_lo(values, left, up), 2 * n + 1):
            values[pos] = e
            yield from fill(pos + 1)

    yield from fill(0)


def qfun9(shape: ShiftedSkewShape, n: int) -> WeightPolynomial:
    """The ninth-variation skew Q-function of the shifted shape over 1..n."""
    plan = _neighbors(sorted(shape.cells))
    if not plan:
        return WeightPolynomial({(): 1})
    terms: dict[tuple, int] = {}
    values = [0] * len(plan)
    atoms = [xvar(0, 0)] * len(plan)

    def fill(pos: int) -> None:
        if pos == len(plan):
            mono = tuple(sorted(atoms))
            terms[mono] = terms.get(mono, 0) + 1
            return
        cell, left, up = plan[pos]
        c = cell[1] - cell[0]
        for e in range(_primed_lo(values, left, up), 2 * n + 1):
            values[pos] = e
            k = (e + 1) // 2
            atoms[pos] = yvar(k, c) if e % 2 == 1 else xvar(k, c)
            fill(pos + 1)

    fill(0)
    return WeightPolynomial(terms)


def _sort_sign(seq: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting ``seq`` into strictly decreasing order."""
    if len(set(seq)) != len(seq):
        return 0, ()
    inversions = sum(
        1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] < seq[j]
    )
    return (-1) ** inversions, tuple(sorted(seq, reverse=True))


def regularize_strict(seq: Sequence[int]) -> SignedLabel:
    """Sort a would-be strict-partition label, tracking the permutation sign."""
    from .shapes import StrictPartition

    sign, sorted_parts = _sort_sign(tuple(seq))
    if sign == 0:
        return SignedLabel(0, None)
    parts = sorted_parts
    # At most one trailing zero can be meaningful in a strict label.
    if parts and parts[-1] == 0:
        label = StrictPartition(parts[:-1]).with_trailing_zero()
    else:
        label = StrictPartition(parts)
    return SignedLabel(sign, label)


def regularize_frobenius(arms: Sequence[int], legs: Sequence[int]) -> SignedLabel:
    """Sort arms and legs independently; the sign is the product of both."""
    sign_a, sorted_arms = _sort_sign(tuple(arms))
    sign_l, sorted_legs = _sort_sign(tuple(legs))
    if sign_a == 0 or sign_l == 0:
        return SignedLabel(0, None)
    return SignedLabel(sign_a * sign_l, FrobeniusCoords(sorted_arms, sorted_legs))


def strip_schur(ref, m: int, n: int) -> WeightPolynomial:
    """Schur value of a strip interval: 1 for null, 0 for empty, else the
    realized skew shape's function shifted by ``m``."""
    from .strips import realize_strip
    from .weights import shift

    if ref.is_null:
        return ONE
    if ref.is_empty:
        return WeightPolynomial()
    shape, _ = realize_strip(ref)
    return shift(schur9(shape, n), m)


def strip_q(ref, m: int, n: int) -> WeightPolynomial:
    """Q value of a shifted strip interval under the same case split."""
    from .strips import realize_strip
    from .weights import shift

    if ref.is_null:
        return ONE
    if ref.is_empty:
        return WeightPolynomial()
    shape, _ = realize_strip(ref)
    return shift(qfun9(shape, n), m)
