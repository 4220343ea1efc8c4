"""Shared helpers for the test suite: random shapes and brute-force oracles."""

from __future__ import annotations

import random
from itertools import permutations, product

from schur9.shapes import Partition, ShiftedSkewShape, SkewShape, StrictPartition
from schur9.weights import ONE, WeightPolynomial, ZERO, poly_add, poly_mul, poly_neg


def random_partition(rng: random.Random, max_size: int) -> Partition:
    parts = []
    total = 0
    while True:
        hi = max_size - total
        if hi <= 0:
            break
        p = rng.randint(0, min(hi, parts[-1] if parts else hi))
        if p == 0:
            break
        parts.append(p)
        total += p
    return Partition(tuple(parts))


def random_subpartition(rng: random.Random, lam: Partition) -> Partition:
    parts = []
    for p in lam.parts:
        parts.append(min(parts[-1] if parts else p, rng.randint(0, p)))
    return Partition(tuple(x for x in parts if x))


def random_strict(rng: random.Random, max_size: int) -> StrictPartition:
    parts = []
    total = 0
    prev = None
    while True:
        hi = max_size - total
        cap = min(hi, (prev - 1) if prev else hi)
        if cap <= 0:
            break
        p = rng.randint(0, cap)
        if p == 0:
            break
        parts.append(p)
        total += p
        prev = p
    return StrictPartition(tuple(parts))


def random_strict_sub(rng: random.Random, lam: StrictPartition) -> StrictPartition:
    parts = []
    prev = None
    for p in lam.parts:
        cap = min(p, (prev - 1) if prev is not None else p)
        if cap < 0:
            break
        v = rng.randint(0, cap)
        if v == 0:
            break
        parts.append(v)
        prev = v
    return StrictPartition(tuple(parts))


def brute_force_ssyt_count(shape: SkewShape, n: int) -> int:
    """Filter every filling of the shape against the semistandard rules."""
    cells = sorted(shape.cells)
    count = 0
    for values in product(range(1, n + 1), repeat=len(cells)):
        entry = dict(zip(cells, values))
        ok = True
        for (i, j), v in entry.items():
            if (i, j - 1) in entry and v < entry[(i, j - 1)]:
                ok = False
                break
            if (i - 1, j) in entry and v <= entry[(i - 1, j)]:
                ok = False
                break
        count += ok
    return count


def brute_force_primed_count(shape: ShiftedSkewShape, n: int) -> int:
    """Filter every primed filling against the shifted tableau rules.

    Entries are encoded 1..2n with odd values primed, so the order
    1' < 1 < 2' < 2 < ... is integer comparison.
    """
    cells = sorted(shape.cells)
    count = 0
    for values in product(range(1, 2 * n + 1), repeat=len(cells)):
        entry = dict(zip(cells, values))
        ok = True
        for (i, j), v in entry.items():
            left = entry.get((i, j - 1))
            up = entry.get((i - 1, j))
            if left is not None and (v < left or (v == left and v % 2 == 1)):
                ok = False
                break
            if up is not None and (v < up or (v == up and v % 2 == 0)):
                ok = False
                break
        count += ok
    return count


def leibniz_det(entries: list[list[WeightPolynomial]]) -> WeightPolynomial:
    """Determinant straight from the permutation sum, for oracle use."""
    size = len(entries)
    total = ZERO
    for perm in permutations(range(size)):
        inversions = sum(
            1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j]
        )
        term = ONE
        for i in range(size):
            term = poly_mul(term, entries[i][perm[i]])
        total = poly_add(total, term if inversions % 2 == 0 else poly_neg(term))
    return total


def pairing_pfaffian(entries: list[list[WeightPolynomial]]) -> WeightPolynomial:
    """Pfaffian from the perfect-matching sum, for oracle use."""
    size = len(entries)

    def rec(indices: tuple[int, ...]) -> WeightPolynomial:
        if not indices:
            return ONE
        first, rest = indices[0], indices[1:]
        total = ZERO
        for pos, j in enumerate(rest):
            remaining = rest[:pos] + rest[pos + 1:]
            term = poly_mul(entries[first][j], rec(remaining))
            total = poly_add(total, term if pos % 2 == 0 else poly_neg(term))
        return total

    return rec(tuple(range(size)))
