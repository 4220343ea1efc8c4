"""Determinant and Pfaffian identities built from outside decompositions.

``hg_matrix`` assembles the generalized Schur determinant whose ``(p, q)``
entry is the strip function of ``theta_p # theta_q`` shifted by the shift
parameter; ``ham_matrix`` assembles the Q-function Pfaffian with the double
strip block, the reversed single-strip block, and the antisymmetric
completion.  Both are verified against the tableau definitions.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .shapes import Partition, ShiftedSkewShape, SkewShape, StrictPartition
from .strips import (
    CuttingStrip,
    OutsideDecomposition,
    StripRef,
    StripSpec,
    bar,
    decompose,
    double_strip,
    hash_op,
    realize_strip,
)
from .tableaux import qfun9, schur9
from .weights import ONE, WeightPolynomial, ZERO, poly_add, poly_eq, poly_mul, poly_neg, shift


class ShapeError(ValueError):
    """Matrix is not suitable for the requested evaluation."""


NULL_DESC = ("", None, "1")
EMPTY_DESC = ("", None, "0")
ZERO_DESC = ("", None, "0")


@dataclass
class PolyMatrix:
    """A square matrix of weight polynomials with human-readable entry tags."""

    entries: list[list[WeightPolynomial]]
    desc: list[list[tuple]] = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.entries)

    def __post_init__(self) -> None:
        if any(len(row) != self.order for row in self.entries):
            raise ShapeError("matrix must be square")
        if not self.desc:
            self.desc = [[("", None, "?")] * self.order for _ in range(self.order)]


def det_eval(m: PolyMatrix) -> WeightPolynomial:
    """Exact determinant by column-subset expansion with memoization."""
    order = m.order
    if order == 0:
        return ONE
    cache: dict[frozenset, WeightPolynomial] = {frozenset(): ONE}

    def minor(cols: frozenset) -> WeightPolynomial:
        cached = cache.get(cols)
        if cached is not None:
            return cached
        row = len(cols) - 1
        total = ZERO
        for pos, col in enumerate(sorted(cols)):
            entry = m.entries[row][col]
            if not entry:
                continue
            term = poly_mul(entry, minor(cols - {col}))
            total = poly_add(total, term if (row + pos) % 2 == 0 else poly_neg(term))
        cache[cols] = total
        return total

    return minor(frozenset(range(order)))


def pf_eval(m: PolyMatrix) -> WeightPolynomial:
    """Exact Pfaffian by first-row expansion with subset memoization."""
    order = m.order
    if order % 2 != 0:
        raise ShapeError("Pfaffian requires even order")
    for i in range(order):
        if m.entries[i][i]:
            raise ShapeError("Pfaffian requires zero diagonal")
        for j in range(i + 1, order):
            if not poly_eq(m.entries[i][j], poly_neg(m.entries[j][i])):
                raise ShapeError(f"matrix is not antisymmetric at ({i},{j})")
    cache: dict[frozenset, WeightPolynomial] = {frozenset(): ONE}

    def sub(pivot_set: frozenset) -> WeightPolynomial:
        cached = cache.get(pivot_set)
        if cached is not None:
            return cached
        indices = sorted(pivot_set)
        first = indices[0]
        total = ZERO
        for t, j in enumerate(indices[1:]):
            entry = m.entries[first][j]
            if not entry:
                continue
            term = poly_mul(entry, sub(pivot_set - {first, j}))
            total = poly_add(total, term if t % 2 == 0 else poly_neg(term))
        cache[pivot_set] = total
        return total

    return sub(frozenset(range(order)))


class _StripValues:
    """Caches strip-function values keyed by interval since pairs repeat.

    For the inner and outer rim decompositions the padded matrices of the
    corollaries are reproduced: an interval contributes its strip function
    only when its rim segment embeds against the inner (resp. outer)
    boundary as a genuine skew diagram, and contributes zero otherwise.
    """

    def __init__(self, n: int, shifted: bool, shape=None, rim: str | None = None):
        self.n = n
        self.shifted = shifted
        self.shape = shape
        self.rim = rim if rim in ("inner", "outer") else None
        self._cache: dict[tuple[int, int], tuple[WeightPolynomial, tuple]] = {}
        self._rim_row: dict[int, int] = {}
        if self.rim:
            lam, mu = shape.outer, shape.inner
            if shifted:
                c_range = range(0, lam.part(1))
                if self.rim == "inner":
                    self._rim_row = {c: 1 + sum(1 for p in mu.parts if p > c) for c in c_range}
                else:
                    self._rim_row = {c: sum(1 for p in lam.parts if p > c) for c in c_range}
            else:
                depth = len(lam)
                c_range = range(1 - depth, lam.part(1))
                if self.rim == "inner":
                    self._rim_row = {
                        c: 1 + sum(1 for k in range(1, depth + 1) if mu.part(k) - k >= c)
                        for c in c_range
                    }
                else:
                    self._rim_row = {
                        c: sum(1 for k in range(1, depth + 1) if lam.part(k) - k >= c)
                        for c in c_range
                    }

    def _embeds(self, a: int, b: int) -> bool:
        """Does the rim segment [a, b] pad the boundary to a skew diagram?"""
        lam, mu = self.shape.outer, self.shape.inner
        counts: dict[int, tuple[int, int]] = {}  # row -> (min col, max col)
        for c in range(a, b + 1):
            i = self._rim_row[c]
            j = i + c
            lo, hi = counts.get(i, (j, j))
            counts[i] = (min(lo, j), max(hi, j))
        rows = sorted(counts)
        for i in rows:
            lo, hi = counts[i]
            if hi - lo + 1 != sum(1 for c in range(a, b + 1) if self._rim_row[c] == i):
                return False  # segment not contiguous within the row
        if self.rim == "inner":
            base = mu
            top = max(rows)
            lengths = []
            for i in range(1, top + 1):
                if i in counts:
                    lo, hi = counts[i]
                    start = (i + base.part(i)) if self.shifted else (base.part(i) + 1)
                    if lo != start:
                        return False
                    lengths.append(hi - i + 1 if self.shifted else hi)
                else:
                    lengths.append(base.part(i))
        else:
            base = lam
            lengths = []
            for i in range(1, len(base) + 1):
                if i in counts:
                    lo, hi = counts[i]
                    end = (i + base.part(i) - 1) if self.shifted else base.part(i)
                    if hi != end:
                        return False
                    lengths.append(lo - i if self.shifted else lo - 1)
                else:
                    lengths.append(base.part(i))
        # the padded (resp. clipped) boundary must itself be a partition
        while lengths and lengths[-1] == 0:
            lengths.pop()
        if any(v < 0 for v in lengths):
            return False
        if self.shifted:
            return all(x > y for x, y in zip(lengths, lengths[1:])) and all(v > 0 for v in lengths)
        return all(x >= y for x, y in zip(lengths, lengths[1:]))

    def value(self, ref: StripRef) -> tuple[WeightPolynomial, tuple]:
        key = (ref.a, ref.b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if ref.is_null:
            result = (ONE, NULL_DESC)
        elif ref.is_empty:
            result = (ZERO, EMPTY_DESC)
        elif self.rim and not self._embeds(ref.a, ref.b):
            result = (ZERO, (ref.interval_str(), None, "0"))
        else:
            shape, m = realize_strip(ref)
            base = qfun9(shape, self.n) if self.shifted else schur9(shape, self.n)
            result = (shift(base, m), (ref.interval_str(), m, str(shape)))
        self._cache[key] = result
        return result


def hg_matrix(shape: SkewShape, phi: CuttingStrip, n: int, kind: str | None = None,
              decomposition: OutsideDecomposition | None = None) -> tuple[PolyMatrix, OutsideDecomposition]:
    """The generalized Schur determinant matrix for the decomposition by phi."""
    dec = decomposition or decompose(shape, phi, kind)
    values = _StripValues(n, shifted=False, shape=shape, rim=kind)
    size = dec.s
    entries = [[ZERO] * size for _ in range(size)]
    desc = [[EMPTY_DESC] * size for _ in range(size)]
    for p in range(size):
        for q in range(size):
            combined = hash_op(dec.strips[p].ref, dec.strips[q].ref)
            entries[p][q], desc[p][q] = values.value(combined)
    return PolyMatrix(entries, desc), dec


def _double_entry(dec: OutsideDecomposition, p: int, q: int, n: int,
                  cache: dict) -> tuple[WeightPolynomial, tuple]:
    """Q value of the abutted diagonal extensions of strips p and q (p != q).

    Ordinary null strips (single boundary edges away from the diagonal) pair
    to zero with everything: their regularized labels always repeat a part.
    The parity null strip pairs as the below-right member of any standard
    configuration, so it contributes the bare strip value with a sign given
    by its position.  For two genuine strips the value is the Q-function of
    whichever abutted arrangement forms a standard shifted diagram, negated
    when only the reversed arrangement does.
    """
    rp, rq = dec.strips[p].ref, dec.strips[q].ref
    if (rp.is_null and rp.a > 0) or (rq.is_null and rq.a > 0):
        return ZERO, ZERO_DESC
    bp, bq = bar(rp), bar(rq)

    def q_of(ref: StripRef):
        key = ("single", ref.b)
        if key not in cache:
            shape, _ = realize_strip(ref)
            cache[key] = (qfun9(shape, n), str(shape))
        return cache[key]

    if bq.is_null:
        poly, label = q_of(bp)
        return poly, (f"({bp.interval_str()},null)", 0, label)
    if bp.is_null:
        poly, label = q_of(bq)
        return poly_neg(poly), (f"(null,{bq.interval_str()})", 0, f"-{label}")
    key = ("pair", bp.b, bq.b)
    if key not in cache:
        tag = f"({bp.interval_str()},{bq.interval_str()})"
        union = double_strip(bp, bq)
        rev = double_strip(bq, bp)
        value = qfun9(union, n) if union is not None else ZERO
        if rev is not None:
            value = value - qfun9(rev, n)
        if union is not None:
            cache[key] = (value, (tag, 0, str(union)))
        elif rev is not None:
            cache[key] = (value, (tag, 0, f"-{rev}"))
        else:
            cache[key] = (ZERO, ZERO_DESC)
    return cache[key]


def ham_matrix(shape: ShiftedSkewShape, phi: CuttingStrip, n: int, kind: str | None = None,
               decomposition: OutsideDecomposition | None = None) -> tuple[PolyMatrix, OutsideDecomposition]:
    """The generalized Q-function Pfaffian matrix for the decomposition by phi.

    The upper-left s x s block holds the double-strip values, the upper-right
    s x (s - r) block the single-strip values of ``theta_{s+r+1-k} # theta_p``
    shifted by their start content, the lower blocks follow by antisymmetry
    and the lower-right block vanishes.
    """
    dec = decomposition or decompose(shape, phi, kind)
    s, r = dec.s, dec.r
    size = 2 * s - r
    values = _StripValues(n, shifted=True, shape=shape, rim=kind)
    cache: dict = {}
    entries = [[ZERO] * size for _ in range(size)]
    desc = [[ZERO_DESC] * size for _ in range(size)]
    for p in range(s):
        for q in range(p + 1, s):
            poly, tag = _double_entry(dec, p, q, n, cache)
            entries[p][q], desc[p][q] = poly, tag
            entries[q][p] = poly_neg(poly)
            desc[q][p] = (tag[0], tag[1], f"-({tag[2]})")
    for k in range(r + 1, s + 1):
        col = s + (k - r) - 1
        source_index = s + r - k  # theta_{s+r+1-k}, 0-based
        source = dec.strips[source_index].ref
        for p in range(s):
            row_ref = dec.strips[p].ref
            if row_ref.is_null and row_ref.a > 0 and p != source_index:
                # an ordinary null strip's label repeats against any other
                poly, tag = ZERO, ZERO_DESC
            else:
                combined = hash_op(source, row_ref)
                poly, tag = values.value(combined)
            entries[p][col], desc[p][col] = poly, tag
            entries[col][p] = poly_neg(poly)
            desc[col][p] = (tag[0], tag[1], f"-({tag[2]})")
    return PolyMatrix(entries, desc), dec


@dataclass
class VerifyReport:
    """Outcome of checking one identity as an exact polynomial equality."""

    lam: str
    mu: str
    strip: str
    n: int
    qfun: bool
    equal: bool
    lhs: WeightPolynomial
    rhs: WeightPolynomial
    elapsed_ms: float
    matrix_desc: list[list[tuple]]
    name: str = "verify"
    matrix: "PolyMatrix | None" = None

    @property
    def lhs_terms(self) -> int:
        return self.lhs.term_count

    @property
    def rhs_terms(self) -> int:
        return self.rhs.term_count

    def to_dict(self) -> dict:
        return {
            "schema": "schur9/1",
            "check": self.name,
            "lambda": self.lam,
            "mu": self.mu,
            "strip": self.strip,
            "n": self.n,
            "qfun": self.qfun,
            "equal": self.equal,
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "matrix": [
                [[interval, shift_, shape] for interval, shift_, shape in row]
                for row in self.matrix_desc
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _perturb(matrix: PolyMatrix, antisymmetric: bool) -> None:
    """Debug aid: bump one entry by +1 so the identity must fail."""
    if matrix.order == 0:
        return
    if antisymmetric and matrix.order >= 2:
        matrix.entries[0][1] = poly_add(matrix.entries[0][1], ONE)
        matrix.entries[1][0] = poly_add(matrix.entries[1][0], poly_neg(ONE))
    else:
        matrix.entries[0][0] = poly_add(matrix.entries[0][0], ONE)


def verify_schur(lam: Partition, mu: Partition, spec: StripSpec, n: int,
                 perturb: bool = False) -> VerifyReport:
    """Check the outside-decomposition determinant against the tableau sum."""
    start = time.perf_counter()
    shape = SkewShape(lam, mu)
    lhs = schur9(shape, n)
    if not shape.cells:
        elapsed = (time.perf_counter() - start) * 1000
        return VerifyReport(str(lam), str(mu), str(spec), n, False, True, lhs, ONE, elapsed, [])
    phi = spec.build(shape)
    matrix, _ = hg_matrix(shape, phi, n, kind=spec.kind)
    if perturb:
        _perturb(matrix, antisymmetric=False)
    rhs = det_eval(matrix)
    elapsed = (time.perf_counter() - start) * 1000
    return VerifyReport(
        str(lam), str(mu), str(spec), n, False, poly_eq(lhs, rhs), lhs, rhs, elapsed,
        matrix.desc, matrix=matrix,
    )


def verify_q(lam: StrictPartition, mu: StrictPartition, spec: StripSpec, n: int,
             perturb: bool = False) -> VerifyReport:
    """Check the outside-decomposition Pfaffian against the tableau sum."""
    start = time.perf_counter()
    shape = ShiftedSkewShape(lam, mu)
    lhs = qfun9(shape, n)
    if not shape.cells:
        elapsed = (time.perf_counter() - start) * 1000
        return VerifyReport(str(lam), str(mu), str(spec), n, True, True, lhs, ONE, elapsed, [])
    phi = spec.build(shape)
    matrix, _ = ham_matrix(shape, phi, n, kind=spec.kind)
    if perturb:
        _perturb(matrix, antisymmetric=True)
    rhs = pf_eval(matrix)
    elapsed = (time.perf_counter() - start) * 1000
    return VerifyReport(
        str(lam), str(mu), str(spec), n, True, poly_eq(lhs, rhs), lhs, rhs, elapsed,
        matrix.desc, matrix=matrix,
    )
