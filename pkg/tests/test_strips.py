import pytest

from schur9.shapes import Partition, ShiftedSkewShape, SkewShape, StrictPartition
from schur9.strips import (
    CuttingStrip,
    ProfileMismatch,
    StripRef,
    StripSpec,
    UndefinedShift,
    bar,
    canonical_cutting_strip,
    decompose,
    double_strip,
    frobenius_bracket_pairs,
    hash_op,
    merge_bracket_pairs,
    profile_from_cells,
    realize_strip,
    shift_param,
)

SHAPE = SkewShape(Partition((5, 4, 4, 2)), Partition((3, 2)))
CS = StripSpec.parse("profile:-3:ENEEENE").build(SHAPE)  # the custom display strip

QSHAPE = ShiftedSkewShape(StrictPartition((9, 6, 4, 2)), StrictPartition((4, 3)))
QCS = canonical_cutting_strip("inner", QSHAPE)


class TestCanonicalStrips:
    def test_custom_reference_profile(self):
        # East at contents -2, 0, 1, 2, 4 and North at -1, 3
        directions = {c: CS.direction(c) for c in range(-2, 5)}
        assert directions == {-2: "E", -1: "N", 0: "E", 1: "E", 2: "E", 3: "N", 4: "E"}

    def test_shifted_inner_reference_profile(self):
        assert (QCS.c_min, QCS.c_max) == (0, 8)
        assert "".join(QCS.profile) == "EENNEEEE"

    def test_row_all_east(self):
        strip = canonical_cutting_strip("row", SHAPE)
        assert set(strip.profile) == {"E"}
        assert (strip.c_min, strip.c_max) == (-3, 4)

    def test_col_all_north(self):
        strip = canonical_cutting_strip("col", SHAPE)
        assert set(strip.profile) == {"N"}

    def test_hook_corner(self):
        strip = canonical_cutting_strip("hook", SHAPE)
        assert all(strip.direction(c) == "N" for c in range(-2, 1))
        assert all(strip.direction(c) == "E" for c in range(1, 5))
        shifted_hook = canonical_cutting_strip("hook", SHAPE, M=1)
        assert shifted_hook.direction(1) == "N"
        assert shifted_hook.direction(2) == "E"

    def test_inner_rim_is_hook_for_straight_shape(self):
        shape = SkewShape(Partition((4, 2, 1)), Partition(()))
        inner = canonical_cutting_strip("inner", shape)
        hook = canonical_cutting_strip("hook", shape)
        assert inner == hook

    def test_profile_from_cells_rejects_non_strip(self):
        with pytest.raises(ValueError):
            profile_from_cells([(1, 1), (1, 2), (2, 2)])  # contents 0,1,0


class TestDecompose:
    def test_reference_strips(self):
        dec = decompose(SHAPE, CS)
        assert [(s.ref.a, s.ref.b) for s in dec.strips] == [(-3, 1), (-2, -2), (1, 4)]
        # ownership is total and injective on cells
        assert set(dec.cell_owner) == set(SHAPE.cells)

    def test_shifted_reference_strips(self):
        dec = decompose(QSHAPE, QCS)
        assert [(s.ref.a, s.ref.b) for s in dec.strips] == [(0, 8), (0, 1), (3, 5)]
        assert (dec.d, dec.r, dec.s) == (2, 2, 3)

    def test_shifted_inner_with_null(self):
        shape = ShiftedSkewShape(StrictPartition((7, 6, 4, 2)), StrictPartition((4, 3)))
        dec = decompose(shape, canonical_cutting_strip("inner", shape), kind="inner")
        assert [(s.ref.a, s.ref.b) for s in dec.strips] == [(0, 6), (0, 1), (3, 5), (4, 3)]
        assert dec.strips[3].ref.is_null

    def test_profile_mismatch(self):
        small = CuttingStrip(0, 1, ("E",))
        with pytest.raises(ProfileMismatch):
            decompose(SHAPE, small)

    def test_strip_cells_match_profile_contents(self):
        dec = decompose(SHAPE, CS)
        for strip in dec.strips:
            contents = [j - i for (i, j) in strip.cells]
            assert contents == list(range(strip.ref.a, strip.ref.b + 1))


class TestHashOp:
    def test_table_entries(self):
        t1 = StripRef(CS, -3, 1)
        t2 = StripRef(CS, -2, -2)
        t3 = StripRef(CS, 1, 4)
        assert (hash_op(t2, t1).a, hash_op(t2, t1).b) == (-2, 1)
        assert hash_op(t3, t2).is_empty
        assert hash_op(t1, t1) == t1
        assert hash_op(t3, t2).a > hash_op(t3, t2).b + 1

    def test_start_end_contract(self):
        t1 = StripRef(CS, -3, 1)
        t3 = StripRef(CS, 1, 4)
        combined = hash_op(t1, t3)
        assert combined.a == t1.a and combined.b == t3.b


class TestShiftParam:
    def test_shift_parameter_table(self):
        t1 = StripRef(CS, -3, 1)
        t2 = StripRef(CS, -2, -2)
        t3 = StripRef(CS, 1, 4)
        table = {
            (0, 0): -2, (0, 1): -3, (0, 2): -1,
            (1, 0): -1, (1, 1): -2, (1, 2): 0,
            (2, 0): 1, (2, 2): 2,
        }
        strips = [t1, t2, t3]
        for (p, q), expected in table.items():
            assert shift_param(strips[p], strips[q]) == expected

    def test_undefined_on_empty(self):
        t2 = StripRef(CS, -2, -2)
        t3 = StripRef(CS, 1, 4)
        with pytest.raises(UndefinedShift):
            shift_param(t3, t2)

    def test_shifted_values(self):
        dec = decompose(QSHAPE, QCS)
        t1, _, t3 = (s.ref for s in dec.strips)
        assert shift_param(t3, t1) == 3
        assert shift_param(t3, t3) == 3


class TestRealize:
    def test_reference_shapes(self):
        shape, m = realize_strip(StripRef(CS, -3, 1))
        assert (str(shape), m) == ("4,2/1", -2)
        shape, m = realize_strip(StripRef(CS, -3, 4))
        assert (str(shape), m) == ("6,5,2/4,1", -1)
        shape, m = realize_strip(StripRef(CS, 2, 2))
        assert (str(shape), m) == ("1/-", 2)

    def test_one_cell_per_content_and_contents_shift(self):
        for (a, b) in [(-3, 1), (-2, 4), (1, 4), (-3, 4)]:
            ref = StripRef(CS, a, b)
            shape, m = realize_strip(ref)
            contents = sorted(j - i for (i, j) in shape.cells)
            assert contents == list(range(a - m, b - m + 1))

    def test_outer_rim_condition(self):
        # the outer rim of the realized outer partition is the strip itself
        for (a, b) in [(-3, 1), (-2, 4), (-3, 4)]:
            shape, _ = realize_strip(StripRef(CS, a, b))
            outer = shape.outer
            rim = {
                (i, j)
                for i in range(1, len(outer) + 1)
                for j in range(1, outer.part(i) + 1)
                if outer.part(i + 1) < j + 1
            }
            assert rim == set(shape.cells)

    def test_decomposed_strip_round_trip(self):
        dec = decompose(SHAPE, CS)
        for strip in dec.strips:
            shape, m = realize_strip(strip.ref)
            realized = sorted(j - i + m for (i, j) in shape.cells)
            original = sorted(j - i for (i, j) in strip.cells)
            assert realized == original

    def test_shifted_single_strip(self):
        dec = decompose(QSHAPE, QCS)
        t1, _, t3 = (s.ref for s in dec.strips)
        shape, m = realize_strip(hash_op(t3, t1))
        assert (str(shape), m) == ("6,1/1", 3)
        shape, m = realize_strip(hash_op(t3, t3))
        assert (str(shape), m) == ("3,1/1", 3)


class TestBarAndDoubleStrip:
    def test_bar_examples(self):
        dec = decompose(QSHAPE, QCS)
        t1, t2, t3 = (s.ref for s in dec.strips)
        assert (bar(t3).a, bar(t3).b) == (0, 5)
        assert bar(t1) == t1
        null = StripRef(QCS, 0, -1)
        assert bar(null).is_null

    def test_double_strip_reference_values(self):
        dec = decompose(QSHAPE, QCS)
        t1, t2, t3 = (s.ref for s in dec.strips)
        assert str(double_strip(bar(t1), bar(t2))) == "9,4,3,2/4,3"
        assert str(double_strip(bar(t1), bar(t3))) == "9,6,4,3/4,3"
        assert double_strip(bar(t2), bar(t1)) is None  # non-regular order
        assert double_strip(bar(t1), bar(t1)) is None  # equal pair

    def test_double_strip_contents_unshifted_anchor(self):
        dec = decompose(QSHAPE, QCS)
        t1, t2, _ = (s.ref for s in dec.strips)
        union = double_strip(bar(t1), bar(t2))
        assert min(j - i for (i, j) in union.cells) == 0


class TestBracketMachinery:
    def test_merge_pairs_reference_example(self):
        diagonal, matched = merge_bracket_pairs(
            StrictPartition((7, 6, 4, 2)), StrictPartition((4, 3))
        )
        assert diagonal == [(0, 6), (0, 1)]
        assert matched == [(3, 5), (4, 3)]

    def test_frobenius_pairs_large_example(self):
        lam = Partition((10, 10, 7, 7, 7, 6, 6, 4, 4, 1))
        mu = Partition((6, 6, 5, 3, 3, 3, 1, 1))
        crossing, above, below = frobenius_bracket_pairs(lam, mu)
        assert crossing == [(-9, 9), (-2, 3), (-1, 0)]
        assert above == [(3, 2), (5, 4), (6, 8)]
        assert below == [(-6, -4), (-5, -5), (-7, -8)]

    def test_frobenius_pairs_running_example(self):
        crossing, above, below = frobenius_bracket_pairs(
            Partition((5, 4, 4, 2)), Partition((3, 2))
        )
        assert crossing == [(-3, 4)]
        assert above == [(1, 1), (3, 2)]
        assert below == [(0, -1), (-2, -2)]


class TestStripSpec:
    def test_parse_round_trip(self):
        spec = StripSpec.parse("profile:-3:ENEEENE")
        assert str(spec) == "profile:-3:ENEEENE"
        assert str(StripSpec.parse("hook@2")) == "hook@2"
        assert str(StripSpec.parse("inner")) == "inner"

    def test_bad_specs(self):
        with pytest.raises(ValueError):
            StripSpec.parse("profile:0:EXN")
        with pytest.raises(ValueError):
            StripSpec.parse("spiral")

    def test_shifted_profile_must_start_at_zero(self):
        spec = StripSpec.parse("profile:-1:ENE")
        with pytest.raises(ProfileMismatch):
            spec.build(ShiftedSkewShape(StrictPartition((3, 1)), StrictPartition(())))
