import random

from conftest import (
    brute_force_primed_count,
    brute_force_ssyt_count,
    random_partition,
    random_strict,
    random_strict_sub,
    random_subpartition,
)
from schur9.shapes import Partition, ShiftedSkewShape, SkewShape, StrictPartition
from schur9.tableaux import (
    enumerate_primed,
    enumerate_ssyt,
    qfun9,
    regularize_frobenius,
    regularize_strict,
    schur9,
)
from schur9.weights import (
    map_atoms,
    monomial,
    poly_add,
    poly_eq,
    poly_mul,
    poly_neg,
    specialize,
    substitution,
    classical,
    variable,
    symbol,
    xlevel,
    xvar,
    ylevel,
    yvar,
    ONE,
    WeightPolynomial,
)


class TestEnumerateSSYT:
    def test_single_column_pair(self):
        shape = SkewShape(Partition((1, 1)), Partition(()))
        tabs = list(enumerate_ssyt(shape, 2))
        assert len(tabs) == 1
        assert dict(tabs[0].entries) == {(1, 1): 1, (2, 1): 2}

    def test_two_row_counts(self):
        shape = SkewShape(Partition((2,)), Partition(()))
        tabs = list(enumerate_ssyt(shape, 2))
        assert [dict(t.entries) for t in tabs] == [
            {(1, 1): 1, (1, 2): 1},
            {(1, 1): 1, (1, 2): 2},
            {(1, 1): 2, (1, 2): 2},
        ]

    def test_n_zero(self):
        shape = SkewShape(Partition((2,)), Partition(()))
        assert list(enumerate_ssyt(shape, 0)) == []

    def test_counts_match_filter_oracle(self):
        rng = random.Random(11)
        for _ in range(12):
            lam = random_partition(rng, 6)
            mu = random_subpartition(rng, lam)
            shape = SkewShape(lam, mu)
            if shape.size > 6:
                continue
            n = rng.randint(0, 3)
            assert len(list(enumerate_ssyt(shape, n))) == brute_force_ssyt_count(shape, n)

    def test_yields_are_semistandard(self):
        shape = SkewShape(Partition((3, 2)), Partition((1,)))
        for tab in enumerate_ssyt(shape, 3):
            entry = dict(tab.entries)
            for (i, j), v in entry.items():
                assert entry.get((i, j - 1), 0) <= v
                assert entry.get((i - 1, j), 0) < v


class TestSchur9:
    def test_column_pair_weight(self):
        shape = SkewShape(Partition((1, 1)), Partition(()))
        assert poly_eq(schur9(shape, 2), monomial([xvar(1, 0), xvar(2, -1)]))

    def test_empty_shape(self):
        shape = SkewShape(Partition((2, 1)), Partition((2, 1)))
        assert poly_eq(schur9(shape, 2), ONE)

    def test_row_of_two(self):
        shape = SkewShape(Partition((2,)), Partition(()))
        expected = poly_add(
            poly_add(
                monomial([xvar(1, 0), xvar(1, 1)]),
                monomial([xvar(1, 0), xvar(2, 1)]),
            ),
            monomial([xvar(2, 0), xvar(2, 1)]),
        )
        assert poly_eq(schur9(shape, 2), expected)

    def test_classical_symmetry(self):
        shape = SkewShape(Partition((3, 1)), Partition((1,)))
        value = specialize(schur9(shape, 3), classical())
        for k in (1, 2):
            swapped = map_atoms(
                value,
                lambda atom, k=k: ("X", {k: k + 1, k + 1: k}.get(atom[1], atom[1]))
                if atom[0] == "X"
                else atom,
            )
            assert poly_eq(value, swapped)

    def test_disconnected_product(self):
        # (3,1)/(2) splits into the cells (1,3) and (2,1); the function is
        # the product of the single-box sums at contents 2 and -1
        whole = SkewShape(Partition((3, 1)), Partition((2,)))
        n = 2
        box_a = WeightPolynomial({(("x", k, 2),): 1 for k in (1, 2)})
        box_b = WeightPolynomial({(("x", k, -1),): 1 for k in (1, 2)})
        assert poly_eq(schur9(whole, n), poly_mul(box_a, box_b))


class TestEnumeratePrimed:
    def test_single_box(self):
        shape = ShiftedSkewShape(StrictPartition((1,)), StrictPartition(()))
        tabs = list(enumerate_primed(shape, 1))
        assert [dict(t.entries)[(1, 1)] for t in tabs] == [(1, True), (1, False)]

    def test_hook_count_matches_oracle(self):
        shape = ShiftedSkewShape(StrictPartition((2, 1)), StrictPartition(()))
        assert len(list(enumerate_primed(shape, 1))) == brute_force_primed_count(shape, 1)
        assert len(list(enumerate_primed(shape, 2))) == brute_force_primed_count(shape, 2)

    def test_empty_shape(self):
        shape = ShiftedSkewShape(StrictPartition((2, 1)), StrictPartition((2, 1)))
        assert len(list(enumerate_primed(shape, 2))) == 1

    def test_counts_match_filter_oracle_random(self):
        rng = random.Random(7)
        for _ in range(10):
            lam = random_strict(rng, 6)
            if not lam.parts:
                continue
            mu = random_strict_sub(rng, lam)
            shape = ShiftedSkewShape(lam, mu)
            if shape.size > 5:
                continue
            n = rng.randint(1, 2)
            assert len(list(enumerate_primed(shape, n))) == brute_force_primed_count(shape, n)

    def test_yields_satisfy_rules(self):
        shape = ShiftedSkewShape(StrictPartition((3, 1)), StrictPartition(()))
        for tab in enumerate_primed(shape, 2):
            entry = {
                cell: 2 * k - 1 if primed else 2 * k
                for cell, (k, primed) in tab.entries
            }
            for (i, j), v in entry.items():
                left = entry.get((i, j - 1))
                up = entry.get((i - 1, j))
                if left is not None:
                    assert v > left or (v == left and v % 2 == 0)
                if up is not None:
                    assert v > up or (v == up and v % 2 == 1)


class TestQfun9:
    def test_single_box(self):
        shape = ShiftedSkewShape(StrictPartition((1,)), StrictPartition(()))
        expected = poly_add(monomial([xvar(1, 0)]), monomial([yvar(1, 0)]))
        assert poly_eq(qfun9(shape, 1), expected)

    def test_empty(self):
        shape = ShiftedSkewShape(StrictPartition((2, 1)), StrictPartition((2, 1)))
        assert poly_eq(qfun9(shape, 2), ONE)

    def test_known_term_appears(self):
        # One term of Q for (9,6,4,2)/(4,3) at n=4 is the weight of a
        # reference tableau; every valid tableau contributes +1, so validity
        # of the filling guarantees the monomial has a positive coefficient.
        filling = {
            (1, 5): (1, False), (1, 6): (2, True), (1, 7): (2, False),
            (1, 8): (4, True), (1, 9): (4, False),
            (2, 5): (3, True), (2, 6): (3, False), (2, 7): (3, False),
            (3, 3): (2, False), (3, 4): (2, False), (3, 5): (3, True), (3, 6): (4, False),
            (4, 4): (4, True), (4, 5): (4, False),
        }
        shape = ShiftedSkewShape(StrictPartition((9, 6, 4, 2)), StrictPartition((4, 3)))
        assert set(filling) == set(shape.cells)
        encoded = {c: 2 * k - (1 if primed else 0) for c, (k, primed) in filling.items()}
        for (i, j), v in encoded.items():
            left, up = encoded.get((i, j - 1)), encoded.get((i - 1, j))
            if left is not None:
                assert v > left or (v == left and v % 2 == 0)
            if up is not None:
                assert v > up or (v == up and v % 2 == 1)
        weight = monomial(
            [
                ("y" if primed else "x", k, j - i)
                for (i, j), (k, primed) in filling.items()
            ]
        )
        expected = monomial(
            [
                ("x", 2, 0), ("x", 2, 1), ("y", 3, 2), ("y", 3, 3), ("x", 1, 4),
                ("y", 2, 5), ("x", 2, 6), ("y", 4, 7), ("x", 4, 8),
                ("y", 4, 0), ("x", 4, 1),
                ("x", 4, 3), ("x", 3, 4), ("x", 3, 5),
            ]
        )
        assert poly_eq(weight, expected)

    def test_supersymmetry_cancellation(self):
        # setting x_1 = t and y_1 = -t leaves no t dependence
        shape = ShiftedSkewShape(StrictPartition((3, 1)), StrictPartition(()))
        t = variable(symbol("t"))
        mapping = {}
        for c in range(-1, 6):
            mapping[("x", 1, c)] = t
            mapping[("y", 1, c)] = poly_neg(t)
            for k in (2, 3):
                mapping[("x", k, c)] = variable(xlevel(k))
                mapping[("y", k, c)] = variable(ylevel(k))
        value = specialize(qfun9(shape, 3), substitution(mapping))
        assert all(
            all(atom[0] != "t" for atom in mono) for mono in value.terms
        ), "positive powers of t must cancel"


class TestRegularization:
    def test_strict_examples(self):
        assert regularize_strict((6, 7)).sign == -1
        assert regularize_strict((6, 7)).label.parts == (7, 6)
        assert regularize_strict((4, 4, 1)).sign == 0
        reg = regularize_strict((7, 6, 4, 2))
        assert (reg.sign, reg.label.parts) == (1, (7, 6, 4, 2))

    def test_frobenius_examples(self):
        reg = regularize_frobenius((2, 4, 1), (3, 2, 0))
        assert reg.sign == -1
        assert (reg.label.arms, reg.label.legs) == ((4, 2, 1), (3, 2, 0))
        assert regularize_frobenius((2, 2), (1, 0)).sign == 0
        reg = regularize_frobenius((4, 2), (3, 1))
        assert reg.sign == 1

    def test_sign_matches_permutation_parity(self):
        import itertools

        base = (5, 3, 1)
        for perm_indices in itertools.permutations(range(3)):
            raw = tuple(base[i] for i in perm_indices)
            inversions = sum(
                1
                for a in range(3)
                for b in range(a + 1, 3)
                if perm_indices[a] > perm_indices[b]
            )
            reg = regularize_strict(raw)
            assert reg.label.parts == base
            assert reg.sign == (-1) ** inversions


class TestStripFunctions:
    def test_null_and_empty(self):
        from schur9.strips import StripRef, StripSpec
        from schur9.tableaux import strip_q, strip_schur
        from schur9.shapes import Partition, SkewShape

        shape = SkewShape(Partition((5, 4, 4, 2)), Partition((3, 2)))
        phi = StripSpec.parse("profile:-3:ENEEENE").build(shape)
        assert poly_eq(strip_schur(StripRef(phi, 2, 1), 0, 3), ONE)
        assert not strip_schur(StripRef(phi, 2, 0), 0, 3)
        assert poly_eq(strip_q(StripRef(phi, 2, 1), 0, 2), ONE)

    def test_single_box_shifted_by_one(self):
        # theta_3 # theta_1 = phi[1,1] realizes as one box at content 1
        from schur9.strips import StripRef, StripSpec
        from schur9.tableaux import strip_schur
        from schur9.shapes import Partition, SkewShape

        shape = SkewShape(Partition((5, 4, 4, 2)), Partition((3, 2)))
        phi = StripSpec.parse("profile:-3:ENEEENE").build(shape)
        value = strip_schur(StripRef(phi, 1, 1), 1, 3)
        expected = WeightPolynomial({(("x", k, 1),): 1 for k in (1, 2, 3)})
        assert poly_eq(value, expected)
