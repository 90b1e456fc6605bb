"""Closed-form coefficients, restriction weights, and recurrence checks."""

import random
from itertools import product

import pytest

import qtsym.coefficients as coefficients
from qtsym.coefficients import (
    C_coefficient,
    C_first_form,
    CValue,
    USpec,
    c_k,
    check_lemma2,
    check_recurrence_5,
    check_remark_recurrence,
    clear_coefficient_cache,
    pieri_psi,
)
from qtsym.errors import DegenerateConfig
from qtsym.rational import QTRational

QV = QTRational.from_monomial(1, 1, 0)
TV = QTRational.from_monomial(1, 0, 1)
ONE = QTRational.one()
ZERO = QTRational.zero()


def random_ladder(rng, n):
    """Theorem-shaped family: weakly decreasing q-exponents over the
    strictly decreasing t-ladder n-1, ..., 0."""
    steps = [rng.randrange(0, 3) for _ in range(n)]
    exps = []
    acc = 0
    for s in reversed(steps):
        acc += s
        exps.append(acc)
    exps.reverse()
    return USpec((exps[i], n - 1 - i) for i in range(n))


class TestUSpec:
    def test_from_partition_uses_gaps_against_last_part(self):
        u = USpec.from_partition((3, 1, 1))
        assert u.pairs == ((2, 1), (0, 0))
        assert len(u) == 2

    def test_from_partition_needs_a_part(self):
        with pytest.raises(ValueError):
            USpec.from_partition(())

    def test_shifts_and_swap(self):
        u = USpec(((2, 1), (0, 0)))
        assert u.shift_q(0, -1).pairs == ((1, 1), (0, 0))
        assert u.shift_all_q(1).pairs == ((3, 1), (1, 0))
        assert u.swapped().pairs == ((1, 2), (0, 0))
        assert u == USpec(((2, 1), (0, 0)))
        assert hash(u) == hash(USpec(((2, 1), (0, 0))))


class TestCCoefficient:
    def test_zero_theta_is_one_fast_path(self):
        v = C_coefficient((0,), USpec.from_partition((3, 1)))
        assert v.value == ONE
        assert not v.regularized

    def test_zero_theta_is_one_regularized_path(self):
        # repeated parts degenerate a determinant row denominator
        v = C_coefficient((0, 0), USpec.from_partition((2, 1, 1)))
        assert v.value == ONE
        assert v.regularized

    def test_hand_value_single_row(self):
        got = C_coefficient((1,), USpec.from_partition((1, 1))).value
        want = -(ONE + QV) * (ONE - TV) / (ONE - QV * TV)
        assert got == want

    def test_negative_theta_is_zero(self):
        v = C_coefficient((1, -1), USpec.from_partition((2, 1, 1)))
        assert v.value == ZERO
        assert not v.regularized

    def test_empty_family(self):
        assert C_coefficient((), USpec(())).value == ONE

    def test_theta_length_must_match(self):
        with pytest.raises(ValueError):
            C_coefficient((1,), USpec.from_partition((2, 1, 1)))

    def test_bad_params_rejected(self):
        with pytest.raises(ValueError):
            C_coefficient((1,), USpec.from_partition((1, 1)), params="qq")

    def test_swapped_params_swap_the_value(self):
        u = USpec.from_partition((2, 1))
        a = C_coefficient((1,), u, params="tq").value
        b = C_coefficient((1,), u.swapped()).value.swap_qt()
        assert a == b

    def test_direction_independence(self):
        for lam in [(2, 2), (2, 2, 2), (3, 1, 1)]:
            u = USpec.from_partition(lam)
            n = len(u)
            for th in product(range(2), repeat=n):
                a = C_coefficient(th, u, direction=tuple(range(1, n + 2)))
                clear_coefficient_cache()
                b = C_coefficient(
                    th, u, direction=tuple(17 * k + 3 for k in range(n + 1))
                )
                clear_coefficient_cache()
                assert a.value == b.value

    def test_direction_must_be_distinct_weights(self):
        u = USpec.from_partition((1, 1))
        with pytest.raises(ValueError):
            C_coefficient((1,), u, direction=(2, 2))

    def test_colliding_shifted_arguments_rejected(self):
        # theta pushes u_2 onto u_1: v_1 = v_2 as monomials
        u = USpec(((1, 0), (0, 0)))
        with pytest.raises(DegenerateConfig):
            C_coefficient((0, 1), u)

    def test_first_form_agrees_on_random_configs(self):
        rng = random.Random(7)
        for _ in range(20):
            n = rng.choice([1, 2, 2, 3])
            u = random_ladder(rng, n)
            th = tuple(rng.randrange(0, 3) for _ in range(n))
            assert C_coefficient(th, u).value == C_first_form(th, u).value

    def test_first_form_validates_like_second(self):
        assert C_first_form((), USpec(())).value == ONE
        assert C_first_form((-1,), USpec(((1, 0),))).value == ZERO
        with pytest.raises(ValueError):
            C_first_form((1, 0), USpec(((1, 0),)))

    def test_qt_collapse_to_signs(self):
        for lam in [(2, 1), (3, 3), (2, 2, 1), (4, 2, 1)]:
            u = USpec.from_partition(lam)
            n = len(u)
            for th in product(range(3), repeat=n):
                val = C_coefficient(th, u).value.specialize_t_to_q()
                if all(x in (0, 1) for x in th):
                    want = QTRational.from_monomial((-1) ** sum(th), 0, 0)
                else:
                    want = ZERO
                assert val == want, (lam, th)

    def test_invariant_under_adding_constant_rows(self):
        rng = random.Random(11)
        for _ in range(10):
            length = rng.choice([2, 3])
            lam = sorted(
                (rng.randrange(0, 5) for _ in range(length)), reverse=True
            )
            th = tuple(rng.randrange(0, 2) for _ in range(length - 1))
            for c in (1, 2):
                shifted = tuple(x + c for x in lam)
                assert USpec.from_partition(lam) == USpec.from_partition(shifted)
                a = C_coefficient(th, USpec.from_partition(lam)).value
                b = C_coefficient(th, USpec.from_partition(shifted)).value
                assert a == b

    def test_json_shape(self):
        v = C_coefficient((1,), USpec.from_partition((1, 1)))
        blob = v.to_json()
        assert set(blob) == {"value", "regularized"}
        assert blob["regularized"] is False
        assert QTRational.from_json(blob["value"]) == v.value
        assert v == CValue(v.value, False)
        assert v != CValue(v.value, True)


class TestRestrictionWeights:
    def test_empty_product(self):
        assert c_k((2, 1), 1) == ONE

    def test_vanishes_when_decrement_breaks_partition(self):
        assert c_k((1, 1), 1) == ZERO
        assert c_k((2, 2), 1) == ZERO

    def test_hand_values(self):
        got = c_k((1, 1), 2)
        want = (ONE - QV) * (ONE - TV * TV) / ((ONE - QV * TV) * (ONE - TV))
        assert got == want
        got = c_k((3, 1), 2)
        want = (ONE - QV**3) / (ONE - QV**3 * TV)
        want = want * (ONE - QV**2 * TV * TV) / (ONE - QV**2 * TV)
        assert got == want

    def test_verbatim_on_non_partition_input(self):
        # (1,2) is not weakly decreasing: no vanishing rule, product as written
        got = c_k((1, 2), 2)
        gap = 1 - 2
        want = (ONE - QTRational.from_monomial(1, gap + 1, 0)) / (
            ONE - QTRational.from_monomial(1, gap + 1, 1)
        )
        want = want * (ONE - QTRational.from_monomial(1, gap, 2)) / (
            ONE - QTRational.from_monomial(1, gap, 1)
        )
        assert got == want

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            c_k((2, 1), 3)
        with pytest.raises(IndexError):
            c_k((2, 1), 0)

    def test_lemma2_identity_spots(self):
        for lam in [(1,), (2,), (1, 1), (2, 1), (2, 2), (3, 1), (2, 1, 1)]:
            assert check_lemma2(lam, nvars=2), lam

    def test_lemma2_identity_three_variables(self):
        assert check_lemma2((2, 1), nvars=3)


class TestPieriPsi:
    def test_empty_base(self):
        assert pieri_psi(2, ()) == {(): ONE}

    def test_zero_theta_entry_is_one(self):
        # present whenever appending a row of size r keeps a partition
        for r, mu in [(1, (1,)), (1, (2, 1)), (1, (1, 1)), (2, (2, 2))]:
            ps = pieri_psi(r, mu)
            zero_theta = (0,) * len(mu)
            assert ps[zero_theta] == ONE

    def test_horizontal_strip_support(self):
        ps = pieri_psi(1, (1, 1))
        assert set(ps) == {(0, 0), (1, 0)}
        ps = pieri_psi(2, (2, 1))
        for th in ps:
            # strip: at most the gap above, first row unbounded
            assert th[1] <= 2 - 1

    def test_negative_row_size_rejected(self):
        with pytest.raises(ValueError):
            pieri_psi(-1, (1,))


class TestRecurrences:
    def test_zero_theta_holds(self):
        for lam in [(1, 1), (2, 1), (2, 1, 1), (2, 2, 2, 1)]:
            u = USpec.from_partition(lam)
            assert check_recurrence_5((0,) * len(u), u)
            assert check_remark_recurrence((0,) * len(u), u)

    def test_recurrence_5_with_shifts(self):
        for lam in [(2, 1, 1), (3, 1, 0)]:
            u = USpec.from_partition(lam)
            n = len(u)
            for th in product(range(3), repeat=n):
                if sum(th) > 2:
                    continue
                assert check_recurrence_5(th, u), (lam, th)

    def test_remark_recurrence_with_shifts(self):
        for lam in [(2, 1, 1), (2, 2, 1)]:
            u = USpec.from_partition(lam)
            n = len(u)
            for th in product(range(3), repeat=n):
                if sum(th) > 2:
                    continue
                assert check_remark_recurrence(th, u), (lam, th)

    def test_theta_length_checked(self):
        u = USpec.from_partition((2, 1, 1))
        with pytest.raises(ValueError):
            check_recurrence_5((1,), u)
        with pytest.raises(ValueError):
            check_remark_recurrence((1,), u)

    def test_corrupted_coefficient_is_detected(self, monkeypatch):
        real = C_coefficient

        def skewed(theta, u, params="qt", direction=None):
            out = real(theta, u, params, direction)
            if sum(theta) == 1:
                return CValue(-out.value, out.regularized)
            return out

        monkeypatch.setattr(coefficients, "C_coefficient", skewed)
        u = USpec.from_partition((2, 1))
        assert not check_recurrence_5((0,), u)
        assert not check_remark_recurrence((1,), u)
