"""Difference operators, the determinant kernel, and its functional equations."""

import random

import pytest

from qtsym import (
    PolyInVars,
    QTRational,
    expand_in_variables,
    macdonald_P,
    monomial_sym,
    vandermonde,
)
from qtsym.errors import (
    DegenerateConfig,
    IdentityViolated,
    NotDivisible,
    NotSymmetric,
)
from qtsym.operators import (
    APolynomial,
    apply_D,
    apply_E,
    check_lemma1,
    d_eigenvalue,
    e_eigenvalue,
    kernel_det,
    sample_kernel_config,
)
from qtsym.partitions import partitions_of
from qtsym.rational import Q

QV = QTRational.from_monomial(1, 1, 0)
TV = QTRational.from_monomial(1, 0, 1)
ONE = QTRational.one()
ZERO = QTRational.zero()


def rat(num, den=1):
    return QTRational(Q(num, den))


class TestAPolynomial:
    def test_truncates_trailing_zeros(self):
        p = APolynomial([ONE, ZERO, ZERO])
        assert p.degree() == 0
        assert not APolynomial([ZERO]).coeffs

    def test_arithmetic(self):
        p = APolynomial([ONE, QV])
        q = APolynomial([TV, ZERO, ONE])
        assert (p + q).coeffs == [ONE + TV, QV, ONE]
        assert (p - p).is_zero()
        prod = p * q
        assert prod.coeffs == [TV, QV * TV, ONE, QV]
        assert (p * APolynomial.zero()).is_zero()
        assert p.scale(TV).coeffs == [TV, QV * TV]

    def test_coeff_out_of_range_is_zero(self):
        p = APolynomial([QV])
        assert p.coeff(5) == ZERO
        assert p.coeff(0) == QV

    def test_evaluate(self):
        p = APolynomial([ONE, QV, TV])
        x = rat(2)
        assert p.evaluate(x) == ONE + QV * x + TV * x * x
        assert APolynomial.zero().evaluate(x) == ZERO

    def test_div_one_plus_a_roundtrip(self):
        base = APolynomial([QV, TV, ONE + QV])
        prod = base * APolynomial([ONE, ONE])
        assert prod.div_one_plus_a() == base
        assert APolynomial.zero().div_one_plus_a().is_zero()

    def test_div_one_plus_a_rejects_nonroot(self):
        with pytest.raises(NotDivisible):
            APolynomial([ONE, ONE, ONE]).div_one_plus_a()

    def test_equality_and_str(self):
        assert APolynomial([ONE]) == APolynomial.one()
        assert APolynomial([ONE]) != APolynomial([TV])
        assert str(APolynomial.zero()) == "0"
        assert "a^2" in str(APolynomial([ONE, ONE, ONE]))


class TestRowOperator:
    def test_constant_input(self):
        f = PolyInVars.one(3)
        assert apply_E(f) == f.scale(ONE + TV + TV**2)

    def test_linear_input(self):
        f = expand_in_variables(macdonald_P((1,)), 2)
        assert apply_E(f) == f.scale(QV * TV + ONE)

    def test_single_variable(self):
        f = expand_in_variables(macdonald_P((3,)), 1)
        assert apply_E(f) == f.scale(QV**3)

    def test_asymmetric_input_rejected(self):
        with pytest.raises(NotSymmetric):
            apply_E(PolyInVars.variable(2, 0))

    def test_eigenvalue_formula(self):
        assert e_eigenvalue((2, 1), 3) == QV**2 * TV**2 + QV * TV + ONE
        assert e_eigenvalue((5,), 1) == QV**5
        assert e_eigenvalue((), 2) == TV + ONE

    def test_eigen_equation_all_small(self):
        for n in (1, 2, 3):
            for weight in range(1, 6):
                for parts in partitions_of(weight):
                    if len(parts) > n:
                        continue
                    f = expand_in_variables(macdonald_P(parts), n)
                    assert apply_E(f) == f.scale(e_eigenvalue(parts, n)), parts


class TestDeterminantOperator:
    def test_constant_input(self):
        one2 = PolyInVars.one(2)
        assert apply_D(one2) == [one2, one2.scale(ONE + TV), one2.scale(TV)]

    def test_linear_input(self):
        f = expand_in_variables(macdonald_P((1,)), 2)
        assert apply_D(f) == [f, f.scale(ONE + QV * TV), f.scale(QV * TV)]

    def test_asymmetric_input_rejected(self):
        with pytest.raises(NotSymmetric):
            apply_D(PolyInVars.variable(2, 1))

    def test_eigenvalue_formula(self):
        ev = d_eigenvalue((1,), 2)
        assert ev.coeffs == [ONE, ONE + QV * TV, QV * TV]
        assert d_eigenvalue((), 1).coeffs == [ONE, ONE]

    def test_eigen_equation_all_small(self):
        for n in (1, 2, 3):
            for weight in range(1, 6):
                for parts in partitions_of(weight):
                    if len(parts) > n:
                        continue
                    f = expand_in_variables(macdonald_P(parts), n)
                    ev = d_eigenvalue(parts, n)
                    assert ev.degree() == n
                    got = apply_D(f)
                    assert got == [
                        f.scale(ev.coeff(k)) for k in range(n + 1)
                    ], parts

    def test_polynomial_on_all_symmetric_inputs(self):
        for n in (1, 2, 3):
            for weight in range(0, 7):
                for parts in partitions_of(weight):
                    if len(parts) > n:
                        continue
                    f = expand_in_variables(monomial_sym(parts), n)
                    for piece in apply_D(f):
                        assert isinstance(piece, PolyInVars)
                    assert isinstance(apply_E(f), PolyInVars)


class TestKernel:
    def test_single_entry_formula(self):
        u1, v1 = rat(2), rat(3)
        h = kernel_det((u1,), (v1,), TV)
        assert h == APolynomial(
            [ONE, TV * (u1 - v1) * (TV * u1 - v1).inverse()]
        )

    def test_rejects_bad_shapes(self):
        with pytest.raises(ValueError):
            kernel_det((), (), TV)
        with pytest.raises(ValueError):
            kernel_det((ONE,), (ONE, TV), TV)

    def test_degenerate_denominator(self):
        with pytest.raises(DegenerateConfig):
            kernel_det((ONE,), (TV,), TV)

    def test_degenerate_duplicate_family(self):
        u = (rat(2), rat(3))
        v = (rat(5), rat(5))
        with pytest.raises(DegenerateConfig):
            kernel_det(u, v, rat(7))

    def test_value_at_zero_is_one(self):
        rng = random.Random(20260819)
        for k in range(9):
            us, vs = sample_kernel_config(rng, 1 + k % 3)
            assert kernel_det(us, vs, TV).coeff(0) == ONE

    def test_vanishes_at_minus_one_on_row_configs(self):
        rng = random.Random(31)
        for k in range(15):
            us, vs = sample_kernel_config(rng, 1 + k % 3)
            h = kernel_det(us, vs, TV)
            assert h.evaluate(-ONE).is_zero()
            h.div_one_plus_a()

    def test_shift_coherence(self):
        rng = random.Random(47)
        checked = 0
        attempts = 0
        while checked < 20:
            attempts += 1
            assert attempts < 2000
            n = 1 + attempts % 3
            q0 = rat(rng.randint(1, 9) * rng.choice((1, -1)), rng.randint(1, 9))
            t0 = rat(rng.randint(1, 9) * rng.choice((1, -1)), rng.randint(1, 9))
            if q0 == ZERO or t0 == ZERO:
                continue
            u = [rat(rng.randint(1, 9) * rng.choice((1, -1)), rng.randint(1, 9)) for _ in range(n)]
            last = rat(rng.randint(1, 9), rng.randint(1, 9))
            v = [rat(rng.randint(1, 9) * rng.choice((1, -1)), rng.randint(1, 9)) for _ in range(n)]
            try:
                lhs = kernel_det(
                    tuple(u) + (last / q0,), tuple(v) + (ZERO,), t0
                )
                rhs = kernel_det(
                    tuple(q0 * x for x in u) + (last,),
                    tuple(q0 * y for y in v) + (ZERO,),
                    t0,
                )
            except DegenerateConfig:
                continue
            assert lhs == rhs
            checked += 1


class TestFunctionalEquations:
    def test_report_shape(self):
        report = check_lemma1(1, 4, seed=5)
        assert report == [
            {"lemma": "1i", "n": 1, "samples": 4, "failures": []},
            {"lemma": "1ii", "n": 1, "samples": 4, "failures": []},
        ]

    def test_two_rows(self):
        report = check_lemma1(2, 4, seed=6)
        assert all(not entry["failures"] for entry in report)

    def test_three_rows(self):
        report = check_lemma1(3, 2, seed=7)
        assert all(not entry["failures"] for entry in report)

    def test_rejects_zero_rows(self):
        with pytest.raises(ValueError):
            check_lemma1(0, 1, seed=1)

    def test_corrupted_kernel_is_detected(self, monkeypatch):
        import qtsym.operators as ops

        real = ops.kernel_det
        monkeypatch.setattr(
            ops, "kernel_det", lambda u, v, tval: real(u, v, tval).scale(u[0])
        )
        with pytest.raises(IdentityViolated):
            ops.check_lemma1(1, 6, seed=9)
