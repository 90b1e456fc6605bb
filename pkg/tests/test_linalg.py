"""Tests for exact determinants, solving, and inversion."""

import random
from fractions import Fraction

import pytest

from qtsym import Q, QTPolynomial, QTRational, SingularSystem
from qtsym.linalg import invert_matrix, ring_det, solve_linear

Q_VAR = QTRational.from_monomial(1, 1, 0)
T_VAR = QTRational.from_monomial(1, 0, 1)
ONE = QTRational.one()


def test_det_small():
    assert ring_det([[Fraction(3)]]) == 3
    assert ring_det([[1, 2], [3, 4]]) == -2
    assert ring_det([[0, 1], [1, 0]]) == -1


def test_det_matches_permutation_expansion():
    rng = random.Random(5)
    for n in range(2, 5):
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        expected = _perm_det(rows)
        assert ring_det(rows) == expected


def _perm_det(rows):
    from itertools import permutations

    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += sign * prod
    return total


def test_det_vandermonde_polynomial():
    # Vandermonde in 1, t, t^2 must factor as the product of differences
    xs = [QTPolynomial.one(), QTPolynomial.var_t(), QTPolynomial.var_t() ** 2]
    rows = [[x ** j for j in range(3)] for x in xs]
    det = ring_det(rows)
    expected = QTPolynomial.one()
    for i in range(3):
        for j in range(i + 1, 3):
            expected = expected * (xs[j] - xs[i])
    assert det == expected


def test_det_multilinearity_rational():
    rng = random.Random(11)

    def rand_rat():
        num = QTPolynomial({(rng.randint(0, 2), rng.randint(0, 2)): Q(rng.randint(1, 3))})
        return QTRational(num, QTPolynomial.one())

    rows = [[rand_rat() for _ in range(3)] for _ in range(3)]
    scaled = [list(rows[0]), [T_VAR * x for x in rows[1]], list(rows[2])]
    assert ring_det(scaled) == T_VAR * ring_det(rows)


def test_det_rejects_nonsquare():
    with pytest.raises(ValueError):
        ring_det([[1, 2]])
    with pytest.raises(ValueError):
        ring_det([])


def test_solve_exact():
    a = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    b = [Fraction(5), Fraction(10)]
    x = solve_linear(a, b)
    assert x == [Fraction(1), Fraction(3)]


def test_solve_overdetermined_consistent():
    a = [
        [Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1)],
        [Fraction(1), Fraction(1)],
    ]
    b = [Fraction(2), Fraction(3), Fraction(5)]
    assert solve_linear(a, b) == [Fraction(2), Fraction(3)]


def test_solve_overdetermined_inconsistent():
    a = [
        [Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1)],
        [Fraction(1), Fraction(1)],
    ]
    b = [Fraction(2), Fraction(3), Fraction(6)]
    with pytest.raises(SingularSystem):
        solve_linear(a, b)


def test_solve_rank_deficient():
    a = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    with pytest.raises(SingularSystem):
        solve_linear(a, [Fraction(1), Fraction(2)])


def test_solve_rational_function_entries():
    a = [[ONE, Q_VAR], [T_VAR, ONE]]
    x0 = (ONE - Q_VAR) / (ONE - T_VAR)
    x1 = Q_VAR * T_VAR + ONE
    b = [a[0][0] * x0 + a[0][1] * x1, a[1][0] * x0 + a[1][1] * x1]
    assert solve_linear(a, b) == [x0, x1]


def test_invert_matrix_integer():
    rows = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    inv = invert_matrix(rows, Fraction(1))
    assert inv == [[Fraction(1), Fraction(-1)], [Fraction(-1), Fraction(2)]]


def test_invert_matrix_roundtrip_rational():
    rng = random.Random(23)
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            num = QTPolynomial(
                {(rng.randint(0, 1), rng.randint(0, 1)): Q(rng.randint(1, 3))}
            )
            row.append(QTRational(num, QTPolynomial.one()))
        rows.append(row)
    if not ring_det(rows).is_zero():
        inv = invert_matrix(rows, ONE)
        for i in range(3):
            for j in range(3):
                acc = QTRational.zero()
                for k in range(3):
                    acc = acc + rows[i][k] * inv[k][j]
                assert acc == (ONE if i == j else QTRational.zero())


def test_invert_singular():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    with pytest.raises(SingularSystem):
        invert_matrix(rows, Fraction(1))
