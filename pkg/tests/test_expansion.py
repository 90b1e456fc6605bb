"""Expansion theorems, their linear-algebra oracles, and degenerations."""

from itertools import product

import pytest

from qtsym.coefficients import C_coefficient, USpec
from qtsym.expansion import (
    ExpansionTerm,
    ThetaMatrix,
    inverse_pieri_oracle,
    jacobi_trudi,
    part_multiplicities,
    raising_action,
    reconstruct_e_expansion,
    reconstruct_g_expansion,
    reconstruct_theorem1,
    reconstruct_theorem2,
    schur_check,
    theorem1_excluded_terms,
    theorem1_expand,
    theorem2_excluded_terms,
    theorem2_expand,
    theorem3_expand,
    theorem4_expand,
)
from qtsym.partitions import conjugate, partitions_of
from qtsym.rational import QTRational
from qtsym.symfunc import (
    SymFunc,
    complete,
    expand_in_Q_basis,
    expand_in_g_basis,
    macdonald_P,
    macdonald_Q,
    modified_complete,
    omega,
    specialize_t_to_q,
    swap_params,
)

ONE = QTRational.one()
ZERO = QTRational.zero()


class TestTypes:
    def test_expansion_term_shape(self):
        term = ExpansionTerm((1, 0), ONE, 2, (3, 1))
        blob = term.to_json()
        assert blob == {
            "theta": [1, 0],
            "coefficient": ONE.to_json(),
            "row": 2,
            "target": [3, 1],
        }
        assert term == ExpansionTerm((1, 0), ONE, 2, (3, 1))
        assert term != ExpansionTerm((0, 1), ONE, 2, (3, 1))

    def test_theta_matrix_validation(self):
        m = ThetaMatrix(((0, 2, 1), (0, 0, 3), (0, 0, 0)))
        assert m.size() == 3
        assert m.column(2) == (1, 3)
        assert m.row_sum_from(0, 1) == 3
        with pytest.raises(ValueError):
            ThetaMatrix(((0, 1), (1, 0)))
        with pytest.raises(ValueError):
            ThetaMatrix(((0, -1), (0, 0)))
        with pytest.raises(ValueError):
            ThetaMatrix(((0, 1, 0), (0, 0, 0)))

    def test_raising_action(self):
        m = ThetaMatrix(((0, 2, 1), (0, 0, 3), (0, 0, 0)))
        assert raising_action((5, 4, 4), m) == (5 + 3, 4 + 3 - 2, 4 - 4)
        with pytest.raises(ValueError):
            raising_action((1, 2), m)

    def test_part_multiplicities(self):
        assert part_multiplicities((2, 2, 1)) == (1, 2)
        assert part_multiplicities((2, 2, 1), max_part=3) == (1, 2, 0)
        assert part_multiplicities(()) == (0,)
        with pytest.raises(ValueError):
            part_multiplicities((3, 1), max_part=2)


class TestTheorem1:
    def test_single_row(self):
        terms = theorem1_expand((3,))
        assert len(terms) == 1
        assert terms[0].theta == ()
        assert terms[0].coefficient == ONE
        assert terms[0].row == 3
        assert terms[0].target == ()

    def test_padded_single_row(self):
        terms = theorem1_expand((3, 0, 0))
        assert len(terms) == 1
        assert terms[0].row == 0
        assert terms[0].target == (3,)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            theorem1_expand(())
        with pytest.raises(ValueError):
            theorem1_expand((1, 2))

    def test_two_rows_match_oracle(self):
        terms = theorem1_expand((1, 1))
        oracle = inverse_pieri_oracle((1, 1))
        assert len(oracle) == 2
        assert oracle[(0,)] == ONE
        assert {t.theta for t in terms} == set(oracle)
        for t in terms:
            assert t.coefficient == oracle[t.theta]

    def test_qt_collapse_is_last_row_determinant(self):
        terms = theorem1_expand((2, 1))
        got = {
            t.theta: (t.coefficient.specialize_t_to_q(), t.row, t.target)
            for t in terms
        }
        assert got == {(0,): (ONE, 1, (2,)), (1,): (-ONE, 0, (3,))}

    def test_reconstruction_identity(self):
        for lam in [(1, 1), (2, 2), (2, 1, 1), (3, 2, 1), (2, 2, 2), (3, 1, 0)]:
            recon = reconstruct_theorem1(theorem1_expand(lam))
            assert recon == macdonald_Q(tuple(p for p in lam if p)), lam

    def test_padding_changes_terms_not_the_sum(self):
        short = reconstruct_theorem1(theorem1_expand((2, 1)))
        padded = reconstruct_theorem1(theorem1_expand((2, 1, 0)))
        assert short == padded
        assert len(theorem1_expand((2, 1))) != len(theorem1_expand((2, 1, 0)))

    def test_excluded_terms_are_nonzero_and_unneeded(self):
        excluded = theorem1_excluded_terms((2, 2, 1))
        assert excluded, "expected nonzero non-partition-target terms"
        for term in excluded:
            assert not term.coefficient.is_zero()
            assert list(term.target) != sorted(term.target, reverse=True)
        assert reconstruct_theorem1(theorem1_expand((2, 2, 1))) == macdonald_Q(
            (2, 2, 1)
        )

    def test_terms_sorted_and_nonzero(self):
        terms = theorem1_expand((2, 2, 2))
        keys = [(sum(t.theta), t.theta) for t in terms]
        assert keys == sorted(keys)
        assert all(not t.coefficient.is_zero() for t in terms)

    def test_round_trip_in_dual_basis(self):
        for lam in [(2, 1), (2, 2), (2, 1, 1)]:
            collected = {}
            for term in theorem1_expand(lam):
                product = modified_complete(term.row) * macdonald_Q(term.target)
                for kappa, c in expand_in_Q_basis(product).items():
                    total = collected.get(kappa, ZERO) + c * term.coefficient
                    if total.is_zero():
                        collected.pop(kappa, None)
                    else:
                        collected[kappa] = total
            assert collected == {lam: ONE}, lam


class TestInversePieri:
    def test_single_row(self):
        assert inverse_pieri_oracle((4,)) == {(): ONE}

    def test_normalization_emerges(self):
        for lam in [(2, 1), (2, 2), (2, 1, 1)]:
            oracle = inverse_pieri_oracle(lam)
            assert oracle[(0,) * (len(lam) - 1)] == ONE, lam

    def test_termwise_against_coefficients(self):
        lam = (2, 2, 1)
        oracle = inverse_pieri_oracle(lam)
        u = USpec.from_partition(lam)
        for theta, want in oracle.items():
            if sum(theta) > 1:
                continue
            assert C_coefficient(theta, u).value == want, theta


class TestTheorem2:
    def test_single_column(self):
        terms = theorem2_expand((3,))
        assert len(terms) == 1
        assert terms[0].row == 3
        assert terms[0].target == ()

    def test_reconstruction(self):
        for lam in [(1, 1), (2, 1), (2, 2, 1), (3, 2, 1)]:
            ms = part_multiplicities(lam)
            recon = reconstruct_theorem2(theorem2_expand(ms))
            assert recon == macdonald_P(lam), lam

    def test_termwise_duality_with_first_theorem(self):
        for lam in [(2, 1), (2, 2), (2, 1, 1)]:
            ms = part_multiplicities(lam)
            duals = {t.theta: t for t in theorem1_expand(conjugate(lam))}
            terms = theorem2_expand(ms)
            assert {t.theta for t in terms} == set(duals)
            for term in terms:
                mate = duals[term.theta]
                assert term.coefficient == mate.coefficient.swap_qt()
                assert term.row == mate.row
                assert term.target == conjugate(mate.target)

    def test_excluded_reported_as_multiplicity_vectors(self):
        excluded = theorem2_excluded_terms((0, 1, 2))
        assert excluded, "expected terms with a negative multiplicity"
        for term in excluded:
            assert not term.coefficient.is_zero()
            assert any(m < 0 for m in term.target)
        ms = part_multiplicities((3, 3, 2))
        recon = reconstruct_theorem2(theorem2_expand(ms))
        assert recon == macdonald_P((3, 3, 2))

    def test_input_validation(self):
        with pytest.raises(ValueError):
            theorem2_expand(())
        with pytest.raises(ValueError):
            theorem2_expand((1, -1))


class TestTheorem3:
    def test_single_row(self):
        assert theorem3_expand((4,)) == {(4,): ONE}

    def test_qt_collapse_two_rows(self):
        exp = theorem3_expand((2, 1))
        collapsed = {mu: c.specialize_t_to_q() for mu, c in exp.items()}
        assert collapsed == {(2, 1): ONE, (3,): -ONE}

    def test_matches_linear_solve(self):
        for lam in [(1, 1), (2, 2), (2, 1, 1), (3, 2, 1), (2, 2, 1)]:
            assert theorem3_expand(lam) == expand_in_g_basis(macdonald_Q(lam)), lam

    def test_reconstruction(self):
        exp = theorem3_expand((2, 2))
        assert reconstruct_g_expansion(exp) == macdonald_Q((2, 2))

    def test_single_step_iteration_reproduces_it(self):
        # peeling the last row once and expanding the two-row remainders
        # must aggregate to the matrix-sum output
        lam = (2, 1, 1)
        collected = {}
        for term in theorem1_expand(lam):
            inner = theorem3_expand(term.target + (0,) * (2 - len(term.target)))
            for mu, c in inner.items():
                key = tuple(
                    sorted((k for k in mu + (term.row,) if k), reverse=True)
                )
                total = collected.get(key, ZERO) + c * term.coefficient
                if total.is_zero():
                    collected.pop(key, None)
                else:
                    collected[key] = total
        assert collected == theorem3_expand(lam)


class TestTheorem4:
    def test_single_column(self):
        assert theorem4_expand((3,)) == {(3,): ONE}

    def test_matches_swapped_dual(self):
        for lam in [(1, 1), (2, 1), (2, 2), (2, 1, 1), (3, 2, 1)]:
            ms = part_multiplicities(lam)
            want = {
                mu: c.swap_qt() for mu, c in theorem3_expand(conjugate(lam)).items()
            }
            assert theorem4_expand(ms) == want, lam

    def test_reconstruction(self):
        for lam in [(2, 1), (2, 2, 1)]:
            ms = part_multiplicities(lam)
            assert reconstruct_e_expansion(theorem4_expand(ms)) == macdonald_P(lam)


class TestSchurDegeneration:
    def test_jacobi_trudi_hand_values(self):
        assert jacobi_trudi((1,)) == complete(1)
        want = complete(2) * complete(1) - complete(3)
        assert jacobi_trudi((2, 1)) == want
        assert jacobi_trudi(()) == SymFunc.one()

    def test_jacobi_trudi_negative_index_rows_drop(self):
        # (1,1): det [[h1, h2], [h0, h1]] = h1 h1 - h2
        want = complete(1) * complete(1) - complete(2)
        assert jacobi_trudi((1, 1)) == want

    def test_schur_check_spots(self):
        for lam in [(1,), (2, 1), (2, 2), (3, 2, 1), (4, 2)]:
            assert schur_check(lam), lam

    def test_omega_duality_of_reconstruction(self):
        for lam in [(2, 1), (2, 2, 1)]:
            recon = reconstruct_theorem1(theorem1_expand(lam))
            assert swap_params(omega(recon)) == macdonald_P(conjugate(lam)), lam
