import numpy as np
import pytest

from hardyops.fourier.series import CoeffSeries
from hardyops.inner.functions import blaschke, singular_inner
from hardyops.operators.classical import (
    HankelVariant,
    ShiftKind,
    dual_toeplitz,
    hankel,
    rank_one,
    shift_matrix,
    toeplitz,
)
from hardyops.spaces.bases import BasisKind, conj_h02_basis, monomial_basis
from hardyops.utils.domain_exceptions import BasisMismatch, NotFiniteBlaschke


def test_toeplitz_entries():
    built = toeplitz(CoeffSeries(-1, [1, 2, 3]), 3)

    np.testing.assert_array_equal(built.entries, [[2, 1, 0], [3, 2, 1], [0, 3, 2]])
    assert built.domain == monomial_basis(3, 0)


def test_rectangular_toeplitz():
    built = toeplitz(CoeffSeries(-1, [1, 2, 3]), 2, 3)

    np.testing.assert_array_equal(built.entries, [[2, 1, 0], [3, 2, 1]])


def test_hankel_entries():
    built = hankel(CoeffSeries(-3, [3, 2, 1]), 3)

    np.testing.assert_array_equal(built.entries, [[1, 2, 3], [2, 3, 0], [3, 0, 0]])
    assert built.codomain == monomial_basis(3, 0)


def test_hankel_hat_lands_in_conj_h02():
    built = hankel(CoeffSeries(-3, [3, 2, 1]), 3, HankelVariant.HAT)

    assert built.codomain == conj_h02_basis(3, 0)
    np.testing.assert_array_equal(built.entries, hankel(CoeffSeries(-3, [3, 2, 1]), 3).entries)


def test_hankel_ignores_analytic_coefficients():
    built = hankel(CoeffSeries(0, [5, 6, 7]), 3)

    assert not built.entries.any()


def test_dual_toeplitz_entries():
    built = dual_toeplitz(CoeffSeries(-1, [1, 2, 3]), 3)

    np.testing.assert_array_equal(built.entries, [[2, 3, 0], [1, 2, 3], [0, 1, 2]])
    assert built.domain.kind is BasisKind.CONJ_H02


def test_tail_bound_becomes_entry_error():
    built = toeplitz(CoeffSeries(0, [1.0], 1e-6, certified=False), 2)

    assert built.entry_error == 1e-6
    assert not built.certified


def test_forward_shift_is_subdiagonal():
    built = shift_matrix(ShiftKind.FORWARD_S, 3)

    np.testing.assert_array_equal(built.entries, np.eye(3, k=-1))


def test_compressed_shift_of_monomial_theta():
    built = shift_matrix(ShiftKind.COMPRESSED_S_THETA, 0, inner=blaschke(0, 0, 0), order=10)

    np.testing.assert_allclose(built.entries, np.eye(3, k=-1), atol=1e-15)


def test_compressed_shift_has_the_zeros_of_theta_as_eigenvalues():
    built = shift_matrix(ShiftKind.COMPRESSED_S_THETA, 0, inner=blaschke(0.5, 0.3j), order=120)

    eigenvalues = np.sort_complex(np.linalg.eigvals(built.entries))

    np.testing.assert_allclose(eigenvalues, np.sort_complex(np.array([0.5, 0.3j])), atol=1e-10)


def test_beurling_shift_is_subdiagonal():
    built = shift_matrix(ShiftKind.BEURLING_S_ETA, 4, inner=blaschke(0.5), order=20)

    np.testing.assert_array_equal(built.entries, np.eye(4, k=-1))
    assert built.domain.kind is BasisKind.BEURLING


def test_shifts_need_inner_function():
    with pytest.raises(BasisMismatch):
        shift_matrix(ShiftKind.BEURLING_S_ETA, 3)


def test_compressed_shift_needs_finite_blaschke():
    with pytest.raises(NotFiniteBlaschke):
        shift_matrix(ShiftKind.COMPRESSED_S_THETA, 0, inner=singular_inner(0.0, 1.0), order=10)


def test_rank_one_outer_product():
    built = rank_one(
        CoeffSeries.monomial(0),
        CoeffSeries.monomial(1),
        monomial_basis(3, 0),
        monomial_basis(2, 0),
    )

    np.testing.assert_array_equal(built.entries, [[0, 1, 0], [0, 0, 0]])


def test_rank_one_conjugates_right_vector():
    built = rank_one(
        CoeffSeries.monomial(0),
        CoeffSeries.monomial(0, 1j),
        monomial_basis(1, 0),
        monomial_basis(1, 0),
    )

    assert built.entries[0, 0] == -1j


def test_f_level_needs_beurling_domain():
    with pytest.raises(BasisMismatch):
        rank_one(
            CoeffSeries.monomial(0),
            CoeffSeries.monomial(0),
            monomial_basis(2, 0),
            monomial_basis(2, 0),
            f_level=True,
        )
