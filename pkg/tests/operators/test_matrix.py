import numpy as np
import pytest

from hardyops.fourier.series import CoeffSeries
from hardyops.inner.functions import blaschke
from hardyops.operators.matrix import (
    OperatorMatrix,
    adjoint,
    bandwidth,
    compose,
    conjugate,
    difference_norm,
    intersect_windows,
    pair,
)
from hardyops.spaces.bases import conj_h02_basis, model_basis, monomial_basis
from hardyops.utils.domain_exceptions import BasisMismatch, WindowTooSmall


def matrix(entries, error=0.0):
    entries = np.asarray(entries, dtype=complex)
    rows, cols = entries.shape
    return OperatorMatrix(entries, monomial_basis(cols, 0), monomial_basis(rows, 0), error)


def test_shape_must_match_bases():
    with pytest.raises(BasisMismatch):
        OperatorMatrix(np.zeros((2, 3)), monomial_basis(2, 0), monomial_basis(2, 0))


def test_entries_are_read_only_copies():
    source = np.eye(2)
    built = matrix(source)
    source[0, 0] = 5

    assert built.entries[0, 0] == 1
    with pytest.raises(ValueError):
        built.entries[0, 0] = 2


def test_negative_entry_error_is_rejected():
    with pytest.raises(ValueError):
        matrix(np.eye(2), error=-1.0)


def test_trusted_window_defaults_to_whole_matrix():
    built = matrix(np.ones((2, 3)))

    assert built.trusted_window() == ((0, 2), (0, 3))
    assert built.frobenius() == pytest.approx(np.sqrt(6))


def test_trusted_block_slices_entries():
    built = OperatorMatrix(
        np.arange(6).reshape(2, 3),
        monomial_basis(3, 0),
        monomial_basis(2, 0),
        trusted_rows=range(0, 1),
        trusted_cols=range(1, 3),
    )

    np.testing.assert_array_equal(built.trusted_block(), [[1, 2]])


def test_compose_multiplies_and_propagates_error():
    outer = matrix([[1, 2]], error=0.1)
    inner = matrix([[1, 0], [0, 3]])

    product = compose(outer, inner)

    np.testing.assert_array_equal(product.entries, [[1, 6]])
    assert product.entry_error == pytest.approx(2 * 0.1 * 3)
    assert product.domain == inner.domain
    assert product.codomain == outer.codomain


def test_compose_trusts_only_rows_and_columns_clear_of_the_cut():
    # lower bandwidth 1: the image of the last column leaks past the cut
    inner = matrix(np.eye(4) + np.eye(4, k=-1))

    product = compose(matrix(np.eye(4)), inner)

    assert product.trusted_window() == ((0, 3), (0, 3))


def test_compose_through_model_space_keeps_windows():
    model = model_basis(blaschke(0.5, 0.2), 16)
    outer = OperatorMatrix(np.ones((2, 2)), model, model)
    inner = OperatorMatrix(np.ones((2, 3)), monomial_basis(3, 0), model)

    assert compose(outer, inner).trusted_window() == ((0, 2), (0, 3))


def test_compose_without_trusted_rows_is_rejected():
    outer = OperatorMatrix(np.ones((2, 2)), monomial_basis(2, 0), monomial_basis(2, 0), trusted_rows=range(1, 2))

    with pytest.raises(WindowTooSmall):
        compose(outer, matrix(np.ones((2, 2))))


@pytest.mark.parametrize(
    ("entries", "expected"),
    [
        (np.eye(3), (0, 0)),
        (np.eye(3, k=-2), (2, 0)),
        (np.eye(3, k=1) + 1e-12 * np.ones((3, 3)), (0, 1)),
    ],
)
def test_bandwidth_ignores_entries_below_floor(entries, expected):
    assert bandwidth(entries, floor=1e-10) == expected


def test_intersect_windows():
    assert intersect_windows(((0, 4), (0, 5)), ((1, 3), (0, 9))) == ((1, 3), (0, 5))
    assert intersect_windows(((0, 2), (0, 2)), ((3, 4), (0, 2))) == ((3, 3), (0, 2))


def test_compose_refuses_mismatched_labels():
    outer = OperatorMatrix(np.eye(2), conj_h02_basis(2, 0), conj_h02_basis(2, 0))

    with pytest.raises(BasisMismatch):
        compose(outer, matrix(np.eye(2)))


def test_adjoint_swaps_bases():
    built = OperatorMatrix(np.array([[1j, 2]]), monomial_basis(2, 0), conj_h02_basis(1, 0))

    flipped = adjoint(built)

    np.testing.assert_array_equal(flipped.entries, [[-1j], [2]])
    assert flipped.domain == conj_h02_basis(1, 0)
    assert flipped.codomain == monomial_basis(2, 0)


def test_conjugate_relabels_when_asked():
    built = matrix([[1j]])

    moved = conjugate(built, codomain=conj_h02_basis(1, 0))

    np.testing.assert_array_equal(moved.entries, [[-1j]])
    assert moved.codomain == conj_h02_basis(1, 0)
    assert moved.domain == built.domain


def test_difference_norm_accepts_arrays_and_matrices():
    assert difference_norm(matrix(np.eye(2)), np.zeros((2, 2))) == pytest.approx(np.sqrt(2))

    with pytest.raises(BasisMismatch):
        difference_norm(np.eye(2), np.eye(3))


def test_pair_reads_coordinates_of_images():
    images = (CoeffSeries(0, [1.0, 2.0]), CoeffSeries(1, [1j]))
    targets = (CoeffSeries.monomial(0), CoeffSeries.monomial(1))

    entries, error, certified = pair(images, targets)

    np.testing.assert_array_equal(entries, [[1, 0], [2, 1j]])
    assert error == 0.0
    assert certified


def test_pair_bounds_error_from_tails():
    images = (CoeffSeries(0, [1.0], 0.5, certified=False),)
    targets = (CoeffSeries(0, [2.0]),)

    entries, error, certified = pair(images, targets)

    assert entries[0, 0] == 2
    assert error == pytest.approx(0.5 * 2.0)
    assert not certified
