import numpy as np
import pytest

from hardyops.fourier.rational import RationalSymbol
from hardyops.fourier.series import CoeffSeries, Transform, transform
from hardyops.inner.functions import blaschke, singular_inner
from hardyops.operators.assembly import (
    FLIP_KINDS,
    UNIT,
    OperatorKind,
    assemble,
    images,
    operator_bases,
)
from hardyops.operators.classical import HankelVariant, dual_toeplitz, hankel, toeplitz
from hardyops.spaces.bases import BasisKind, BlockBasis, monomial_basis
from hardyops.utils.domain_exceptions import AssemblyError, InvalidSpecError, NotFiniteBlaschke, WindowTooSmall

PHI = CoeffSeries(-2, [1, 2j, 3, -1, 0.5])


@pytest.mark.parametrize(
    ("kind", "classical"),
    [
        (OperatorKind.TOEPLITZ, lambda phi, n: toeplitz(phi, n)),
        (OperatorKind.HANKEL_FLIPPED, lambda phi, n: hankel(phi, n)),
        (OperatorKind.HANKEL_HAT, lambda phi, n: hankel(phi, n, HankelVariant.HAT)),
        (OperatorKind.DUAL_TOEPLITZ, lambda phi, n: dual_toeplitz(phi, n)),
    ],
)
def test_classical_kinds_match_direct_builders(kind, classical):
    assembled = assemble(kind, PHI, window=5)
    expected = classical(PHI, 6)

    np.testing.assert_allclose(assembled.entries, expected.entries, atol=1e-15)
    assert assembled.codomain == expected.codomain
    assert assembled.certified


def test_truncated_toeplitz_on_monomial_model_space():
    assembled = assemble(OperatorKind.TTO, PHI, theta=blaschke(0, 0, 0), window=4)

    np.testing.assert_allclose(assembled.entries, toeplitz(PHI, 3).entries, atol=1e-15)


def test_truncated_hankel_on_monomial_model_space():
    assembled = assemble(OperatorKind.THO, PHI, theta=blaschke(0, 0, 0), window=4)

    np.testing.assert_allclose(assembled.entries, hankel(PHI, 3).entries, atol=1e-15)


def test_rto_of_conj_z_reads_first_coordinate():
    z = blaschke(0)

    assembled = assemble(OperatorKind.RTO, RationalSymbol.monomial(-1), z, z, window=6)

    expected = np.zeros((1, 7))
    expected[0, 0] = 1
    np.testing.assert_allclose(assembled.entries, expected, atol=1e-15)
    assert assembled.domain.kind is BasisKind.BEURLING
    assert assembled.codomain.kind is BasisKind.MODEL_TM


def test_rto_of_member_symbol_vanishes():
    assembled = assemble(OperatorKind.RTO, RationalSymbol.monomial(1), blaschke(0), blaschke(0, 0), window=10)

    assert assembled.frobenius() == 0.0


def test_stto_of_conj_theta_vanishes():
    assembled = assemble(
        OperatorKind.STTO,
        RationalSymbol.monomial(-1, 2 - 1j),
        UNIT,
        blaschke(0),
        window=10,
    )

    assert assembled.frobenius() == 0.0
    assert isinstance(assembled.codomain, BlockBasis)


def test_tto_of_conjugate_symbol_is_adjoint():
    theta = blaschke(0.5, 0.2j, -0.4)

    forward = assemble(OperatorKind.TTO, PHI, theta=theta, window=10)
    backward = assemble(OperatorKind.TTO, transform(PHI, Transform.BAR), theta=theta, window=10)

    np.testing.assert_allclose(backward.entries, forward.entries.conj().T, atol=1e-10)


def test_tau_of_conjugate_symbol_is_rto_adjoint():
    eta, theta = blaschke(0.3), blaschke(0.5, 0.2j)

    rto = assemble(OperatorKind.RTO, PHI, eta, theta, window=10)
    tau = assemble(OperatorKind.TAU, transform(PHI, Transform.BAR), eta, theta, window=10)

    np.testing.assert_allclose(tau.entries, rto.entries.conj().T, atol=1e-9)


def test_rational_and_series_symbols_agree():
    rational = RationalSymbol.from_laurent(PHI.lo, PHI.coeffs)
    theta = blaschke(0.5, -0.2)

    from_series = assemble(OperatorKind.RHO, PHI, blaschke(0.1j), theta, window=8)
    from_rational = assemble(OperatorKind.RHO, rational, blaschke(0.1j), theta, window=8)

    np.testing.assert_allclose(from_rational.entries, from_series.entries, atol=1e-9)


def test_evaluator_symbol_is_uncertified():
    assembled = assemble(OperatorKind.TOEPLITZ, lambda z: z + 1 / z, window=4)

    np.testing.assert_allclose(assembled.entries, toeplitz(CoeffSeries(-1, [1, 0, 1]), 5).entries, atol=1e-10)
    assert not assembled.certified


def test_bases_for_block_codomains():
    domain, codomain = operator_bases(OperatorKind.BTTO, UNIT, blaschke(0.5), 4, 16)

    assert domain.kind is BasisKind.MODEL_TM
    assert codomain.first.kind is BasisKind.CONJ_H02
    assert codomain.second.kind is BasisKind.BEURLING
    assert codomain.size == 8


def test_column_override_widens_beurling_domain():
    assembled = assemble(OperatorKind.RTO, PHI, blaschke(0.5), blaschke(0.2), window=4, columns=6)

    assert assembled.shape == (1, 6)


def test_images_follow_shift_structure():
    produced = images(OperatorKind.HANKEL_FLIPPED, CoeffSeries.monomial(-1), monomial_basis(3, 0))

    # J(conj(z) z^k) = z^(-k)
    assert [g.lo for g in produced] == [0, -1, -2]
    assert OperatorKind.HANKEL_FLIPPED in FLIP_KINDS


def test_model_kinds_need_theta():
    with pytest.raises(InvalidSpecError) as exc_info:
        assemble(OperatorKind.TTO, PHI, window=4)

    assert exc_info.value.code == "MISSING_THETA"


def test_window_must_leave_entries():
    with pytest.raises(WindowTooSmall):
        assemble(OperatorKind.TOEPLITZ, PHI, window=0)


def test_default_expansion_trusts_the_whole_window():
    assembled = assemble(OperatorKind.RTO, PHI, blaschke(0.5), blaschke(0, 0.3), window=10, columns=12)

    assert assembled.trusted_window() == ((0, 2), (0, 12))


@pytest.mark.parametrize(
    ("columns", "trusted"),
    [
        (None, ((0, 1), (0, 1))),
        (3, ((0, 4), (0, 1))),
    ],
)
def test_short_expansion_shrinks_trusted_window(columns, trusted):
    # order 6: entry (j, k) is trusted while j + k + 1 stays within 6
    assembled = assemble(OperatorKind.TOEPLITZ, PHI, window=5, expansion_factor=1, columns=columns)

    assert assembled.trusted_window() == trusted


def test_expansion_without_trusted_rows_is_rejected():
    with pytest.raises(WindowTooSmall):
        assemble(OperatorKind.TOEPLITZ, PHI, window=5, expansion_factor=1, columns=7)


def test_window_has_an_upper_limit():
    with pytest.raises(AssemblyError) as exc_info:
        assemble(OperatorKind.TOEPLITZ, PHI, window=5000)

    assert exc_info.value.code == "WINDOW_TOO_LARGE"


def test_model_kinds_need_finite_blaschke():
    with pytest.raises(NotFiniteBlaschke):
        assemble(OperatorKind.TTO, PHI, theta=singular_inner(0.0, 1.0), window=4)
