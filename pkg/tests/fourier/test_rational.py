import numpy as np
import pytest

from hardyops.fourier.rational import RationalSymbol, rational_to_series
from hardyops.fourier.series import CoeffSeries, Transform
from hardyops.utils.domain_exceptions import InvalidSpecError, NoCircleAnnulus

CIRCLE = np.exp(2j * np.pi * (np.arange(9) + 0.5) / 9)


def test_from_coefficients_finds_roots():
    symbol = RationalSymbol.from_coefficients([-2.0, 1.0], [1.0])

    assert symbol.gain == 1
    assert symbol.zeros == pytest.approx((2.0,))
    assert symbol.poles == ()


def test_common_factors_cancel():
    symbol = RationalSymbol(2.0, (0.5, 3.0), (0.5,))

    assert symbol.zeros == (3.0,)
    assert symbol.poles == ()


def test_pole_on_circle_is_rejected():
    with pytest.raises(NoCircleAnnulus):
        RationalSymbol(1.0, (), (1j,))


def test_zero_denominator_is_rejected():
    with pytest.raises(InvalidSpecError):
        RationalSymbol.from_coefficients([1.0], [0.0])


def test_zero_numerator_gives_zero_symbol():
    assert RationalSymbol.from_coefficients([0.0], [1.0, 2.0]).is_zero


def test_monomial_of_negative_power_has_pole_at_origin():
    symbol = RationalSymbol.monomial(-2, 3.0)

    assert symbol.poles == (0j, 0j)
    np.testing.assert_allclose(symbol(CIRCLE), 3.0 * CIRCLE ** -2)


def test_from_laurent_evaluates_like_the_series():
    series = CoeffSeries(-1, [1.0, 2.0, 3.0])

    symbol = RationalSymbol.from_laurent(series.lo, series.coeffs)

    np.testing.assert_allclose(symbol(CIRCLE), series.evaluate(CIRCLE), atol=1e-12)


def test_from_series_refuses_inexact_series():
    assert RationalSymbol.from_series(CoeffSeries(0, [1.0], 1e-3)) is None


def test_multiplication_and_reciprocal():
    symbol = RationalSymbol(2.0, (0.3,), (3.0,))

    assert (symbol * symbol.reciprocal()).is_constant
    np.testing.assert_allclose((symbol * 1j)(CIRCLE), 1j * symbol(CIRCLE))


def test_reciprocal_of_zero_fails():
    with pytest.raises(ZeroDivisionError):
        RationalSymbol(0).reciprocal()


@pytest.mark.parametrize(
    ("kind", "formula"),
    [
        (Transform.BAR, lambda f, z: np.conj(f(z))),
        (Transform.STAR, lambda f, z: np.conj(f(np.conj(z)))),
        (Transform.BREVE, lambda f, z: f(np.conj(z))),
        (Transform.FLIP_J, lambda f, z: np.conj(z) * f(np.conj(z))),
        (Transform.V_ANTI, lambda f, z: np.conj(z) * np.conj(f(z))),
    ],
)
def test_transforms_match_boundary_formulas(kind, formula):
    symbol = RationalSymbol(1 + 2j, (0.5j, 2.0), (0.25, -3.0j))

    np.testing.assert_allclose(symbol.transform(kind)(CIRCLE), formula(symbol, CIRCLE), atol=1e-12)


def test_is_analytic_checks_poles_against_closed_disk():
    assert RationalSymbol(1.0, (0.5,), (2.0,)).is_analytic()
    assert not RationalSymbol(1.0, (), (0.5,)).is_analytic()


def test_near_cancellation_is_ambiguous():
    symbol = RationalSymbol(1.0, (0.5 + 1e-7,), (0.5,))

    assert symbol.poles == (0.5,)
    assert symbol.ambiguous_cancellations()


def test_expansion_of_inner_pole_is_geometric():
    series = rational_to_series(RationalSymbol(1.0, (), (0.5,)), 20)

    assert series.coefficient(-1) == pytest.approx(1.0)
    assert series.coefficient(-3) == pytest.approx(0.25)
    assert series.coefficient(0) == 0
    assert series.tail_bound < 1e-5


def test_expansion_of_outer_pole_is_analytic():
    series = rational_to_series(RationalSymbol(1.0, (), (2.0,)), 40)

    # 1/(z - 2) = -1/2 sum (z/2)^n
    assert series.coefficient(0) == pytest.approx(-0.5)
    assert series.coefficient(3) == pytest.approx(-(0.5 ** 4))
    assert series.lo == 0


def test_expansion_matches_evaluation():
    symbol = RationalSymbol(0.7 - 0.1j, (0.2, 1.5j), (0.4j, -1.8))

    series = rational_to_series(symbol, 120)

    np.testing.assert_allclose(series.evaluate(CIRCLE), symbol(CIRCLE), atol=1e-10)
    assert series.certified


def test_to_config_lists_roots_as_pairs():
    config = RationalSymbol(2.0, (1j,), (3.0,)).to_config()

    assert config == {"gain": [2.0, 0.0], "zeros": [[0.0, 1.0]], "poles": [[3.0, 0.0]]}
