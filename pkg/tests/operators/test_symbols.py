import numpy as np
import pytest

from hardyops.fourier.rational import RationalSymbol
from hardyops.fourier.series import CoeffSeries, Transform
from hardyops.operators.symbols import (
    evaluate_symbol,
    is_exact,
    product_symbol,
    symbol_config,
    symbol_rational,
    symbol_series,
    transform_symbol,
)

CIRCLE = np.exp(2j * np.pi * (np.arange(8) + 0.5) / 8)


def conj_z_plus_two_z(z):
    return 1 / z + 2 * z


def test_exact_series_converts_to_rational():
    series = CoeffSeries(-1, [1.0, 0.0, 2.0])

    rational = symbol_rational(series)

    assert isinstance(rational, RationalSymbol)
    np.testing.assert_allclose(rational(CIRCLE), series.evaluate(CIRCLE), atol=1e-12)
    assert is_exact(series)


def test_evaluators_are_not_exact():
    assert symbol_rational(conj_z_plus_two_z) is None
    assert not is_exact(conj_z_plus_two_z)


def test_series_symbols_pass_through():
    series = CoeffSeries(0, [1.0])

    assert symbol_series(series, 10) is series


def test_rational_symbols_expand_on_window():
    series = symbol_series(RationalSymbol(1.0, (), (0.5,)), 10)

    assert series.lo == -10
    assert series.certified


def test_evaluator_symbols_are_sampled():
    series = symbol_series(conj_z_plus_two_z, 8)

    assert not series.certified
    assert series.coefficient(-1) == pytest.approx(1.0, abs=1e-12)
    assert series.coefficient(1) == pytest.approx(2.0, abs=1e-12)


@pytest.mark.parametrize("kind", list(Transform))
def test_evaluator_transforms_match_series_transforms(kind):
    series = CoeffSeries(-1, [1.0, 0.0, 2.0j])

    from_evaluator = transform_symbol(series.evaluate, kind)
    from_series = transform_symbol(series, kind)

    np.testing.assert_allclose(
        evaluate_symbol(from_evaluator, CIRCLE),
        evaluate_symbol(from_series, CIRCLE),
        atol=1e-12,
    )


def test_product_of_exact_symbols_is_rational():
    product = product_symbol(RationalSymbol.monomial(1), CoeffSeries(-1, [2.0]))

    assert isinstance(product, RationalSymbol)
    assert product.is_constant
    assert product.gain == 2


def test_product_with_evaluator_is_pointwise():
    product = product_symbol(RationalSymbol.monomial(1), conj_z_plus_two_z)

    np.testing.assert_allclose(evaluate_symbol(product, CIRCLE), 1 + 2 * CIRCLE ** 2, atol=1e-12)


def test_symbol_config_describes_each_source():
    assert "rational" in symbol_config(RationalSymbol.constant(1.0))
    assert symbol_config(CoeffSeries(0, [1j]))["laurent"] == {
        "lo": 0,
        "coeffs": [[0.0, 1.0]],
        "tail_bound": 0.0,
        "certified": True,
    }
    assert symbol_config(conj_z_plus_two_z) == {"evaluator": "conj_z_plus_two_z"}
