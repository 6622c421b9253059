'''
Symbol sources accepted by the assembly routines.

A symbol is an exact Laurent series, a rational function without poles on
the circle, or a vectorized evaluator on the circle. Evaluators are expanded
by sampling, which makes every result built from them HEURISTIC.
'''

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from functools import reduce

import numpy as np

from hardyops.config.limits import MAX_SAMPLE_EXPONENT
from hardyops.config.settings import settings
from hardyops.fourier.rational import RationalSymbol, rational_to_series
from hardyops.fourier.sampling import Evaluator, sample_expand
from hardyops.fourier.series import CoeffSeries, Transform, transform

logger = logging.getLogger(__name__)

SymbolSource = CoeffSeries | RationalSymbol | Callable[[np.ndarray], np.ndarray]


def symbol_rational(source: SymbolSource) -> RationalSymbol | None:
    """
    Exact rational form of the symbol, or None when only samples are known.
    """
    if isinstance(source, RationalSymbol):
        return source
    if isinstance(source, CoeffSeries):
        return RationalSymbol.from_series(source)
    return None


def is_exact(source: SymbolSource) -> bool:
    return symbol_rational(source) is not None


def symbol_series(source: SymbolSource, order: int) -> CoeffSeries:
    '''
    Laurent coefficients of the symbol for an expansion of the given order.

    Args:
        source (SymbolSource): Series, rational function or evaluator.
        order (int): Half-width of the window needed by the caller.

    Returns:
        CoeffSeries: Exact series are returned unchanged; rationals are
        expanded on [-order, order]; evaluators are sampled with at least
        4 * order nodes and come back uncertified.
    '''
    if isinstance(source, CoeffSeries):
        return source
    if isinstance(source, RationalSymbol):
        return rational_to_series(source, order)

    exponent = max(settings.sample_exponent, math.ceil(math.log2(max(4 * order, 2))))
    exponent = min(exponent, MAX_SAMPLE_EXPONENT - 1)
    logger.info("sampling symbol evaluator with 2**%d nodes", exponent)
    return sample_expand(source, exponent, limit=order)


def evaluate_symbol(source: SymbolSource, points):
    points = np.asarray(points, dtype=np.complex128)
    if isinstance(source, CoeffSeries):
        return source.evaluate(points)
    return np.asarray(source(points), dtype=np.complex128)


def _evaluator_transform(evaluator: Evaluator, kind: Transform) -> Evaluator:
    # boundary formulas; conj(z) = 1/z on the circle
    if kind is Transform.FLIP_J:
        return lambda z: np.conj(z) * evaluator(np.conj(z))
    if kind is Transform.STAR:
        return lambda z: np.conj(evaluator(np.conj(z)))
    if kind is Transform.BREVE:
        return lambda z: evaluator(np.conj(z))
    if kind is Transform.BAR:
        return lambda z: np.conj(evaluator(z))
    return lambda z: np.conj(z) * np.conj(evaluator(z))


def transform_symbol(source: SymbolSource, kind: Transform) -> SymbolSource:
    kind = Transform(kind)
    if isinstance(source, CoeffSeries):
        return transform(source, kind)
    if isinstance(source, RationalSymbol):
        return source.transform(kind)
    return _evaluator_transform(source, kind)


def product_symbol(*sources: SymbolSource) -> SymbolSource:
    '''
    Pointwise product of several symbols.

    Returns:
        SymbolSource: A RationalSymbol when every factor is exact, otherwise
        an evaluator multiplying the factors' values.
    '''
    exact = [symbol_rational(source) for source in sources]
    if all(r is not None for r in exact):
        return reduce(lambda a, b: a * b, exact, RationalSymbol.constant(1.0))

    factors = tuple(sources)
    return lambda z: reduce(
        lambda acc, factor: acc * evaluate_symbol(factor, z),
        factors,
        np.ones(np.shape(z), dtype=np.complex128),
    )


def symbol_config(source: SymbolSource) -> dict:
    """
    JSON-ready description of a symbol, used for report digests and sidecars.
    """
    if isinstance(source, RationalSymbol):
        return {"rational": source.to_config()}
    if isinstance(source, CoeffSeries):
        return {
            "laurent": {
                "lo": source.lo,
                "coeffs": [[c.real, c.imag] for c in source.coeffs.tolist()],
                "tail_bound": source.tail_bound,
                "certified": source.certified,
            }
        }
    return {"evaluator": getattr(source, "__qualname__", type(source).__name__)}
