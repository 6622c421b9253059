'''
Discrete-Fourier expansion of boundary functions given only as evaluators.
'''

from __future__ import annotations

import logging
from collections.abc import Callable

import numpy as np

from hardyops.config.limits import MAX_SAMPLE_EXPONENT, SAMPLE_CHOP_FACTOR
from hardyops.fourier.series import CoeffSeries

logger = logging.getLogger(__name__)

Evaluator = Callable[[np.ndarray], np.ndarray]


def _dft_coefficients(
    evaluator: Evaluator,
    count: int,
    radius: float,
    offset: float,
) -> tuple[np.ndarray, np.ndarray]:
    nodes = radius * np.exp(2j * np.pi * (np.arange(count) + offset) / count)
    values = np.broadcast_to(np.asarray(evaluator(nodes), dtype=np.complex128), nodes.shape)
    spectrum = np.fft.fft(values) / count

    if radius == 1.0:
        indices = np.arange(-(count // 2), count // 2)
    else:
        # off the circle only the analytic half is meaningful
        indices = np.arange(0, count // 2)

    coeffs = spectrum[indices % count] * np.exp(-2j * np.pi * indices * offset / count)
    if radius != 1.0:
        coeffs = coeffs / radius ** indices
    return indices, coeffs


def sample_expand(
    evaluator: Evaluator,
    m: int,
    *,
    radius: float = 1.0,
    offset: float = 0.5,
    limit: int | None = None,
) -> CoeffSeries:
    '''
    Expand a boundary function from 2**m samples on a circle of given radius.

    The default half-step offset keeps the nodes away from z = 1. With a
    radius below one the function must be analytic on the closed disk of that
    radius, and only coefficients with n >= 0 are returned.

    Args:
        evaluator (Evaluator): Vectorized function of complex points.
        m (int): log2 of the number of samples.
        radius (float): Sampling radius in (0, 1].
        offset (float): Node offset in units of the grid step.
        limit (int | None): When given, only indices with |n| <= limit are
            kept and compared.

    Returns:
        CoeffSeries: Uncertified series whose tail_bound is the l1 difference
        between the 2**m and 2**(m+1) expansions on the kept window plus the
        chopped noise floor.
    '''
    if not 1 <= m < MAX_SAMPLE_EXPONENT:
        raise ValueError(f"sample exponent must be in [1, {MAX_SAMPLE_EXPONENT}).")
    if not 0.0 < radius <= 1.0:
        raise ValueError("sampling radius must be in (0, 1].")

    count = 2 ** m
    indices, coarse = _dft_coefficients(evaluator, count, radius, offset)
    fine_indices, fine = _dft_coefficients(evaluator, 2 * count, radius, offset)

    if limit is not None:
        keep = np.abs(indices) <= limit
        indices, coarse = indices[keep], coarse[keep]

    start = int(indices[0] - fine_indices[0])
    aliasing = float(np.abs(coarse - fine[start:start + len(coarse)]).sum())

    magnitudes = np.abs(coarse)
    floor = SAMPLE_CHOP_FACTOR * np.finfo(float).eps * (magnitudes.max() if magnitudes.size else 0.0)
    noise = magnitudes <= floor
    chopped = float(magnitudes[noise].sum())
    kept = np.where(noise, 0.0, coarse)

    logger.debug("sampled expansion m=%d radius=%.4f aliasing=%.3e", m, radius, aliasing)
    return CoeffSeries(int(indices[0]), kept, tail_bound=aliasing + chopped, certified=False)
