'''
Singular values and numerical rank of assembled matrices.
'''

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from hardyops.operators.matrix import OperatorMatrix


@dataclass(frozen=True, slots=True)
class Spectrum:
    singular_values: tuple[float, ...]
    numerical_rank: int


def numerical_rank(singular_values: np.ndarray, tol_rank: float) -> int:
    """
    Count of singular values above tol_rank times the largest one.
    """
    if singular_values.size == 0 or singular_values[0] == 0.0:
        return 0
    return int(np.count_nonzero(singular_values > tol_rank * singular_values[0]))


def spectral(matrix: OperatorMatrix | np.ndarray, tol_rank: float = 1e-8) -> Spectrum:
    '''
    Singular values of the trusted block, in descending order.

    Args:
        matrix (OperatorMatrix | np.ndarray): Operator matrix or raw block.
        tol_rank (float): Relative rank threshold.

    Returns:
        Spectrum: Singular values and the numerical rank.
    '''
    block = matrix.trusted_block() if isinstance(matrix, OperatorMatrix) else np.asarray(matrix)
    if block.size == 0:
        return Spectrum((), 0)

    values = scipy.linalg.svdvals(block)
    return Spectrum(tuple(float(s) for s in values), numerical_rank(values, tol_rank))
