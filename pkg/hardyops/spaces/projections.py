'''
Matrices of the model-space projection P_theta and its conjugate P_theta-bar.

Both are finite sums on the reported window: the Toeplitz matrix of an
analytic symbol is lower triangular, so I - T_theta T_theta-bar restricted to
indices [0, N] only needs the coefficients of theta on [0, N].
'''

from __future__ import annotations

import numpy as np
import scipy.linalg

from hardyops.fourier.series import CoeffSeries, shift
from hardyops.inner.functions import InnerFunction, expand
from hardyops.operators.matrix import OperatorMatrix
from hardyops.spaces.bases import conj_h02_basis, monomial_basis, stack


def _projection_error(theta_series: CoeffSeries) -> float:
    tail = theta_series.tail_bound
    return tail * (2.0 * theta_series.l1_norm() + tail)


def model_projection_matrix(theta: InnerFunction, n: int) -> OperatorMatrix:
    '''
    P_theta = I - T_theta T_theta-bar on the monomial window [0, n].

    Args:
        theta (InnerFunction): Inner function; singular atoms make the result
            uncertified.
        n (int): Last reported index.

    Returns:
        OperatorMatrix: (n+1) x (n+1) matrix on MONOMIAL_H2 coordinates.
    '''
    series = expand(theta, n)
    column = series.window(0, n)
    row = np.zeros(n + 1, dtype=np.complex128)
    row[0] = column[0]
    toeplitz = scipy.linalg.toeplitz(column, row)

    basis = monomial_basis(n + 1, 0)
    return OperatorMatrix(
        np.eye(n + 1) - toeplitz @ toeplitz.conj().T,
        basis,
        basis,
        _projection_error(series),
        certified=series.certified,
    )


def conj_model_projection_matrix(theta: InnerFunction, n: int) -> OperatorMatrix:
    '''
    P_theta-bar = Q - M_theta-bar Q M_theta on conj(H_0^2) coordinates.

    Rows and columns follow CONJ_H02 order, so coordinate k is the
    coefficient of conj(z)^(k+1) (index -1 first).
    '''
    series = expand(theta, n)
    # column k holds Q(theta conj(z)^(k+1)) on indices -1, -2, ..., -n-1
    images = tuple(shift(series, -k - 1) for k in range(n + 1))
    moved = stack(images, -n - 1, -1)[::-1, :]

    basis = conj_h02_basis(n + 1, 0)
    return OperatorMatrix(
        np.eye(n + 1) - moved.conj().T @ moved,
        basis,
        basis,
        _projection_error(series),
        certified=series.certified,
    )
