'''
Classical Toeplitz, Hankel and dual Toeplitz matrices, the three shifts, and
rank-one operators.
'''

from __future__ import annotations

from enum import StrEnum

import numpy as np
import scipy.linalg

from hardyops.fourier.series import CoeffSeries, shift
from hardyops.inner.functions import InnerFunction
from hardyops.operators.matrix import OperatorMatrix, pair
from hardyops.spaces.bases import (
    Basis,
    BasisKind,
    BasisSpec,
    beurling_basis,
    conj_h02_basis,
    materialize,
    model_basis,
    monomial_basis,
)
from hardyops.utils.domain_exceptions import BasisMismatch, NotFiniteBlaschke


class HankelVariant(StrEnum):
    FLIPPED = "flipped"    # codomain H^2 via the flip
    HAT = "hat"            # codomain conj(H_0^2)


class ShiftKind(StrEnum):
    FORWARD_S = "forward_s"
    COMPRESSED_S_THETA = "compressed_s_theta"
    BEURLING_S_ETA = "beurling_s_eta"


def _coefficients(phi: CoeffSeries, indices) -> np.ndarray:
    return np.array([phi.coefficient(int(i)) for i in indices], dtype=np.complex128)


def toeplitz(phi: CoeffSeries, rows: int, cols: int | None = None) -> OperatorMatrix:
    """
    entries[j, k] = phi(j - k) on MONOMIAL_H2.
    """
    cols = rows if cols is None else cols
    entries = scipy.linalg.toeplitz(
        _coefficients(phi, range(rows)),
        _coefficients(phi, range(0, -cols, -1)),
    )
    return OperatorMatrix(
        entries,
        monomial_basis(cols, 0),
        monomial_basis(rows, 0),
        phi.tail_bound,
        certified=phi.certified,
    )


def hankel(
    phi: CoeffSeries,
    rows: int,
    variant: HankelVariant = HankelVariant.FLIPPED,
    cols: int | None = None,
) -> OperatorMatrix:
    '''
    entries[j, k] = phi(-j - k - 1) for both variants.

    Args:
        phi (CoeffSeries): Symbol coefficients.
        rows (int): Number of codomain coordinates.
        variant (HankelVariant): FLIPPED labels the codomain MONOMIAL_H2,
            HAT labels it CONJ_H02 (row j is conj(z)^(j+1)).
        cols (int | None): Number of domain coordinates, rows when omitted.

    Returns:
        OperatorMatrix: The Hankel matrix of the co-analytic coefficients.
    '''
    variant = HankelVariant(variant)
    cols = rows if cols is None else cols
    entries = scipy.linalg.hankel(
        _coefficients(phi, range(-1, -rows - 1, -1)),
        _coefficients(phi, range(-rows, -rows - cols, -1)),
    )
    codomain = monomial_basis(rows, 0) if variant is HankelVariant.FLIPPED else conj_h02_basis(rows, 0)
    return OperatorMatrix(
        entries,
        monomial_basis(cols, 0),
        codomain,
        phi.tail_bound,
        certified=phi.certified,
    )


def dual_toeplitz(phi: CoeffSeries, n: int) -> OperatorMatrix:
    """
    Q(phi f) on conj(H_0^2): entries[j, k] = phi(k - j).
    """
    entries = scipy.linalg.toeplitz(
        _coefficients(phi, range(0, -n, -1)),
        _coefficients(phi, range(n)),
    )
    basis = conj_h02_basis(n, 0)
    return OperatorMatrix(entries, basis, basis, phi.tail_bound, certified=phi.certified)


def shift_matrix(
    which: ShiftKind,
    size: int,
    *,
    inner: InnerFunction | None = None,
    order: int = 0,
) -> OperatorMatrix:
    '''
    Matrix of the forward shift, the compressed shift S_theta, or the shift
    of the Beurling subspace eta H^2.

    Args:
        which (ShiftKind): Which shift to build.
        size (int): Basis size; ignored for COMPRESSED_S_THETA, whose size is
            the degree of theta.
        inner (InnerFunction | None): theta or eta.
        order (int): Expansion order of the basis vectors.

    Raises:
        NotFiniteBlaschke: COMPRESSED_S_THETA with singular atoms in theta.
    '''
    which = ShiftKind(which)
    subdiagonal = np.eye(size, k=-1, dtype=np.complex128)

    if which is ShiftKind.FORWARD_S:
        basis = monomial_basis(size, 0)
        return OperatorMatrix(subdiagonal, basis, basis)

    if inner is None:
        raise BasisMismatch(f"{which} needs an inner function.")

    if which is ShiftKind.BEURLING_S_ETA:
        # P_{eta H^2}(z eta z^k) = eta z^(k+1) exactly
        basis = beurling_basis(inner, size, order)
        return OperatorMatrix(subdiagonal, basis, basis)

    if not inner.is_finite_blaschke:
        raise NotFiniteBlaschke("the compressed shift needs a finite Blaschke product.")

    basis = model_basis(inner, order)
    vectors = materialize(basis)
    entries, error, certified = pair(tuple(shift(v, 1) for v in vectors), vectors)
    return OperatorMatrix(entries, basis, basis, error, certified=certified)


def _f_level(domain: Basis) -> tuple[CoeffSeries, ...]:
    if isinstance(domain, BasisSpec) and domain.kind is BasisKind.BEURLING:
        return tuple(CoeffSeries.monomial(k) for k in range(domain.size))
    raise BasisMismatch("f-level coordinates are only defined for BEURLING domains.")


def rank_one(
    u: CoeffSeries,
    v: CoeffSeries,
    domain: Basis,
    codomain: Basis,
    *,
    f_level: bool = False,
) -> OperatorMatrix:
    '''
    Matrix of h -> <h, v> u.

    Args:
        u (CoeffSeries): Left vector, expressed in the codomain basis.
        v (CoeffSeries): Right vector, paired against the domain basis.
        domain (Basis): Domain basis.
        codomain (Basis): Codomain basis.
        f_level (bool): For a BEURLING(eta) domain, pair v against z^k rather
            than eta z^k, so that h = eta f is read through f.

    Returns:
        OperatorMatrix: The outer product of u's coordinates with the
        conjugated coordinates of v.
    '''
    left, left_error, left_certified = pair((u,), materialize(codomain))
    domain_vectors = _f_level(domain) if f_level else materialize(domain)
    right, right_error, right_certified = pair((v,), domain_vectors)

    left, right = left[:, 0], right[:, 0]
    error = (
        left_error * float(np.abs(right).max(initial=0.0))
        + right_error * float(np.abs(left).max(initial=0.0))
        + left_error * right_error
    )
    return OperatorMatrix(
        np.outer(left, right.conj()),
        domain,
        codomain,
        error,
        certified=left_certified and right_certified,
    )
