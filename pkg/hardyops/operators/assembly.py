'''
Assembly of the operator zoo as matrices between labeled bases.

Every kind is compiled the same way: the k-th domain vector d_k is multiplied
by the symbol (and flipped for the Hankel-type kinds), and entry (j, k) is
the pairing of that image with the j-th codomain vector. The projection in
each defining formula never has to be applied, because every codomain vector
already lies in the target subspace and orthogonal projections are
self-adjoint.
'''

from __future__ import annotations

import logging
from enum import StrEnum

from hardyops.config.limits import MAX_MATRIX_DIMENSION
from hardyops.fourier.series import CoeffSeries, Transform, multiply, shift, transform
from hardyops.inner.functions import InnerFunction, blaschke
from hardyops.operators.matrix import OperatorMatrix, pair
from hardyops.operators.symbols import SymbolSource, symbol_series
from hardyops.spaces.bases import (
    Basis,
    BasisSpec,
    BlockBasis,
    beurling_basis,
    conj_beurling_basis,
    conj_h02_basis,
    conj_model_basis,
    materialize,
    model_basis,
    monomial_basis,
    shift_structure,
)
from hardyops.utils.domain_exceptions import AssemblyError, InvalidSpecError, WindowTooSmall

logger = logging.getLogger(__name__)


class OperatorKind(StrEnum):
    TOEPLITZ = "toeplitz"                # P(phi f) on H^2
    HANKEL_FLIPPED = "hankel_flipped"    # J (I - P)(phi f), into H^2
    HANKEL_HAT = "hankel_hat"            # (I - P)(phi f), into conj(H_0^2)
    DUAL_TOEPLITZ = "dual_toeplitz"      # Q(phi f) on conj(H_0^2)
    TTO = "tto"                          # P_theta(phi h) on K_theta
    THO = "tho"                          # P_theta J(phi h) on K_theta
    LITTLE_THO = "little_tho"            # P_theta-bar(phi f), K_theta -> conj(z K_theta)
    BTHO = "btho"                        # (I - P_theta)(phi f), K_theta -> complement of K_theta
    RTO = "rto"                          # P_theta(phi h), eta H^2 -> K_theta
    RHO = "rho"                          # P_theta J(phi h), eta H^2 -> K_theta
    TAU = "tau"                          # P_{eta H^2}(phi h), K_theta -> eta H^2
    H_SMALL = "h_small"                  # P_{eta H^2} J(phi h), K_theta -> eta H^2
    STTO = "stto"                        # (I - P_theta-bar)(phi f), K_theta -> complement of conj(z K_theta)
    BTTO = "btto"                        # (I - P_theta) J(phi f), K_theta -> complement of K_theta
    SRHO = "srho"                        # P_theta-bar(phi h), eta H^2 -> conj(z K_theta)


FLIP_KINDS = frozenset({
    OperatorKind.HANKEL_FLIPPED,
    OperatorKind.THO,
    OperatorKind.RHO,
    OperatorKind.H_SMALL,
    OperatorKind.BTTO,
})

UNIT = blaschke()


def operator_bases(
    kind: OperatorKind,
    eta: InnerFunction,
    theta: InnerFunction | None,
    size: int,
    order: int,
    columns: int | None = None,
    rows: int | None = None,
) -> tuple[Basis, Basis]:
    '''
    Domain and codomain bases for an operator kind.

    Args:
        kind (OperatorKind): Operator tag.
        eta (InnerFunction): Beurling inner function.
        theta (InnerFunction | None): Model inner function; required for every
            non-classical kind.
        size (int): Size of each infinite-dimensional basis (window + 1).
        order (int): Expansion order for inner-function-based vectors.
        columns (int | None): Overrides the domain size when the domain is
            infinite-dimensional.
        rows (int | None): Same for a single infinite-dimensional codomain.

    Returns:
        tuple[Basis, Basis]: (domain, codomain).
    '''
    kind = OperatorKind(kind)
    cols = size if columns is None else columns
    height = size if rows is None else rows

    if kind is OperatorKind.TOEPLITZ or kind is OperatorKind.HANKEL_FLIPPED:
        return monomial_basis(cols, 0), monomial_basis(height, 0)
    if kind is OperatorKind.HANKEL_HAT:
        return monomial_basis(cols, 0), conj_h02_basis(height, 0)
    if kind is OperatorKind.DUAL_TOEPLITZ:
        return conj_h02_basis(cols, 0), conj_h02_basis(height, 0)

    if theta is None:
        raise InvalidSpecError(code="MISSING_THETA", message=f"{kind} needs a model inner function theta.")

    model = model_basis(theta, order)
    if kind in (OperatorKind.TTO, OperatorKind.THO):
        return model, model
    if kind is OperatorKind.LITTLE_THO:
        return model, conj_model_basis(theta, order)
    if kind in (OperatorKind.BTHO, OperatorKind.BTTO):
        return model, BlockBasis(conj_h02_basis(size, 0), beurling_basis(theta, size, order))
    if kind is OperatorKind.STTO:
        return model, BlockBasis(conj_beurling_basis(theta, size, order), monomial_basis(size, 0))
    if kind in (OperatorKind.RTO, OperatorKind.RHO):
        return beurling_basis(eta, cols, order), model
    if kind is OperatorKind.SRHO:
        return beurling_basis(eta, cols, order), conj_model_basis(theta, order)
    # TAU and H_SMALL
    return model, beurling_basis(eta, height, order)


def images(kind: OperatorKind, series: CoeffSeries, domain: Basis) -> tuple[CoeffSeries, ...]:
    '''
    phi * d_k for every domain vector, flipped for the Hankel-type kinds.

    Shift-structured domains need a single product: the k-th image is the
    first one moved by step * k (the flip reverses the step).
    '''
    flip = OperatorKind(kind) in FLIP_KINDS
    structure = shift_structure(domain) if isinstance(domain, BasisSpec) else None

    if structure is not None:
        seed, step = structure
        first = multiply(series, seed)
        if flip:
            first, step = transform(first, Transform.FLIP_J), -step
        return tuple(shift(first, step * k) for k in range(domain.size))

    products = (multiply(series, vector) for vector in materialize(domain))
    if flip:
        return tuple(transform(g, Transform.FLIP_J) for g in products)
    return tuple(products)


def _extent(basis: Basis) -> int:
    if isinstance(basis, BlockBasis):
        return max(basis.first.size, basis.second.size)
    return basis.size


def _trusted_axis(basis: Basis, count: int) -> range:
    if count >= _extent(basis):
        return range(0, basis.size)
    if isinstance(basis, BlockBasis):
        return range(0, max(0, min(count, basis.first.size)))
    return range(0, max(0, count))


def trusted_ranges(domain: Basis, codomain: Basis, order: int) -> tuple[range, range]:
    '''
    Rows and columns whose entries only read stored coefficients.

    Entry (j, k) reads symbol and basis coefficients up to offset j + k + 1,
    counted within each block, and everything is stored on [-order, order].

    Raises:
        WindowTooSmall: If no row or no column qualifies.
    '''
    rows = _trusted_axis(codomain, order - _extent(domain) + 1)
    cols = _trusted_axis(domain, order - _extent(codomain) + 1)
    if not rows or not cols:
        raise WindowTooSmall(
            "expansion order leaves no trusted entries.",
            detail={"order": order, "domain": domain.label, "codomain": codomain.label},
        )
    return rows, cols


def assemble(
    kind: OperatorKind,
    phi: SymbolSource,
    eta: InnerFunction | None = None,
    theta: InnerFunction | None = None,
    *,
    window: int,
    expansion_factor: int = 4,
    columns: int | None = None,
    rows: int | None = None,
) -> OperatorMatrix:
    '''
    Matrix of one operator of the zoo on the reporting window.

    Args:
        kind (OperatorKind): Operator tag.
        phi (SymbolSource): Symbol as series, rational function or evaluator.
        eta (InnerFunction | None): Beurling inner function, 1 when omitted.
        theta (InnerFunction | None): Model inner function.
        window (int): Last reported index N; infinite-dimensional bases get
            N + 1 vectors.
        expansion_factor (int): Internal expansion order per window index.
        columns (int | None): Domain size override for infinite-dimensional
            domains (the defect identities need one extra column).
        rows (int | None): Codomain size override for TAU, H_SMALL and the
            classical kinds.

    Returns:
        OperatorMatrix: entries[j, k] = <image of d_k, c_j>, uncertified when
        the symbol or an inner function had to be sampled.

    Raises:
        WindowTooSmall: If the window leaves no trusted entries.
        NotFiniteBlaschke: If a model basis is requested for theta with atoms.
    '''
    kind = OperatorKind(kind)
    if window < 1:
        raise WindowTooSmall("window must contain at least two indices.", detail={"window": window})
    if max(window + 1, columns or 0, rows or 0) > MAX_MATRIX_DIMENSION:
        raise AssemblyError(
            code="WINDOW_TOO_LARGE",
            message="window exceeds the largest dense matrix accepted.",
            detail={"window": window, "limit": MAX_MATRIX_DIMENSION},
        )

    eta = UNIT if eta is None else eta
    order = expansion_factor * (window + 1)
    domain, codomain = operator_bases(kind, eta, theta, window + 1, order, columns, rows)

    series = symbol_series(phi, order)
    entries, error, certified = pair(images(kind, series, domain), materialize(codomain))
    trusted_rows, trusted_cols = trusted_ranges(domain, codomain, order)

    logger.debug(
        "assembled %s %s -> %s (entry_error %.3e, trusted %d x %d)",
        kind.value,
        domain.label,
        codomain.label,
        error,
        len(trusted_rows),
        len(trusted_cols),
    )
    return OperatorMatrix(entries, domain, codomain, error, trusted_rows, trusted_cols, certified)
