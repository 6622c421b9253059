'''
One check per operator identity.

Each check assembles both sides of an identity through separate code paths
and reports the Frobenius norm of their difference on the trusted window.
Defect identities are read at f-level: the right vector of a rank-one term
pairs against f where h = eta f, which in BEURLING(eta) coordinates means its
plain monomial coefficients.
'''

from __future__ import annotations

import logging

import numpy as np
import scipy.linalg

from hardyops.fourier.series import CoeffSeries, Part, Transform, multiply, project, shift, transform
from hardyops.inner.functions import InnerFunction, as_rational, expand
from hardyops.operators.assembly import UNIT, OperatorKind, assemble
from hardyops.operators.classical import HankelVariant, ShiftKind, hankel, rank_one, shift_matrix, toeplitz
from hardyops.operators.matrix import OperatorMatrix, Window, difference_norm, intersect_windows, restrict
from hardyops.operators.symbols import (
    SymbolSource,
    product_symbol,
    symbol_config,
    symbol_rational,
    symbol_series,
    transform_symbol,
)
from hardyops.spaces.bases import beurling_basis, materialize, model_basis, stack
from hardyops.spaces.projections import conj_model_projection_matrix, model_projection_matrix
from hardyops.utils.domain_exceptions import InvalidSpecError, WindowTooSmall
from hardyops.verify.classify import SymbolClass, classify_symbol
from hardyops.verify.records import CheckReport, Expectation, build_report, digest

logger = logging.getLogger(__name__)

VANISHING_CLASSES: dict[OperatorKind, SymbolClass] = {
    OperatorKind.RTO: SymbolClass.ETA_BAR_THETA_HINF,
    OperatorKind.RHO: SymbolClass.ETA_BAR_HINF,
    OperatorKind.SRHO: SymbolClass.ETA_BAR_HINF,
    OperatorKind.TAU: SymbolClass.ETA_CONJ_THETA_HINF,
    OperatorKind.H_SMALL: SymbolClass.ETA_BREVE_HINF,
    OperatorKind.STTO: SymbolClass.THETA_BAR_CONSTANT,
    OperatorKind.BTTO: SymbolClass.CONJ_THETA_HINF_AND_BREVE,
}


def _inputs(
    check: str,
    window: int,
    expansion_factor: int,
    *,
    phi: SymbolSource | None = None,
    eta: InnerFunction | None = None,
    theta: InnerFunction | None = None,
    **extra,
) -> dict:
    return {
        "check": check,
        "window": window,
        "expansion_factor": expansion_factor,
        "phi": None if phi is None else symbol_config(phi),
        "eta": None if eta is None else eta.to_config(),
        "theta": None if theta is None else theta.to_config(),
        **extra,
    }


def _finish(
    name: str,
    statement: str,
    residual: float,
    threshold: float,
    *,
    inputs: dict,
    certified: bool,
    trusted: Window,
    check_id: str | None,
    seed: int | None,
    expectation: Expectation = Expectation.VANISH,
    separation_factor: float = 10.0,
    notes: str = "",
) -> CheckReport:
    report = build_report(
        check_id or f"{name}/{digest(inputs)[:12]}",
        statement,
        residual,
        threshold,
        inputs=inputs,
        certified=certified,
        trusted_window=trusted,
        expectation=expectation,
        separation_factor=separation_factor,
        seed=seed,
        notes=notes,
    )
    if not report.passed:
        logger.warning("check %s: %s (residual %.3e)", report.check_id, report.verdict.value, report.residual)
    return report


def _analytic_part(series: CoeffSeries) -> CoeffSeries:
    return project(series, Part.P_ANALYTIC)


def _backward_shift_theta(theta: InnerFunction, order: int) -> CoeffSeries:
    """
    S*(theta) = P(conj(z) theta).
    """
    return _analytic_part(shift(expand(theta, order), -1))


def _symbol_times_eta(phi: SymbolSource, eta: InnerFunction, order: int) -> CoeffSeries:
    return multiply(symbol_series(phi, order), expand(eta, order))


def check_projection_identity(
    theta: InnerFunction,
    window: int,
    *,
    expansion_factor: int = 4,
    threshold: float = 1e-8,
    check_id: str | None = None,
    seed: int | None = None,
) -> CheckReport:
    '''
    P_theta = I - T_theta T_theta-bar against the Takenaka-Malmquist outer
    products and against the Hankel product H_theta-breve H_theta-bar.

    Args:
        theta (InnerFunction): Finite Blaschke product.
        window (int): Last reported index N.

    Returns:
        CheckReport: Residual is the larger of the two Frobenius distances.
    '''
    order = expansion_factor * (window + 1)
    projection = model_projection_matrix(theta, window)

    vectors = stack(materialize(model_basis(theta, order)), 0, window)
    against_basis = difference_norm(projection, vectors @ vectors.conj().T)

    series = expand(theta, order + window + 1)
    hankel_theta = scipy.linalg.hankel(
        series.window(1, window + 1),
        series.window(window + 1, window + order),
    )
    against_hankel = difference_norm(projection, hankel_theta @ hankel_theta.conj().T)

    return _finish(
        "projection_identity",
        "P_theta = I - T_theta T_theta-bar = sum e_k e_k^* = H_theta-breve H_theta-bar",
        max(against_basis, against_hankel),
        threshold,
        inputs=_inputs("projection_identity", window, expansion_factor, theta=theta),
        certified=projection.certified,
        trusted=projection.trusted_window(),
        check_id=check_id,
        seed=seed,
        notes=f"basis={against_basis:.3e} hankel={against_hankel:.3e}",
    )


def _defect_parts(
    kind: OperatorKind,
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    expansion_factor: int,
) -> tuple[OperatorMatrix, np.ndarray]:
    matrix = assemble(
        kind,
        phi,
        eta,
        theta,
        window=window,
        expansion_factor=expansion_factor,
        columns=window + 2,
    )
    compressed = shift_matrix(
        ShiftKind.COMPRESSED_S_THETA,
        0,
        inner=theta,
        order=matrix.codomain.expansion_order,
    )
    return matrix, compressed.entries


def _shifted_window(matrix: OperatorMatrix, width: int, *, axis: int) -> Window:
    '''
    Trusted block of a difference that pairs index i with index i + 1 along
    axis and mixes every coordinate of K_theta along the other one.

    Raises:
        WindowTooSmall: If a model coordinate is untrusted or nothing is left
            after the shift.
    '''
    window = list(matrix.trusted_window())
    if window[1 - axis] != (0, matrix.shape[1 - axis]):
        raise WindowTooSmall("every coordinate of K_theta must be trusted.", detail={"trusted": window})
    start, stop = window[axis]
    window[axis] = (start, min(width, stop - 1))
    if window[axis][1] <= start:
        raise WindowTooSmall("no trusted index survives the shift.", detail={"trusted": window})
    return window[0], window[1]


def rto_defect_rank_one(
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    expansion_factor: int = 4,
) -> OperatorMatrix:
    """
    S*(theta) (x) P(theta conj(z phi eta)), paired at f-level.
    """
    order = expansion_factor * (window + 1)
    right = _analytic_part(
        multiply(
            expand(theta, order),
            transform(shift(_symbol_times_eta(phi, eta, order), 1), Transform.BAR),
        )
    )
    return rank_one(
        _backward_shift_theta(theta, order),
        right,
        beurling_basis(eta, window + 1, order),
        model_basis(theta, order),
        f_level=True,
    )


def rho_defect_rank_one(
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    expansion_factor: int = 4,
) -> OperatorMatrix:
    """
    S*(theta) (x) P(theta-breve conj(z phi eta)), paired at f-level.
    """
    order = expansion_factor * (window + 1)
    right = _analytic_part(
        multiply(
            transform(expand(theta, order), Transform.BREVE),
            transform(shift(_symbol_times_eta(phi, eta, order), 1), Transform.BAR),
        )
    )
    return rank_one(
        _backward_shift_theta(theta, order),
        right,
        beurling_basis(eta, window + 1, order),
        model_basis(theta, order),
        f_level=True,
    )


def check_rto_defect(
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    *,
    expansion_factor: int = 4,
    threshold: float = 1e-8,
    check_id: str | None = None,
    seed: int | None = None,
) -> CheckReport:
    '''
    A - S_theta^* A S_(eta) equals the rank-one defect for A the RTO of phi.

    Args:
        phi (SymbolSource): Symbol.
        eta (InnerFunction): Beurling inner function.
        theta (InnerFunction): Finite Blaschke product.
        window (int): Last reported index N.

    Returns:
        CheckReport: Frobenius distance between the two sides.
    '''
    matrix, compressed = _defect_parts(OperatorKind.RTO, phi, eta, theta, window, expansion_factor)
    x = matrix.entries
    defect = x[:, : window + 1] - compressed.conj().T @ x[:, 1 : window + 2]
    expected = rto_defect_rank_one(phi, eta, theta, window, expansion_factor)
    trusted = intersect_windows(_shifted_window(matrix, window + 1, axis=1), expected.trusted_window())

    return _finish(
        "rto_defect",
        "T - S_theta^* T S_(eta) = S^*(theta) (x) P(theta conj(z phi eta))",
        difference_norm(restrict(defect, trusted), restrict(expected.entries, trusted)),
        threshold,
        inputs=_inputs("rto_defect", window, expansion_factor, phi=phi, eta=eta, theta=theta),
        certified=matrix.certified and expected.certified,
        trusted=trusted,
        check_id=check_id,
        seed=seed,
    )


def check_rho_defect(
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    *,
    expansion_factor: int = 4,
    threshold: float = 1e-8,
    check_id: str | None = None,
    seed: int | None = None,
) -> CheckReport:
    """
    A S_(eta) - S_theta^* A equals the rank-one defect for A the RHO of phi.
    """
    matrix, compressed = _defect_parts(OperatorKind.RHO, phi, eta, theta, window, expansion_factor)
    x = matrix.entries
    defect = x[:, 1 : window + 2] - compressed.conj().T @ x[:, : window + 1]
    expected = rho_defect_rank_one(phi, eta, theta, window, expansion_factor)
    trusted = intersect_windows(_shifted_window(matrix, window + 1, axis=1), expected.trusted_window())

    return _finish(
        "rho_defect",
        "H S_(eta) - S_theta^* H = S^*(theta) (x) P(theta-breve conj(z phi eta))",
        difference_norm(restrict(defect, trusted), restrict(expected.entries, trusted)),
        threshold,
        inputs=_inputs("rho_defect", window, expansion_factor, phi=phi, eta=eta, theta=theta),
        certified=matrix.certified and expected.certified,
        trusted=trusted,
        check_id=check_id,
        seed=seed,
    )


def check_adjoint_defects(
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    *,
    expansion_factor: int = 4,
    threshold: float = 1e-8,
    check_id: str | None = None,
    seed: int | None = None,
) -> CheckReport:
    '''
    Adjoint forms of both defect identities, assembled through TAU and H_SMALL.

    tau of conj(phi) and h of phi-star are the adjoints of the RTO and RHO
    of phi, so their defects must equal the adjoints of the rank-one terms.
    '''
    order = expansion_factor * (window + 1)
    compressed = shift_matrix(ShiftKind.COMPRESSED_S_THETA, 0, inner=theta, order=order).entries

    tau = assemble(
        OperatorKind.TAU,
        transform_symbol(phi, Transform.BAR),
        eta,
        theta,
        window=window,
        expansion_factor=expansion_factor,
        rows=window + 2,
    )
    y = tau.entries
    tau_defect = y[: window + 1, :] - y[1 : window + 2, :] @ compressed
    rto_term = rto_defect_rank_one(phi, eta, theta, window, expansion_factor)
    tau_window = _shifted_window(tau, window + 1, axis=0)
    tau_residual = difference_norm(restrict(tau_defect, tau_window), restrict(rto_term.entries.conj().T, tau_window))

    small = assemble(
        OperatorKind.H_SMALL,
        transform_symbol(phi, Transform.STAR),
        eta,
        theta,
        window=window,
        expansion_factor=expansion_factor,
        rows=window + 2,
    )
    w = small.entries
    small_defect = w[1 : window + 2, :] - w[: window + 1, :] @ compressed
    rho_term = rho_defect_rank_one(phi, eta, theta, window, expansion_factor)
    small_window = _shifted_window(small, window + 1, axis=0)
    small_residual = difference_norm(
        restrict(small_defect, small_window),
        restrict(rho_term.entries.conj().T, small_window),
    )

    return _finish(
        "adjoint_defects",
        "tau - S_(eta)^* tau S_theta and S_(eta)^* h - h S_theta are the adjoint rank-one defects",
        max(tau_residual, small_residual),
        threshold,
        inputs=_inputs("adjoint_defects", window, expansion_factor, phi=phi, eta=eta, theta=theta),
        certified=tau.certified and small.certified and rto_term.certified and rho_term.certified,
        trusted=intersect_windows(tau_window, small_window),
        check_id=check_id,
        seed=seed,
        notes=f"tau={tau_residual:.3e} h={small_residual:.3e}",
    )


def _commutator(
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    expansion_factor: int,
) -> tuple[OperatorMatrix, np.ndarray, Window]:
    matrix, compressed = _defect_parts(OperatorKind.RTO, phi, eta, theta, window, expansion_factor)
    x = matrix.entries
    trusted = _shifted_window(matrix, window + 1, axis=1)
    return matrix, x[:, 1 : window + 2] - compressed @ x[:, : window + 1], trusted


def check_intertwining(
    psi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    *,
    expansion_factor: int = 4,
    threshold: float = 1e-8,
    check_id: str | None = None,
    seed: int | None = None,
) -> CheckReport:
    """
    For phi = conj(eta) psi with psi analytic, A S_(eta) = S_theta A.
    """
    phi = product_symbol(as_rational(eta).transform(Transform.BAR), psi)
    matrix, commutator, trusted = _commutator(phi, eta, theta, window, expansion_factor)

    return _finish(
        "intertwining",
        "A S_(eta) - S_theta A = 0 for A = T_phi, phi in conj(eta) H^inf",
        float(np.linalg.norm(restrict(commutator, trusted))),
        threshold,
        inputs=_inputs("intertwining", window, expansion_factor, phi=psi, eta=eta, theta=theta),
        certified=matrix.certified,
        trusted=trusted,
        check_id=check_id,
        seed=seed,
    )


def probe_intertwining(
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    *,
    expansion_factor: int = 4,
    threshold: float = 1e-8,
    separation_factor: float = 10.0,
    check_id: str | None = None,
    seed: int | None = None,
) -> CheckReport:
    '''
    Commutator norm for an arbitrary symbol.

    When phi is rational and the classifier places it outside conj(eta) H^inf
    the check expects separation: it passes only when the commutator clears
    separation_factor x threshold. Members and non-rational symbols are
    expected to vanish.
    '''
    exact = symbol_rational(phi)
    expectation = Expectation.VANISH
    if exact is not None and not classify_symbol(exact, eta, theta, SymbolClass.ETA_BAR_HINF):
        expectation = Expectation.SEPARATE

    matrix, commutator, trusted = _commutator(phi, eta, theta, window, expansion_factor)
    return _finish(
        "intertwining_probe",
        "A S_(eta) = S_theta A iff A = T_phi with phi in conj(eta) H^inf",
        float(np.linalg.norm(restrict(commutator, trusted))),
        threshold,
        inputs=_inputs("intertwining_probe", window, expansion_factor, phi=phi, eta=eta, theta=theta),
        certified=matrix.certified,
        trusted=trusted,
        check_id=check_id,
        seed=seed,
        expectation=expectation,
        separation_factor=separation_factor,
    )


def check_commutator_formula(
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    *,
    expansion_factor: int = 4,
    threshold: float = 1e-8,
    check_id: str | None = None,
    seed: int | None = None,
) -> CheckReport:
    '''
    A S_(eta) - S_theta A = k_0 (x) P(conj(z phi eta)) for any RTO A.

    k_0 = 1 - conj(theta(0)) theta is the reproducing kernel of K_theta at 0;
    the functional reads the coefficient of index -1 of phi eta f.
    '''
    order = expansion_factor * (window + 1)
    matrix, commutator, trusted = _commutator(phi, eta, theta, window, expansion_factor)

    theta_series = expand(theta, order)
    kernel = CoeffSeries.monomial(0) - theta_series.scale(theta_series.coefficient(0).conjugate())
    functional = _analytic_part(transform(shift(_symbol_times_eta(phi, eta, order), 1), Transform.BAR))
    expected = rank_one(kernel, functional, beurling_basis(eta, window + 1, order), model_basis(theta, order), f_level=True)

    return _finish(
        "commutator_formula",
        "A S_(eta) - S_theta A = k_0 (x) P(conj(z phi eta))",
        difference_norm(restrict(commutator, trusted), restrict(expected.entries, trusted)),
        threshold,
        inputs=_inputs("commutator_formula", window, expansion_factor, phi=phi, eta=eta, theta=theta),
        certified=matrix.certified and expected.certified,
        trusted=trusted,
        check_id=check_id,
        seed=seed,
    )


def check_vanishing(
    kind: OperatorKind,
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    *,
    expansion_factor: int = 4,
    threshold: float = 1e-8,
    separation_factor: float = 10.0,
    check_id: str | None = None,
    seed: int | None = None,
) -> CheckReport:
    '''
    Operator norm on the window against the classifier's verdict.

    Members of the vanishing class must give a norm at or below threshold;
    certified non-members must clear separation_factor x threshold.

    Raises:
        InvalidSpecError: If the kind has no vanishing class or phi is not
            exactly known.
    '''
    kind = OperatorKind(kind)
    if kind not in VANISHING_CLASSES:
        raise InvalidSpecError(code="NO_VANISHING_CLASS", message=f"no vanishing criterion for {kind}.")
    exact = symbol_rational(phi)
    if exact is None:
        raise InvalidSpecError(
            code="NOT_RATIONAL",
            message="vanishing checks need a rational or exact Laurent symbol.",
        )

    symbol_class = VANISHING_CLASSES[kind]
    member = classify_symbol(exact, eta, theta, symbol_class)
    matrix = assemble(kind, exact, eta, theta, window=window, expansion_factor=expansion_factor)

    return _finish(
        f"vanishing/{kind.value}",
        f"{kind.value} = 0 iff phi in {symbol_class.value}",
        matrix.frobenius(),
        threshold,
        inputs=_inputs(f"vanishing/{kind.value}", window, expansion_factor, phi=exact, eta=eta, theta=theta),
        certified=matrix.certified,
        trusted=matrix.trusted_window(),
        check_id=check_id,
        seed=seed,
        expectation=Expectation.VANISH if member else Expectation.SEPARATE,
        separation_factor=separation_factor,
        notes=f"member={member}",
    )


def _split_basis_matrix(theta: InnerFunction, size: int, order: int, last: int) -> np.ndarray:
    beurling = materialize(beurling_basis(theta, size, order))
    model = materialize(model_basis(theta, order))
    return stack(beurling + model, 0, last)


def _block_residuals(
    phi: SymbolSource,
    theta: InnerFunction,
    window: int,
    expansion_factor: int,
) -> dict[str, float]:
    size = window + 1
    order = expansion_factor * size
    last = order + window
    split = _split_basis_matrix(theta, size, order, last)
    series = symbol_series(phi, 2 * last + 2)

    def assembled(kind: OperatorKind) -> np.ndarray:
        return assemble(kind, phi, theta, theta, window=window, expansion_factor=expansion_factor).entries

    full = toeplitz(series, last + 1).entries
    blocks = split.conj().T @ full @ split
    residuals = {
        "block_toeplitz_top_left": difference_norm(blocks[:size, :size], toeplitz(series, size).entries),
        "block_tau": difference_norm(blocks[:size, size:], assembled(OperatorKind.TAU)),
        "block_rto": difference_norm(blocks[size:, :size], assembled(OperatorKind.RTO)),
        "block_tto": difference_norm(blocks[size:, size:], assembled(OperatorKind.TTO)),
    }

    flipped = hankel(series, last + 1, HankelVariant.FLIPPED).entries
    blocks = split.conj().T @ flipped @ split
    residuals.update({
        "block_h_small": difference_norm(blocks[:size, size:], assembled(OperatorKind.H_SMALL)),
        "block_rho": difference_norm(blocks[size:, :size], assembled(OperatorKind.RHO)),
        "block_tho": difference_norm(blocks[size:, size:], assembled(OperatorKind.THO)),
    })
    return residuals


def _hankel_of(series: CoeffSeries, rows: int, cols: int) -> np.ndarray:
    return hankel(series, rows, HankelVariant.FLIPPED, cols).entries


def _conjugate_hankel_of(series: CoeffSeries, rows: int, cols: int) -> np.ndarray:
    """
    [p, l] = coefficient p + l + 1 of an analytic series.
    """
    return scipy.linalg.hankel(series.window(1, rows), series.window(rows, rows + cols - 1))


def decomposition_residuals(
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    expansion_factor: int = 4,
) -> tuple[dict[str, float], bool]:
    '''
    Residual of every identity in the decomposition battery.

    Returns:
        tuple[dict[str, float], bool]: Residual per identity name and whether
        every matrix involved was certified.
    '''
    size = window + 1
    order = expansion_factor * size
    theta_r = as_rational(theta)
    theta_series = expand(theta, 2 * order + 2)

    def build(kind: OperatorKind, symbol: SymbolSource, e: InnerFunction = eta) -> OperatorMatrix:
        return assemble(kind, symbol, e, theta, window=window, expansion_factor=expansion_factor)

    residuals = _block_residuals(phi, theta, window, expansion_factor)

    rto = build(OperatorKind.RTO, phi)
    rho = build(OperatorKind.RHO, phi)
    certified = rto.certified and rho.certified

    # RTO in monomial coordinates is H_theta-breve H_psi with psi = conj(theta) phi eta
    psi = product_symbol(theta_r.transform(Transform.BAR), phi, as_rational(eta))
    psi_series = symbol_series(psi, 2 * order + 2)
    coordinates = stack(materialize(rto.codomain), 0, order)
    hankel_theta = _conjugate_hankel_of(theta_series, order + 1, order)
    factored = coordinates.conj().T @ hankel_theta @ _hankel_of(psi_series, order, size)
    residuals["rto_hankel_factorization"] = difference_norm(rto, factored)

    # RHO and H_theta-bar H_{phi eta} have the same Gram matrix
    phi_eta = symbol_series(product_symbol(phi, as_rational(eta)), 2 * order + 2)
    gram_factor = _conjugate_hankel_of(theta_series, order, order).conj() @ _hankel_of(phi_eta, order, size)
    residuals["rho_gram"] = difference_norm(
        rho.entries.conj().T @ rho.entries,
        gram_factor.conj().T @ gram_factor,
    )

    stto = build(OperatorKind.STTO, phi)
    residuals["stto_conj_beurling_block"] = difference_norm(
        stto.entries[:size, :],
        build(OperatorKind.H_SMALL, product_symbol(theta_r, phi), UNIT).entries,
    )
    residuals["stto_h2_block"] = difference_norm(stto.entries[size:, :], build(OperatorKind.TAU, phi, UNIT).entries)

    btto = build(OperatorKind.BTTO, phi)
    residuals["btto_conj_h02_block"] = difference_norm(btto.entries[:size, :], build(OperatorKind.TAU, phi, UNIT).entries)
    residuals["btto_beurling_block"] = difference_norm(
        btto.entries[size:, :],
        build(OperatorKind.H_SMALL, product_symbol(phi, theta_r.transform(Transform.STAR)), UNIT).entries,
    )

    tau = build(OperatorKind.TAU, phi)
    residuals["tau_adjoint"] = difference_norm(
        tau.entries,
        build(OperatorKind.RTO, transform_symbol(phi, Transform.BAR)).entries.conj().T,
    )
    small = build(OperatorKind.H_SMALL, phi)
    residuals["h_small_adjoint"] = difference_norm(
        small.entries,
        build(OperatorKind.RHO, transform_symbol(phi, Transform.STAR)).entries.conj().T,
    )

    srho = build(OperatorKind.SRHO, phi)
    swapped = transform_symbol(product_symbol(phi, as_rational(eta)), Transform.STAR)
    residuals["srho_conjugate_rho"] = difference_norm(
        srho.entries,
        build(OperatorKind.RHO, swapped, UNIT).entries.conj(),
    )

    residuals["conj_model_projection"] = difference_norm(
        conj_model_projection_matrix(theta, window),
        model_projection_matrix(theta, window).entries.conj(),
    )

    certified = certified and all(m.certified for m in (stto, btto, tau, small, srho))
    return residuals, certified


def check_decompositions(
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    *,
    expansion_factor: int = 4,
    threshold: float = 1e-8,
    check_id: str | None = None,
    seed: int | None = None,
) -> CheckReport:
    '''
    Run the decomposition battery and report the worst residual.

    The battery covers the block matrices of T_phi and H_phi in the split
    H^2 = theta H^2 + K_theta, the Hankel-product forms of the RTO and RHO,
    the block forms of the STTO and BTTO, the adjoint relations, the
    conjugate form of the SRHO and the conjugate model projection.
    '''
    residuals, certified = decomposition_residuals(phi, eta, theta, window, expansion_factor)
    worst = max(residuals, key=residuals.get)

    return _finish(
        "decompositions",
        "block, factorization, adjoint and conjugation identities of the operator zoo",
        residuals[worst],
        threshold,
        inputs=_inputs("decompositions", window, expansion_factor, phi=phi, eta=eta, theta=theta),
        certified=certified,
        trusted=((0, window + 1), (0, window + 1)),
        check_id=check_id,
        seed=seed,
        notes=f"worst={worst}",
    )


def check_backward_shift(
    theta: InnerFunction,
    window: int,
    *,
    expansion_factor: int = 4,
    threshold: float = 1e-8,
    check_id: str | None = None,
    seed: int | None = None,
) -> CheckReport:
    '''
    S^* k = S_theta^* k for every basis vector k of K_theta.

    S^* acts on coefficients; S_theta^* is the adjoint of the compressed-shift
    matrix, so S_theta^* e_k = sum_j conj(S[k, j]) e_j.
    '''
    order = expansion_factor * (window + 1)
    compressed = shift_matrix(ShiftKind.COMPRESSED_S_THETA, 0, inner=theta, order=order)
    vectors = materialize(compressed.domain)
    coordinates = stack(vectors, 0, order)

    residual = 0.0
    for k, vector in enumerate(vectors):
        backward = _analytic_part(shift(vector, -1)).window(0, order)
        compressed_image = coordinates @ compressed.entries[k, :].conj()
        residual = max(residual, float(np.linalg.norm(backward - compressed_image)))

    return _finish(
        "backward_shift",
        "S^*(k) = S_theta^*(k) for k in K_theta",
        residual,
        threshold,
        inputs=_inputs("backward_shift", window, expansion_factor, theta=theta),
        certified=compressed.certified,
        trusted=compressed.trusted_window(),
        check_id=check_id,
        seed=seed,
    )
