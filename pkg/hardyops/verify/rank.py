'''
Numerical rank of restricted operators across growing windows.

For a finite Blaschke theta every operator into K_theta has rank at most
deg(theta), which the study reports as a trivial bound. The interesting
regime is a theta with singular atoms, where K_theta is infinite dimensional;
there the RTO, RHO and SRHO are realized through their Hankel-product forms
from sampled coefficients, and the study is HEURISTIC.
'''

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
import scipy.linalg

from hardyops.fourier.rational import RationalSymbol
from hardyops.fourier.series import Transform
from hardyops.inner.functions import InnerFunction, evaluate, expand
from hardyops.operators.assembly import OperatorKind, assemble
from hardyops.operators.classical import HankelVariant, hankel
from hardyops.operators.spectral import numerical_rank, spectral
from hardyops.operators.symbols import SymbolSource, product_symbol, symbol_series, transform_symbol
from hardyops.utils.domain_exceptions import InvalidSpecError
from hardyops.verify.records import Status

logger = logging.getLogger(__name__)

HANKEL_FORM_KINDS = frozenset({OperatorKind.RTO, OperatorKind.RHO, OperatorKind.SRHO})


class RankVerdict(StrEnum):
    PLATEAU = "PLATEAU"
    GROWING = "GROWING"
    BOUNDED_BY_DEGREE = "BOUNDED_BY_DEGREE"


@dataclass(frozen=True, slots=True)
class RankSample:
    window: int
    numerical_rank: int
    singular_values: tuple[float, ...]


@dataclass(frozen=True, slots=True)
class RankStudy:
    kind: OperatorKind
    samples: tuple[RankSample, ...]
    verdict: RankVerdict
    status: Status
    note: str

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(sample.numerical_rank for sample in self.samples)


def kronecker_symbol(
    eta: InnerFunction,
    theta: InnerFunction,
    pole: complex = 0.4,
) -> SymbolSource:
    """
    phi = conj(eta) theta / (z - pole), whose RTO has rank one for any theta.
    """
    rational = RationalSymbol(1.0, (), (pole,))

    def phi(z):
        return np.conj(evaluate(eta, z)) * evaluate(theta, z) * rational(z)

    phi.__qualname__ = f"kronecker_symbol(pole={pole})"
    return phi


def _inner_symbol(theta: InnerFunction) -> SymbolSource:
    def values(z):
        return evaluate(theta, z)

    values.__qualname__ = "inner_function_values"
    return values


def _hankel_form(
    kind: OperatorKind,
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    window: int,
    expansion_factor: int,
) -> np.ndarray:
    '''
    Monomial-coordinate matrix of an RTO, RHO or SRHO for any inner theta.

    RTO: H_theta-breve H_psi with psi = conj(theta) phi eta.
    RHO: the Gram-equivalent H_theta-bar H_{phi eta}.
    SRHO: the RHO form applied to (phi eta)-star, which it conjugates.
    '''
    size = window + 1
    order = expansion_factor * size
    theta_series = expand(theta, 2 * order + 1)
    theta_hankel = scipy.linalg.hankel(
        theta_series.window(1, order + 1),
        theta_series.window(order + 1, 2 * order),
    )

    if kind is OperatorKind.RTO:
        psi = product_symbol(transform_symbol(_inner_symbol(theta), Transform.BAR), phi, _inner_symbol(eta))
        series = symbol_series(psi, 2 * order + 2)
        return theta_hankel @ hankel(series, order, HankelVariant.FLIPPED, size).entries

    phi_eta = product_symbol(phi, _inner_symbol(eta))
    if kind is OperatorKind.SRHO:
        phi_eta = transform_symbol(phi_eta, Transform.STAR)
    series = symbol_series(phi_eta, 2 * order + 2)
    return theta_hankel.conj() @ hankel(series, order, HankelVariant.FLIPPED, size).entries


def rank_study(
    kind: OperatorKind,
    phi: SymbolSource,
    eta: InnerFunction,
    theta: InnerFunction,
    windows: Sequence[int],
    *,
    expansion_factor: int = 4,
    tol_rank: float = 1e-8,
    top_k: int = 5,
) -> RankStudy:
    '''
    Numerical rank per window and a PLATEAU/GROWING verdict.

    Args:
        kind (OperatorKind): Operator to study.
        phi (SymbolSource): Symbol.
        eta (InnerFunction): Beurling inner function.
        theta (InnerFunction): Model inner function, possibly with atoms.
        windows (Sequence[int]): Strictly increasing windows N.
        tol_rank (float): Relative rank threshold.
        top_k (int): Number of leading singular values kept per window.

    Returns:
        RankStudy: PLATEAU when the rank is constant over the upper half of
        the windows, GROWING otherwise; BOUNDED_BY_DEGREE for a finite
        Blaschke theta, where the bound rank <= deg(theta) is automatic.

    Raises:
        InvalidSpecError: On empty or unsorted windows, or a kind without a
            Hankel form when theta has atoms.
    '''
    kind = OperatorKind(kind)
    windows = tuple(int(n) for n in windows)
    if not windows or any(b <= a for a, b in zip(windows, windows[1:])):
        raise InvalidSpecError(code="INVALID_WINDOWS", message="windows must be nonempty and strictly increasing.")

    samples = []
    if theta.is_finite_blaschke:
        certified = True
        for window in windows:
            matrix = assemble(kind, phi, eta, theta, window=window, expansion_factor=expansion_factor)
            spectrum = spectral(matrix, tol_rank)
            certified = certified and matrix.certified
            samples.append(RankSample(window, spectrum.numerical_rank, spectrum.singular_values[:top_k]))

        return RankStudy(
            kind,
            tuple(samples),
            RankVerdict.BOUNDED_BY_DEGREE,
            Status.CERTIFIED if certified else Status.HEURISTIC,
            f"theta is a finite Blaschke product: rank <= deg(theta) = {theta.degree} at every window",
        )

    if kind not in HANKEL_FORM_KINDS:
        raise InvalidSpecError(
            code="NO_HANKEL_FORM",
            message=f"{kind} has no rank study for theta with singular atoms.",
        )

    logger.info("rank study for %s with singular theta runs on sampled data", kind.value)
    for window in windows:
        block = _hankel_form(kind, phi, eta, theta, window, expansion_factor)
        values = scipy.linalg.svdvals(block)
        samples.append(
            RankSample(window, numerical_rank(values, tol_rank), tuple(float(s) for s in values[:top_k]))
        )

    ranks = [sample.numerical_rank for sample in samples]
    upper = ranks[len(ranks) // 2:]
    verdict = RankVerdict.PLATEAU if len(set(upper)) == 1 else RankVerdict.GROWING
    return RankStudy(
        kind,
        tuple(samples),
        verdict,
        Status.HEURISTIC,
        "theta has singular atoms: ranks come from sampled Hankel products",
    )
