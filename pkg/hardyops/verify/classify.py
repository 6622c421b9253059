'''
Exact coset membership for rational symbols.

On the unit circle conj(z) = 1/z, so conj(theta) = 1/theta for an inner theta
and every membership below reduces to asking whether one rational function
has all of its poles outside the closed disk.
'''

from __future__ import annotations

import logging
from enum import StrEnum

from hardyops.config.limits import ROOT_TOLERANCE
from hardyops.fourier.rational import RationalSymbol
from hardyops.fourier.series import Transform
from hardyops.inner.functions import InnerFunction, as_rational
from hardyops.utils.domain_exceptions import InvalidSpecError, PoleOnCircle

logger = logging.getLogger(__name__)


class SymbolClass(StrEnum):
    ETA_BAR_THETA_HINF = "eta_bar_theta_hinf"                  # phi in conj(eta) theta H^inf
    ETA_BAR_HINF = "eta_bar_hinf"                              # phi in conj(eta) H^inf
    THETA_BREVE_ETA_BAR_HINF = "theta_breve_eta_bar_hinf"      # phi in breve(theta) conj(eta) H^inf
    CONJ_THETA_HINF_AND_BREVE = "conj_theta_hinf_and_breve"    # phi in conj(theta H^inf) and breve(theta) H^inf
    KRONECKER = "kronecker"                                    # phi in H^inf + R
    THETA_BAR_CONSTANT = "theta_bar_constant"                  # phi = c conj(theta)
    ETA_CONJ_THETA_HINF = "eta_conj_theta_hinf"                # phi in eta conj(theta H^inf)
    ETA_BREVE_HINF = "eta_breve_hinf"                          # phi in breve(eta) H^inf


def _bar(r: RationalSymbol) -> RationalSymbol:
    return r.transform(Transform.BAR)


def _star(r: RationalSymbol) -> RationalSymbol:
    return r.transform(Transform.STAR)


def _analytic(r: RationalSymbol, tolerance: float) -> bool:
    ambiguous = r.ambiguous_cancellations(tolerance)
    if ambiguous:
        zero, pole = ambiguous[0]
        raise PoleOnCircle(
            "zero/pole cancellation is ambiguous at the configured tolerance.",
            detail={"zero": [zero.real, zero.imag], "pole": [pole.real, pole.imag]},
        )
    return r.is_zero or r.is_analytic()


def classify_symbol(
    phi: RationalSymbol,
    eta: InnerFunction,
    theta: InnerFunction,
    symbol_class: SymbolClass,
    *,
    tolerance: float = ROOT_TOLERANCE,
) -> bool:
    '''
    Decide whether a rational symbol lies in one of the vanishing classes.

    Args:
        phi (RationalSymbol): Symbol with no pole on the circle.
        eta (InnerFunction): Finite Blaschke product for the Beurling side.
        theta (InnerFunction): Finite Blaschke product for the model side.
        symbol_class (SymbolClass): Class to test.
        tolerance (float): Relative root distance below which a zero and a
            pole are the same point.

    Returns:
        bool: Membership. KRONECKER holds when no pole of phi lies within
        tolerance of the circle, so phi splits into an analytic part and a
        rational part with its poles strictly inside the disk.

    Raises:
        InvalidSpecError: If phi is not a rational symbol.
        NotFiniteBlaschke: If eta or theta carries singular atoms.
        PoleOnCircle: If a cancellation is too close to call.
    '''
    symbol_class = SymbolClass(symbol_class)
    if not isinstance(phi, RationalSymbol):
        raise InvalidSpecError(code="NOT_RATIONAL", message="only rational symbols can be classified exactly.")
    eta_r, theta_r = as_rational(eta), as_rational(theta)

    if symbol_class is SymbolClass.KRONECKER:
        member = all(abs(abs(pole) - 1.0) > tolerance for pole in phi.poles)
    elif symbol_class is SymbolClass.ETA_BAR_THETA_HINF:
        member = _analytic(phi * eta_r * theta_r.reciprocal(), tolerance)
    elif symbol_class is SymbolClass.ETA_BAR_HINF:
        member = _analytic(phi * eta_r, tolerance)
    elif symbol_class is SymbolClass.THETA_BREVE_ETA_BAR_HINF:
        member = _analytic(phi * eta_r * _star(theta_r), tolerance)
    elif symbol_class is SymbolClass.CONJ_THETA_HINF_AND_BREVE:
        member = _analytic(_bar(phi) * theta_r.reciprocal(), tolerance) and _analytic(
            phi * _star(theta_r), tolerance
        )
    elif symbol_class is SymbolClass.THETA_BAR_CONSTANT:
        product = phi * theta_r
        if product.ambiguous_cancellations(tolerance):
            raise PoleOnCircle("zero/pole cancellation is ambiguous at the configured tolerance.")
        member = product.is_zero or product.is_constant
    elif symbol_class is SymbolClass.ETA_CONJ_THETA_HINF:
        member = _analytic(_bar(phi) * eta_r * theta_r.reciprocal(), tolerance)
    else:
        member = _analytic(phi * _star(eta_r), tolerance)

    logger.debug("classified symbol in %s: %s", symbol_class.value, member)
    return member
