'''
Seeded random instances and the bundled vanishing corpus.

All instances are drawn up front from a numpy Generator, so a suite's inputs
depend only on the seed and never on how its checks are scheduled.
'''

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from hardyops.config.limits import (
    RANDOM_ETA_DEGREE,
    RANDOM_SYMBOL_DEGREE,
    RANDOM_THETA_DEGREE,
    RANDOM_ZERO_RADIUS,
)
from hardyops.fourier.rational import RationalSymbol
from hardyops.fourier.series import CoeffSeries, Transform
from hardyops.inner.functions import InnerFunction, as_rational, blaschke
from hardyops.operators.assembly import UNIT, OperatorKind

CORPUS_SEED = 20_240_607
CORPUS_CONFIGS = 8
CORPUS_POLYNOMIAL_DEGREE = 3


@dataclass(frozen=True, slots=True)
class Instance:
    label: str
    phi: CoeffSeries | RationalSymbol
    eta: InnerFunction
    theta: InnerFunction


@dataclass(frozen=True, slots=True)
class VanishingCase:
    label: str
    kind: OperatorKind
    phi: RationalSymbol
    eta: InnerFunction
    theta: InnerFunction
    member: bool


def random_complex(rng: np.random.Generator, size: int) -> np.ndarray:
    """
    Uniform samples from the square [-1, 1] x [-1, 1].
    """
    return rng.uniform(-1.0, 1.0, size) + 1j * rng.uniform(-1.0, 1.0, size)


def random_disk_points(rng: np.random.Generator, size: int, radius: float = RANDOM_ZERO_RADIUS) -> np.ndarray:
    """
    Uniform samples from the disk |z| <= radius.
    """
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, size))
    angle = rng.uniform(0.0, 2.0 * math.pi, size)
    return r * np.exp(1j * angle)


def random_blaschke(
    rng: np.random.Generator,
    degree_range: tuple[int, int],
    *,
    real_zeros: bool = False,
) -> InnerFunction:
    degree = int(rng.integers(degree_range[0], degree_range[1] + 1))
    if real_zeros:
        zeros = rng.uniform(-RANDOM_ZERO_RADIUS, RANDOM_ZERO_RADIUS, degree).astype(np.complex128)
    else:
        zeros = random_disk_points(rng, degree)
    return blaschke(*(complex(z) for z in zeros))


def random_laurent(rng: np.random.Generator, degree: int = RANDOM_SYMBOL_DEGREE) -> CoeffSeries:
    """
    Laurent polynomial with at most degree indices on each side of zero.
    """
    lo = -int(rng.integers(0, degree + 1))
    hi = int(rng.integers(0, degree + 1))
    return CoeffSeries.from_dense(lo, random_complex(rng, hi - lo + 1))


def random_polynomial(rng: np.random.Generator, degree: int) -> CoeffSeries:
    return CoeffSeries.from_dense(0, random_complex(rng, int(rng.integers(0, degree + 1)) + 1))


def random_instances(seed: int, count: int, label: str = "random") -> list[Instance]:
    '''
    Random symbols with random Blaschke eta and theta.

    Args:
        seed (int): Generator seed.
        count (int): Number of instances.
        label (str): Prefix of the instance labels.

    Returns:
        list[Instance]: Laurent symbols of degree <= RANDOM_SYMBOL_DEGREE,
        theta of degree RANDOM_THETA_DEGREE, eta of degree RANDOM_ETA_DEGREE.
    '''
    rng = np.random.default_rng(seed)
    instances = []
    for index in range(count):
        phi = random_laurent(rng)
        eta = random_blaschke(rng, RANDOM_ETA_DEGREE)
        theta = random_blaschke(rng, RANDOM_THETA_DEGREE)
        instances.append(Instance(f"{label}-{index:03d}", phi, eta, theta))
    return instances


def outside_instances(seed: int, count: int, label: str = "outside") -> list[Instance]:
    '''
    Random instances whose symbol lies outside conj(eta) H^inf.

    phi starts at index -(deg eta + 1) or lower with a nonzero lowest
    coefficient, so phi eta keeps a pole at 0 whatever the zeros of eta.
    '''
    rng = np.random.default_rng(seed)
    instances = []
    for index in range(count):
        eta = random_blaschke(rng, RANDOM_ETA_DEGREE)
        theta = random_blaschke(rng, RANDOM_THETA_DEGREE)
        lo = -(eta.degree + 1 + int(rng.integers(0, RANDOM_SYMBOL_DEGREE)))
        coeffs = random_complex(rng, int(rng.integers(1, RANDOM_SYMBOL_DEGREE + 2)))
        # keep the lowest coefficient well away from zero
        coeffs[0] = np.exp(1j * rng.uniform(0.0, 2.0 * math.pi)) * rng.uniform(0.5, 1.0)
        phi = CoeffSeries.from_dense(lo, coeffs)
        instances.append(Instance(f"{label}-{index:03d}", phi, eta, theta))
    return instances


def random_thetas(seed: int, count: int, degree_range: tuple[int, int] = (1, 4)) -> list[InnerFunction]:
    rng = np.random.default_rng(seed)
    return [random_blaschke(rng, degree_range) for _ in range(count)]


def _polynomial(series: CoeffSeries) -> RationalSymbol:
    return RationalSymbol.from_laurent(series.lo, series.coeffs)


def _plus_conj_z(series: CoeffSeries) -> RationalSymbol:
    """
    h + conj(z) = (z h + 1) / z.
    """
    shifted = np.concatenate(([1.0 + 0j], series.coeffs))
    return RationalSymbol.from_coefficients(shifted, [0.0, 1.0])


def _vanishing_factors(
    kind: OperatorKind,
    eta: InnerFunction,
    theta: InnerFunction,
    h: CoeffSeries,
    constant: complex,
) -> tuple[RationalSymbol, RationalSymbol, RationalSymbol]:
    """
    (prefactor, member quotient, non-member quotient) for one kind.
    """
    eta_r, theta_r = as_rational(eta), as_rational(theta)
    eta_bar = eta_r.transform(Transform.BAR)
    theta_bar = theta_r.transform(Transform.BAR)

    if kind is OperatorKind.RTO:
        return eta_bar * theta_r, _polynomial(h), _plus_conj_z(h)
    if kind in (OperatorKind.RHO, OperatorKind.SRHO):
        return eta_bar, _polynomial(h), _plus_conj_z(h)
    if kind is OperatorKind.TAU:
        return (
            eta_r * theta_bar,
            _polynomial(h).transform(Transform.BAR),
            _plus_conj_z(h).transform(Transform.BAR),
        )
    if kind is OperatorKind.H_SMALL:
        return (
            eta_bar.transform(Transform.STAR),
            _polynomial(h).transform(Transform.STAR),
            _plus_conj_z(h).transform(Transform.STAR),
        )
    # STTO and BTTO: constant multiples of conj(theta) against conj(theta) (c + z)
    return theta_bar, RationalSymbol.constant(constant), RationalSymbol.from_coefficients([constant, 1.0], [1.0])


def _vanishing_phi(prefactor: RationalSymbol, quotient: RationalSymbol) -> RationalSymbol | None:
    phi = prefactor * quotient
    if phi.ambiguous_cancellations():
        return None
    return phi


def vanishing_corpus(seed: int = CORPUS_SEED, configs: int = CORPUS_CONFIGS) -> list[VanishingCase]:
    '''
    Member and non-member symbols for every kind with a vanishing criterion.

    Each symbol is built as a product of factors (the class prefactor times
    an analytic polynomial for members, plus an offending conj(z) or z term
    for non-members), so membership is known by construction and no root
    finding is needed across sums.

    Returns:
        list[VanishingCase]: Pairs ordered by kind, configuration and membership.
    '''
    rng = np.random.default_rng(seed)
    kinds = (
        OperatorKind.RTO,
        OperatorKind.RHO,
        OperatorKind.SRHO,
        OperatorKind.TAU,
        OperatorKind.H_SMALL,
        OperatorKind.STTO,
        OperatorKind.BTTO,
    )

    cases: list[VanishingCase] = []
    for config in range(configs):
        eta = random_blaschke(rng, RANDOM_ETA_DEGREE)
        theta = random_blaschke(rng, RANDOM_THETA_DEGREE)
        real_theta = random_blaschke(rng, RANDOM_THETA_DEGREE, real_zeros=True)

        for kind in kinds:
            model = real_theta if kind is OperatorKind.BTTO else theta
            for _ in range(8):
                h = random_polynomial(rng, CORPUS_POLYNOMIAL_DEGREE)
                constant = complex(random_complex(rng, 1)[0])
                prefactor, member_q, offender_q = _vanishing_factors(kind, eta, model, h, constant)
                member = _vanishing_phi(prefactor, member_q)
                offender = _vanishing_phi(prefactor, offender_q)
                if member is not None and offender is not None:
                    break
            else:  # pragma: no cover
                raise RuntimeError("could not draw an unambiguous corpus symbol")

            label = f"{kind.value}-{config:02d}"
            cases.append(VanishingCase(f"{label}-member", kind, member, eta, model, True))
            cases.append(VanishingCase(f"{label}-offender", kind, offender, eta, model, False))

    return cases


def exact_vanishing_cases() -> list[VanishingCase]:
    """
    Hand-checkable cases with a known verdict.
    """
    z = RationalSymbol.monomial(1)
    z_bar = RationalSymbol.monomial(-1)
    return [
        VanishingCase("rto-exact-member", OperatorKind.RTO, z, blaschke(0), blaschke(0, 0), True),
        VanishingCase(
            "rho-exact-offender",
            OperatorKind.RHO,
            RationalSymbol.monomial(-2) * RationalSymbol.from_coefficients([1.0, 1.0], [1.0]),
            blaschke(0),
            blaschke(0.5),
            False,
        ),
        VanishingCase("stto-exact-member", OperatorKind.STTO, z_bar * (2 - 1j), UNIT, blaschke(0), True),
    ]


def kernel_class_instances(seed: int, count: int) -> list[Instance]:
    '''
    Symbols in breve(theta) conj(eta) H^inf, where the RHO defect vanishes.

    Args:
        seed (int): Generator seed.
        count (int): Number of instances.

    Returns:
        list[Instance]: phi = breve(theta) conj(eta) h for random analytic
        polynomials h.
    '''
    rng = np.random.default_rng(seed)
    instances = []
    for index in range(count):
        eta = random_blaschke(rng, RANDOM_ETA_DEGREE)
        theta = random_blaschke(rng, RANDOM_THETA_DEGREE)
        h = _polynomial(random_polynomial(rng, CORPUS_POLYNOMIAL_DEGREE))
        prefactor = as_rational(theta).transform(Transform.BREVE) * as_rational(eta).transform(Transform.BAR)
        instances.append(Instance(f"kernel-{index:03d}", prefactor * h, eta, theta))
    return instances
