'''
Inner function descriptors and their evaluation and expansion.

An InnerFunction is c * prod (z - a)/(1 - conj(a) z) * exp(sum s (z + w)/(z - w)),
where the product runs over the Blaschke zeros a and the sum over singular
atoms of mass s at boundary points w.
'''

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from hardyops.config.limits import ATOM_TOLERANCE, BLASCHKE_ZERO_MARGIN, UNIMODULAR_TOLERANCE
from hardyops.fourier.rational import RationalSymbol, rational_to_series
from hardyops.fourier.sampling import sample_expand
from hardyops.fourier.series import CoeffSeries, multiply, truncate
from hardyops.utils.domain_exceptions import AtomSingularity, InvalidInnerFunction, NotFiniteBlaschke

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SingularAtom:
    """
    Point mass of the singular measure at exp(i*angle).
    """

    angle: float
    mass: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.angle):
            raise InvalidInnerFunction("atom angle must be finite.")
        if not (math.isfinite(self.mass) and self.mass > 0):
            raise InvalidInnerFunction("atom mass must be positive.", detail={"mass": self.mass})
        object.__setattr__(self, "angle", float(self.angle) % (2 * math.pi))
        object.__setattr__(self, "mass", float(self.mass))

    @property
    def point(self) -> complex:
        return complex(math.cos(self.angle), math.sin(self.angle))


@dataclass(frozen=True, slots=True)
class InnerFunction:
    """
    Finite Blaschke product with an optional finite set of singular atoms.
    """

    constant: complex = 1.0
    zeros: tuple[complex, ...] = ()
    atoms: tuple[SingularAtom, ...] = ()

    def __post_init__(self) -> None:
        constant = complex(self.constant)
        if abs(abs(constant) - 1.0) > UNIMODULAR_TOLERANCE:
            raise InvalidInnerFunction(
                "unimodular constant must have modulus 1.",
                detail={"modulus": abs(constant)},
            )

        zeros = tuple(complex(a) for a in self.zeros)
        for a in zeros:
            if abs(a) > 1.0 - BLASCHKE_ZERO_MARGIN:
                raise InvalidInnerFunction(
                    "Blaschke zero too close to the unit circle.",
                    detail={"zero": [a.real, a.imag]},
                )

        object.__setattr__(self, "constant", constant)
        object.__setattr__(self, "zeros", tuple(sorted(zeros, key=lambda a: (a.real, a.imag))))
        object.__setattr__(self, "atoms", tuple(sorted(self.atoms, key=lambda s: (s.angle, s.mass))))

    @property
    def degree(self) -> int:
        return len(self.zeros)

    @property
    def is_finite_blaschke(self) -> bool:
        return not self.atoms

    @property
    def is_constant(self) -> bool:
        return not self.zeros and not self.atoms

    def to_config(self) -> dict:
        """
        Structured fragment: constant, zeros with multiplicity, atoms.
        """
        counts: dict[complex, int] = {}
        for a in self.zeros:
            counts[a] = counts.get(a, 0) + 1
        return {
            "constant": [self.constant.real, self.constant.imag],
            "zeros": [[a.real, a.imag, count] for a, count in counts.items()],
            "atoms": [[atom.angle, atom.mass] for atom in self.atoms],
        }

    @classmethod
    def from_config(cls, fragment: dict) -> InnerFunction:
        constant = complex(*fragment.get("constant", (1.0, 0.0)))
        zeros: list[complex] = []
        for re, im, count in fragment.get("zeros", ()):
            zeros.extend([complex(re, im)] * int(count))
        atoms = tuple(SingularAtom(angle, mass) for angle, mass in fragment.get("atoms", ()))
        return cls(constant, tuple(zeros), atoms)


def blaschke(*zeros: complex, constant: complex = 1.0) -> InnerFunction:
    return InnerFunction(constant, tuple(zeros))


def singular_inner(angle: float, mass: float, *, constant: complex = 1.0) -> InnerFunction:
    return InnerFunction(constant, (), (SingularAtom(angle, mass),))


def product(first: InnerFunction, second: InnerFunction) -> InnerFunction:
    """
    Merge zeros and atoms and multiply the constants.
    """
    masses: dict[float, float] = {}
    for atom in first.atoms + second.atoms:
        key = next((angle for angle in masses if abs(angle - atom.angle) <= ATOM_TOLERANCE), atom.angle)
        masses[key] = masses.get(key, 0.0) + atom.mass

    constant = first.constant * second.constant
    constant /= abs(constant)
    return InnerFunction(
        constant,
        first.zeros + second.zeros,
        tuple(SingularAtom(angle, mass) for angle, mass in masses.items()),
    )


def as_rational(theta: InnerFunction) -> RationalSymbol:
    """
    The finite Blaschke product as gain * prod(z - a) / prod(z - 1/conj(a)).
    """
    if not theta.is_finite_blaschke:
        raise NotFiniteBlaschke("inner function has singular atoms.")

    gain = theta.constant
    poles: list[complex] = []
    for a in theta.zeros:
        if a != 0:
            gain *= -1.0 / a.conjugate()
            poles.append(1.0 / a.conjugate())
    return RationalSymbol(gain, theta.zeros, tuple(poles))


def _singular_factor(theta: InnerFunction, z: np.ndarray) -> np.ndarray:
    exponent = np.zeros(z.shape, dtype=np.complex128)
    for atom in theta.atoms:
        w = atom.point
        exponent = exponent + atom.mass * (z + w) / (z - w)
    return np.exp(exponent)


def evaluate(theta: InnerFunction, z):
    '''
    Evaluate the inner function at points of the closed disk.

    Args:
        theta (InnerFunction): Descriptor to evaluate.
        z (complex | np.ndarray): Points with |z| <= 1.

    Returns:
        complex | np.ndarray: Values, unimodular on the circle away from atoms.

    Raises:
        AtomSingularity: If a point coincides with a singular atom.
    '''
    points = np.asarray(z, dtype=np.complex128)
    for atom in theta.atoms:
        if np.any(np.abs(points - atom.point) <= ATOM_TOLERANCE):
            raise AtomSingularity(
                "evaluation point coincides with a singular atom.",
                detail={"angle": atom.angle},
            )

    value = np.full(points.shape, theta.constant, dtype=np.complex128)
    for a in theta.zeros:
        value = value * (points - a) / (1.0 - a.conjugate() * points)
    if theta.atoms:
        value = value * _singular_factor(theta, points)

    return complex(value) if value.ndim == 0 else value


@lru_cache(maxsize=128)
def expand(theta: InnerFunction, n: int) -> CoeffSeries:
    '''
    Taylor coefficients on [0, n].

    Finite Blaschke products expand through their rational form with a
    certified tail. Singular atoms are expanded from samples on the circle of
    radius 1 - 4/n, where the function is smooth, and the result is marked
    uncertified; its tail is the aliasing estimate plus the mass found on
    (n, 2n].
    '''
    if n < 0:
        raise ValueError("expansion order must be nonnegative.")

    finite = InnerFunction(theta.constant, theta.zeros)
    series = truncate(rational_to_series(as_rational(finite), n), 0, n)
    if theta.is_finite_blaschke:
        return series

    order = max(n, 16)
    radius = 1.0 - 4.0 / order
    exponent = math.ceil(math.log2(16 * order))
    logger.info("expanding singular atoms by sampling (2**%d nodes, radius %.4f)", exponent, radius)

    atoms_only = InnerFunction(1.0, (), theta.atoms)
    sampled = sample_expand(
        lambda points: _singular_factor(atoms_only, points),
        exponent,
        radius=radius,
        limit=2 * order,
    )
    return truncate(multiply(series, truncate(sampled, 0, n)), 0, n)
