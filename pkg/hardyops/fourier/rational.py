'''
Exact rational boundary symbols stored in zero/pole/gain form.

A RationalSymbol is gain * prod(z - zeros) / prod(z - poles). Keeping the
roots explicit makes the flip and conjugation maps exact root reflections
and reduces coset-membership questions to pole locations.
'''

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial import polynomial as npoly

from hardyops.config.limits import (
    AMBIGUOUS_CANCELLATION_FACTOR,
    GEOMETRIC_TAIL_TARGET,
    MAX_GEOMETRIC_TERMS,
    ROOT_TOLERANCE,
)
from hardyops.fourier.series import CoeffSeries, Transform, multiply, truncate
from hardyops.utils.domain_exceptions import InvalidSpecError, NoCircleAnnulus

_ZERO_SNAP = 1e-13


def _root_key(value: complex) -> tuple[float, float]:
    return (round(value.real, 15), round(value.imag, 15))


def _close(a: complex, b: complex, tolerance: float) -> bool:
    return abs(a - b) <= tolerance * max(1.0, abs(b))


def _cancel(
    zeros: Sequence[complex],
    poles: Sequence[complex],
    tolerance: float,
) -> tuple[list[complex], list[complex]]:
    remaining_zeros = list(zeros)
    kept_poles: list[complex] = []

    for pole in poles:
        match = None
        for index, zero in enumerate(remaining_zeros):
            if _close(zero, pole, tolerance):
                match = index
                break
        if match is None:
            kept_poles.append(pole)
        else:
            remaining_zeros.pop(match)

    return remaining_zeros, kept_poles


@dataclass(frozen=True, slots=True)
class RationalSymbol:
    """
    gain * prod(z - zeros) / prod(z - poles), reduced, with no pole on the circle.
    """

    gain: complex
    zeros: tuple[complex, ...] = ()
    poles: tuple[complex, ...] = ()

    def __post_init__(self) -> None:
        gain = complex(self.gain)
        if not (math.isfinite(gain.real) and math.isfinite(gain.imag)):
            raise InvalidSpecError(code="INVALID_RATIONAL", message="gain must be finite.")

        if gain == 0:
            zeros: list[complex] = []
            poles: list[complex] = []
        else:
            zeros, poles = _cancel(
                [complex(z) for z in self.zeros],
                [complex(p) for p in self.poles],
                ROOT_TOLERANCE,
            )

        for pole in poles:
            if abs(abs(pole) - 1.0) <= ROOT_TOLERANCE:
                raise NoCircleAnnulus(
                    "denominator has a root on the unit circle.",
                    detail={"pole": [pole.real, pole.imag]},
                )

        object.__setattr__(self, "gain", gain)
        object.__setattr__(self, "zeros", tuple(sorted(zeros, key=_root_key)))
        object.__setattr__(self, "poles", tuple(sorted(poles, key=_root_key)))

    @classmethod
    def constant(cls, value: complex) -> RationalSymbol:
        return cls(value)

    @classmethod
    def monomial(cls, power: int, value: complex = 1.0) -> RationalSymbol:
        if power >= 0:
            return cls(value, zeros=(0j,) * power)
        return cls(value, poles=(0j,) * (-power))

    @classmethod
    def from_coefficients(
        cls,
        numerator: Sequence[complex],
        denominator: Sequence[complex],
    ) -> RationalSymbol:
        '''
        Build a symbol from ascending polynomial coefficients.

        Args:
            numerator (Sequence[complex]): Coefficients c_0, c_1, ... of the numerator.
            denominator (Sequence[complex]): Coefficients of the denominator.

        Returns:
            RationalSymbol: The reduced quotient.
        '''
        num = npoly.polytrim(np.asarray(numerator, dtype=np.complex128), tol=0)
        den = npoly.polytrim(np.asarray(denominator, dtype=np.complex128), tol=0)

        if len(den) == 0 or not np.any(den):
            raise InvalidSpecError(code="INVALID_RATIONAL", message="denominator must be nonzero.")
        if len(num) == 0 or not np.any(num):
            return cls(0)

        return cls(
            complex(num[-1] / den[-1]),
            zeros=_snap(npoly.polyroots(num) if len(num) > 1 else ()),
            poles=_snap(npoly.polyroots(den) if len(den) > 1 else ()),
        )

    @classmethod
    def from_laurent(cls, lo: int, coefficients: Sequence[complex]) -> RationalSymbol:
        """
        sum_k coefficients[k] * z**(lo + k) as a rational symbol.
        """
        base = cls.from_coefficients(coefficients, [1.0])
        return base * cls.monomial(lo)

    @classmethod
    def from_series(cls, series: CoeffSeries) -> RationalSymbol | None:
        if not series.is_exact:
            return None
        if len(series.coeffs) == 0:
            return cls(0)
        return cls.from_laurent(series.lo, series.coeffs)

    @property
    def numerator(self) -> Polynomial:
        return Polynomial.fromroots(self.zeros) * self.gain if self.zeros else Polynomial([self.gain])

    @property
    def denominator(self) -> Polynomial:
        return Polynomial.fromroots(self.poles) if self.poles else Polynomial([1.0])

    @property
    def is_zero(self) -> bool:
        return self.gain == 0

    @property
    def is_constant(self) -> bool:
        return not self.zeros and not self.poles

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        value = np.full(z.shape, self.gain, dtype=np.complex128)
        for zero in self.zeros:
            value = value * (z - zero)
        for pole in self.poles:
            value = value / (z - pole)
        return value

    def __mul__(self, other: RationalSymbol | complex) -> RationalSymbol:
        if not isinstance(other, RationalSymbol):
            return RationalSymbol(self.gain * complex(other), self.zeros, self.poles)
        return RationalSymbol(
            self.gain * other.gain,
            self.zeros + other.zeros,
            self.poles + other.poles,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> RationalSymbol:
        if self.is_zero:
            raise ZeroDivisionError("the zero symbol has no reciprocal.")
        return RationalSymbol(1.0 / self.gain, self.poles, self.zeros)

    def transform(self, kind: Transform) -> RationalSymbol:
        '''
        Apply a flip or conjugation map as a function on the circle.

        On the circle conj(z) = 1/z, so BAR and BREVE reflect each root c to
        1/conj(c) or 1/c, STAR conjugates the roots, and the two flips add a
        factor 1/z to BREVE or BAR respectively.
        '''
        kind = Transform(kind)
        if self.is_zero:
            return self

        if kind is Transform.STAR:
            return RationalSymbol(
                self.gain.conjugate(),
                tuple(z.conjugate() for z in self.zeros),
                tuple(p.conjugate() for p in self.poles),
            )

        conjugate = kind in (Transform.BAR, Transform.V_ANTI)
        gain = self.gain.conjugate() if conjugate else self.gain
        zeros: list[complex] = []
        poles: list[complex] = []

        for root in self.zeros:
            image = root.conjugate() if conjugate else root
            if image == 0:
                poles.append(0j)
            else:
                gain *= -image
                zeros.append(1.0 / image)
                poles.append(0j)

        for root in self.poles:
            image = root.conjugate() if conjugate else root
            if image == 0:
                zeros.append(0j)
            else:
                gain /= -image
                poles.append(1.0 / image)
                zeros.append(0j)

        if kind in (Transform.FLIP_J, Transform.V_ANTI):
            poles.append(0j)

        return RationalSymbol(gain, tuple(zeros), tuple(poles))

    def is_analytic(self) -> bool:
        """
        True when every pole lies strictly outside the closed unit disk.
        """
        return all(abs(pole) > 1.0 for pole in self.poles)

    def ambiguous_cancellations(self, tolerance: float = ROOT_TOLERANCE) -> list[tuple[complex, complex]]:
        """
        Zero/pole pairs too close to trust as distinct but too far to cancel.
        """
        band = tolerance * AMBIGUOUS_CANCELLATION_FACTOR
        pairs = []
        for pole in self.poles:
            for zero in self.zeros:
                distance = abs(zero - pole) / max(1.0, abs(pole))
                if tolerance < distance <= band:
                    pairs.append((zero, pole))
        return pairs

    def to_config(self) -> dict:
        return {
            "gain": [self.gain.real, self.gain.imag],
            "zeros": [[z.real, z.imag] for z in self.zeros],
            "poles": [[p.real, p.imag] for p in self.poles],
        }


def _snap(roots: Iterable[complex]) -> tuple[complex, ...]:
    return tuple(0j if abs(r) < _ZERO_SNAP else complex(r) for r in roots)


def _geometric_length(ratio: float) -> int:
    if ratio == 0.0:
        return 1
    needed = math.log(GEOMETRIC_TAIL_TARGET * (1.0 - ratio)) / math.log(ratio)
    return int(min(max(math.ceil(needed), 1), MAX_GEOMETRIC_TERMS))


def _pole_factor(pole: complex) -> tuple[CoeffSeries, complex]:
    """
    Expansion of 1/(z - pole) on the annulus containing the circle.

    Returns the normalized series and the gain it must be multiplied by.
    """
    if pole == 0:
        return CoeffSeries.monomial(-1), 1.0

    ratio = abs(pole) if abs(pole) < 1 else 1.0 / abs(pole)
    length = _geometric_length(ratio)
    tail = ratio ** length / (1.0 - ratio)
    powers = np.arange(length)

    if abs(pole) < 1:
        # 1/(z - p) = sum_n p**n z**(-n-1)
        values = pole ** powers
        return CoeffSeries(-length, values[::-1], tail), 1.0

    # 1/(z - p) = -(1/p) sum_n (z/p)**n
    values = (1.0 / pole) ** powers
    return CoeffSeries(0, values, tail), -1.0 / pole


def rational_to_series(r: RationalSymbol, n: int) -> CoeffSeries:
    '''
    Laurent expansion of r on the annulus containing the unit circle.

    Each linear factor is expanded separately (zeros and poles outside the
    disk normalized as 1 - z/c) and the factors are multiplied, so the tail
    bound is the propagated geometric remainder plus the mass outside [-n, n].

    Args:
        r (RationalSymbol): Symbol with no pole on the circle.
        n (int): Half-width of the reported window.

    Returns:
        CoeffSeries: Coefficients on [-n, n] with a certified tail bound.
    '''
    if r.is_zero:
        return CoeffSeries.zero()

    gain = r.gain
    series = CoeffSeries.monomial(0)

    for zero in r.zeros:
        if abs(zero) > 1:
            gain *= -zero
            factor = CoeffSeries(0, [1.0, -1.0 / zero])
        else:
            factor = CoeffSeries(0, [-zero, 1.0])
        series = multiply(series, factor)

    for pole in r.poles:
        factor, factor_gain = _pole_factor(pole)
        gain *= factor_gain
        series = multiply(series, factor)

    return truncate(series.scale(gain), -n, n)
