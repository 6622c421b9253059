'''
Finite windows of Laurent coefficients with a certified l1 tail bound.

A CoeffSeries stores the coefficients c_lo, ..., c_hi of a boundary
function on the unit circle together with tail_bound, an upper bound on the
l1 distance between the stored window and the exact coefficient sequence.
Every operation in this module is pure and propagates that bound.
'''

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from numpy.polynomial import polynomial as npoly

_EMPTY = np.zeros(0, dtype=np.complex128)
_EMPTY.setflags(write=False)


class Transform(StrEnum):
    FLIP_J = "flip_j"
    STAR = "star"
    BREVE = "breve"
    BAR = "bar"
    V_ANTI = "v_anti"


class Part(StrEnum):
    P_ANALYTIC = "p_analytic"
    Q_COANALYTIC = "q_coanalytic"


def _canonical(lo: int, values) -> tuple[int, np.ndarray]:
    values = np.asarray(values, dtype=np.complex128).ravel()
    nonzero = np.flatnonzero(values)

    if nonzero.size == 0:
        return 0, _EMPTY

    first, last = int(nonzero[0]), int(nonzero[-1])
    trimmed = values[first:last + 1].copy()
    trimmed.setflags(write=False)
    return int(lo) + first, trimmed


@dataclass(frozen=True, slots=True, eq=False)
class CoeffSeries:
    """
    Coefficients c_n for n in [lo, lo + len(coeffs)) plus an l1 tail bound.

    certified is False when any coefficient came from boundary sampling, in
    which case tail_bound is an aliasing estimate rather than a proof.
    """

    lo: int
    coeffs: np.ndarray
    tail_bound: float = 0.0
    certified: bool = True

    def __post_init__(self) -> None:
        tail = float(self.tail_bound)
        if not np.isfinite(tail) or tail < 0:
            raise ValueError("tail_bound must be a finite nonnegative number.")

        lo, coeffs = _canonical(self.lo, self.coeffs)
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("coefficients must be finite.")

        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "tail_bound", tail)

    @classmethod
    def zero(cls) -> CoeffSeries:
        return cls(0, _EMPTY)

    @classmethod
    def monomial(cls, index: int, value: complex = 1.0) -> CoeffSeries:
        return cls(index, [value])

    @classmethod
    def from_dense(cls, lo: int, values) -> CoeffSeries:
        return cls(lo, values)

    @classmethod
    def from_mapping(cls, coefficients: Mapping[int, complex]) -> CoeffSeries:
        if not coefficients:
            return cls.zero()

        lo, hi = min(coefficients), max(coefficients)
        values = np.zeros(hi - lo + 1, dtype=np.complex128)
        for index, value in coefficients.items():
            values[index - lo] = value
        return cls(lo, values)

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 0 and self.tail_bound == 0.0

    @property
    def is_exact(self) -> bool:
        return self.tail_bound == 0.0 and self.certified

    def coefficient(self, index: int) -> complex:
        offset = index - self.lo
        if 0 <= offset < len(self.coeffs):
            return complex(self.coeffs[offset])
        return 0j

    def window(self, lo: int, hi: int) -> np.ndarray:
        """
        Dense coefficients for indices lo..hi inclusive, zero outside storage.
        """
        out = np.zeros(max(hi - lo + 1, 0), dtype=np.complex128)
        start, stop = max(lo, self.lo), min(hi, self.hi)
        if start <= stop:
            out[start - lo:stop - lo + 1] = self.coeffs[start - self.lo:stop - self.lo + 1]
        return out

    def l1_norm(self) -> float:
        return float(np.abs(self.coeffs).sum())

    def l2_norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def evaluate(self, z):
        """
        Evaluate the stored Laurent polynomial at z (scalar or array).
        """
        z = np.asarray(z, dtype=np.complex128)
        if len(self.coeffs) == 0:
            return np.zeros_like(z)
        return npoly.polyval(z, self.coeffs) * z ** self.lo

    def scale(self, value: complex) -> CoeffSeries:
        return CoeffSeries(self.lo, self.coeffs * value, self.tail_bound * abs(value), self.certified)

    def __add__(self, other: CoeffSeries) -> CoeffSeries:
        if len(self.coeffs) == 0 or len(other.coeffs) == 0:
            base = other if len(self.coeffs) == 0 else self
            lo, values = base.lo, base.coeffs
        else:
            lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
            values = self.window(lo, hi) + other.window(lo, hi)
        return CoeffSeries(
            lo,
            values,
            self.tail_bound + other.tail_bound,
            self.certified and other.certified,
        )

    def __neg__(self) -> CoeffSeries:
        return self.scale(-1.0)

    def __sub__(self, other: CoeffSeries) -> CoeffSeries:
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoeffSeries):
            return NotImplemented
        return (
            self.lo == other.lo
            and self.tail_bound == other.tail_bound
            and self.certified == other.certified
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.lo, self.coeffs.tobytes(), self.tail_bound, self.certified))

    def __repr__(self) -> str:
        return (
            f"CoeffSeries(lo={self.lo}, hi={self.hi}, "
            f"tail_bound={self.tail_bound:.3e}, certified={self.certified})"
        )


def multiply(a: CoeffSeries, b: CoeffSeries) -> CoeffSeries:
    """
    Convolve two series; the tail grows by l1 submultiplicativity.
    """
    tail = a.l1_norm() * b.tail_bound + b.l1_norm() * a.tail_bound + a.tail_bound * b.tail_bound
    certified = a.certified and b.certified

    if len(a.coeffs) == 0 or len(b.coeffs) == 0:
        return CoeffSeries(0, _EMPTY, tail, certified)

    return CoeffSeries(a.lo + b.lo, np.convolve(a.coeffs, b.coeffs), tail, certified)


def shift(a: CoeffSeries, steps: int) -> CoeffSeries:
    """
    Multiply by z**steps, which only moves the window.
    """
    return CoeffSeries(a.lo + steps, a.coeffs, a.tail_bound, a.certified)


def transform(a: CoeffSeries, kind: Transform) -> CoeffSeries:
    '''
    Apply one of the flip or conjugation maps at coefficient level.

    Args:
        a (CoeffSeries): Input series.
        kind (Transform): FLIP_J maps index n to -n-1; STAR conjugates every
            coefficient; BREVE maps n to -n; BAR maps n to -n with conjugation;
            V_ANTI maps n to -n-1 with conjugation.

    Returns:
        CoeffSeries: The transformed series with the same tail bound.
    '''
    kind = Transform(kind)
    if len(a.coeffs) == 0:
        return a

    reversed_coeffs = a.coeffs[::-1]

    if kind is Transform.FLIP_J:
        return CoeffSeries(-a.hi - 1, reversed_coeffs, a.tail_bound, a.certified)
    if kind is Transform.STAR:
        return CoeffSeries(a.lo, np.conj(a.coeffs), a.tail_bound, a.certified)
    if kind is Transform.BREVE:
        return CoeffSeries(-a.hi, reversed_coeffs, a.tail_bound, a.certified)
    if kind is Transform.BAR:
        return CoeffSeries(-a.hi, np.conj(reversed_coeffs), a.tail_bound, a.certified)
    return CoeffSeries(-a.hi - 1, np.conj(reversed_coeffs), a.tail_bound, a.certified)


def project(a: CoeffSeries, part: Part) -> CoeffSeries:
    """
    P_ANALYTIC keeps indices n >= 0, Q_COANALYTIC keeps n < 0.
    """
    part = Part(part)
    if part is Part.P_ANALYTIC:
        kept = a.window(0, a.hi) if a.hi >= 0 else _EMPTY
        return CoeffSeries(0, kept, a.tail_bound, a.certified)

    kept = a.window(a.lo, -1) if a.lo < 0 else _EMPTY
    return CoeffSeries(a.lo if a.lo < 0 else 0, kept, a.tail_bound, a.certified)


def truncate(a: CoeffSeries, lo: int, hi: int) -> CoeffSeries:
    """
    Keep indices lo..hi and move the l1 mass of everything else into the tail.
    """
    kept = a.window(lo, hi)
    dropped = 0.0
    if len(a.coeffs):
        indices = np.arange(a.lo, a.hi + 1)
        outside = (indices < lo) | (indices > hi)
        dropped = float(np.abs(a.coeffs[outside]).sum())
    return CoeffSeries(lo, kept, a.tail_bound + dropped, a.certified)


def inner_product(a: CoeffSeries, b: CoeffSeries) -> tuple[complex, float]:
    '''
    L2 pairing of two boundary functions.

    Args:
        a (CoeffSeries): Left argument (linear slot).
        b (CoeffSeries): Right argument (conjugate-linear slot).

    Returns:
        tuple[complex, float]: The pairing over the shared stored window and
        the crude bound a.tail*(|b|_1 + b.tail) + b.tail*|a|_1 on its error.
    '''
    error = a.tail_bound * (b.l1_norm() + b.tail_bound) + b.tail_bound * a.l1_norm()

    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if len(a.coeffs) == 0 or len(b.coeffs) == 0 or lo > hi:
        return 0j, error

    value = np.vdot(
        b.coeffs[lo - b.lo:hi - b.lo + 1],
        a.coeffs[lo - a.lo:hi - a.lo + 1],
    )
    return complex(value), error
