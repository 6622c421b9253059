'''
Orthonormal bases materialized as coefficient series.

Every basis is described by a hashable BasisSpec so that operator matrices
can carry their domain and codomain labels and be composed only when the
labels agree. BlockBasis stacks two specs for the orthogonal-complement
codomains.
'''

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache

import numpy as np

from hardyops.fourier.rational import RationalSymbol, rational_to_series
from hardyops.fourier.series import CoeffSeries, Transform, shift, transform, truncate
from hardyops.inner.functions import InnerFunction, expand
from hardyops.utils.domain_exceptions import BasisMismatch, NotFiniteBlaschke


class BasisKind(StrEnum):
    MONOMIAL_H2 = "monomial_h2"          # z^k
    BEURLING = "beurling"                # eta z^k
    MODEL_TM = "model_tm"                # Takenaka-Malmquist vectors of K_theta
    CONJ_MODEL = "conj_model"            # V-images of MODEL_TM, spanning conj(z K_theta)
    CONJ_H02 = "conj_h02"                # conj(z)^(k+1)
    CONJ_BEURLING = "conj_beurling"      # conj(theta) conj(z)^(k+1)


_NEEDS_INNER = {
    BasisKind.BEURLING,
    BasisKind.MODEL_TM,
    BasisKind.CONJ_MODEL,
    BasisKind.CONJ_BEURLING,
}
_MODEL_KINDS = {BasisKind.MODEL_TM, BasisKind.CONJ_MODEL}
_EXACT_KINDS = {BasisKind.MONOMIAL_H2, BasisKind.CONJ_H02}


@dataclass(frozen=True, slots=True)
class BasisSpec:
    kind: BasisKind
    size: int
    expansion_order: int
    inner: InnerFunction | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", BasisKind(self.kind))
        if self.kind in _EXACT_KINDS:
            # monomial vectors are exact at any order
            object.__setattr__(self, "expansion_order", 0)
        if self.size < 0 or self.expansion_order < 0:
            raise BasisMismatch("basis size and expansion order must be nonnegative.")
        if self.kind in _NEEDS_INNER and self.inner is None:
            raise BasisMismatch(f"{self.kind} basis needs an inner function.")
        if self.kind in _MODEL_KINDS and self.inner.is_finite_blaschke and self.size > self.inner.degree:
            raise BasisMismatch(
                "model basis cannot exceed the degree of theta.",
                detail={"size": self.size, "degree": self.inner.degree},
            )

    @property
    def label(self) -> str:
        return f"{self.kind.value}[{self.size}]"

    def to_config(self) -> dict:
        return {
            "kind": self.kind.value,
            "size": self.size,
            "expansion_order": self.expansion_order,
            "inner": None if self.inner is None else self.inner.to_config(),
        }


@dataclass(frozen=True, slots=True)
class BlockBasis:
    """
    Ordered orthogonal pair; coordinates of first come before second.
    """

    first: BasisSpec
    second: BasisSpec

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    @property
    def label(self) -> str:
        return f"{self.first.label}+{self.second.label}"

    def to_config(self) -> dict:
        return {"block": [self.first.to_config(), self.second.to_config()]}


Basis = BasisSpec | BlockBasis


def monomial_basis(size: int, order: int) -> BasisSpec:
    return BasisSpec(BasisKind.MONOMIAL_H2, size, order)


def conj_h02_basis(size: int, order: int) -> BasisSpec:
    return BasisSpec(BasisKind.CONJ_H02, size, order)


def beurling_basis(eta: InnerFunction, size: int, order: int) -> BasisSpec:
    return BasisSpec(BasisKind.BEURLING, size, order, eta)


def conj_beurling_basis(theta: InnerFunction, size: int, order: int) -> BasisSpec:
    return BasisSpec(BasisKind.CONJ_BEURLING, size, order, theta)


def model_basis(theta: InnerFunction, order: int) -> BasisSpec:
    return BasisSpec(BasisKind.MODEL_TM, theta.degree, order, theta)


def conj_model_basis(theta: InnerFunction, order: int) -> BasisSpec:
    return BasisSpec(BasisKind.CONJ_MODEL, theta.degree, order, theta)


def _blaschke_factor(a: complex) -> RationalSymbol:
    if a == 0:
        return RationalSymbol.monomial(1)
    return RationalSymbol(-1.0 / a.conjugate(), (a,), (1.0 / a.conjugate(),))


def _kernel_factor(a: complex) -> RationalSymbol:
    # sqrt(1 - |a|^2) / (1 - conj(a) z)
    weight = math.sqrt(1.0 - abs(a) ** 2)
    if a == 0:
        return RationalSymbol.constant(weight)
    return RationalSymbol(-weight / a.conjugate(), (), (1.0 / a.conjugate(),))


def takenaka_malmquist(theta: InnerFunction) -> tuple[RationalSymbol, ...]:
    """
    Rational form of the Takenaka-Malmquist ladder for the zeros of theta.
    """
    vectors = []
    prefix = RationalSymbol.constant(1.0)
    for a in theta.zeros:
        vectors.append(prefix * _kernel_factor(a))
        prefix = prefix * _blaschke_factor(a)
    return tuple(vectors)


def shift_structure(spec: BasisSpec) -> tuple[CoeffSeries, int] | None:
    '''
    First vector and index step for bases of the form v0 * z**(step*k).

    Returns:
        tuple[CoeffSeries, int] | None: None for the model-space kinds.
    '''
    if spec.kind is BasisKind.MONOMIAL_H2:
        return CoeffSeries.monomial(0), 1
    if spec.kind is BasisKind.CONJ_H02:
        return CoeffSeries.monomial(-1), -1
    if spec.kind is BasisKind.BEURLING:
        return expand(spec.inner, spec.expansion_order), 1
    if spec.kind is BasisKind.CONJ_BEURLING:
        return transform(expand(spec.inner, spec.expansion_order), Transform.V_ANTI), -1
    return None


def is_truncated(basis: Basis) -> bool:
    """
    True when the basis is a finite section of an infinite orthonormal basis.
    """
    if isinstance(basis, BlockBasis):
        return is_truncated(basis.first) or is_truncated(basis.second)
    return basis.kind not in _MODEL_KINDS


@lru_cache(maxsize=256)
def materialize(spec: Basis) -> tuple[CoeffSeries, ...]:
    '''
    Basis vectors as coefficient series, in coordinate order.

    Raises:
        NotFiniteBlaschke: For model-space kinds when theta has singular atoms.
    '''
    if isinstance(spec, BlockBasis):
        return materialize(spec.first) + materialize(spec.second)

    structure = shift_structure(spec)
    if structure is not None:
        seed, step = structure
        return tuple(shift(seed, step * k) for k in range(spec.size))

    if not spec.inner.is_finite_blaschke:
        raise NotFiniteBlaschke(f"{spec.kind} basis requires a finite Blaschke product.")

    vectors = tuple(
        truncate(rational_to_series(r, spec.expansion_order), 0, spec.expansion_order)
        for r in takenaka_malmquist(spec.inner)[:spec.size]
    )
    if spec.kind is BasisKind.CONJ_MODEL:
        return tuple(transform(v, Transform.V_ANTI) for v in vectors)
    return vectors


def stack(vectors: tuple[CoeffSeries, ...], lo: int, hi: int) -> np.ndarray:
    """
    Columns are the vectors' coefficients on indices lo..hi.
    """
    matrix = np.zeros((hi - lo + 1, len(vectors)), dtype=np.complex128)
    for k, vector in enumerate(vectors):
        matrix[:, k] = vector.window(lo, hi)
    return matrix


def span(vectors: tuple[CoeffSeries, ...]) -> tuple[int, int]:
    stored = [v for v in vectors if len(v.coeffs)]
    if not stored:
        return 0, 0
    return min(v.lo for v in stored), max(v.hi for v in stored)


def coefficient_matrix(spec: Basis, lo: int, hi: int) -> np.ndarray:
    return stack(materialize(spec), lo, hi)


def gram(spec: Basis) -> np.ndarray:
    """
    Gram matrix [j, k] = <v_k, v_j> over the full stored window.
    """
    vectors = materialize(spec)
    lo, hi = span(vectors)
    matrix = stack(vectors, lo, hi)
    return matrix.conj().T @ matrix
