'''
Dense operator matrices carrying their domain and codomain labels.
'''

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from hardyops.fourier.series import CoeffSeries
from hardyops.spaces.bases import Basis, is_truncated, span, stack
from hardyops.utils.domain_exceptions import BasisMismatch, WindowTooSmall


def _full(size: int) -> range:
    return range(0, size)


@dataclass(frozen=True, slots=True, eq=False)
class OperatorMatrix:
    """
    entries[j, k] is the j-th codomain coordinate of the image of the k-th
    domain vector. entry_error bounds |stored - exact| on the trusted block.
    """

    entries: np.ndarray
    domain: Basis
    codomain: Basis
    entry_error: float = 0.0
    trusted_rows: range | None = None
    trusted_cols: range | None = None
    certified: bool = True

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.complex128, copy=True)
        if entries.ndim != 2:
            raise BasisMismatch("operator entries must form a matrix.")
        if entries.shape != (self.codomain.size, self.domain.size):
            raise BasisMismatch(
                "matrix shape does not match basis sizes.",
                detail={
                    "shape": list(entries.shape),
                    "codomain": self.codomain.size,
                    "domain": self.domain.size,
                },
            )
        error = float(self.entry_error)
        if not math.isfinite(error) or error < 0:
            raise ValueError("entry_error must be a finite nonnegative number.")

        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "entry_error", error)
        if self.trusted_rows is None:
            object.__setattr__(self, "trusted_rows", _full(entries.shape[0]))
        if self.trusted_cols is None:
            object.__setattr__(self, "trusted_cols", _full(entries.shape[1]))

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def trusted_block(self) -> np.ndarray:
        rows, cols = self.trusted_rows, self.trusted_cols
        return self.entries[rows.start:rows.stop, cols.start:cols.stop]

    def frobenius(self) -> float:
        return float(np.linalg.norm(self.trusted_block()))

    def trusted_window(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (
            (self.trusted_rows.start, self.trusted_rows.stop),
            (self.trusted_cols.start, self.trusted_cols.stop),
        )


def bandwidth(entries: np.ndarray, floor: float = 0.0) -> tuple[int, int]:
    """
    Lower and upper bandwidth of the entries larger than floor in modulus.
    """
    rows, cols = np.nonzero(np.abs(entries) > floor)
    if rows.size == 0:
        return 0, 0
    offsets = rows - cols
    return max(int(offsets.max()), 0), max(int(-offsets.min()), 0)


def _clip(indices: range, stop: int) -> range:
    return range(indices.start, max(indices.start, min(indices.stop, stop)))


def compose(outer: OperatorMatrix, inner: OperatorMatrix) -> OperatorMatrix:
    '''
    Matrix of outer after inner.

    When the middle basis is a finite section of an infinite one, the sum
    over it is cut at its edge, so the composite trusts only rows and
    columns at least one bandwidth away from that edge.

    Raises:
        BasisMismatch: If inner's codomain label differs from outer's domain.
        WindowTooSmall: If the cut leaves no trusted rows or columns.
    '''
    if inner.codomain != outer.domain:
        raise BasisMismatch(
            "cannot compose: codomain of the inner factor is not the outer domain.",
            detail={"inner_codomain": inner.codomain.label, "outer_domain": outer.domain.label},
        )

    depth = inner.shape[0]
    a_max = float(np.abs(outer.entries).max(initial=0.0))
    b_max = float(np.abs(inner.entries).max(initial=0.0))
    error = depth * (
        outer.entry_error * b_max
        + inner.entry_error * a_max
        + outer.entry_error * inner.entry_error
    )

    rows, cols = outer.trusted_rows, inner.trusted_cols
    if is_truncated(inner.codomain):
        band = max(
            bandwidth(outer.entries, outer.entry_error)[1],
            bandwidth(inner.entries, inner.entry_error)[0],
        )
        rows, cols = _clip(rows, depth - band), _clip(cols, depth - band)
        if not rows or not cols:
            raise WindowTooSmall(
                "composite has no rows or columns clear of the truncation edge.",
                detail={"depth": depth, "bandwidth": band},
            )

    return OperatorMatrix(
        outer.entries @ inner.entries,
        inner.domain,
        outer.codomain,
        error,
        rows,
        cols,
        outer.certified and inner.certified,
    )


def adjoint(matrix: OperatorMatrix) -> OperatorMatrix:
    return OperatorMatrix(
        matrix.entries.conj().T,
        matrix.codomain,
        matrix.domain,
        matrix.entry_error,
        matrix.trusted_cols,
        matrix.trusted_rows,
        matrix.certified,
    )


def difference_norm(first: np.ndarray | OperatorMatrix, second: np.ndarray | OperatorMatrix) -> float:
    """
    Frobenius norm of first - second on the trusted blocks.
    """
    a = first.trusted_block() if isinstance(first, OperatorMatrix) else np.asarray(first)
    b = second.trusted_block() if isinstance(second, OperatorMatrix) else np.asarray(second)
    if a.shape != b.shape:
        raise BasisMismatch(
            "cannot compare matrices of different shapes.",
            detail={"first": list(a.shape), "second": list(b.shape)},
        )
    return float(np.linalg.norm(a - b))


def pair(
    images: tuple[CoeffSeries, ...],
    targets: tuple[CoeffSeries, ...],
) -> tuple[np.ndarray, float, bool]:
    '''
    Gram-style pairing entries[j, k] = <images[k], targets[j]>.

    Args:
        images (tuple[CoeffSeries, ...]): Images of the domain vectors.
        targets (tuple[CoeffSeries, ...]): Codomain basis vectors.

    Returns:
        tuple[np.ndarray, float, bool]: The entries, a uniform bound on their
        error from the operands' tails, and whether every operand is certified.
    '''
    lo, hi = span(targets)
    columns = stack(images, lo, hi)
    rows = stack(targets, lo, hi)
    entries = rows.conj().T @ columns

    if not images or not targets:
        return entries, 0.0, True

    image_tail = np.array([g.tail_bound for g in images])
    image_l1 = np.array([g.l1_norm() for g in images])
    target_tail = np.array([c.tail_bound for c in targets])
    target_l1 = np.array([c.l1_norm() for c in targets])
    bound = (
        image_tail[None, :] * (target_l1[:, None] + target_tail[:, None])
        + target_tail[:, None] * image_l1[None, :]
    )
    certified = all(g.certified for g in images) and all(c.certified for c in targets)
    return entries, float(bound.max()), certified


def conjugate(matrix: OperatorMatrix, domain: Basis | None = None, codomain: Basis | None = None) -> OperatorMatrix:
    """
    Entrywise conjugate, optionally relabeled onto the conjugate bases.
    """
    return OperatorMatrix(
        matrix.entries.conj(),
        matrix.domain if domain is None else domain,
        matrix.codomain if codomain is None else codomain,
        matrix.entry_error,
        matrix.trusted_rows,
        matrix.trusted_cols,
        matrix.certified,
    )


Window = tuple[tuple[int, int], tuple[int, int]]


def intersect_windows(*windows: Window) -> Window:
    """
    Largest index block trusted by every window.
    """
    (r0, r1), (c0, c1) = windows[0]
    for (rows, cols) in windows[1:]:
        r0, r1 = max(r0, rows[0]), min(r1, rows[1])
        c0, c1 = max(c0, cols[0]), min(c1, cols[1])
    return (r0, max(r0, r1)), (c0, max(c0, c1))


def restrict(entries: np.ndarray, window: Window) -> np.ndarray:
    (r0, r1), (c0, c1) = window
    return np.asarray(entries)[r0:r1, c0:c1]
