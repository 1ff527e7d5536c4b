"""The isomorphism sigma: RG -> RG-matrices, and unit / zero-divisor classification."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from grcodes import linalg
from grcodes.errors import ResourceCapError
from grcodes.groupring import GroupRingElement, RingSpec
from grcodes.groups import TABLE_LIMIT

DENSE_LIMIT = TABLE_LIMIT


@dataclass(frozen=True)
class RGMatrix:
    """``sigma(u)``: entry ``(i, j)`` is the coefficient of ``u`` at ``g_i^-1 g_j``.

    Materialized densely up to :data:`DENSE_LIMIT`; above that only rows are
    produced on demand from the group action.
    """

    source: GroupRingElement
    _dense: np.ndarray | None = None

    @property
    def n(self) -> int:
        return self.source.group.order

    @property
    def ring(self) -> RingSpec:
        return self.source.ring

    @property
    def rows(self) -> np.ndarray:
        if self._dense is None:
            raise ResourceCapError(
                f"RG-matrix of order {self.n} exceeds the dense limit {DENSE_LIMIT}"
            )
        return self._dense

    def row(self, i: int) -> np.ndarray:
        """Row ``i`` (the coefficients of ``g_i u``), without materializing the matrix."""
        if self._dense is not None:
            return self._dense[i]
        g = self.source.group
        return self.source.coeffs[g.mul_array(g.inv(i), np.arange(self.n))]

    def __array__(self, dtype=None, copy=None):
        return self.rows if dtype is None else self.rows.astype(dtype)


def rg_matrix(u: GroupRingElement) -> RGMatrix:
    if u.group.order > DENSE_LIMIT:
        return RGMatrix(u)
    M = u.coeffs[u.group.translation_table()]
    M.setflags(write=False)
    return RGMatrix(u, M)


def sigma(u: GroupRingElement) -> np.ndarray:
    """Dense RG-matrix of ``u`` as a plain array."""
    return rg_matrix(u).rows


def left_encoding_matrix(u: GroupRingElement) -> np.ndarray:
    """Row ``k`` holds the coefficients of ``u g_k`` (the left encoding ``x -> u x``)."""
    g = u.group
    idx = np.arange(g.order)
    return u.coeffs[g.mul_array(idx[None, :], g.inv_table[:, None])]


def encoding_matrix(u: GroupRingElement, side: str = "right") -> np.ndarray:
    """Matrix whose row ``k`` is the codeword of basis element ``g_k``.

    ``right``: ``g_k u`` (rows of sigma(u)); ``left``: ``u g_k``.
    """
    if side == "right":
        return sigma(u)
    if side == "left":
        return left_encoding_matrix(u)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def element_from_first_row(row, group, ring) -> GroupRingElement:
    """Element whose RG-matrix has first row ``row`` (row 0 is the coefficient vector)."""
    return GroupRingElement(group, ring, list(row))


def element_from_first_column(col, group, ring) -> GroupRingElement:
    """Element whose RG-matrix has first column ``col``: coefficient of ``g_i^-1`` is ``col[i]``."""
    c = np.empty(group.order, dtype=object)
    c[group.inv_table] = [int(x) for x in col]
    return GroupRingElement(group, ring, list(c))


def rg_rank(u: GroupRingElement) -> int:
    p = u.ring.require_field("rank")
    return linalg.rank(sigma(u), p)


@dataclass(frozen=True)
class Classification:
    """``kind`` is ``unit``, ``zero-divisor`` or ``neither`` (only possible over Z)."""

    kind: str
    inverse: GroupRingElement | None = None
    witness: GroupRingElement | None = None
    rank: int | None = None
    det: int | None = None

    @property
    def is_unit(self) -> bool:
        return self.kind == "unit"

    @property
    def is_zero_divisor(self) -> bool:
        return self.kind == "zero-divisor"


def classify(u: GroupRingElement) -> Classification:
    """Decide unit / zero-divisor and return an inverse or an annihilating witness.

    Over GF(p) every nonzero element is one or the other (rank test). Over Z,
    a unit needs det = +-1, a zero-divisor det = 0; anything else is neither.
    """
    group, ring = u.group, u.ring
    n = group.order
    U = sigma(u)
    if ring.is_field:
        p = ring.p
        aug = np.concatenate([U, np.eye(n, dtype=np.int64)], axis=1)
        res = linalg.rref(aug, p)
        r = sum(1 for c in res.pivot_columns if c < n)
        if r == n:
            # first row of sigma(u)^-1 is the coefficient vector of u^-1
            inv = element_from_first_row(res.reduced[0, n:], group, ring)
            return Classification("unit", inverse=inv, rank=n)
        if u.is_zero():
            return Classification("zero-divisor", witness=GroupRingElement.one(group, ring), rank=0)
        kernel = linalg.null_space(U, p)
        return Classification(
            "zero-divisor", witness=element_from_first_column(kernel[0], group, ring), rank=r
        )
    det = linalg.det_integer(U)
    if det in (1, -1):
        inv = linalg.integer_inverse(U)
        return Classification("unit", inverse=element_from_first_row(inv[0], group, ring), det=det)
    if det == 0:
        if u.is_zero():
            return Classification("zero-divisor", witness=GroupRingElement.one(group, ring), det=0)
        x = linalg.integer_null_space(U)[0]
        return Classification("zero-divisor", witness=element_from_first_column(x, group, ring), det=0)
    return Classification("neither", det=det)
