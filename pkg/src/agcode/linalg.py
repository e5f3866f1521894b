"""Gaussian elimination over GF(p^s) and the :class:`LinearCode` container.

Matrices are 2-D ``numpy`` arrays of element encodings (``int64``).
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import SpecMismatch
from .field import FieldElement, FieldSpec


def as_matrix(rows, n: int | None = None) -> np.ndarray:
    M = np.asarray(rows, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(0 if M.size == 0 else 1, -1) if n is None else M.reshape(-1, n)
    if M.size == 0 and n is not None:
        M = M.reshape(0, n)
    return M


def rref(field: FieldSpec, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns; zero rows are dropped."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = field.vmul(A[r], field.inv(int(A[r, c])))
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            factors = A[others, c][:, None]
            A[others] = field.vsub(A[others], field.vmul(factors, A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(field: FieldSpec, M) -> int:
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return 0
    return len(rref(field, M)[1])


def nullspace(field: FieldSpec, M, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of ``{v : M v = 0}``."""
    M = as_matrix(M, n)
    n = M.shape[1]
    R, pivots = rref(field, M) if M.shape[0] else (M[:0], [])
    free = [c for c in range(n) if c not in set(pivots)]
    N = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        N[i, f] = 1
        for row, pc in enumerate(pivots):
            N[i, pc] = field.neg(int(R[row, f]))
    return N


def matmul(field: FieldSpec, A, B) -> np.ndarray:
    A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = field.vadd(out, field.vmul(A[:, t][:, None], B[t][None, :]))
    return out


def reduce_against(field: FieldSpec, R: np.ndarray, pivots: Sequence[int], V) -> np.ndarray:
    """Residues of the rows of ``V`` after clearing the pivot columns of an RREF ``R``."""
    V = np.array(V, dtype=np.int64, copy=True)
    for row, pc in enumerate(pivots):
        coef = V[..., pc].copy()
        V = field.vsub(V, field.vmul(coef[..., None], R[row]))
    return V


class LinearCode:
    """A linear code given by a generator in reduced row echelon form.

    Two codes are equal exactly when their generators are equal, since the
    RREF of a row space is unique.
    """

    def __init__(self, field: FieldSpec, rows, n: int):
        M = as_matrix(rows, n)
        if M.shape[1] != n:
            raise ValueError(f"rows have length {M.shape[1]}, expected {n}")
        if M.shape[0]:
            self.gen, self.pivots = rref(field, M)
        else:
            self.gen, self.pivots = M.reshape(0, n), []
        self.gen.setflags(write=False)
        self.field = field
        self.n = n

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> LinearCode:
        return cls(field, np.zeros((0, n), dtype=np.int64), n)

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> LinearCode:
        return cls(field, np.eye(n, dtype=np.int64), n)

    @classmethod
    def from_elements(cls, rows: Sequence[Sequence[FieldElement]]) -> LinearCode:
        fields = {e.field for row in rows for e in row}
        if len(fields) != 1:
            raise SpecMismatch("generator entries come from different fields")
        return cls(fields.pop(), [[e.enc for e in row] for row in rows], len(rows[0]))

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over {self.field!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and np.array_equal(self.gen, other.gen))

    def __hash__(self):
        return hash((self.field, self.n, self.gen.tobytes()))

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64)
        return not np.any(reduce_against(self.field, self.gen, self.pivots, v))

    def membership(self, V) -> np.ndarray:
        """Boolean mask: which rows of ``V`` lie in the code."""
        res = reduce_against(self.field, self.gen, self.pivots, V)
        return ~np.any(res != 0, axis=-1)

    def issubcode(self, other: LinearCode) -> bool:
        return self.k == 0 or bool(np.all(other.membership(self.gen)))

    def encode(self, message) -> np.ndarray:
        message = np.asarray(message, dtype=np.int64)
        return matmul(self.field, message.reshape(1, -1), self.gen)[0]

    def scaled(self, vec) -> LinearCode:
        """Coordinate-wise product ``vec * C``."""
        vec = np.asarray(vec, dtype=np.int64)
        return LinearCode(self.field, self.field.vmul(self.gen, vec[None, :]), self.n)

    def dual(self) -> LinearCode:
        return LinearCode(self.field, nullspace(self.field, self.gen, self.n), self.n)
