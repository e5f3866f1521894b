"""Brute-force ground truth for small linear codes.

Nothing here consults a formula for the codes being checked: minimum distance
and weight distribution come from enumerating every codeword, and generalized
Hamming weights from Wei's parity-check criterion

    d_l(C) = min{ |I| : |I| - rank(H_I) >= l },

searched over coordinate subsets.  Caps are hard errors, never truncation.
The environment variable ``AGCODE_CAP`` can lower the codeword cap.
"""

from __future__ import annotations

import itertools
import os
from typing import Iterator, Sequence

import numpy as np

from . import linalg
from .errors import FullSpace, OutOfRange, SpecMismatch, TooLarge, ZeroCode
from .field import FieldElement, FieldSpec
from .linalg import LinearCode

WORD_CAP = 1 << 24
SUBSET_N_CAP = 24
_LOW_BLOCK = 1 << 14


def word_cap() -> int:
    env = os.environ.get("AGCODE_CAP")
    if env:
        return min(WORD_CAP, int(env))
    return WORD_CAP


def rank_over_field(matrix, field: FieldSpec | None = None) -> int:
    """Rank of a matrix of FieldElements, or of encodings when ``field`` is given."""
    if field is None:
        entries = [e for row in matrix for e in row]
        if not entries:
            return 0
        fields = {e.field for e in entries}
        if len(fields) != 1 or not all(isinstance(e, FieldElement) for e in entries):
            raise SpecMismatch("matrix entries must be FieldElements of one field")
        field = fields.pop()
        matrix = [[e.enc for e in row] for row in matrix]
    return linalg.rank(field, matrix)


def parity_check(code: LinearCode) -> np.ndarray:
    """(n - k) x n matrix H with G H^T = 0 and full row rank."""
    if code.k == code.n:
        raise FullSpace("the full space has no parity checks")
    return linalg.nullspace(code.field, code.gen, code.n)


def _check_words(code: LinearCode) -> None:
    total = code.field.order ** code.k
    if total > word_cap():
        raise TooLarge(f"{code.field.order}^{code.k} codewords exceed the cap {word_cap()}")


def iter_codewords(code: LinearCode) -> Iterator[np.ndarray]:
    """Yield blocks of codewords (rows) covering the whole code exactly once."""
    _check_words(code)
    F, G = code.field, code.gen
    q0 = F.order
    k_lo = 0
    while k_lo < code.k and q0 ** (k_lo + 1) <= _LOW_BLOCK:
        k_lo += 1
    k_lo = max(k_lo, min(1, code.k))
    low = np.zeros((1, code.n), dtype=np.int64)
    scal = np.arange(q0, dtype=np.int64)
    for row in G[:k_lo]:
        low = F.vadd(low[None, :, :], F.vmul(scal[:, None, None], row[None, None, :]))
        low = low.reshape(-1, code.n)
    high = G[k_lo:]
    for msg in itertools.product(range(q0), repeat=len(high)):
        offset = np.zeros(code.n, dtype=np.int64)
        for a, row in zip(msg, high):
            if a:
                offset = F.vadd(offset, F.vmul(a, row))
        yield F.vadd(low, offset[None, :])


def weight_distribution(code: LinearCode) -> dict[int, int]:
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for block in iter_codewords(code):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=code.n + 1)
    return {w: int(c) for w, c in enumerate(counts) if c}


def exact_min_distance(code: LinearCode) -> int:
    """Minimum weight of a nonzero codeword, by full enumeration."""
    if code.k == 0:
        raise ZeroCode("the zero code has no minimum distance")
    best = code.n
    for block in iter_codewords(code):
        w = np.count_nonzero(block, axis=1)
        w = w[w > 0]
        if w.size:
            best = min(best, int(w.min()))
    return best


def relative_min_weight(outer: LinearCode, inner: LinearCode) -> int | None:
    """Minimum weight over ``outer`` minus ``inner`` (None when outer is inside inner)."""
    best = None
    for block in iter_codewords(outer):
        outside = ~inner.membership(block) if inner.k else np.any(block != 0, axis=1)
        if np.any(outside):
            w = int(np.count_nonzero(block[outside], axis=1).min())
            best = w if best is None else min(best, w)
    return best


def _nullity_search(field: FieldSpec, cols: Sequence[list[int]], l: int) -> int:
    """Smallest subset of columns whose span has dimension at most ``|I| - l``."""
    n = len(cols)
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    best = n + 1

    def reduce(v: list[int], basis: list[tuple[int, list[int]]]) -> list[int]:
        for pc, b in basis:
            c = v[pc]
            if c:
                nc = neg(c)
                v = [add(x, mul(nc, y)) for x, y in zip(v, b)]
        return v

    def dfs(start: int, size: int, nullity: int, basis: list) -> None:
        nonlocal best
        if nullity >= l:
            best = min(best, size)
            return
        if size + (l - nullity) >= best:
            return
        for i in range(start, n):
            if n - i < l - nullity:
                return
            v = reduce(cols[i], basis)
            nz = next((t for t, x in enumerate(v) if x), None)
            if nz is None:
                dfs(i + 1, size + 1, nullity + 1, basis)
            else:
                s = inv(v[nz])
                dfs(i + 1, size + 1, nullity, basis + [(nz, [mul(s, x) for x in v])])
            if size + (l - nullity) >= best:
                return

    dfs(0, 0, 0, [])
    return best


def exact_ghw(code: LinearCode, l: int) -> int:
    """l-th generalized Hamming weight via Wei's parity-check criterion."""
    if not 1 <= l <= code.k:
        raise OutOfRange(f"l={l} outside [1, {code.k}]")
    if code.n > SUBSET_N_CAP:
        raise TooLarge(f"subset search over n={code.n} > {SUBSET_N_CAP} coordinates")
    if code.k == code.n:
        return l
    H = parity_check(code)
    cols = [[int(x) for x in H[:, i]] for i in range(code.n)]
    return _nullity_search(code.field, cols, l)


def min_distance_oracle(code: LinearCode) -> int:
    """Exact distance: enumeration when under the codeword cap, Wei's criterion otherwise."""
    try:
        return exact_min_distance(code)
    except TooLarge:
        return exact_ghw(code, 1)


def weight_hierarchy(code: LinearCode) -> list[int]:
    return [exact_ghw(code, l) for l in range(1, code.k + 1)]
