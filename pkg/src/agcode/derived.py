"""Quantum (CSS), unit-memory convolutional and locally recoverable codes built
from the one-point codes C_r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import oracle
from .codes import build_code, dual_code
from .curve import CurveInfo, Monomial, evaluation_matrix, fibers
from .errors import (AbundanceTooLarge, DistanceBoundNonpositive, NoStarProperty, NotACodeword,
                     NotNested, OutOfRange, RangeViolation)
from .field import FieldElement
from .linalg import LinearCode


def _riemann_roch_window(curve: CurveInfo) -> tuple[int, int]:
    q, m, qm = curve.q, curve.m, curve.n
    return qm - q - m - 1, qm


@dataclass(frozen=True)
class QuantumParams:
    n: int
    k: int
    d_lower: int
    defect: int
    relative_defect: Fraction
    a: int
    b: int

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "d_lower": self.d_lower, "defect": self.defect,
                "relative_defect": str(self.relative_defect)}


def quantum_from_nested(curve: CurveInfo, a: int, b: int) -> QuantumParams:
    """[[qm, b - a, d >= min(qm - b, a - qm + q + m + 1)]] from C_a strictly inside C_b."""
    lo, hi = _riemann_roch_window(curve)
    if not lo < a < b < hi:
        raise RangeViolation(f"need {lo} < a < b < {hi}, got a={a}, b={b}")
    q, m, qm, g = curve.q, curve.m, curve.n, curve.genus
    ca, cb = build_code(curve, a).code, build_code(curve, b).code
    if not ca.issubcode(cb) or ca.k >= cb.k:
        raise NotNested(f"C_{a} is not strictly contained in C_{b}")
    if ca.k != a + 1 - g or cb.k != b + 1 - g:
        raise NotNested(f"ranks ({ca.k}, {cb.k}) disagree with r + 1 - g")
    k = cb.k - ca.k
    d = min(qm - b, a - qm + q + m + 1)
    defect = qm - k - 2 * d + 2
    return QuantumParams(qm, k, d, defect, Fraction(defect, qm), a, b)


def quantum_distance_oracle(curve: CurveInfo, a: int, b: int) -> int:
    """Minimum weight over (C_b minus C_a) union (C_a^perp minus C_b^perp), by enumeration."""
    ca, cb = build_code(curve, a).code, build_code(curve, b).code
    da, db = dual_code(curve, a), dual_code(curve, b)
    weights = [w for w in (oracle.relative_min_weight(cb, ca), oracle.relative_min_weight(da, db))
               if w is not None]
    return min(weights)


@dataclass(frozen=True)
class ConvolutionalParams:
    n: int
    k: int
    gamma: int
    memory: int
    df_lower: int
    r: int
    a: int

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "gamma": self.gamma, "memory": self.memory,
                "df_lower": self.df_lower}

    def render(self, order: int) -> str:
        return f"({self.n},{self.k},{self.gamma};{self.memory},>={self.df_lower})_{order}"


def convolutional_params(curve: CurveInfo, r: int, a: int) -> ConvolutionalParams:
    """(qm, r+1-g-a, a; 1, d_f >= qm - r) from C_r split into a block of size a."""
    lo, hi = _riemann_roch_window(curve)
    if not lo < r < hi:
        raise RangeViolation(f"need {lo} < r < {hi}, got r={r}")
    if not curve.semigroup.has_property_star(r):
        raise NoStarProperty(f"r={r} is not a pure multiple of q or m in the semigroup")
    k = r + 1 - curve.genus
    if not 1 <= a or 2 * a > k:
        raise AbundanceTooLarge(f"need 1 <= a <= {k}/2, got a={a}")
    return ConvolutionalParams(curve.n, k - a, a, 1, curve.n - r, r, a)


def search_convolutional(curve: CurveInfo, k: int | None = None, gamma: int | None = None,
                         df: int | None = None) -> list[tuple[int, int]]:
    """All admissible ``(r, a)`` whose parameters match the given ``k``, ``gamma``, ``d_f``."""
    lo, hi = _riemann_roch_window(curve)
    found = []
    for r in range(lo + 1, hi):
        if not curve.semigroup.has_property_star(r):
            continue
        for a in range(1, (r + 1 - curve.genus) // 2 + 1):
            cp = convolutional_params(curve, r, a)
            if ((k is None or cp.k == k) and (gamma is None or cp.gamma == gamma)
                    and (df is None or cp.df_lower == df)):
                found.append((r, a))
    return found


@dataclass(frozen=True)
class LRCCode:
    curve: CurveInfo
    code: LinearCode
    l: int
    r0: int
    s0: int
    fiber_index: dict[int, tuple[int, int]]
    k_lower: int
    d_lower: int

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def optimal(self) -> bool:
        """The distance bound meets d <= n - k - ceil(k / r0) + 2."""
        return self.d_lower == self.n - self.k - math.ceil(self.k / self.r0) + 2

    @property
    def rate_tight(self) -> bool:
        """k / n reaches r0 / (r0 + 1)."""
        return self.k * (self.r0 + 1) == self.n * self.r0

    @property
    def highest_rate(self) -> bool:
        return self.l >= self.curve.m - 1

    def recovery_set(self, index: int) -> list[int]:
        fib = self.fiber_index[index][0]
        return [i for i, (f, _) in self.fiber_index.items() if f == fib and i != index]

    def to_dict(self) -> dict:
        return {"n": self.n, "k_lower": self.k_lower, "k_actual": self.k, "r0": self.r0,
                "d_lower": self.d_lower, "optimal": self.optimal, "rate_tight": self.rate_tight,
                "highest_rate": self.highest_rate}


def lrc_build(curve: CurveInfo, l: int) -> LRCCode:
    """Evaluations of x^j y^i (j <= l, i <= q - 2); locality q - 1 through the x-fibers."""
    q, m = curve.q, curve.m
    if l < 1:
        raise RangeViolation(f"l must be >= 1, got {l}")
    d_lower = 2 * m - l * q
    if d_lower < 1:
        raise DistanceBoundNonpositive(f"2m - lq = {d_lower} < 1")
    monos = [Monomial(j, i) for i in range(q - 1) for j in range(l + 1)]
    code = LinearCode(curve.field, evaluation_matrix(curve, monos), curve.n)
    index = {}
    for fid, idx in enumerate(fibers(curve).values()):
        for pos, i in enumerate(idx):
            index[i] = (fid, pos)
    return LRCCode(curve, code, l, q - 1, m, index, (q - 1) * (l + 1), d_lower)


def lrc_recover(lrc: LRCCode, codeword: Sequence, erased: int) -> FieldElement:
    """Recover coordinate ``erased`` from the q - 1 other points of its fiber.

    Within a fiber x is constant, so a codeword restricted to it is a polynomial
    of degree <= q - 2 in y; Lagrange interpolation through the remaining q - 1
    points gives its value at the erased one.  The erased entry may be ``None``;
    otherwise the whole word is first checked for membership.
    """
    F, pts = lrc.curve.field, lrc.curve.points
    if not 0 <= erased < lrc.n:
        raise OutOfRange(f"coordinate {erased} outside [0, {lrc.n})")
    if len(codeword) != lrc.n:
        raise NotACodeword(f"word has length {len(codeword)}, expected {lrc.n}")
    word = [None if v is None else int(v) for v in codeword]
    if word[erased] is not None and not lrc.code.contains(np.array(word, dtype=np.int64)):
        raise NotACodeword("word is not in the code")
    target = pts[erased].beta.enc
    total = 0
    siblings = lrc.recovery_set(erased)
    for t in siblings:
        bt = pts[t].beta.enc
        num, den = 1, 1
        for u in siblings:
            if u != t:
                bu = pts[u].beta.enc
                num = F.mul(num, F.sub(target, bu))
                den = F.mul(den, F.sub(bt, bu))
        total = F.add(total, F.mul(word[t], F.div(num, den)))
    return F.element(total)
