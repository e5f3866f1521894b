"""The curve y^q + mu*y = f(x) with f(x) = prod(x - alpha_i), its rational points and
the monomial bases x^i y^j of the Riemann-Roch spaces L(r Q_inf).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

import numpy as np

from . import semigroup
from .errors import (AlphasNotDistinct, Degenerate, MDivisibleByP, MTooLarge, MuZero,
                     QNotPowerOfP, RootsNotSplit, SpecMismatch)
from .field import FieldElement, FieldSpec, make_field


def _is_power_of(q: int, p: int) -> bool:
    if q < p:
        return False
    while q % p == 0:
        q //= p
    return q == 1


@dataclass(frozen=True)
class CurveSpec:
    field: FieldSpec
    q: int
    mu: FieldElement
    alphas: tuple[FieldElement, ...]

    @classmethod
    def from_ints(cls, p: int, s: int, q: int, mu: int, alphas: Sequence[int]) -> CurveSpec:
        F = make_field(p, s)
        return cls(F, q, F.element(mu), tuple(F.element(a) for a in alphas))

    @property
    def m(self) -> int:
        return len(self.alphas)

    def f_coeffs(self) -> list[int]:
        """Coefficients of f(x) = prod(x - alpha_i), constant first, as encodings."""
        return self.field.poly_from_roots([a.enc for a in self.alphas])

    def to_dict(self) -> dict:
        return {"p": self.field.p, "s": self.field.s, "q": self.q,
                "mu": self.mu.enc, "alphas": [a.enc for a in self.alphas]}


class RationalPoint(NamedTuple):
    alpha: FieldElement
    beta: FieldElement
    index: int


class Monomial(NamedTuple):
    """x^i y^j."""
    i: int
    j: int


@dataclass(frozen=True)
class CurveInfo:
    spec: CurveSpec
    genus: int
    betas: tuple[FieldElement, ...]
    points: tuple[RationalPoint, ...]

    @property
    def field(self) -> FieldSpec:
        return self.spec.field

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def m(self) -> int:
        return self.spec.m

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def max_r(self) -> int:
        """2qm - q - m - 1; beyond this C_r is the whole space."""
        q, m = self.q, self.m
        return 2 * q * m - q - m - 1

    @cached_property
    def semigroup(self) -> semigroup.NumericalSemigroup:
        return semigroup.build(self.q, self.m)

    def pole_order(self, mono: Monomial) -> int:
        return self.q * mono.i + self.m * mono.j

    def alpha_array(self) -> np.ndarray:
        return np.array([pt.alpha.enc for pt in self.points], dtype=np.int64)

    def beta_array(self) -> np.ndarray:
        return np.array([pt.beta.enc for pt in self.points], dtype=np.int64)

    def on_curve(self, pt: RationalPoint) -> bool:
        F = self.field
        lhs = F.add(F.pow(pt.beta.enc, self.q), F.mul(self.spec.mu.enc, pt.beta.enc))
        return lhs == F.horner(self.spec.f_coeffs(), pt.alpha.enc)


def additive_roots(field: FieldSpec, q: int, mu: int) -> list[int]:
    """All roots of T^q + mu*T in the field, in ascending encoding order."""
    return [b for b in field.elements() if field.add(field.pow(b, q), field.mul(mu, b)) == 0]


def find_mu(field: FieldSpec, q: int) -> list[int]:
    """Every nonzero mu for which T^q + mu*T splits with q distinct roots in the field."""
    return [mu for mu in range(1, field.order) if len(additive_roots(field, q, mu)) == q]


def validate_curve(spec: CurveSpec) -> CurveInfo:
    F = spec.field
    p, q, m = F.p, spec.q, spec.m
    if spec.mu.field != F or any(a.field != F for a in spec.alphas):
        raise SpecMismatch("curve parameters must live in the curve's field")
    if not spec.mu:
        raise MuZero("mu must be nonzero")
    if not _is_power_of(q, p) or q > F.order:
        raise QNotPowerOfP(f"q={q} is not a power p^t (t >= 1) with q <= {F.order}")
    if len({a.enc for a in spec.alphas}) != m:
        raise AlphasNotDistinct("alphas must be pairwise distinct")
    if m >= F.order:
        raise MTooLarge(f"m={m} must be < {F.order}")
    if m % p == 0:
        raise MDivisibleByP(f"m={m} is divisible by p={p}")
    if min(q, m) < 2:
        raise Degenerate(f"min(q, m) = {min(q, m)} < 2 gives a rational function field")
    roots = additive_roots(F, q, spec.mu.enc)
    if len(roots) != q:
        raise RootsNotSplit(f"T^{q} + {spec.mu.enc}T has {len(roots)} roots in {F!r}, need {q}")
    betas = tuple(F.element(b) for b in roots)
    return build_info(spec, betas)


def build_info(spec: CurveSpec, betas: Sequence[FieldElement]) -> CurveInfo:
    """Assemble a CurveInfo from given betas without checking them (see ``validate_curve``)."""
    points = []
    for a in spec.alphas:
        for b in betas:
            points.append(RationalPoint(a, b, len(points)))
    genus = (spec.q - 1) * (spec.m - 1) // 2
    return CurveInfo(spec, genus, tuple(betas), tuple(points))


def rr_basis(info: CurveInfo, r: int) -> list[Monomial]:
    """Monomial basis of L(r Q_inf), ordered by pole order (empty for r < 0)."""
    q, m = info.q, info.m
    if r < 0:
        return []
    monos = [Monomial(i, j) for j in range(q) for i in range((r - m * j) // q + 1)
             if q * i + m * j <= r]
    return sorted(monos, key=lambda mo: (q * mo.i + m * mo.j, mo.j))


def eval_monomial(mono: Monomial, pt: RationalPoint) -> FieldElement:
    return pt.alpha**mono.i * pt.beta**mono.j


def evaluation_matrix(info: CurveInfo, monos: Sequence[Monomial]) -> np.ndarray:
    """Rows: monomials; columns: points in canonical order."""
    F = info.field
    al, be = info.alpha_array(), info.beta_array()
    out = np.zeros((len(monos), info.n), dtype=np.int64)
    for row, mo in enumerate(monos):
        xa = np.array([F.pow(int(a), mo.i) for a in al], dtype=np.int64)
        yb = np.array([F.pow(int(b), mo.j) for b in be], dtype=np.int64)
        out[row] = F.vmul(xa, yb)
    return out


def fibers(info: CurveInfo) -> dict[int, list[int]]:
    """Point indices grouped by x-coordinate encoding."""
    out: dict[int, list[int]] = {}
    for pt in info.points:
        out.setdefault(pt.alpha.enc, []).append(pt.index)
    return out


def weak_castle_check(info: CurveInfo) -> bool:
    """Every fiber of x over an alpha_i holds q distinct rational points and <q, m> is symmetric."""
    fib = fibers(info)
    for a in info.spec.alphas:
        idx = fib.get(a.enc, [])
        pts = {info.points[i].beta.enc for i in idx}
        if len(idx) != info.q or len(pts) != info.q:
            return False
        if not all(info.on_curve(info.points[i]) for i in idx):
            return False
    if set(fib) != {a.enc for a in info.spec.alphas}:
        return False
    if math.gcd(info.q, info.m) != 1:
        return False
    return info.semigroup.is_symmetric()
