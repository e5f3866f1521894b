"""One-point codes C_r = C_L(D, r Q_inf) on y^q + mu*y = f(x) and their parameters.

Distance and generalized Hamming weight results are returned as a
:class:`Bound`: every applicable theorem contributes a lower and/or upper
bound, and the report is their intersection.  Each bound remembers which
result produced it.

Two conventions worth knowing:

* ``L(r Q_inf) = L(t Q_inf)`` where ``t`` is the largest pole number ``<= r``,
  so ``C_r = C_t`` and every result proven for ``C_t`` also holds for ``C_r``.
  Bounds are collected at both ``r`` and ``t``.
* The exact distance a+2 for ``r >= qm`` (and the matching d_2 = a+3) is only
  used when the largest pole number below ``2qm-q-m-1-r`` is 0.  For other
  values the claimed formula disagrees with exhaustive search (see
  :func:`dual_pole_split`).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import linalg
from .curve import CurveInfo, evaluation_matrix, rr_basis
from .errors import DualityViolation, InconsistentBounds, OutOfRange, SingularEval
from .linalg import LinearCode
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class Bound:
    lower: int
    upper: int
    source: str

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def contains(self, value: int) -> bool:
        return self.lower <= value <= self.upper

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact,
                "source": self.source}

    def render(self) -> str:
        return str(self.lower) if self.exact else f"{self.lower}..{self.upper}"


_GENERIC = {"trivial", "Singleton"}


class _Collector:
    """Running intersection of lower and upper bounds with their source tags.

    On ties the first named result is kept, except that a generic default is
    always displaced by a theorem giving the same value.
    """

    def __init__(self, lower: int, lower_src: str, upper: int, upper_src: str):
        self.lower, self.lower_src = lower, lower_src
        self.upper, self.upper_src = upper, upper_src

    def at_least(self, value: int, tag: str) -> None:
        if value > self.lower or (value == self.lower and self.lower_src in _GENERIC):
            self.lower, self.lower_src = value, tag

    def at_most(self, value: int, tag: str) -> None:
        if value < self.upper or (value == self.upper and self.upper_src in _GENERIC):
            self.upper, self.upper_src = value, tag

    def exactly(self, value: int, tag: str) -> None:
        self.at_least(value, tag)
        self.at_most(value, tag)

    def result(self) -> Bound:
        if self.lower > self.upper:
            raise InconsistentBounds(
                f"{self.lower_src} gives >= {self.lower} but {self.upper_src} gives <= {self.upper}")
        if self.lower_src == self.upper_src:
            src = self.lower_src
        elif self.lower == self.upper:
            src = f"{self.lower_src}+{self.upper_src}"
        else:
            src = f"lower:{self.lower_src};upper:{self.upper_src}"
        return Bound(self.lower, self.upper, src)


@dataclass(frozen=True)
class OnePointCode:
    curve: CurveInfo
    r: int
    code: LinearCode

    @property
    def semigroup(self) -> NumericalSemigroup:
        return self.curve.semigroup

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k


def build_code(curve: CurveInfo, r: int) -> OnePointCode:
    F, n = curve.field, curve.n
    if r < 0:
        code = LinearCode.zero(F, n)
    elif r > curve.max_r:
        code = LinearCode.full(F, n)
    else:
        code = LinearCode(F, evaluation_matrix(curve, rr_basis(curve, r)), n)
    return OnePointCode(curve, r, code)


def _check_range(curve: CurveInfo, r: int) -> None:
    if not 0 <= r <= curve.max_r:
        raise OutOfRange(f"r={r} outside [0, {curve.max_r}]")


def dimension_formula(curve: CurveInfo, r: int) -> int:
    """dim C_r from the semigroup: |H(r)| below qm, qm - |H(s)| from qm on."""
    _check_range(curve, r)
    S, qm = curve.semigroup, curve.n
    if r < qm:
        return S.count_upto(r)
    return qm - S.count_upto(curve.max_r - r)


def dimension_riemann_roch(curve: CurveInfo, r: int) -> int:
    """r + 1 - g, valid for qm - q - m - 1 < r < qm."""
    q, m, qm = curve.q, curve.m, curve.n
    if not qm - q - m - 1 < r < qm:
        raise OutOfRange(f"r={r} outside ({qm - q - m - 1}, {qm})")
    return r + 1 - curve.genus


def dual_scaling_vector(curve: CurveInfo) -> np.ndarray:
    """Encodings of 1 / f'(alpha(P)) for each point P in canonical order."""
    F = curve.field
    fprime = F.poly_derivative(curve.spec.f_coeffs())
    out = []
    for pt in curve.points:
        v = F.horner(fprime, pt.alpha.enc)
        if v == 0:
            raise SingularEval(f"f'({pt.alpha.enc}) = 0; alphas are not distinct")
        out.append(F.inv(v))
    return np.array(out, dtype=np.int64)


def dual_code(curve: CurveInfo, r: int) -> LinearCode:
    """C_r^perp as abar * C_s with s = 2qm - q - m - 1 - r, checked against C_r."""
    F, n = curve.field, curve.n
    abar = dual_scaling_vector(curve)
    dual = build_code(curve, curve.max_r - r).code.scaled(abar)
    primal = build_code(curve, r).code
    if primal.k + dual.k != n:
        raise DualityViolation(f"dim C_r + dim dual = {primal.k + dual.k} != {n}")
    if primal.k and dual.k and np.any(linalg.matmul(F, primal.gen, dual.gen.T)):
        raise DualityViolation(f"C_{r} is not orthogonal to abar*C_{curve.max_r - r}")
    return dual


def dual_pole_split(curve: CurveInfo, r: int) -> tuple[int, int, int]:
    """For r >= qm: ``(t, a, b)`` with t the largest pole number <= 2qm-q-m-1-r, t = aq + bm."""
    S = curve.semigroup
    t = S.largest_member_upto(curve.max_r - r)
    a, b = S.representation(t)
    return t, a, b


def _effective_rs(curve: CurveInfo, r: int) -> list[int]:
    t = curve.semigroup.largest_member_upto(r)
    return [r] if t == r else [r, t]


def _tag(name: str, rr: int, r: int) -> str:
    return name if rr == r else f"{name}@r={rr}"


def _distance_collector(curve: CurveInfo, r: int) -> _Collector:
    S = curve.semigroup
    q, m, qm = curve.q, curve.m, curve.n
    k = dimension_formula(curve, r)
    generic = qm - r
    col = _Collector(max(1, generic), "Thm4.4(2)" if generic >= 1 else "trivial",
                     qm - k + 1, "Singleton")
    for rr in _effective_rs(curve, r):
        col.at_least(qm - rr, _tag("Thm4.4(2)", rr, r))
        if (rr % q == 0 and rr // q < m) or (rr % m == 0 and rr // m < q):
            col.exactly(qm - rr, _tag("Thm4.4(2)", rr, r))
        if 1 <= rr < qm and (S.has_property_star(rr) or S.has_property_star(qm - rr)):
            col.exactly(qm - rr, _tag("Cor5.4", rr, r))
    if m > q and qm <= r <= curve.max_r:
        t, a, _ = dual_pole_split(curve, r)
        if t == 0:
            col.exactly(a + 2, "Thm4.5")
    return col


def min_distance(curve: CurveInfo, r: int) -> Bound:
    _check_range(curve, r)
    return _distance_collector(curve, r).result()


def ghw(curve: CurveInfo, r: int, l: int) -> Bound:
    """Bound on the l-th generalized Hamming weight of C_r."""
    S = curve.semigroup
    q, m, qm = curve.q, curve.m, curve.n
    if r > curve.max_r:
        if not 1 <= l <= qm:
            raise OutOfRange(f"l={l} outside [1, {qm}]")
        return Bound(l, l, "full-space")
    k = dimension_formula(curve, r) if r >= 0 else 0
    if not 1 <= l <= k:
        raise OutOfRange(f"l={l} outside [1, {k}]")
    if l == k:
        return Bound(qm, qm, "Rem5.5")
    if l == 1:
        col = _distance_collector(curve, r)
    else:
        prev = ghw(curve, r, l - 1)
        col = _Collector(prev.lower + 1, "Thm2.1", qm, "trivial")
    p_l = S.pole_number(l)
    for rr in _effective_rs(curve, r):
        tag = functools.partial(_tag, rr=rr, r=r)
        if l == 2 and m > q:
            star_q = S.has_property_star(rr - q) or S.has_property_star(qm - rr + q)
            if rr < qm:
                col.at_least(qm - rr + q, tag("Thm5.6"))
            if rr < qm - 1 and star_q:
                col.exactly(qm - rr + q, tag("Thm5.7"))
            if rr < qm and not star_q and rr - q >= 0:
                col.at_most(qm - S.largest_star_below(rr - q), tag("Thm5.10"))
            if qm <= rr <= curve.max_r:
                col.at_most(min(2 * q, m), tag("Thm5.13"))
                if m > 2 * q:
                    t, a, _ = dual_pole_split(curve, rr)
                    if t == 0:
                        col.exactly(a + 3, tag("Thm5.14"))
        # upper bound qm - r + p_l, with p_l shifted to p_{l+a} by the abundance a = dim L((r - qm) Q)
        abundance = S.count_upto(rr - qm) if rr >= qm else 0
        p_la = S.pole_number(l + abundance)
        if S.has_property_star(rr - p_la) or S.has_property_star(qm - rr + p_la):
            col.at_most(qm - rr + p_la, tag("Thm5.3"))
        star_l = S.has_property_star(rr - p_l) or S.has_property_star(qm - rr + p_l)
        if rr < qm - 1 and star_l:
            col.exactly(qm - rr + p_l, tag("Thm5.8"))
        if rr < qm and not star_l and rr - p_l >= 0:
            col.at_most(qm - S.largest_star_below(rr - p_l), tag("Thm5.11"))
    return col.result()


def quasi_self_dual(curve: CurveInfo, r: int) -> bool:
    """Criterion r = (2qm - q - m - 1)/2 on qm-q-m+1 <= r <= qm-2, verified numerically when true."""
    q, m, qm = curve.q, curve.m, curve.n
    if not qm - q - m + 1 <= r <= qm - 2:
        raise OutOfRange(f"r={r} outside [{qm - q - m + 1}, {qm - 2}]")
    if 2 * r != curve.max_r:
        return False
    code = build_code(curve, r).code
    if code.dual() != code.scaled(dual_scaling_vector(curve)):
        raise DualityViolation(f"C_{r}^perp != abar * C_{r}")
    return True


@dataclass
class ParamReport:
    n: int
    k: int
    d: Bound | None
    ghw: dict[int, Bound] = field(default_factory=dict)
    quasi_self_dual: bool | None = None
    mds: bool = False
    oracle: dict | None = None

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "d": self.d.to_dict() if self.d else None,
            "ghw": {str(l): b.to_dict() for l, b in self.ghw.items()},
            "quasi_self_dual": self.quasi_self_dual,
            "mds": self.mds,
        }
        if self.oracle is not None:
            out["oracle"] = self.oracle
        return out


def param_report(curve: CurveInfo, r: int, ls: Iterable[int] = (2,)) -> ParamReport:
    """Parameters of C_r; for r < 0 the zero code, above the range the full space."""
    q, m, qm = curve.q, curve.m, curve.n
    if r < 0:
        return ParamReport(qm, 0, None)
    if r > curve.max_r:
        full = Bound(1, 1, "full-space")
        return ParamReport(qm, qm, full, {l: ghw(curve, r, l) for l in ls if 1 <= l <= qm},
                           None, True)
    k = dimension_formula(curve, r)
    d = min_distance(curve, r) if k else None
    bounds = {l: ghw(curve, r, l) for l in ls if 1 <= l <= k}
    qsd = quasi_self_dual(curve, r) if qm - q - m + 1 <= r <= qm - 2 else None
    mds = d is not None and d.lower == qm - k + 1
    return ParamReport(qm, k, d, bounds, qsd, mds)
