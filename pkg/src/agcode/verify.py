"""Cross-check every formula and bound for one curve against brute force.

Each check is recorded as a :class:`Check`; a check that raises a library
error counts as a failure carrying the error message, so one broken stage
does not hide the others.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import codes, derived, oracle
from .curve import CurveInfo, weak_castle_check
from .errors import AGCodeError, TooLarge

QUANTUM_WORD_CAP = 1 << 16
LRC_SAMPLES = 20


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": len(self.checks),
                "failures": [c.to_dict() for c in self.failures]}

    def run(self, name: str, fn: Callable[[], tuple[bool, str] | bool]) -> None:
        try:
            res = fn()
        except AGCodeError as exc:
            if isinstance(exc, TooLarge):
                raise
            self.checks.append(Check(name, False, f"{type(exc).__name__}: {exc}"))
            return
        ok, detail = res if isinstance(res, tuple) else (res, "")
        self.checks.append(Check(name, bool(ok), detail))


def _structure(rep: VerifyReport, curve: CurveInfo) -> None:
    def points():
        bad = [pt.index for pt in curve.points if not curve.on_curve(pt)]
        return not bad, f"points off the curve: {bad}" if bad else ""

    def distinct():
        keys = {(pt.alpha.enc, pt.beta.enc) for pt in curve.points}
        q, m = curve.q, curve.m
        return len(keys) == curve.n == q * m, f"{len(keys)} distinct of {curve.n}, expected {q * m}"

    rep.run("point-validity", points)
    rep.run("point-count", distinct)
    rep.run("weak-castle", lambda: weak_castle_check(curve))
    S = curve.semigroup
    rep.run("semigroup-symmetric", S.is_symmetric)
    rep.run("semigroup-genus", lambda: (len(S.gaps) == curve.genus, f"{len(S.gaps)} gaps"))


def _dimensions(rep: VerifyReport, curve: CurveInfo) -> None:
    qm, g = curve.n, curve.genus
    prev = None
    for r in range(-1, curve.max_r + 2):
        code = codes.build_code(curve, r).code
        if r < 0:
            expected = 0
        elif r > curve.max_r:
            expected = qm
        else:
            expected = codes.dimension_formula(curve, r)
        rep.run(f"dim[r={r}]", lambda: (code.k == expected, f"rank {code.k}, formula {expected}"))
        if qm - curve.q - curve.m - 1 < r < qm:
            rep.run(f"dim-rr[r={r}]", lambda: code.k == r + 1 - g)
        if prev is not None:
            rep.run(f"nested[r={r}]", lambda: prev.issubcode(code))
        prev = code
        if 0 <= r <= curve.max_r:
            rep.run(f"duality[r={r}]", lambda: codes.dual_code(curve, r).k == qm - code.k)
    mid2 = curve.max_r
    if mid2 % 2 == 0 and qm - curve.q - curve.m + 1 <= mid2 // 2 <= qm - 2:
        rep.run(f"quasi-self-dual[r={mid2 // 2}]", lambda: codes.quasi_self_dual(curve, mid2 // 2))


def _bounds(rep: VerifyReport, curve: CurveInfo) -> None:
    qm = curve.n
    for r in range(curve.max_r + 1):
        code = codes.build_code(curve, r).code
        truth = oracle.weight_hierarchy(code)
        rep.run(f"chain[r={r}]", lambda: (all(a < b for a, b in zip(truth, truth[1:]))
                                          and truth[-1] == qm, f"hierarchy {truth}"))
        rep.run(f"d[r={r}]", lambda: _inside(codes.min_distance(curve, r), truth[0]))
        for l in range(1, code.k + 1):
            rep.run(f"ghw[r={r},l={l}]", lambda: _inside(codes.ghw(curve, r, l), truth[l - 1]))


def _inside(bound: codes.Bound, value: int) -> tuple[bool, str]:
    return bound.contains(value), f"oracle {value}, bound {bound.render()} ({bound.source})"


def _derived(rep: VerifyReport, curve: CurveInfo, rng: np.random.Generator) -> None:
    q, m, qm = curve.q, curve.m, curve.n
    lo, hi = qm - q - m - 1, qm
    order = curve.field.order
    skipped = 0
    for a in range(lo + 1, hi):
        for b in range(a + 1, hi):
            qp = derived.quantum_from_nested(curve, a, b)
            rep.run(f"quantum-defect[a={a},b={b}]", lambda: qp.defect >= 0)
            if order ** max(b + 1 - curve.genus, qm - (a + 1 - curve.genus)) > QUANTUM_WORD_CAP:
                skipped += 1
                continue
            rep.run(f"quantum-d[a={a},b={b}]", lambda: _at_least(
                derived.quantum_distance_oracle(curve, a, b), qp.d_lower))
    if skipped:
        rep.checks.append(Check("quantum-d", True, f"{skipped} pairs above the word cap skipped"))
    for r in range(lo + 1, hi):
        if not curve.semigroup.has_property_star(r):
            continue
        d = oracle.min_distance_oracle(codes.build_code(curve, r).code)
        for a in range(1, (r + 1 - curve.genus) // 2 + 1):
            cp = derived.convolutional_params(curve, r, a)
            rep.run(f"convolutional[r={r},a={a}]",
                    lambda: (cp.df_lower == d and cp.k + cp.gamma == r + 1 - curve.genus
                             and 2 * cp.gamma <= cp.k + cp.gamma, f"oracle d {d}"))
    for l in range(1, 2 * m // q + 1):
        if 2 * m - l * q < 1:
            break
        lrc = derived.lrc_build(curve, l)
        rep.run(f"lrc-rank[l={l}]", lambda: (
            lrc.k_lower <= lrc.k <= lrc.n and lrc.k * (lrc.r0 + 1) <= lrc.n * lrc.r0,
            f"k={lrc.k}, n={lrc.n}"))
        rep.run(f"lrc-d[l={l}]", lambda: _at_least(oracle.min_distance_oracle(lrc.code),
                                                    lrc.d_lower))
        words = [lrc.code.encode(rng.integers(0, order, lrc.k)) for _ in range(LRC_SAMPLES)]
        rep.run(f"lrc-recover[l={l}]", lambda: all(
            derived.lrc_recover(lrc, w, i).enc == w[i] for w in words for i in range(lrc.n)))


def _at_least(value: int, bound: int) -> tuple[bool, str]:
    return value >= bound, f"oracle {value}, lower bound {bound}"


def verify_curve(curve: CurveInfo, seed: int = 0) -> VerifyReport:
    """Run every stage.  Raises :class:`TooLarge` when the curve exceeds the oracle caps."""
    if curve.n > oracle.SUBSET_N_CAP:
        raise TooLarge(f"n={curve.n} exceeds the oracle limit {oracle.SUBSET_N_CAP}")
    rep = VerifyReport()
    _structure(rep, curve)
    _dimensions(rep, curve)
    _bounds(rep, curve)
    _derived(rep, curve, np.random.default_rng(seed))
    return rep
