from __future__ import annotations

import numpy as np
import pytest

from agcode import codes, oracle
from agcode.curve import CurveSpec, validate_curve
from agcode.errors import OutOfRange
from agcode.io import load_curve
from agcode.linalg import matmul

# small curves: p^s <= 9, qm <= 14
EXTRA = [
    (2, 3, 2, 1, [0, 1, 2]),
    (2, 3, 2, 1, [0, 1, 2, 3, 4, 5, 6]),
    (3, 2, 3, 1, [0, 1]),
    (2, 2, 2, 3, [0, 1, 2]),
    (3, 2, 3, 1, [0, 1, 2, 3, 5]),
]


def _curves():
    out = [load_curve(n) for n in ("gf4-q2-m3", "gf4-q2-m3-mu1", "gf8-q2-m5", "gf9-q3-m4")]
    return out + [validate_curve(CurveSpec.from_ints(*a)) for a in EXTRA]


CURVES = _curves()
IDS = [f"GF{c.field.order}-q{c.q}-m{c.m}-mu{c.spec.mu.enc}" for c in CURVES]


def test_build_code_examples(gf4):
    assert codes.build_code(gf4, 4).k == 4
    assert codes.build_code(gf4, -1).k == 0
    assert codes.build_code(gf4, 6).k == 5
    assert codes.build_code(gf4, 7).k == 6
    assert codes.build_code(gf4, 0).code.gen.tolist() == [[1] * 6]


def test_dimension_formula(gf4):
    assert [codes.dimension_formula(gf4, r) for r in range(7)] == [1, 1, 2, 3, 4, 5, 5]
    assert codes.dimension_riemann_roch(gf4, 5) == 5
    with pytest.raises(OutOfRange):
        codes.dimension_formula(gf4, 8)
    with pytest.raises(OutOfRange):
        codes.dimension_riemann_roch(gf4, 6)


def test_dual_scaling_vector(gf4):
    assert codes.dual_scaling_vector(gf4).tolist() == [3, 3, 2, 2, 1, 1]


def test_dual_code_examples(gf4):
    d2 = codes.dual_code(gf4, 2)
    assert d2.k == 4
    # s = 2qm - q - m - 1 - r = 4
    assert d2 == codes.build_code(gf4, 4).code.scaled(codes.dual_scaling_vector(gf4))
    assert codes.dual_code(gf4, 3) == codes.build_code(gf4, 3).code.dual()
    assert codes.dual_code(gf4, 8).k == 0


def test_min_distance_examples(gf4):
    d4 = codes.min_distance(gf4, 4)
    assert (d4.lower, d4.upper, d4.source) == (2, 2, "Thm4.4(2)")
    d6 = codes.min_distance(gf4, 6)
    assert d6.exact and d6.lower == 2 and "Thm4.5" in d6.source
    d5 = codes.min_distance(gf4, 5)
    assert (d5.lower, d5.upper) == (1, 2)
    assert d5.source == "lower:Thm4.4(2);upper:Singleton"
    d1 = codes.min_distance(gf4, 1)
    assert d1.exact and d1.lower == 6 and d1.source.endswith("@r=0")
    with pytest.raises(OutOfRange):
        codes.min_distance(gf4, 7)


def test_ghw_examples(gf4):
    assert codes.ghw(gf4, 4, 2).render() == "4"
    assert codes.ghw(gf4, 4, 2).source.startswith("Thm5.")
    b2 = codes.ghw(gf4, 2, 2)
    assert (b2.lower, b2.source) == (6, "Rem5.5")
    b3 = codes.ghw(gf4, 3, 2)
    assert (b3.lower, b3.upper) == (5, 6)
    assert b3.source == "lower:Thm5.6;upper:Thm5.10"
    b5 = codes.ghw(gf4, 5, 2)
    assert b5.exact and b5.lower == 3 and "Thm5.6" in b5.source
    b6 = codes.ghw(gf4, 6, 2)
    assert b6.upper <= 3 and "Thm5.13" in b6.source
    with pytest.raises(OutOfRange):
        codes.ghw(gf4, 1, 2)
    assert codes.ghw(gf4, 9, 4).render() == "4"


def test_quasi_self_dual(gf4):
    assert codes.quasi_self_dual(gf4, 3)
    assert not codes.quasi_self_dual(gf4, 2)
    assert not codes.quasi_self_dual(gf4, 4)
    with pytest.raises(OutOfRange):
        codes.quasi_self_dual(gf4, 1)


def test_param_report(gf4):
    rep = codes.param_report(gf4, 4)
    data = rep.to_dict()
    assert data["n"] == 6 and data["k"] == 4
    assert data["d"] == {"lower": 2, "upper": 2, "exact": True, "source": "Thm4.4(2)"}
    assert data["ghw"]["2"]["lower"] == 4
    assert data["quasi_self_dual"] is False and data["mds"] is False
    assert codes.param_report(gf4, -1).k == 0
    full = codes.param_report(gf4, 10)
    assert full.k == 6 and full.mds
    assert codes.param_report(gf4, 0).mds


@pytest.mark.parametrize("curve", CURVES, ids=IDS)
def test_rank_orthogonality_nesting(curve):
    F, n = curve.field, curve.n
    abar = codes.dual_scaling_vector(curve)
    prev = None
    for r in range(-1, curve.max_r + 2):
        code = codes.build_code(curve, r).code
        if 0 <= r <= curve.max_r:
            assert code.k == codes.dimension_formula(curve, r)
            dual = codes.build_code(curve, curve.max_r - r).code
            if code.k and dual.k:
                assert not np.any(matmul(F, F.vmul(code.gen, abar[None, :]), dual.gen.T))
            assert code.k + codes.dual_code(curve, r).k == n
        if prev is not None:
            assert prev.issubcode(code)
        prev = code


@pytest.mark.parametrize("curve", CURVES, ids=IDS)
def test_bounds_contain_oracle(curve):
    for r in range(curve.max_r + 1):
        code = codes.build_code(curve, r).code
        hier = oracle.weight_hierarchy(code)
        assert codes.min_distance(curve, r).contains(hier[0]), r
        for l in range(1, code.k + 1):
            b = codes.ghw(curve, r, l)
            assert b.contains(hier[l - 1]), (r, l, b, hier)
            assert 1 <= b.lower <= b.upper <= curve.n
        assert hier[-1] == curve.n


def _t_perp(curve, r):
    t, a, _ = codes.dual_pole_split(curve, r)
    return t, a


def test_distance_formula_for_large_r_fails_when_t_perp_nonzero():
    """a + 2 is not the distance at r = 10 on the GF(8) q=2, m=5 curve.

    t_perp = 2 = 1*q, so a + 2 = 3, but C_8 is contained in C_10 and d(C_8) = 2.
    """
    curve = load_curve("gf8-q2-m5")
    t, a = _t_perp(curve, 10)
    assert (t, a) == (2, 1)
    assert oracle.exact_min_distance(codes.build_code(curve, 10).code) == 2
    assert oracle.exact_min_distance(codes.build_code(curve, 8).code) == 2
    assert codes.min_distance(curve, 10).contains(2)


def test_distance_formula_for_large_r_holds_when_t_perp_zero():
    for curve in CURVES:
        if curve.m <= curve.q:
            continue
        for r in range(curve.n, curve.max_r + 1):
            t, a = _t_perp(curve, r)
            if t == 0:
                assert oracle.min_distance_oracle(codes.build_code(curve, r).code) == a + 2


def test_literal_ghw_upper_bound_without_abundance_fails(gf4):
    """qm - r + p_l with the unshifted p_2 = 2 would give d_2(C_6) <= 2, below the true 3."""
    S = gf4.semigroup
    assert S.has_property_star(6 - S.pole_number(2))
    assert 6 - 6 + S.pole_number(2) == 2
    assert oracle.exact_ghw(codes.build_code(gf4, 6).code, 2) == 3
    assert codes.ghw(gf4, 6, 2).contains(3)


def test_d2_formula_for_large_r_fails_when_t_perp_nonzero():
    curve = validate_curve(CurveSpec.from_ints(2, 3, 2, 1, [0, 1, 2, 3, 4, 5, 6]))
    t, a = _t_perp(curve, 14)
    assert t != 0 and a + 3 == 5
    assert oracle.exact_ghw(codes.build_code(curve, 14).code, 2) == 4
    assert codes.ghw(curve, 14, 2).contains(4)


def test_bound_render():
    assert codes.Bound(3, 3, "x").render() == "3"
    assert codes.Bound(1, 2, "x").render() == "1..2"


def test_d2_at_r7_on_gf9_is_below_feng_rao_plus_q(gf9):
    """d_2(C_7) = qm - r + q = 8 although delta_FR(2qm-q-m-r) + q = 9."""
    S = gf9.semigroup
    assert S.feng_rao(17 - 7) + gf9.q == 9
    assert oracle.exact_ghw(codes.build_code(gf9, 7).code, 2) == 8
    assert codes.ghw(gf9, 7, 2).render() == "8"
