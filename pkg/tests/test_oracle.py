from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agcode import oracle
from agcode.codes import build_code
from agcode.errors import FullSpace, OutOfRange, SpecMismatch, TooLarge, ZeroCode
from agcode.field import make_field
from agcode.linalg import LinearCode, matmul


def _subset_ghw(code: LinearCode) -> list[int]:
    """d_l as min |I| with dim{c in C : supp(c) within I} >= l, from full word enumeration."""
    words = np.concatenate(list(oracle.iter_codewords(code)))
    masks = (words != 0) @ (1 << np.arange(code.n))
    q0, n = code.field.order, code.n
    best = [n + 1] * (code.k + 1)
    for I in range(1 << n):
        inside = int(np.count_nonzero((masks & ~I) == 0))
        dim = round(np.log(inside) / np.log(q0))
        size = bin(I).count("1")
        for l in range(1, dim + 1):
            best[l] = min(best[l], size)
    return best[1:]


def test_rank_examples():
    F = make_field(2, 2)
    e = F.element
    assert oracle.rank_over_field([[e(1), e(0), e(0)], [e(0), e(1), e(0)], [e(0), e(0), e(1)]]) == 3
    assert oracle.rank_over_field([[e(0)] * 3] * 2) == 0
    alphas = [0, 1, 2]
    vander = [[e(1)] * 3, [e(a) for a in alphas]]
    assert oracle.rank_over_field(vander) == 2
    with pytest.raises(SpecMismatch):
        oracle.rank_over_field([[e(1), make_field(3, 1).element(1)]])


def test_min_distance_examples(gf4):
    assert oracle.exact_min_distance(build_code(gf4, 2).code) == 4
    assert oracle.exact_min_distance(build_code(gf4, 1).code) == 6
    F = make_field(3, 2)
    rep = LinearCode(F, [[1] * 7], 7)
    assert oracle.exact_min_distance(rep) == 7
    with pytest.raises(ZeroCode):
        oracle.exact_min_distance(LinearCode.zero(F, 4))


def test_weight_distribution(gf4):
    F = gf4.field
    assert oracle.weight_distribution(LinearCode.zero(F, 6)) == {0: 1}
    wd = oracle.weight_distribution(build_code(gf4, 2).code)
    assert sum(wd.values()) == 16 and wd[0] == 1
    assert min(w for w in oracle.weight_distribution(build_code(gf4, 6).code) if w) == 2


def test_ghw_examples(gf4):
    assert oracle.exact_ghw(build_code(gf4, 4).code, 2) == 4
    assert oracle.exact_ghw(build_code(gf4, 5).code, 2) == 3
    for r in range(7):
        code = build_code(gf4, r).code
        assert oracle.exact_ghw(code, 1) == oracle.exact_min_distance(code)
    with pytest.raises(OutOfRange):
        oracle.exact_ghw(build_code(gf4, 2).code, 3)


def test_parity_check(gf4):
    code = build_code(gf4, 2).code
    H = oracle.parity_check(code)
    assert H.shape == (4, 6)
    assert not np.any(matmul(gf4.field, code.gen, H.T))
    F = gf4.field
    single = LinearCode(F, np.eye(4, dtype=np.int64)[:3], 4)
    assert oracle.parity_check(single).shape == (1, 4)
    assert np.array_equal(oracle.parity_check(LinearCode.zero(F, 3)), np.eye(3, dtype=np.int64))
    with pytest.raises(FullSpace):
        oracle.parity_check(LinearCode.full(F, 3))


def test_caps(monkeypatch, gf9):
    monkeypatch.setenv("AGCODE_CAP", "100")
    code = build_code(gf9, 6).code
    with pytest.raises(TooLarge):
        oracle.exact_min_distance(code)
    assert oracle.min_distance_oracle(code) == oracle.exact_ghw(code, 1)
    monkeypatch.setenv("AGCODE_CAP", str(1 << 40))
    assert oracle.word_cap() == oracle.WORD_CAP
    big = LinearCode(make_field(2, 1), np.eye(25, dtype=np.int64)[:3], 25)
    with pytest.raises(TooLarge):
        oracle.exact_ghw(big, 1)


def test_wei_matches_subset_brute_force_on_curves(gf4, gf4_mu1):
    for curve in (gf4, gf4_mu1):
        for r in range(curve.max_r + 1):
            code = build_code(curve, r).code
            assert oracle.weight_hierarchy(code) == _subset_ghw(code)


def test_d2_matches_pairwise_subcodes(gf4):
    """d_2 as the smallest union of supports of two independent codewords."""
    F = gf4.field
    for r in range(2, 6):
        code = build_code(gf4, r).code
        words = [w for blk in oracle.iter_codewords(code) for w in blk if np.any(w)]
        lead = [F.inv(int(w[np.flatnonzero(w)[0]])) for w in words]
        normal = [tuple(F.vmul(w, c)) for w, c in zip(words, lead)]
        supp = [frozenset(np.flatnonzero(w)) for w in words]
        best = min(len(supp[i] | supp[j]) for i, j in itertools.combinations(range(len(words)), 2)
                   if normal[i] != normal[j])
        assert best == oracle.exact_ghw(code, 2)


@st.composite
def random_code(draw):
    p = draw(st.sampled_from([2, 3]))
    n = draw(st.integers(2, 8))
    k = draw(st.integers(1, min(n, 4)))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n),
                         min_size=k, max_size=k))
    code = LinearCode(make_field(p, 1), rows, n)
    return code


@settings(max_examples=60, deadline=None)
@given(random_code())
def test_wei_matches_subset_brute_force_random(code):
    if code.k == 0:
        return
    hier = oracle.weight_hierarchy(code)
    assert hier == _subset_ghw(code)
    assert all(a < b for a, b in zip(hier, hier[1:]))
    for l, d in enumerate(hier, 1):
        assert d <= code.n - code.k + l


def test_relative_min_weight(gf4):
    c2, c4 = build_code(gf4, 2).code, build_code(gf4, 4).code
    assert oracle.relative_min_weight(c2, c4) is None
    w = oracle.relative_min_weight(c4, c2)
    assert w == 2
