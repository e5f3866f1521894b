from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agcode.errors import DivisionByZero, NonPrime, SizeCap, SpecMismatch
from agcode.field import (arith, canonical_modulus, is_irreducible, make_field, poly_derivative,
                          poly_eval, power, primitive_element)

SMALL = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (2, 4), (3, 3), (7, 2), (3, 4)]


def test_canonical_moduli():
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(2, 1).modulus == (0, 1)
    assert make_field(2, 3).modulus == (1, 1, 0, 1)


def test_canonical_modulus_is_smallest_irreducible():
    for p, s in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2)]:
        mod = canonical_modulus(p, s)
        key = lambda c: sum(x * p**i for i, x in enumerate(c))
        for lower in range(key(mod[:-1])):
            cand = [(lower // p**i) % p for i in range(s)] + [1]
            assert not is_irreducible(cand, p)


def test_make_field_errors():
    with pytest.raises(NonPrime):
        make_field(4, 1)
    with pytest.raises(SizeCap):
        make_field(2, 9)
    with pytest.raises(SizeCap):
        make_field(1031, 2)
    assert make_field(2, 2) is make_field(2, 2)


def test_gf4_examples():
    F = make_field(2, 2)
    w, one = F.element(2), F.element(1)
    assert arith(w, w, "mul").enc == 3
    assert arith(w, w, "add").enc == 0
    assert arith(one, w, "div").enc == 3
    assert power(w, 3).enc == 1
    assert power(w, 2).enc == 3
    assert power(w, -1).enc == 3
    assert all(power(F.element(a), 0).enc == 1 for a in F.elements())
    with pytest.raises(DivisionByZero):
        arith(one, F.element(0), "div")
    with pytest.raises(DivisionByZero):
        power(F.element(0), -2)
    with pytest.raises(SpecMismatch):
        arith(w, make_field(2, 3).element(2), "add")


def test_primitive_elements():
    assert primitive_element(make_field(2, 2)).enc == 2
    assert primitive_element(make_field(2, 1)).enc == 1
    assert primitive_element(make_field(3, 2)).enc == 4
    for p, s in SMALL:
        F = make_field(p, s)
        g = F.primitive
        seen = {F.pow(g, e) for e in range(F.order - 1)}
        assert len(seen) == F.order - 1


def test_poly_eval_and_derivative():
    F = make_field(2, 2)
    e = F.element
    f = [e(c) for c in F.poly_from_roots([0, 1, 2])]
    assert poly_eval(f, e(1)).enc == 0
    assert poly_eval([e(3)], e(2)).enc == 3
    fp = poly_derivative(f)
    assert [c.enc for c in fp] == [2, 0, 1]  # x^2 + w
    assert poly_eval(fp, e(0)).enc == 2
    with pytest.raises(SpecMismatch):
        poly_eval([e(1)], make_field(3, 1).element(1))


@pytest.mark.parametrize("p,s", [(2, 2), (2, 3), (3, 2)])
def test_field_axioms_exhaustive(p, s):
    F = make_field(p, s)
    els = list(F.elements())
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a) == F.add_reference(a, b)
        assert F.mul(a, b) == F.mul(b, a) == F.mul_reference(a, b)
        assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))
        for c in els:
            assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
            assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1


def test_vectorised_ops_match_scalar():
    for p, s in SMALL:
        F = make_field(p, s)
        A = np.array([a for a in F.elements() for _ in F.elements()], dtype=np.int64)
        B = np.array([b for _ in F.elements() for b in F.elements()], dtype=np.int64)
        assert F.vadd(A, B).tolist() == [F.add(int(a), int(b)) for a, b in zip(A, B)]
        assert F.vmul(A, B).tolist() == [F.mul(int(a), int(b)) for a, b in zip(A, B)]
        assert F.vsub(A, B).tolist() == [F.sub(int(a), int(b)) for a, b in zip(A, B)]
        nz = B[B != 0]
        assert F.vinv(nz).tolist() == [F.inv(int(b)) for b in nz]


def test_large_field_without_tables():
    F = make_field(1021, 2)
    a, b = 12345, 999999
    assert F.mul(a, b) == F.mul_reference(a, b)
    assert F.mul(a, F.inv(a)) == 1


@st.composite
def field_and_pair(draw):
    p, s = draw(st.sampled_from(SMALL + [(11, 3), (2, 8), (13, 2)]))
    F = make_field(p, s)
    a = draw(st.integers(0, F.order - 1))
    b = draw(st.integers(0, F.order - 1))
    c = draw(st.integers(0, F.order - 1))
    return F, a, b, c


@settings(max_examples=300, deadline=None)
@given(field_and_pair())
def test_axioms_random(fabc):
    F, a, b, c = fabc
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.pow(F.add(a, b), F.p) == F.add(F.pow(a, F.p), F.pow(b, F.p))
    assert F.sub(F.add(a, b), b) == a
    if b:
        assert F.mul(F.div(a, b), b) == a
    x, y = F.element(a), F.element(b)
    assert (x * y).enc == F.mul(a, b)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_encoding_round_trip(ps, data):
    F = make_field(*ps)
    a = data.draw(st.integers(0, F.order - 1))
    assert F.from_coeffs(F.coeffs(a)) == a
    assert F.element(a).enc == a
    assert all(0 <= c < F.p for c in F.coeffs(a))


def test_display():
    F = make_field(2, 2)
    assert [F.element(a).display() for a in range(4)] == ["0", "1", "w", "w^2"]
