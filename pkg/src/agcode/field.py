"""Exact arithmetic in GF(p^s).

An element is a coefficient vector ``(c_0, ..., c_{s-1})`` over GF(p) with
respect to the basis ``1, t, ..., t^{s-1}`` of GF(p)[t]/(modulus).  Its
canonical integer encoding is ``enc = sum(c_i * p**i)``, which is also how
elements are stored inside matrices.

The modulus is canonical: the monic irreducible polynomial of degree ``s``
whose lower coefficients, read as the base-p integer ``(c_{s-1} ... c_0)``,
are smallest.  Two fields built from the same ``(p, s)`` are therefore
identical, and every matrix in the library is reproducible bit for bit.

Multiplication uses exp/log tables for fields of order at most 2**16 and full
addition/multiplication tables up to order 256.  Both are built from the
plain polynomial arithmetic in :meth:`FieldSpec.mul_reference` and never
change results.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import DivisionByZero, NonPrime, SizeCap, SpecMismatch

MAX_DEGREE = 8
MAX_ORDER = 1 << 20
LOG_TABLE_MAX = 1 << 16
FULL_TABLE_MAX = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over the prime field, coefficient lists with constant first --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    r = _trim([c % p for c in a])
    df = len(f) - 1
    lead_inv = pow(f[-1], p - 2, p)
    while len(r) - 1 >= df:
        c = (r[-1] * lead_inv) % p
        shift = len(r) - 1 - df
        for i, fc in enumerate(f):
            r[shift + i] = (r[shift + i] - c * fc) % p
        _trim(r)
    return r


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Ben-Or test: no factor of degree ``i <= deg/2`` divides ``t^(p^i) - t``."""
    f = _trim(list(poly))
    deg = len(f) - 1
    if deg < 1:
        return False
    h = [0, 1]
    for _ in range(deg // 2):
        # h <- h^p mod f
        acc, base, e = [1], h, p
        while e:
            if e & 1:
                acc = _pmod(_pmul(acc, base, p), f, p)
            base = _pmod(_pmul(base, base, p), f, p)
            e >>= 1
        h = acc
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, _trim(diff), p)) > 1:
            return False
    return True


def canonical_modulus(p: int, s: int) -> tuple[int, ...]:
    for idx in range(p**s):
        low = [(idx // p**i) % p for i in range(s)]
        cand = low + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError(f"no irreducible polynomial of degree {s} over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^s) with its canonical modulus.  Build with :func:`make_field`."""

    p: int
    s: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.s

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.s})"

    # -- encoding --

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p**i) % self.p for i in range(self.s))

    def from_coeffs(self, c: Sequence[int]) -> int:
        return sum((ci % self.p) * self.p**i for i, ci in enumerate(c))

    def element(self, a: int) -> FieldElement:
        return FieldElement.from_int(self, a)

    def elements(self) -> range:
        return range(self.order)

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element encoding of {self}")
        return a

    # -- reference arithmetic (polynomial arithmetic, no tables) --

    def mul_reference(self, a: int, b: int) -> int:
        prod = _pmul(list(self.coeffs(a)), list(self.coeffs(b)), self.p)
        return self.from_coeffs(_pmod(prod, self.modulus, self.p))

    def add_reference(self, a: int, b: int) -> int:
        return self.from_coeffs([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def _pow_reference(self, a: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self.mul_reference(acc, a)
            a = self.mul_reference(a, a)
            e >>= 1
        return acc

    # -- tables --

    @cached_property
    def primitive(self) -> int:
        """Smallest encoding with multiplicative order ``p^s - 1``."""
        n = self.order - 1
        factors = prime_factors(n)
        for a in range(1, self.order):
            if all(self._pow_reference(a, n // r) != 1 for r in factors):
                return a
        raise AssertionError("multiplicative group is not cyclic?")

    @cached_property
    def _exp_log(self) -> tuple[np.ndarray, np.ndarray] | None:
        if self.order > LOG_TABLE_MAX:
            return None
        n = self.order - 1
        exp = np.zeros(2 * n + 1, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        g, x = self.primitive, 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self.mul_reference(x, g)
        exp[n:2 * n] = exp[:n]
        exp[2 * n] = exp[0]
        return exp, log

    @cached_property
    def _tables(self) -> dict | None:
        if self.order > FULL_TABLE_MAX:
            return None
        q = self.order
        idx = np.arange(q, dtype=np.int64)
        add = self._vadd_digits(idx[:, None], idx[None, :])
        exp, log = self._exp_log
        n = q - 1
        mul = np.zeros((q, q), dtype=np.int64)
        if q > 1:
            la = log[1:]
            mul[1:, 1:] = exp[(la[:, None] + la[None, :]) % n]
        neg = self._vneg_digits(idx)
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % n]
        return {
            "add": add, "mul": mul, "neg": neg, "inv": inv,
            "add_l": add.tolist(), "mul_l": mul.tolist(),
            "neg_l": neg.tolist(), "inv_l": inv.tolist(),
        }

    # -- scalar arithmetic on encodings --

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        t = self._tables
        if t is not None:
            return t["add_l"][a][b]
        return self.add_reference(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        t = self._tables
        if t is not None:
            return t["neg_l"][a]
        return self.from_coeffs([-c for c in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        t = self._tables
        if t is not None:
            return t["mul_l"][a][b]
        if a == 0 or b == 0:
            return 0
        el = self._exp_log
        if el is not None:
            exp, log = el
            return int(exp[log[a] + log[b]])
        return self.mul_reference(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        t = self._tables
        if t is not None:
            return t["inv_l"][a]
        el = self._exp_log
        if el is not None:
            exp, log = el
            return int(exp[(-log[a]) % (self.order - 1)])
        return self._pow_reference(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        el = self._exp_log
        if el is not None:
            exp, log = el
            return int(exp[(int(log[a]) * e) % (self.order - 1)])
        return self._pow_reference(a, e)

    # -- vectorised arithmetic on integer arrays --

    def _vadd_digits(self, A, B):
        A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
        if self.p == 2:
            return A ^ B
        out = np.zeros(np.broadcast(A, B).shape, dtype=np.int64)
        pw = 1
        for _ in range(self.s):
            out += (((A // pw) % self.p + (B // pw) % self.p) % self.p) * pw
            pw *= self.p
        return out

    def _vneg_digits(self, A):
        A = np.asarray(A, dtype=np.int64)
        if self.p == 2:
            return A.copy()
        out = np.zeros_like(A)
        pw = 1
        for _ in range(self.s):
            out += ((self.p - (A // pw) % self.p) % self.p) * pw
            pw *= self.p
        return out

    def vadd(self, A, B) -> np.ndarray:
        t = self._tables
        if t is not None and self.p != 2:
            return t["add"][np.asarray(A), np.asarray(B)]
        return self._vadd_digits(A, B)

    def vneg(self, A) -> np.ndarray:
        t = self._tables
        if t is not None:
            return t["neg"][np.asarray(A)]
        return self._vneg_digits(A)

    def vsub(self, A, B) -> np.ndarray:
        return self.vadd(A, self.vneg(B))

    def vmul(self, A, B) -> np.ndarray:
        A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
        t = self._tables
        if t is not None:
            return t["mul"][A, B]
        el = self._exp_log
        if el is None:
            return np.vectorize(self.mul, otypes=[np.int64])(A, B)
        exp, log = el
        A, B = np.broadcast_arrays(A, B)
        out = np.zeros(A.shape, dtype=np.int64)
        nz = (A != 0) & (B != 0)
        out[nz] = exp[log[A[nz]] + log[B[nz]]]
        return out

    def vinv(self, A) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        if np.any(A == 0):
            raise DivisionByZero(f"0 has no inverse in {self}")
        t = self._tables
        if t is not None:
            return t["inv"][A]
        return np.vectorize(self.inv, otypes=[np.int64])(A)

    # -- polynomials with coefficients in this field (encodings, constant first) --

    def horner(self, coeffs: Sequence[int], x: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def poly_mul(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = self.add(out[i + j], self.mul(x, y))
        return out

    def poly_from_roots(self, roots: Sequence[int]) -> list[int]:
        out = [1]
        for r in roots:
            out = self.poly_mul(out, [self.neg(r), 1])
        return out

    def poly_derivative(self, coeffs: Sequence[int]) -> list[int]:
        # i * c_i uses the integer i reduced mod p: a repeated sum, not a field product
        out = []
        for i, c in enumerate(coeffs[1:], start=1):
            acc = 0
            for _ in range(i % self.p):
                acc = self.add(acc, c)
            out.append(acc)
        return out or [0]


@functools.lru_cache(maxsize=None)
def make_field(p: int, s: int = 1) -> FieldSpec:
    """Return GF(p^s) with the canonical modulus (cached, so equal inputs give one object)."""
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if not 1 <= s <= MAX_DEGREE:
        raise SizeCap(f"extension degree {s} outside [1, {MAX_DEGREE}]")
    if p**s > MAX_ORDER:
        raise SizeCap(f"field order {p}^{s} exceeds {MAX_ORDER}")
    return FieldSpec(p, s, canonical_modulus(p, s))


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    coeffs: tuple[int, ...]

    @classmethod
    def from_int(cls, field: FieldSpec, enc: int) -> FieldElement:
        return cls(field, field.coeffs(field.check(int(enc))))

    @property
    def enc(self) -> int:
        return self.field.from_coeffs(self.coeffs)

    def __int__(self) -> int:
        return self.enc

    def __index__(self) -> int:
        return self.enc

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"{self.field!r}({self.enc})"

    def _other(self, other: FieldElement) -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise SpecMismatch(f"{self.field!r} vs {other.field!r}")
        return other.enc

    def _wrap(self, enc: int) -> FieldElement:
        return FieldElement.from_int(self.field, enc)

    def __add__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else self._wrap(self.field.add(self.enc, b))

    def __sub__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else self._wrap(self.field.sub(self.enc, b))

    def __mul__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else self._wrap(self.field.mul(self.enc, b))

    def __truediv__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else self._wrap(self.field.div(self.enc, b))

    def __neg__(self):
        return self._wrap(self.field.neg(self.enc))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.enc, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.enc))

    def display(self) -> str:
        """Human-readable ``w^k`` form relative to the primitive element."""
        if not self:
            return "0"
        if self.enc == 1:
            return "1"
        g = self.field.primitive
        x, k = g, 1
        while x != self.enc:
            x = self.field.mul(x, g)
            k += 1
        return "w" if k == 1 else f"w^{k}"


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    if op not in ops:
        raise ValueError(f"unknown op {op!r}")
    if not isinstance(b, FieldElement):
        raise TypeError("second operand must be a FieldElement")
    return ops[op](b)


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def primitive_element(spec: FieldSpec) -> FieldElement:
    return spec.element(spec.primitive)


def _common_field(elems: Sequence[FieldElement]) -> FieldSpec:
    fields = {e.field for e in elems}
    if len(fields) != 1:
        raise SpecMismatch("elements come from different fields")
    return fields.pop()


def poly_eval(coeffs: Sequence[FieldElement], x: FieldElement) -> FieldElement:
    """Horner evaluation; ``coeffs[i]`` multiplies ``x**i``."""
    if not coeffs:
        raise ValueError("empty coefficient list")
    f = _common_field([*coeffs, x])
    return f.element(f.horner([c.enc for c in coeffs], x.enc))


def poly_derivative(coeffs: Sequence[FieldElement]) -> list[FieldElement]:
    """Formal derivative, with ``i * c_i`` collapsing in characteristic p."""
    f = _common_field(coeffs)
    return [f.element(c) for c in f.poly_derivative([c.enc for c in coeffs])]
