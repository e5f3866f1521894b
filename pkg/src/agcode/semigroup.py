"""Two-generator numerical semigroups <q, m> (Weierstrass semigroup at the point at infinity)."""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field

from .errors import Degenerate, NotCoprime, NotMember, OutOfRange


@dataclass(frozen=True)
class NumericalSemigroup:
    q: int
    m: int
    genus: int
    conductor: int
    bound: int
    member: tuple[bool, ...] = field(repr=False)
    pole_numbers: tuple[int, ...] = field(repr=False)

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return self.member[x]

    __contains__ = contains

    @property
    def gaps(self) -> list[int]:
        return [x for x in range(self.conductor) if not self.member[x]]

    def is_symmetric(self) -> bool:
        top = 2 * self.genus - 1
        return all(self.contains(x) != self.contains(top - x) for x in range(top + 1))

    def count_upto(self, b: int) -> int:
        """|H(b)|, the number of members ``<= b``."""
        if not 0 <= b <= self.bound:
            raise OutOfRange(f"b={b} outside [0, {self.bound}]")
        return bisect_right(self.pole_numbers, b)

    def pole_number(self, a: int) -> int:
        """The ``a``-th member (1-indexed, so ``pole_number(1) == 0``)."""
        if not 1 <= a <= len(self.pole_numbers):
            raise OutOfRange(f"pole number index {a} outside [1, {len(self.pole_numbers)}]")
        return self.pole_numbers[a - 1]

    def largest_member_upto(self, v: int) -> int:
        """Largest member ``<= v`` (requires ``v >= 0``)."""
        if v < 0:
            raise OutOfRange("v must be nonnegative")
        if v >= self.conductor:
            return v
        return self.pole_numbers[bisect_right(self.pole_numbers, v) - 1]

    def representation(self, x: int) -> tuple[int, int]:
        """The unique ``(i, j)`` with ``x = i*q + j*m``, ``i >= 0``, ``0 <= j < q``."""
        if not self.contains(x):
            raise NotMember(f"{x} is not in <{self.q},{self.m}>")
        for j in range(self.q):
            rest = x - j * self.m
            if rest >= 0 and rest % self.q == 0:
                return rest // self.q, j
        raise AssertionError("member without representation")

    def divisor_set(self, y: int) -> set[int]:
        """D(y) = {a in H : y - a in H}."""
        if not self.contains(y):
            raise NotMember(f"{y} is not in <{self.q},{self.m}>")
        return {a for a in range(y + 1) if self.contains(a) and self.contains(y - a)}

    def feng_rao(self, x: int) -> int:
        """Classical Feng-Rao distance: min |D(m1)| over members m1 >= x.

        For m1 >= 2c - 1 one has |D(m1)| = m1 + 1 - 2g, which increases with
        m1, so only candidates up to ``max(x, 2c - 1)`` need to be examined.
        """
        if not self.contains(x):
            raise NotMember(f"{x} is not in <{self.q},{self.m}>")
        stop = max(x, 2 * self.conductor - 1)
        return min(len(self.divisor_set(m1)) for m1 in range(x, stop + 1) if self.contains(m1))

    def has_property_star(self, r: int) -> bool:
        """``0 <= r <= qm``, ``r`` a member and a pure multiple ``iq`` or ``jm`` (j < q)."""
        if not 0 <= r <= self.q * self.m or not self.contains(r):
            return False
        i, j = self.representation(r)
        return i == 0 or j == 0

    def largest_star_below(self, v: int) -> int:
        """Largest ``r <= v`` with property (*); 0 always qualifies."""
        if v < 0:
            raise OutOfRange("v must be nonnegative")
        for r in range(min(v, self.q * self.m), -1, -1):
            if self.has_property_star(r):
                return r
        raise AssertionError("0 always has property (*)")


def build(q: int, m: int) -> NumericalSemigroup:
    if q < 2 or m < 2:
        raise Degenerate(f"generators must be >= 2, got ({q}, {m})")
    if math.gcd(q, m) != 1:
        raise NotCoprime(f"gcd({q}, {m}) != 1")
    genus = (q - 1) * (m - 1) // 2
    conductor = (q - 1) * (m - 1)
    bound = max(2 * conductor + q + m, 2 * q * m)
    member = [False] * (bound + 1)
    for j in range(q):
        for x in range(j * m, bound + 1, q):
            member[x] = True
    poles = tuple(x for x in range(bound + 1) if member[x])
    return NumericalSemigroup(q, m, genus, conductor, bound, tuple(member), poles)
