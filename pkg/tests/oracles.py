"""Independent brute-force oracles shared by the test modules.

Kept free of wittkit imports so the expected values they produce cannot
be contaminated by the code under test.
"""

from __future__ import annotations

from itertools import product


class PrimeField:
    """Arithmetic of Z/p for prime p."""

    def __init__(self, p: int):
        self.p = p
        self.elements = tuple(range(p))
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p


class FourElementField:
    """GF(4) as bit pairs over GF(2) modulo x^2 + x + 1."""

    def __init__(self):
        self.elements = (0, 1, 2, 3)
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return a ^ b

    sub = add

    def mul(self, a, b):
        a0, a1 = a & 1, a >> 1
        b0, b1 = b & 1, b >> 1
        hi = (a1 & b0) ^ (a0 & b1) ^ (a1 & b1)
        lo = (a0 & b0) ^ (a1 & b1)
        return (hi << 1) | lo


def field_of_order(q: int):
    if q == 4:
        return FourElementField()
    return PrimeField(q)


def _poly_rem(dividend: tuple, divisor: tuple, field) -> tuple:
    """Remainder of monic polynomials; both are full coefficient tuples
    (lowest degree first) with leading coefficient 1."""
    rem = list(dividend)
    dn = len(divisor) - 1
    for top in range(len(rem) - 1, dn - 1, -1):
        c = rem[top]
        if c == field.zero:
            continue
        rem[top] = field.zero
        for i in range(dn):
            rem[top - dn + i] = field.sub(rem[top - dn + i], field.mul(c, divisor[i]))
    while rem and rem[-1] == field.zero:
        rem.pop()
    return tuple(rem)


def count_monic_irreducibles(q: int, max_degree: int) -> dict[int, int]:
    """Enumerate all monic polynomials of each degree over F_q and count
    the ones with no monic irreducible divisor of lower degree."""
    field = field_of_order(q)
    irreducible: dict[int, list[tuple]] = {}
    counts: dict[int, int] = {}
    for n in range(1, max_degree + 1):
        found = []
        divisors = [g for d in range(1, n // 2 + 1) for g in irreducible[d]]
        for lower in product(field.elements, repeat=n):
            cand = lower + (field.one,)
            for g in divisors:
                if not _poly_rem(cand, g, field):
                    break
            else:
                found.append(cand)
        irreducible[n] = found
        counts[n] = len(found)
    return counts


def series_long_division(num: list[int], den: list[int], precision: int) -> list[int]:
    """Coefficients of num/den as integer power series (den[0] must be 1)."""
    assert den[0] == 1
    num = list(num) + [0] * precision
    out = []
    for k in range(precision):
        c = num[k]
        for i in range(1, min(k, len(den) - 1) + 1):
            c -= den[i] * out[k - i]
        out.append(c)
    return out
