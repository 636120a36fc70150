import random
from fractions import Fraction

import pytest

from wittkit.errors import NotAUnit, NotDivisible, SpecMismatch, ZeroDivisor
from wittkit.rings import (
    ModularRing,
    PolynomialRing,
    Q,
    RingElement,
    SeriesRing,
    SquareZeroRing,
    Z,
    element_from_json,
    element_to_json,
    exact_div,
    parse_ring,
    ring_add,
    ring_mul,
    series_inverse,
)

from oracles import series_long_division

RINGS = [
    Z,
    Q,
    ModularRing(4),
    ModularRing(9),
    PolynomialRing(Z, ["x", "y"]),
    PolynomialRing(ModularRing(3), ["x"]),
    SquareZeroRing(Z),
    SeriesRing(Z, 5),
    SeriesRing(ModularRing(2), 3),
    SquareZeroRing(SeriesRing(Z, 3)),
    parse_ring("W({1,2,4},Z)"),
    parse_ring("W({1,2},Z/4)"),
]


def test_basic_examples():
    assert ring_add(RingElement(Z, 2), RingElement(Z, 3)) == RingElement(Z, 5)
    R4 = ModularRing(4)
    assert ring_add(RingElement(R4, 3), RingElement(R4, 3)) == RingElement(R4, 2)
    R6 = ModularRing(6)
    assert ring_mul(RingElement(R6, 4), RingElement(R6, 3)) == RingElement(R6, 0)
    P = PolynomialRing(Z, ["a1", "b1"])
    a1 = RingElement(P, P.var("a1"))
    b1 = RingElement(P, P.var("b1"))
    assert (a1 + b1).value == P.add(P.var("a1"), P.var("b1"))
    assert (a1 * a1).value == {((0, 2),): 1}


def test_square_zero_product():
    R = SquareZeroRing(Z)
    x = RingElement(R, (2, 3))
    y = RingElement(R, (5, 7))
    assert (x * y).value == (10, 29)
    # fiber squares to zero
    m = RingElement(R, (0, 5))
    assert (m * m).value == (0, 0)


def test_spec_mismatch():
    with pytest.raises(SpecMismatch):
        ring_add(RingElement(Z, 1), RingElement(Q, Fraction(1)))


def test_exact_div():
    assert exact_div(RingElement(Z, 6), 3) == RingElement(Z, 2)
    P = PolynomialRing(Z, ["a2"])
    four_a2 = RingElement(P, P.scalar_mul(4, P.var("a2")))
    assert exact_div(four_a2, 2).value == P.scalar_mul(2, P.var("a2"))
    with pytest.raises(NotDivisible):
        exact_div(RingElement(Z, 5), 2)
    R9 = ModularRing(9)
    assert exact_div(RingElement(R9, 5), 2) == RingElement(R9, 7)
    with pytest.raises(ZeroDivisor):
        exact_div(RingElement(R9, 6), 3)
    with pytest.raises(NotDivisible):
        exact_div(RingElement(R9, 5), 3)


def test_exact_div_inverts_scalar_mul():
    rng = random.Random(1)
    for ring in (Z, Q, PolynomialRing(Z, ["x"]), SeriesRing(Z, 4)):
        for _ in range(50):
            x = ring.sample(rng)
            for n in (1, 2, 3, 7):
                assert ring.exact_div(ring.scalar_mul(n, x), n) == x


def test_series_inverse():
    R = SeriesRing(Z, 3)
    f = RingElement(R, R.from_coefficients([1, -1, 0]))
    assert series_inverse(f).value == (1, 1, 1)
    R4 = SeriesRing(Z, 4)
    assert series_inverse(RingElement(R4, R4.one)).value == (1, 0, 0, 0)
    g = RingElement(R4, R4.from_coefficients([1, -2, 1, 0]))
    expected = series_long_division([1], [1, -2, 1], 4)
    assert list(series_inverse(g).value) == expected == [1, 2, 3, 4]
    with pytest.raises(NotAUnit):
        series_inverse(RingElement(R4, R4.from_coefficients([0, 1])))


def test_series_inverse_random():
    rng = random.Random(7)
    R = SeriesRing(Z, 6)
    for _ in range(100):
        coeffs = [1] + [rng.randint(-9, 9) for _ in range(5)]
        f = RingElement(R, R.from_coefficients(coeffs))
        assert (series_inverse(f) * f).value == R.one


@pytest.mark.parametrize("ring", RINGS, ids=str)
def test_ring_axioms(ring):
    rng = random.Random(42)
    zero, one = ring.zero, ring.one
    for _ in range(60):
        x, y, z = (ring.sample(rng) for _ in range(3))
        assert ring.add(x, y) == ring.add(y, x)
        assert ring.add(ring.add(x, y), z) == ring.add(x, ring.add(y, z))
        assert ring.mul(x, y) == ring.mul(y, x)
        assert ring.mul(ring.mul(x, y), z) == ring.mul(x, ring.mul(y, z))
        assert ring.mul(x, ring.add(y, z)) == ring.add(ring.mul(x, y), ring.mul(x, z))
        assert ring.add(x, zero) == x
        assert ring.mul(x, one) == x
        assert ring.add(x, ring.neg(x)) == zero


@pytest.mark.parametrize("ring", RINGS, ids=str)
def test_json_round_trip(ring):
    rng = random.Random(3)
    for _ in range(20):
        el = RingElement(ring, ring.sample(rng))
        back = element_from_json(element_to_json(el))
        assert back == el


def test_parse_ring_round_trip():
    for text in ["Z", "Q", "Z/8", "Z[x,y]", "Z/3[x]", "sz(Z)", "series(Z,12)", "W({1,2,4},Z)"]:
        ring = parse_ring(text)
        assert parse_ring(str(ring)) == ring
    assert str(parse_ring("W(div24,Z)")) == "W({1,2,3,4,6,8,12,24},Z)"
    with pytest.raises(SpecMismatch):
        parse_ring("F_9")


def test_modular_normalization():
    R = ModularRing(5)
    assert R.of_int(-1) == 4
    assert R.of_int(12) == 2


def test_polynomial_canonical_form():
    P = PolynomialRing(Z, ["x", "y"])
    x, y = P.var("x"), P.var("y")
    built = P.add(P.mul(x, y), P.neg(P.mul(y, x)))
    assert built == {}
    assert P.format(P.add(P.mul(x, x), P.scalar_mul(-3, y))) in ("x^2 - 3*y", "-3*y + x^2")
