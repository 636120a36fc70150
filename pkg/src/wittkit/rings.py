"""Pluggable exact commutative-ring arithmetic.

Rings are singleton-ish descriptor objects (compared by their spec
string) whose methods operate on raw payload values:

    Z        integers                  payload: int
    Z/m      integers mod m            payload: int in [0, m)
    Q        rationals                 payload: Fraction
    R[x,y]   polynomials over R        payload: dict {monomial: coeff},
             monomial = tuple of (var_index, exponent) pairs, sorted,
             exponents >= 1, no zero coefficients
    sz(R)    square-zero extension     payload: (a, x) pair of R payloads;
             product (a,x)*(b,y) = (ab, ay+bx)
    series(R,k)  truncated power series mod t^k   payload: k-tuple of R payloads
    W(S,R)   Witt vectors (defined in wittkit.witt)

Payloads are canonical: equal payloads <=> equal ring elements.  All
values are treated as immutable; operations are pure functions, so every
ring is safe to share between threads.

The RingElement wrapper pairs a payload with its ring and overloads the
arithmetic operators; it is the type used at API boundaries (CLI, JSON).
Internal algorithms work on payloads directly through the ring methods.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .errors import (
    MissingVariable,
    NotAUnit,
    NotDivisible,
    SpecMismatch,
    WittkitError,
    ZeroDivisor,
)


class Ring:
    """Abstract commutative ring operating on raw payload values."""

    #: multiplication by any nonzero integer is injective
    torsion_free = False

    # -- required arithmetic -------------------------------------------------
    def add(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def of_int(self, k: int):
        """Canonical image of the integer k."""
        raise NotImplementedError

    def exact_div(self, x, n: int):
        """The unique q with n*q = x; NotDivisible/ZeroDivisor otherwise."""
        raise NotImplementedError

    # -- derived helpers -----------------------------------------------------
    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def pow(self, x, e: int):
        if e < 0:
            raise WittkitError("negative exponent")
        if e == 0:
            return self.one
        result = None
        base = x
        while True:
            if e & 1:
                result = base if result is None else self.mul(result, base)
            e >>= 1
            if not e:
                return result
            base = self.mul(base, base)

    def scalar_mul(self, k: int, x):
        """The k-fold sum k*x."""
        return self.mul(self.of_int(k), x)

    @property
    def zero(self):
        return self.of_int(0)

    @property
    def one(self):
        return self.of_int(1)

    def is_zero(self, x) -> bool:
        return x == self.zero

    def lift_ring(self) -> Ring | None:
        """A torsion-free cover, or None.

        When not None, `lift` and `reduce_from_lift` translate payloads to
        and from the cover and reduce_from_lift o (any ring op) o lift
        computes the op here.
        """
        return None

    def lift(self, x):
        raise NotImplementedError

    def reduce_from_lift(self, x):
        raise NotImplementedError

    def sample(self, rng, size: int = 9):
        """A small random payload, used by randomized law checks."""
        raise NotImplementedError

    # -- serialization -------------------------------------------------------
    def to_json(self, x) -> Any:
        raise NotImplementedError

    def from_json(self, data) -> Any:
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    # -- identity ------------------------------------------------------------
    def __str__(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<ring {self}>"

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and str(self) == str(other)

    def __hash__(self) -> int:
        return hash(str(self))


class IntegerRing(Ring):
    torsion_free = True

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def pow(self, x, e):
        return x**e

    def of_int(self, k):
        return k

    def scalar_mul(self, k, x):
        return k * x

    def exact_div(self, x, n):
        if n == 0:
            raise ZeroDivisor("division by 0")
        q, r = divmod(x, n)
        if r:
            raise NotDivisible(f"{n} does not divide {x}")
        return q

    def sample(self, rng, size=9):
        return rng.randint(-size, size)

    def to_json(self, x):
        return x

    def from_json(self, data):
        return int(data)

    def __str__(self):
        return "Z"


class RationalRing(Ring):
    torsion_free = True

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def of_int(self, k):
        return Fraction(k)

    def exact_div(self, x, n):
        if n == 0:
            raise ZeroDivisor("division by 0")
        return x / n

    def sample(self, rng, size=9):
        return Fraction(rng.randint(-size, size), rng.randint(1, size))

    def to_json(self, x):
        return str(x)

    def from_json(self, data):
        return Fraction(str(data))

    def __str__(self):
        return "Q"


class ModularRing(Ring):
    """Integers modulo m, residues normalized to [0, m)."""

    def __init__(self, m: int):
        if m < 2:
            raise WittkitError(f"modulus must be >= 2: {m}")
        self.m = m

    def add(self, x, y):
        return (x + y) % self.m

    def neg(self, x):
        return (-x) % self.m

    def mul(self, x, y):
        return (x * y) % self.m

    def pow(self, x, e):
        return pow(x, e, self.m)

    def of_int(self, k):
        return k % self.m

    def scalar_mul(self, k, x):
        return (k * x) % self.m

    def exact_div(self, x, n):
        import math

        g = math.gcd(n, self.m)
        if g == 1:
            return (x * pow(n, -1, self.m)) % self.m
        if x % g == 0:
            raise ZeroDivisor(f"division by {n} mod {self.m} is ambiguous")
        raise NotDivisible(f"{n} does not divide {x} mod {self.m}")

    def lift_ring(self):
        return Z

    def lift(self, x):
        return x

    def reduce_from_lift(self, x):
        return x % self.m

    def sample(self, rng, size=9):
        return rng.randrange(self.m)

    def to_json(self, x):
        return x

    def from_json(self, data):
        return int(data) % self.m

    def __str__(self):
        return f"Z/{self.m}"


class PolynomialRing(Ring):
    """Sparse multivariate polynomials over a base ring.

    Monomials are tuples of (variable_index, exponent) pairs sorted by
    index, exponents positive; the payload maps monomials to nonzero base
    coefficients.  The variable order is fixed by the constructor list.
    """

    def __init__(self, base: Ring, variables):
        self.base = base
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise WittkitError(f"duplicate variable names: {self.variables}")
        self._index = {v: i for i, v in enumerate(self.variables)}
        self.torsion_free = base.torsion_free

    def var(self, name: str):
        """The payload for a single variable."""
        if name not in self._index:
            raise MissingVariable(f"{name} is not a variable of {self}")
        return {((self._index[name], 1),): self.base.one}

    def _trim(self, terms: dict) -> dict:
        return {m: c for m, c in terms.items() if not self.base.is_zero(c)}

    def add(self, x, y):
        out = dict(x)
        for mono, c in y.items():
            if mono in out:
                s = self.base.add(out[mono], c)
                if self.base.is_zero(s):
                    del out[mono]
                else:
                    out[mono] = s
            else:
                out[mono] = c
        return out

    def neg(self, x):
        return {m: self.base.neg(c) for m, c in x.items()}

    @staticmethod
    def _merge_monomials(a, b):
        if not a:
            return b
        if not b:
            return a
        out = []
        i = j = 0
        la, lb = len(a), len(b)
        while i < la and j < lb:
            va, ea = a[i]
            vb, eb = b[j]
            if va == vb:
                out.append((va, ea + eb))
                i += 1
                j += 1
            elif va < vb:
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return tuple(out)

    def mul(self, x, y):
        if len(x) > len(y):
            x, y = y, x
        base = self.base
        out: dict = {}
        merge = self._merge_monomials
        for ma, ca in x.items():
            for mb, cb in y.items():
                mono = merge(ma, mb)
                c = base.mul(ca, cb)
                if mono in out:
                    out[mono] = base.add(out[mono], c)
                else:
                    out[mono] = c
        return self._trim(out)

    def of_int(self, k):
        c = self.base.of_int(k)
        return {} if self.base.is_zero(c) else {(): c}

    def scalar_mul(self, k, x):
        return self._trim({m: self.base.scalar_mul(k, c) for m, c in x.items()})

    def exact_div(self, x, n):
        return {m: self.base.exact_div(c, n) for m, c in x.items()}

    def is_zero(self, x):
        return not x

    def degree(self, x) -> int:
        if not x:
            return 0
        return max((sum(e for _, e in m) for m in x), default=0)

    def convert_from(self, payload: dict, src: PolynomialRing) -> dict:
        """Re-index a payload from a ring whose variables are a subset."""
        if src is self:
            return payload
        mapping = []
        for name in src.variables:
            if name not in self._index:
                raise MissingVariable(f"{name} is not a variable of {self}")
            mapping.append(self._index[name])
        out = {}
        for mono, c in payload.items():
            new = tuple(sorted((mapping[v], e) for v, e in mono))
            out[new] = c
        return out

    def evaluate(self, payload: dict, values: dict, target: Ring):
        """Evaluate in `target` with `values` mapping variable names to payloads."""
        max_exp: dict[int, int] = {}
        for mono in payload:
            for v, e in mono:
                if e > max_exp.get(v, 0):
                    max_exp[v] = e
        missing = sorted(
            self.variables[v] for v in max_exp if self.variables[v] not in values
        )
        if missing:
            raise MissingVariable(f"no value for {missing}")
        mul, add, of_int = target.mul, target.add, target.of_int
        powers: dict[int, list] = {}
        for v, top in max_exp.items():
            x = values[self.variables[v]]
            row = [target.one, x]
            for _ in range(top - 1):
                row.append(mul(row[-1], x))
            powers[v] = row
        acc = target.zero
        for mono, c in payload.items():
            if not isinstance(c, int):
                raise SpecMismatch("evaluation requires integer coefficients")
            term = of_int(c)
            for v, e in mono:
                term = mul(term, powers[v][e])
            acc = add(acc, term)
        return acc

    def lift_ring(self):
        cover = self.base.lift_ring()
        if cover is None:
            return None
        return PolynomialRing(cover, self.variables)

    def lift(self, x):
        return {m: self.base.lift(c) for m, c in x.items()}

    def reduce_from_lift(self, x):
        return self._trim({m: self.base.reduce_from_lift(c) for m, c in x.items()})

    def sample(self, rng, size=9):
        out = {}
        nvars = len(self.variables)
        for _ in range(rng.randint(0, 3)):
            mono = tuple(
                sorted((rng.randrange(nvars), rng.randint(1, 2)) for _ in range(rng.randint(1, 2)))
            )
            if len({v for v, _ in mono}) < len(mono):
                continue
            c = self.base.sample(rng, size)
            if not self.base.is_zero(c):
                out[mono] = c
        return out

    def to_json(self, x):
        return [
            [[[self.variables[v], e] for v, e in mono], self.base.to_json(c)]
            for mono, c in sorted(x.items())
        ]

    def from_json(self, data):
        out = {}
        for mono_data, c_data in data:
            mono = tuple(sorted((self._index[name], int(e)) for name, e in mono_data))
            c = self.base.from_json(c_data)
            if not self.base.is_zero(c):
                out[mono] = c
        return dict(sorted(out.items()))

    def format(self, x) -> str:
        if not x:
            return "0"
        parts = []
        for mono, c in sorted(x.items()):
            factors = []
            for v, e in mono:
                name = self.variables[v]
                factors.append(name if e == 1 else f"{name}^{e}")
            cs = self.base.format(c)
            if factors and cs == "1":
                parts.append("*".join(factors))
            elif factors and cs == "-1":
                parts.append("-" + "*".join(factors))
            else:
                parts.append("*".join([cs] + factors))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __str__(self):
        return f"{self.base}[{','.join(self.variables)}]"


class SquareZeroRing(Ring):
    """The extension of a ring by itself with square-zero product on the fiber."""

    def __init__(self, base: Ring):
        self.base = base
        self.torsion_free = base.torsion_free

    def pair(self, a, x):
        return (a, x)

    def add(self, x, y):
        return (self.base.add(x[0], y[0]), self.base.add(x[1], y[1]))

    def neg(self, x):
        return (self.base.neg(x[0]), self.base.neg(x[1]))

    def mul(self, x, y):
        a, m = x
        b, n = y
        return (self.base.mul(a, b), self.base.add(self.base.mul(a, n), self.base.mul(b, m)))

    def of_int(self, k):
        return (self.base.of_int(k), self.base.zero)

    def exact_div(self, x, n):
        return (self.base.exact_div(x[0], n), self.base.exact_div(x[1], n))

    def lift_ring(self):
        cover = self.base.lift_ring()
        return None if cover is None else SquareZeroRing(cover)

    def lift(self, x):
        return (self.base.lift(x[0]), self.base.lift(x[1]))

    def reduce_from_lift(self, x):
        return (self.base.reduce_from_lift(x[0]), self.base.reduce_from_lift(x[1]))

    def sample(self, rng, size=9):
        return (self.base.sample(rng, size), self.base.sample(rng, size))

    def to_json(self, x):
        return [self.base.to_json(x[0]), self.base.to_json(x[1])]

    def from_json(self, data):
        return (self.base.from_json(data[0]), self.base.from_json(data[1]))

    def format(self, x):
        return f"({self.base.format(x[0])}, {self.base.format(x[1])})"

    def __str__(self):
        return f"sz({self.base})"


class SeriesRing(Ring):
    """Power series in t over a base ring, truncated mod t^precision."""

    def __init__(self, base: Ring, precision: int):
        if precision < 1:
            raise WittkitError(f"precision must be >= 1: {precision}")
        self.base = base
        self.precision = precision
        self.torsion_free = base.torsion_free

    def from_coefficients(self, coeffs) -> tuple:
        coeffs = list(coeffs)[: self.precision]
        coeffs += [self.base.zero] * (self.precision - len(coeffs))
        return tuple(coeffs)

    def coefficient(self, x, k: int):
        return x[k]

    def add(self, x, y):
        return tuple(self.base.add(a, b) for a, b in zip(x, y))

    def neg(self, x):
        return tuple(self.base.neg(a) for a in x)

    def mul(self, x, y):
        base = self.base
        out = [base.zero] * self.precision
        for i, a in enumerate(x):
            if base.is_zero(a):
                continue
            for j in range(self.precision - i):
                b = y[j]
                if not base.is_zero(b):
                    out[i + j] = base.add(out[i + j], base.mul(a, b))
        return tuple(out)

    def of_int(self, k):
        return self.from_coefficients([self.base.of_int(k)])

    def exact_div(self, x, n):
        return tuple(self.base.exact_div(a, n) for a in x)

    def lift_ring(self):
        cover = self.base.lift_ring()
        return None if cover is None else SeriesRing(cover, self.precision)

    def lift(self, x):
        return tuple(self.base.lift(a) for a in x)

    def reduce_from_lift(self, x):
        return tuple(self.base.reduce_from_lift(a) for a in x)

    def sample(self, rng, size=9):
        return tuple(self.base.sample(rng, size) for _ in range(self.precision))

    def to_json(self, x):
        return [self.base.to_json(a) for a in x]

    def from_json(self, data):
        return self.from_coefficients(self.base.from_json(a) for a in data)

    def format(self, x):
        parts = []
        for k, a in enumerate(x):
            if self.base.is_zero(a):
                continue
            cs = self.base.format(a)
            if k == 0:
                parts.append(cs)
            else:
                t = "t" if k == 1 else f"t^{k}"
                parts.append(t if cs == "1" else f"{cs}*{t}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} (mod t^{self.precision})"

    def __str__(self):
        return f"series({self.base},{self.precision})"


Z = IntegerRing()
Q = RationalRing()


def series_inverse_payload(ring: SeriesRing, f: tuple) -> tuple:
    """Multiplicative inverse of a series with constant term 1."""
    base = ring.base
    if f[0] != base.one:
        raise NotAUnit("series inverse requires constant term 1")
    out = [base.one] + [base.zero] * (ring.precision - 1)
    for k in range(1, ring.precision):
        acc = base.zero
        for i in range(1, k + 1):
            if not base.is_zero(f[i]):
                acc = base.add(acc, base.mul(f[i], out[k - i]))
        out[k] = base.neg(acc)
    return tuple(out)


# --------------------------------------------------------------------------
# RingElement wrapper and spec-string / JSON interfaces
# --------------------------------------------------------------------------


class RingElement:
    """A payload tagged with its ring; supports +, -, *, ** and exact ==."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        self.ring = ring
        self.value = value

    def _check(self, other: RingElement):
        if not isinstance(other, RingElement):
            raise SpecMismatch(f"expected a ring element, got {type(other).__name__}")
        if self.ring != other.ring:
            raise SpecMismatch(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        self._check(other)
        return RingElement(self.ring, self.ring.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return RingElement(self.ring, self.ring.sub(self.value, other.value))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.value))

    def __mul__(self, other):
        self._check(other)
        return RingElement(self.ring, self.ring.mul(self.value, other.value))

    def __pow__(self, e: int):
        return RingElement(self.ring, self.ring.pow(self.value, e))

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and self.ring == other.ring
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.ring, repr(self.value)))

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"RingElement({self.ring}, {self.ring.format(self.value)})"


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def ring_neg(x: RingElement) -> RingElement:
    return -x


def exact_div(x: RingElement, n: int) -> RingElement:
    return RingElement(x.ring, x.ring.exact_div(x.value, n))


def series_inverse(f: RingElement) -> RingElement:
    if not isinstance(f.ring, SeriesRing):
        raise SpecMismatch(f"series_inverse needs a series ring, got {f.ring}")
    return RingElement(f.ring, series_inverse_payload(f.ring, f.value))


def _split_args(body: str) -> list[str]:
    """Split a comma list at depth zero of (), [] and {}."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    return [p.strip() for p in parts]


def parse_ring(text: str) -> Ring:
    """Parse a ring spec string, e.g. "Z", "Z/8", "Z/3[x]", "W(div24,Z)"."""
    text = text.strip()
    if text.endswith("]"):
        open_idx = text.index("[")
        base = parse_ring(text[:open_idx])
        names = [v.strip() for v in text[open_idx + 1 : -1].split(",") if v.strip()]
        return PolynomialRing(base, names)
    if text == "Z":
        return Z
    if text == "Q":
        return Q
    if text.startswith("Z/"):
        return ModularRing(int(text[2:]))
    if text.startswith("sz(") and text.endswith(")"):
        return SquareZeroRing(parse_ring(text[3:-1]))
    if text.startswith("series(") and text.endswith(")"):
        args = _split_args(text[7:-1])
        if len(args) != 2:
            raise SpecMismatch(f"series(...) takes base and precision: {text!r}")
        return SeriesRing(parse_ring(args[0]), int(args[1]))
    if text.startswith("W(") and text.endswith(")"):
        from .truncation import parse_truncation_set
        from .witt import WittRing

        args = _split_args(text[2:-1])
        if len(args) != 2:
            raise SpecMismatch(f"W(...) takes a set and a base: {text!r}")
        return WittRing(parse_ring(args[1]), parse_truncation_set(args[0]))
    raise SpecMismatch(f"cannot parse ring spec: {text!r}")


def element_to_json(el: RingElement) -> dict:
    return {"spec": str(el.ring), "value": el.ring.to_json(el.value)}


def element_from_json(data: dict) -> RingElement:
    ring = parse_ring(data["spec"])
    return RingElement(ring, ring.from_json(data["value"]))
