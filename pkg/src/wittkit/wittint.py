"""W_S(Z) in its additive basis of Verschiebung generators.

Additively, W_S(Z) is the product over n in S of Z * V_n([1]); an element
is stored as its integer coefficient tuple.  Addition is componentwise;
multiplication has the structure constants

    V_m([1]) * V_n([1]) = gcd(m, n) * V_lcm(m,n)([1])

with terms whose lcm leaves S dropped (they vanish under restriction).
Frobenius, Verschiebung and restriction act on generators by

    F_m V_n([1]) = gcd(m, n) * V_{n/gcd}([1])     (zero if lcm(m,n) not in S)
    V_m V_n([1]) = V_{mn}([1])
    R_T V_n([1]) = V_n([1]) if n in T else 0

and extend linearly.  The Teichmuller representative of an integer m
expands with necklace coefficients (1/n) * sum over d|n of mu(d)*m^(n/d).

Formal 1-forms sum terms a*db with both sides basis elements; the
divided Frobenius maps them using the comonad components of b.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotDivisible, NotSubset, SetMismatch, SpecMismatch
from .rings import Z
from .truncation import TruncationSet
from .witt import (
    GhostVector,
    WittVector,
    delta_component,
    from_ghost,
    frobenius as witt_frobenius,
    restrict as witt_restrict,
)

_PRIME_TABLE_BOUND = 10**6
_prime_cache: list[int] = []
_prime_cache_bound = 1


def _primes_up_to(bound: int) -> list[int]:
    global _prime_cache, _prime_cache_bound
    if bound > _prime_cache_bound:
        sieve = bytearray([1]) * (bound + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, int(bound**0.5) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
        _prime_cache = [i for i, flag in enumerate(sieve) if flag]
        _prime_cache_bound = bound
    return _prime_cache


def factorize(n: int, table_bound: int = _PRIME_TABLE_BOUND) -> dict[int, int]:
    """Prime factorization by trial division over a cached prime table."""
    if n < 1:
        raise SpecMismatch(f"factorize needs a positive integer: {n}")
    out: dict[int, int] = {}
    remaining = n
    for p in _primes_up_to(min(int(n**0.5) + 1, table_bound)):
        if p * p > remaining:
            break
        while remaining % p == 0:
            out[p] = out.get(p, 0) + 1
            remaining //= p
    if remaining > 1:
        out[remaining] = out.get(remaining, 0) + 1
    return out


def mobius(d: int) -> int:
    """1 on squarefree products of evenly many primes, -1 on odd, else 0."""
    factors = factorize(d)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


@dataclass(frozen=True, eq=True)
class BasisWittInt:
    """Integer coefficients on the generators V_n([1]), n in S."""

    tset: TruncationSet
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != len(self.tset):
            raise SpecMismatch("coefficient count does not match the truncation set")

    def coeff(self, n: int) -> int:
        return self.coeffs[self.tset.index(n)]

    def __add__(self, other):
        return basis_add(self, other)

    def __sub__(self, other):
        return basis_add(self, basis_neg(other))

    def __neg__(self):
        return basis_neg(self)

    def __mul__(self, other):
        return basis_mul(self, other)

    def __pow__(self, e: int):
        result = basis_one(self.tset)
        for _ in range(e):
            result = basis_mul(result, self)
        return result

    def __str__(self):
        parts = [
            f"{c}·V{n}" for n, c in zip(self.tset.members, self.coeffs) if c
        ]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "set": list(self.tset.members),
            "coeffs": {str(n): c for n, c in zip(self.tset.members, self.coeffs) if c},
        }


def basis_from_json(data: dict) -> BasisWittInt:
    from .truncation import truncation_set

    tset = truncation_set(data["set"])
    coeffs = tuple(int(data["coeffs"].get(str(n), 0)) for n in tset.members)
    return BasisWittInt(tset, coeffs)


def basis_zero(S: TruncationSet) -> BasisWittInt:
    return BasisWittInt(S, tuple(0 for _ in S))


def basis_one(S: TruncationSet) -> BasisWittInt:
    return basis_generator(S, 1) if S.members else basis_zero(S)


def basis_generator(S: TruncationSet, n: int) -> BasisWittInt:
    """The generator V_n([1])."""
    if n not in S:
        raise SetMismatch(f"{n} is not in {S}")
    return BasisWittInt(S, tuple(1 if m == n else 0 for m in S.members))


def _check_set(x: BasisWittInt, y: BasisWittInt):
    if x.tset != y.tset:
        raise SetMismatch(f"truncation sets differ: {x.tset} vs {y.tset}")


def basis_add(x: BasisWittInt, y: BasisWittInt) -> BasisWittInt:
    _check_set(x, y)
    return BasisWittInt(x.tset, tuple(a + b for a, b in zip(x.coeffs, y.coeffs)))


def basis_neg(x: BasisWittInt) -> BasisWittInt:
    return BasisWittInt(x.tset, tuple(-a for a in x.coeffs))


def basis_scalar_mul(k: int, x: BasisWittInt) -> BasisWittInt:
    return BasisWittInt(x.tset, tuple(k * a for a in x.coeffs))


def basis_mul(x: BasisWittInt, y: BasisWittInt) -> BasisWittInt:
    _check_set(x, y)
    members = x.tset.members
    memset = set(members)
    acc = {n: 0 for n in members}
    for m, cm in zip(members, x.coeffs):
        if not cm:
            continue
        for n, cn in zip(members, y.coeffs):
            if not cn:
                continue
            g = gcd(m, n)
            l = m // g * n
            if l in memset:
                acc[l] += cm * cn * g
    return BasisWittInt(x.tset, tuple(acc[n] for n in members))


def frobenius_basis(m: int, x: BasisWittInt) -> BasisWittInt:
    """F_m in basis form, landing over S/m."""
    T = x.tset.quotient(m)
    tgt = {n: 0 for n in T.members}
    for n, c in zip(x.tset.members, x.coeffs):
        if not c:
            continue
        g = gcd(m, n)
        if n // g in tgt:
            tgt[n // g] += c * g
    return BasisWittInt(T, tuple(tgt[n] for n in T.members))


def verschiebung_basis(m: int, x: BasisWittInt, S: TruncationSet) -> BasisWittInt:
    """V_m from basis form over S/m into S."""
    if S.quotient(m) != x.tset:
        raise SetMismatch(f"operand lives over {x.tset}, expected {S}/{m} = {S.quotient(m)}")
    tgt = {n: 0 for n in S.members}
    for n, c in zip(x.tset.members, x.coeffs):
        tgt[m * n] = c
    return BasisWittInt(S, tuple(tgt[n] for n in S.members))


def restrict_basis(T: TruncationSet, x: BasisWittInt) -> BasisWittInt:
    if not T <= x.tset:
        raise NotSubset(f"{T} is not a subset of {x.tset}")
    return BasisWittInt(T, tuple(x.coeff(n) for n in T.members))


# --------------------------------------------------------------------------
# conversions with coordinate form (over Z)
# --------------------------------------------------------------------------


def to_coords(x: BasisWittInt) -> WittVector:
    """Coordinate form, via the triangular ghost relation w_m = sum n*c_n over n|m."""
    values = []
    for m in x.tset.members:
        acc = 0
        for n, c in zip(x.tset.members, x.coeffs):
            if n > m:
                break
            if m % n == 0:
                acc += n * c
        values.append(acc)
    return from_ghost(GhostVector(x.tset, Z, tuple(values)))


def from_coords(x: WittVector) -> BasisWittInt:
    if x.ring != Z:
        raise SpecMismatch(f"basis form is only defined over Z, got {x.ring}")
    from .witt import ghost

    g = ghost(x)
    coeffs: dict[int, int] = {}
    for m in x.tset.members:
        acc = g.value(m)
        for n in x.tset.members:
            if n < m and m % n == 0:
                acc -= n * coeffs[n]
        q, r = divmod(acc, m)
        if r:
            raise NotDivisible(f"internal error: basis expansion at {m} not integral")
        coeffs[m] = q
    return BasisWittInt(x.tset, tuple(coeffs[n] for n in x.tset.members))


def necklace_coefficient(m: int, n: int) -> int:
    """(1/n) * sum over d|n of mu(d) * m^(n/d)."""
    acc = 0
    for d in range(1, n + 1):
        if n % d == 0:
            acc += mobius(d) * m ** (n // d)
    q, r = divmod(acc, n)
    if r:
        raise NotDivisible(f"internal error: necklace sum for ({m},{n}) not divisible")
    return q


def teich_basis(m: int, S: TruncationSet) -> BasisWittInt:
    """The Teichmuller representative [m] expanded in the V-basis."""
    return BasisWittInt(S, tuple(necklace_coefficient(m, n) for n in S.members))


# --------------------------------------------------------------------------
# formal 1-forms and the divided Frobenius
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=True)
class FormalOneForm:
    """A formal sum of terms a*db over one truncation set.

    No relations are imposed; terms with a = 0 or b = 0 are dropped so
    that syntactic equality is meaningful for the identities tested here.
    """

    tset: TruncationSet
    terms: tuple[tuple[BasisWittInt, BasisWittInt], ...]

    def __post_init__(self):
        for a, b in self.terms:
            if a.tset != self.tset or b.tset != self.tset:
                raise SetMismatch("all terms of a 1-form share its truncation set")

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({a})·d({b})" for a, b in self.terms)


def one_form(S: TruncationSet, terms) -> FormalOneForm:
    kept = tuple(
        (a, b)
        for a, b in terms
        if any(a.coeffs) and any(b.coeffs)
    )
    return FormalOneForm(S, kept)


def divided_frobenius_form(n: int, form: FormalOneForm) -> FormalOneForm:
    """F_n on formal 1-forms, over S/n.

    F_n(a*db) = F_n(a) * sum over e|n of c_e^((n/e)-1) * d(c_e) where c_e
    is the e-th comonad component of b restricted to S/n.
    """
    S = form.tset
    T = S.quotient(n)
    out = []
    for a, b in form.terms:
        fa = from_coords(witt_frobenius(n, to_coords(a)))
        bv = to_coords(b)
        for e in [d for d in range(1, n + 1) if n % d == 0]:
            comp = delta_component(e, bv)
            comp_T = from_coords(witt_restrict(comp, T))
            coef = basis_mul(fa, comp_T ** ((n // e) - 1))
            out.append((coef, comp_T))
    return one_form(T, out)
