"""The explicit de Rham-Witt complex of the integers.

For a finite truncation set S the graded ring is concentrated in degrees
0 and 1:

    degree 0:  product over n in S of  Z      * V_n e([1])
    degree 1:  product over n in S of  Z/nZ   * dV_n e([1])

where e is the identification of W_S(Z) with the degree-0 part.  Every
structure map is determined by its values on generators:

    V_m e * V_n e   = (m,n) V_[m,n] e
    V_m e * dV_n e  = (m,n] dV_[m,n] e
                      + {m,n} sum_{r>=1} 2^(r-1)[m,n] dV_(2^r[m,n]) e
    d(V_n e)        = dV_n e
    F_m dV_n e      = (m,n]/m dV_(n/(m,n)) e
                      + {m,n} sum_{r>=1} (2^(r-1) n/(m,n)) dV_(2^r n/(m,n)) e
    F_m V_n e       = (m,n) V_(n/(m,n)) e        (zero unless [m,n] in S)
    V_m (V_n e)     = V_mn e
    V_m (dV_n e)    = m dV_mn e

Here (m,n) / [m,n] are gcd / lcm, (m,n] is the unique class mod [m,n]
that is 0 mod m and (m,n) mod n, and {m,n} is 1 when both m and n are
even, else 0.  Indices falling outside S are dropped; degree-1
coefficients are reduced mod their index; products of two degree-1
elements vanish (degree 2 is zero).

The 2-torsion class dlog e([-1]) = sum_r 2^(r-1) dV_(2^r) e([1]) is the
source of every dyadic correction term.

DrwComplex bundles the operations behind overridable structure-constant
hooks so that law suites can be run against deliberately broken
variants; the module-level functions delegate to a default instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotSubset, SetMismatch, SpecMismatch
from .truncation import TruncationSet
from .wittint import (
    BasisWittInt,
    basis_add,
    basis_mul,
    basis_neg,
    basis_zero,
    frobenius_basis,
    from_coords,
    restrict_basis,
    teich_basis,
    verschiebung_basis,
)


def lcm(m: int, n: int) -> int:
    return m // gcd(m, n) * n


@dataclass(frozen=True)
class CrtClass:
    """The class (m,n]: 0 mod m and gcd(m,n) mod n, stored in [0, lcm)."""

    m: int
    n: int
    value: int

    def __post_init__(self):
        g = gcd(self.m, self.n)
        if not (0 <= self.value < lcm(self.m, self.n)):
            raise SpecMismatch(f"({self.m},{self.n}] out of range: {self.value}")
        if self.value % self.m != 0 or self.value % self.n != g % self.n:
            raise SpecMismatch(f"{self.value} is not the class ({self.m},{self.n}]")


def crt_bracket(m: int, n: int) -> CrtClass:
    """Solve x = 0 mod m, x = gcd(m,n) mod n inside [0, lcm(m,n))."""
    if m < 1 or n < 1:
        raise SpecMismatch(f"indices must be positive: ({m},{n}]")
    g = gcd(m, n)
    t = pow(m // g, -1, n // g) if n // g > 1 else 0
    return CrtClass(m, n, (m * t) % lcm(m, n))


def curly(m: int, n: int) -> int:
    """1 when both arguments are even, else 0."""
    return 1 if (m % 2 == 0 and n % 2 == 0) else 0


@dataclass(frozen=True, eq=True)
class DrwElement:
    """A graded element: degree-0 basis vector plus degree-1 residues.

    deg1 is aligned with the truncation set; the entry at n lies in
    [0, n) (so the entry at 1 is always 0).
    """

    tset: TruncationSet
    deg0: BasisWittInt
    deg1: tuple[int, ...]

    def __post_init__(self):
        if self.deg0.tset != self.tset or len(self.deg1) != len(self.tset):
            raise SetMismatch("graded parts must share the truncation set")
        for n, c in zip(self.tset.members, self.deg1):
            if not 0 <= c < n:
                raise SpecMismatch(f"degree-1 coefficient at {n} not reduced: {c}")

    def deg1_coeff(self, n: int) -> int:
        return self.deg1[self.tset.index(n)]

    def __add__(self, other):
        return drw_add(self, other)

    def __neg__(self):
        return drw_neg(self)

    def __sub__(self, other):
        return drw_add(self, drw_neg(other))

    def __mul__(self, other):
        return drw_mul(self, other)

    def __str__(self):
        parts = [f"{c}·V{n}η([1])" for n, c in zip(self.tset.members, self.deg0.coeffs) if c]
        parts += [f"{c}·dV{n}η([1])" for n, c in zip(self.tset.members, self.deg1) if c]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "set": list(self.tset.members),
            "deg0": {str(n): c for n, c in zip(self.tset.members, self.deg0.coeffs) if c},
            "deg1": {str(n): c for n, c in zip(self.tset.members, self.deg1) if c},
        }


def drw_from_json(data: dict) -> DrwElement:
    from .truncation import truncation_set

    tset = truncation_set(data["set"])
    deg0 = BasisWittInt(tset, tuple(int(data["deg0"].get(str(n), 0)) for n in tset.members))
    deg1 = tuple(int(data["deg1"].get(str(n), 0)) % n for n in tset.members)
    return DrwElement(tset, deg0, deg1)


def _reduce_deg1(S: TruncationSet, raw: dict[int, int]) -> tuple[int, ...]:
    return tuple(raw.get(n, 0) % n for n in S.members)


def drw_zero(S: TruncationSet) -> DrwElement:
    return DrwElement(S, basis_zero(S), tuple(0 for _ in S))


def drw_one(S: TruncationSet) -> DrwElement:
    from .wittint import basis_one

    return DrwElement(S, basis_one(S), tuple(0 for _ in S))


def drw_eta(x) -> DrwElement:
    """Degree-0 inclusion of W_S(Z), from basis or coordinate form."""
    from .witt import WittVector

    if isinstance(x, WittVector):
        x = from_coords(x)
    if not isinstance(x, BasisWittInt):
        raise SpecMismatch(f"eta expects a Witt vector over Z, got {type(x).__name__}")
    return DrwElement(x.tset, x, tuple(0 for _ in x.tset))


def drw_add(x: DrwElement, y: DrwElement) -> DrwElement:
    if x.tset != y.tset:
        raise SetMismatch(f"truncation sets differ: {x.tset} vs {y.tset}")
    deg1 = tuple((a + b) % n for n, a, b in zip(x.tset.members, x.deg1, y.deg1))
    return DrwElement(x.tset, basis_add(x.deg0, y.deg0), deg1)


def drw_neg(x: DrwElement) -> DrwElement:
    deg1 = tuple((-a) % n for n, a in zip(x.tset.members, x.deg1))
    return DrwElement(x.tset, basis_neg(x.deg0), deg1)


def drw_scalar_mul(k: int, x: DrwElement) -> DrwElement:
    from .wittint import basis_scalar_mul

    deg1 = tuple((k * a) % n for n, a in zip(x.tset.members, x.deg1))
    return DrwElement(x.tset, basis_scalar_mul(k, x.deg0), deg1)


class DrwComplex:
    """Structure maps of the complex, with overridable constants.

    Subclasses used in mutation testing may override _crt_value or
    _curly; everything else routes through these two hooks.
    """

    def _crt_value(self, m: int, n: int) -> int:
        return crt_bracket(m, n).value

    def _curly(self, m: int, n: int) -> int:
        return curly(m, n)

    # -- product -----------------------------------------------------------
    def mul(self, x: DrwElement, y: DrwElement) -> DrwElement:
        if x.tset != y.tset:
            raise SetMismatch(f"truncation sets differ: {x.tset} vs {y.tset}")
        S = x.tset
        deg0 = basis_mul(x.deg0, y.deg0)
        raw: dict[int, int] = {}
        self._mul_deg0_deg1(S, x.deg0, y.deg1, raw)
        self._mul_deg0_deg1(S, y.deg0, x.deg1, raw)
        return DrwElement(S, deg0, _reduce_deg1(S, raw))

    def _mul_deg0_deg1(self, S, a: BasisWittInt, c1: tuple, raw: dict[int, int]):
        memset = set(S.members)
        for m, cm in zip(S.members, a.coeffs):
            if not cm:
                continue
            for n, cn in zip(S.members, c1):
                if not cn:
                    continue
                l = lcm(m, n)
                w = cm * cn
                if l in memset:
                    raw[l] = raw.get(l, 0) + w * self._crt_value(m, n)
                if self._curly(m, n):
                    r = 1
                    while (1 << r) * l in memset:
                        idx = (1 << r) * l
                        raw[idx] = raw.get(idx, 0) + w * (1 << (r - 1)) * l
                        r += 1

    # -- derivation ----------------------------------------------------------
    def d(self, x: DrwElement) -> DrwElement:
        """Send each degree-0 coefficient to its residue in degree 1."""
        S = x.tset
        deg1 = tuple(c % n for n, c in zip(S.members, x.deg0.coeffs))
        return DrwElement(S, basis_zero(S), deg1)

    # -- Frobenius and Verschiebung -------------------------------------------
    def frobenius(self, m: int, x: DrwElement) -> DrwElement:
        S = x.tset
        T = S.quotient(m)
        tset_members = set(T.members)
        deg0 = frobenius_basis(m, x.deg0)
        raw: dict[int, int] = {}
        for n, c in zip(S.members, x.deg1):
            if not c:
                continue
            g = gcd(m, n)
            tgt = n // g
            # the canonical representative of (m,n] is divisible by m
            over_m = self._crt_value(m, n) // m
            if tgt in tset_members:
                raw[tgt] = raw.get(tgt, 0) + c * over_m
            if self._curly(m, n):
                r = 1
                while (1 << r) * tgt in tset_members:
                    idx = (1 << r) * tgt
                    raw[idx] = raw.get(idx, 0) + c * (1 << (r - 1)) * tgt
                    r += 1
        return DrwElement(T, deg0, _reduce_deg1(T, raw))

    def verschiebung(self, m: int, x: DrwElement, S: TruncationSet) -> DrwElement:
        if S.quotient(m) != x.tset:
            raise SetMismatch(f"operand lives over {x.tset}, expected {S}/{m}")
        deg0 = verschiebung_basis(m, x.deg0, S)
        raw = {m * n: m * c for n, c in zip(x.tset.members, x.deg1)}
        return DrwElement(S, deg0, _reduce_deg1(S, raw))

    # -- restriction and units -------------------------------------------------
    def restrict(self, T: TruncationSet, x: DrwElement) -> DrwElement:
        if not T <= x.tset:
            raise NotSubset(f"{T} is not a subset of {x.tset}")
        deg0 = restrict_basis(T, x.deg0)
        deg1 = tuple(x.deg1_coeff(n) for n in T.members)
        return DrwElement(T, deg0, deg1)

    def dlog_minus_one(self, S: TruncationSet) -> DrwElement:
        """The class sum_r 2^(r-1) dV_(2^r) e([1]); zero on odd-only sets."""
        raw = {}
        r = 1
        memset = set(S.members)
        while (1 << r) in memset:
            raw[1 << r] = 1 << (r - 1)
            r += 1
        return DrwElement(S, basis_zero(S), _reduce_deg1(S, raw))

    def eta_teich(self, a: int, S: TruncationSet) -> DrwElement:
        return drw_eta(teich_basis(a, S))


_DEFAULT = DrwComplex()


def drw_mul(x: DrwElement, y: DrwElement) -> DrwElement:
    return _DEFAULT.mul(x, y)


def drw_d(x: DrwElement) -> DrwElement:
    return _DEFAULT.d(x)


def drw_frobenius(m: int, x: DrwElement) -> DrwElement:
    return _DEFAULT.frobenius(m, x)


def drw_verschiebung(m: int, x: DrwElement, S: TruncationSet) -> DrwElement:
    return _DEFAULT.verschiebung(m, x, S)


def drw_restrict(T: TruncationSet, x: DrwElement) -> DrwElement:
    return _DEFAULT.restrict(T, x)


def dlog_minus_one(S: TruncationSet) -> DrwElement:
    return _DEFAULT.dlog_minus_one(S)


def generator_tables(S: TruncationSet) -> dict:
    """Products, F, V and d on all generators, for the CLI table verb."""
    out = {"mul": {}, "frobenius": {}, "verschiebung": {}, "d": {}}
    gens: list[tuple[str, DrwElement]] = []
    for n in S.members:
        gens.append((f"V{n}", drw_eta(_basis_gen(S, n))))
    for n in S.members:
        gens.append((f"dV{n}", drw_d(drw_eta(_basis_gen(S, n)))))
    for name_x, x in gens:
        for name_y, y in gens:
            out["mul"][f"{name_x}*{name_y}"] = str(drw_mul(x, y))
    for m in S.members:
        for name_x, x in gens:
            out["frobenius"][f"F{m}({name_x})"] = str(drw_frobenius(m, x))
    for m in S.members:
        T = S.quotient(m)
        for n in T.members:
            out["verschiebung"][f"V{m}(V{n})"] = str(
                drw_verschiebung(m, drw_eta(_basis_gen(T, n)), S)
            )
            out["verschiebung"][f"V{m}(dV{n})"] = str(
                drw_verschiebung(m, drw_d(drw_eta(_basis_gen(T, n))), S)
            )
    for name_x, x in gens:
        out["d"][f"d({name_x})"] = str(drw_d(x))
    return out


def _basis_gen(S: TruncationSet, n: int) -> BasisWittInt:
    from .wittint import basis_generator

    return basis_generator(S, n)
