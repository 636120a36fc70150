"""Finite truncation sets: divisor-closed sets of positive integers.

A truncation set S indexes every Witt construction in this package.  The
quotient S/n = {d : nd in S} is again a truncation set, as are the three
standard families: all divisors of N, the initial segment {1, ..., n},
and the p-typical set {1, p, ..., p^(n-1)}.

Only finite sets are representable.  The empty set is allowed and indexes
the zero ring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidTruncationSet, NotPrime


@dataclass(frozen=True)
class TruncationSet:
    """A divisor-closed finite set of positive integers, sorted ascending."""

    members: tuple[int, ...]

    def __post_init__(self):
        mem = self.members
        if list(mem) != sorted(set(mem)):
            raise InvalidTruncationSet(f"members must be strictly increasing: {mem}")
        for n in mem:
            if n < 1:
                raise InvalidTruncationSet(f"members must be positive: {n}")
        memset = set(mem)
        for n in mem:
            for d in range(1, int(n**0.5) + 1):
                if n % d == 0 and (d not in memset or n // d not in memset):
                    raise InvalidTruncationSet(f"{n} in set but a divisor of it is missing")

    def __contains__(self, n: int) -> bool:
        return n in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: TruncationSet) -> bool:
        return set(self.members) <= set(other.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(n) for n in self.members) + "}"

    def quotient(self, n: int) -> TruncationSet:
        """The set S/n = {d : n*d in S}."""
        if n < 1:
            raise InvalidTruncationSet(f"quotient index must be positive: {n}")
        memset = set(self.members)
        return TruncationSet(tuple(d for d in range(1, (self.members[-1] // n) + 1) if n * d in memset)) if self.members else EMPTY

    def index(self, n: int) -> int:
        """Position of n in the member list."""
        return self.members.index(n)


EMPTY = TruncationSet(())


def truncation_set(members) -> TruncationSet:
    """Validating constructor from any iterable of integers."""
    return TruncationSet(tuple(sorted(set(members))))


def divisors_of(N: int) -> TruncationSet:
    """All divisors of N."""
    if N < 1:
        raise InvalidTruncationSet(f"N must be positive: {N}")
    divs = [d for d in range(1, N + 1) if N % d == 0]
    return TruncationSet(tuple(divs))


def initial_segment(n: int) -> TruncationSet:
    """The set {1, 2, ..., n}; {} for n = 0."""
    if n < 0:
        raise InvalidTruncationSet(f"segment length must be >= 0: {n}")
    return TruncationSet(tuple(range(1, n + 1)))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def p_typical(p: int, n: int) -> TruncationSet:
    """The set {1, p, ..., p^(n-1)} of p-powers below p^n."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 0:
        raise InvalidTruncationSet(f"length must be >= 0: {n}")
    return TruncationSet(tuple(p**i for i in range(n)))


def quotient_set(S: TruncationSet, n: int) -> TruncationSet:
    return S.quotient(n)


_SET_RE = re.compile(r"^\{([\d,\s]*)\}$")
_PTYP_RE = re.compile(r"^ptyp\((\d+),(\d+)\)$")


def parse_truncation_set(text: str) -> TruncationSet:
    """Parse "div24", "seg16", "ptyp(2,4)", or an explicit "{1,2,3,6}"."""
    text = text.strip()
    if text.startswith("div"):
        return divisors_of(int(text[3:]))
    if text.startswith("seg"):
        return initial_segment(int(text[3:]))
    m = _PTYP_RE.match(text)
    if m:
        return p_typical(int(m.group(1)), int(m.group(2)))
    m = _SET_RE.match(text)
    if m:
        body = m.group(1).strip()
        if not body:
            return EMPTY
        return truncation_set(int(part) for part in body.split(","))
    raise InvalidTruncationSet(f"cannot parse truncation set: {text!r}")
