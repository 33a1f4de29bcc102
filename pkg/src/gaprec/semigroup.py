"""Finitely generated numerical semigroups: membership, gaps, Frobenius number.

Membership is decided by the coin-problem sieve

    member[0] = True,  member[k] = any(member[k - a] for a in generators)

scanned upward until ``a_1`` consecutive members have been seen. From that
point on every integer is a member (add ``a_1`` repeatedly), so the table
certifies itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import EmptyGenerators, GcdNotOne, NonPositiveGenerator


def _validate(raw: Iterable[int]) -> tuple[int, ...]:
    values = list(raw)
    if not values:
        raise EmptyGenerators()
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise NonPositiveGenerator(v)
        if v < 1:
            raise NonPositiveGenerator(v)
    return tuple(sorted(set(values)))


def reduce_gcd(raw_generators: Iterable[int]) -> list[int]:
    """Divide every generator by their common gcd.

    >>> reduce_gcd([4, 6])
    [2, 3]
    >>> reduce_gcd([10])
    [1]
    """
    values = list(raw_generators)
    _validate(values)
    d = math.gcd(*values)
    return [v // d for v in values]


def reachable(generators: Sequence[int], bound: int) -> list[bool]:
    """Sieve table ``0..bound`` for the monoid spanned by ``generators``.

    No gcd condition is imposed, so this also serves the witness search where
    candidate generator sets are not yet coprime.
    """
    member = [False] * (bound + 1)
    if bound >= 0:
        member[0] = True
    for k in range(1, bound + 1):
        for a in generators:
            if a > k:
                break
            if member[k - a]:
                member[k] = True
                break
    return member


def _sieve(generators: tuple[int, ...]) -> list[bool]:
    a1, aN = generators[0], generators[-1]
    cap = a1 * aN + aN
    member = [True]
    run = 1
    k = 0
    while run < a1 and k < cap:
        k += 1
        hit = False
        for a in generators:
            if a > k:
                break
            if member[k - a]:
                hit = True
                break
        member.append(hit)
        run = run + 1 if hit else 0
    return member


@dataclass(frozen=True)
class NumericalSemigroup:
    """``<a_1, ..., a_N>`` with ``a_1 < ... < a_N`` and gcd 1.

    Redundant generators are kept; only exact duplicates are dropped.
    ``membership`` covers ``0..sieve_bound``; everything above is a member.
    """

    generators: tuple[int, ...]
    membership: tuple[bool, ...] = field(repr=False)
    frobenius: int | None
    gaps: tuple[int, ...]

    @classmethod
    def from_generators(cls, raw_generators: Iterable[int]) -> "NumericalSemigroup":
        gens = _validate(raw_generators)
        d = math.gcd(*gens)
        if d != 1:
            raise GcdNotOne(d, gens)
        member = _sieve(gens)
        gaps = tuple(k for k, m in enumerate(member) if not m)
        frob = gaps[-1] if gaps else None
        return cls(gens, tuple(member), frob, gaps)

    @property
    def sieve_bound(self) -> int:
        return len(self.membership) - 1

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def largest_generator(self) -> int:
        return self.generators[-1]

    def __contains__(self, k: int) -> bool:
        if k < 0:
            return False
        if k <= self.sieve_bound:
            return self.membership[k]
        return True

    def contains(self, k: int) -> bool:
        return k in self

    def gaps_upto(self, bound: int) -> tuple[int, ...]:
        return tuple(g for g in self.gaps if g <= bound)

    def with_generator(self, beta: int) -> "NumericalSemigroup":
        return NumericalSemigroup.from_generators(self.generators + (beta,))

    def __str__(self) -> str:
        return "<" + ", ".join(map(str, self.generators)) + ">"


def new_semigroup(raw_generators: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(raw_generators)


def contains(S: NumericalSemigroup, k: int) -> bool:
    return k in S


def gaps(S: NumericalSemigroup) -> tuple[int, ...]:
    return S.gaps


def frobenius(S: NumericalSemigroup) -> int | None:
    return S.frobenius
