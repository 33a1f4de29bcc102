"""The recurrence attached to a semigroup and a positive weight vector.

For ``S = <a_1, ..., a_N>`` and weights ``w_i > 0`` the sequence

    g_0 = 1,   g_k = w_1 g_{k-a_1} + ... + w_N g_{k-a_N}   (k > 0)

with every negative index read as 0, vanishes exactly on the gaps of ``S``.
In the coordinates ``g_k + alpha_1 g_{k-1} + ... + alpha_M g_{k-M} = 0`` this
is the order ``M = a_N`` recurrence with ``alpha_{a_i} = -w_i`` and zeros
elsewhere.

All arithmetic is exact; no floating point is used anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    BetaNotGreater,
    BetaNotInSemigroup,
    LengthMismatch,
    NonPositiveWeight,
    TruncationTooSmall,
)
from .rational import as_rational
from .semigroup import NumericalSemigroup

WeightVector = tuple[Fraction, ...]


def weight_vector(S: NumericalSemigroup, weights: Sequence | None = None) -> WeightVector:
    """Validate ``weights`` against ``S`` (all-ones when omitted)."""
    if weights is None:
        return (Fraction(1),) * len(S.generators)
    w = tuple(as_rational(x) for x in weights)
    if len(w) != len(S.generators):
        raise LengthMismatch(len(w), len(S.generators))
    for x in w:
        if x <= 0:
            raise NonPositiveWeight(x)
    return w


def default_degree(S: NumericalSemigroup) -> int:
    """Frobenius number plus ``2 a_N``; ``2 a_N`` when there are no gaps."""
    base = S.frobenius if S.frobenius is not None else 0
    return base + 2 * S.largest_generator


@dataclass(frozen=True)
class RecurrenceSpec:
    """``g_k + alphas[0] g_{k-1} + ... + alphas[M-1] g_{k-M} = 0``."""

    order: int
    alphas: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be positive")
        if len(self.alphas) != self.order:
            raise ValueError(
                f"expected {self.order} coefficients, got {len(self.alphas)}"
            )
        if self.alphas[-1] == 0:
            raise ValueError("leading lag coefficient alpha_M must be nonzero")

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        """Sparse form: ``(lag, alpha_lag)`` for every nonzero coefficient."""
        return tuple((j, a) for j, a in enumerate(self.alphas, start=1) if a != 0)

    def alpha(self, j: int) -> Fraction:
        return self.alphas[j - 1]


class SequenceWindow:
    """``g_0 .. g_D``; indices below zero are implicitly 0.

    Windows produced by :func:`run_recurrence` keep the integers
    ``g_k * base**k`` and only build ``Fraction`` objects when ``values`` is
    first read.
    """

    __slots__ = ("_values", "_scaled", "_base")

    def __init__(self, values: Sequence) -> None:
        self._values: tuple[Fraction, ...] | None = tuple(as_rational(v) for v in values)
        self._scaled: tuple[int, ...] | None = None
        self._base = 1

    @classmethod
    def from_scaled(cls, scaled: Sequence[int], base: int) -> "SequenceWindow":
        obj = cls.__new__(cls)
        obj._values = None
        obj._scaled = tuple(scaled)
        obj._base = base
        return obj

    @property
    def values(self) -> tuple[Fraction, ...]:
        if self._values is None:
            out = []
            scale = 1
            for h in self._scaled:
                out.append(Fraction(h, scale) if h else Fraction(0))
                scale *= self._base
            self._values = tuple(out)
        return self._values

    @property
    def truncation_degree(self) -> int:
        return len(self) - 1

    def is_zero(self, k: int) -> bool:
        if self._scaled is not None:
            return self._scaled[k] == 0
        return self._values[k] == 0

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        return self.values[k]

    def __len__(self) -> int:
        data = self._scaled if self._scaled is not None else self._values
        return len(data)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SequenceWindow):
            return self.values == other.values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"SequenceWindow({list(map(str, self.values))})"


@dataclass(frozen=True)
class CharPoly:
    """Monic ``y^M + alpha_1 y^(M-1) + ... + alpha_M``, highest degree first."""

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, y) -> Fraction:
        acc = Fraction(0)
        y = as_rational(y)
        for c in self.coefficients:
            acc = acc * y + c
        return acc

    def __str__(self) -> str:
        parts: list[str] = []
        M = self.degree
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            p = M - i
            mono = "" if p == 0 else ("y" if p == 1 else f"y^{p}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts) or "0"


def build_recurrence(S: NumericalSemigroup, w: Sequence | None = None) -> RecurrenceSpec:
    w = weight_vector(S, w)
    alphas = [Fraction(0)] * S.largest_generator
    for a, wi in zip(S.generators, w):
        alphas[a - 1] = -wi
    return RecurrenceSpec(S.largest_generator, tuple(alphas))


def pad_order(
    S: NumericalSemigroup, w: Sequence | None, beta: int, w_beta
) -> tuple[NumericalSemigroup, WeightVector]:
    """Append ``beta`` (a member of ``S`` above ``a_N``) as an extra generator.

    The element set of the semigroup is unchanged, but the recurrence built
    from the result has order ``beta``.
    """
    w = weight_vector(S, w)
    w_beta = as_rational(w_beta)
    if beta <= S.largest_generator:
        raise BetaNotGreater(beta, S.largest_generator)
    if beta not in S:
        raise BetaNotInSemigroup(beta)
    if w_beta <= 0:
        raise NonPositiveWeight(w_beta)
    return S.with_generator(beta), w + (w_beta,)


def run_recurrence(S: NumericalSemigroup, w: Sequence | None, D: int) -> SequenceWindow:
    """Solution ``g_0 .. g_D`` of the semigroup recurrence.

    The inner loop runs on integers: with ``d`` the lcm of the weight
    denominators, ``h_k = g_k d^k`` obeys
    ``h_k = sum_i (w_i d) d^(a_i - 1) h_(k - a_i)`` with integer coefficients.
    """
    if D < 0:
        raise ValueError("truncation degree must be non-negative")
    w = weight_vector(S, w)
    d = math.lcm(*(x.denominator for x in w))
    terms = [
        (a, x.numerator * (d // x.denominator) * d ** (a - 1))
        for a, x in zip(S.generators, w)
    ]
    h = [0] * (D + 1)
    h[0] = 1
    for k in range(1, D + 1):
        acc = 0
        for a, c in terms:
            if a > k:
                break
            acc += c * h[k - a]
        h[k] = acc
    return SequenceWindow.from_scaled(h, d)


def zero_set(seq: SequenceWindow) -> list[int]:
    return [k for k in range(len(seq)) if seq.is_zero(k)]


@dataclass(frozen=True)
class VanishingReport:
    generators: tuple[int, ...]
    weights: WeightVector
    degree: int
    zero_set: tuple[int, ...]
    gaps: tuple[int, ...]

    @property
    def verdict(self) -> bool:
        return self.zero_set == self.gaps


def verify_vanishing(
    S: NumericalSemigroup, w: Sequence | None = None, D: int | None = None
) -> VanishingReport:
    """Compare the zeros of the recurrence solution with the sieve's gap set."""
    w = weight_vector(S, w)
    if D is None:
        D = default_degree(S)
    if S.frobenius is not None and D < S.frobenius:
        raise TruncationTooSmall(D, S.frobenius)
    seq = run_recurrence(S, w, D)
    return VanishingReport(
        generators=S.generators,
        weights=w,
        degree=D,
        zero_set=tuple(zero_set(seq)),
        gaps=S.gaps_upto(D),
    )


def characteristic_polynomial(rec: RecurrenceSpec) -> CharPoly:
    return CharPoly((Fraction(1),) + tuple(rec.alphas))
