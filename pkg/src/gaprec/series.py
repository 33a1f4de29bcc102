"""Truncated formal power series and the generating function ``1/(1 - F_1)``.

This module deliberately shares no arithmetic with :mod:`gaprec.recurrence`:
``expand_G`` inverts ``1 - F_1(z)`` as a generic power series and
``sum_f_t`` sums the powers ``F_1^t`` directly. Those two results are then
compared against the recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .recurrence import weight_vector
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients of ``z^0 .. z^D``. Everything above ``D`` is discarded."""

    coefficients: tuple[Fraction, ...]

    @classmethod
    def zero(cls, D: int) -> "PowerSeries":
        return cls((Fraction(0),) * (D + 1))

    @classmethod
    def one(cls, D: int) -> "PowerSeries":
        return cls((Fraction(1),) + (Fraction(0),) * D)

    @classmethod
    def from_terms(cls, terms: dict[int, Fraction], D: int) -> "PowerSeries":
        c = [Fraction(0)] * (D + 1)
        for deg, v in terms.items():
            if 0 <= deg <= D:
                c[deg] += v
        return cls(tuple(c))

    @property
    def truncation_degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def __len__(self) -> int:
        return len(self.coefficients)

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coefficients) if c != 0]

    def _check(self, other: "PowerSeries") -> None:
        if len(other) != len(self):
            raise ValueError("power series truncated at different degrees")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        # schoolbook convolution; zero coefficients are skipped on both sides
        self._check(other)
        D = self.truncation_degree
        out = [Fraction(0)] * (D + 1)
        rhs = [(j, b) for j, b in enumerate(other.coefficients) if b]
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in rhs:
                if i + j > D:
                    break
                out[i + j] += a * b
        return PowerSeries(tuple(out))

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse by long division; needs a nonzero constant term."""
        c0 = self.coefficients[0]
        if c0 == 0:
            raise ZeroDivisionError("power series with zero constant term is not invertible")
        D = self.truncation_degree
        nz = [(j, c) for j, c in enumerate(self.coefficients) if j > 0 and c]
        inv0 = 1 / Fraction(c0)
        b = [Fraction(0)] * (D + 1)
        b[0] = inv0
        for k in range(1, D + 1):
            s = Fraction(0)
            for j, c in nz:
                if j > k:
                    break
                if b[k - j]:
                    s += c * b[k - j]
            b[k] = -s * inv0
        return PowerSeries(tuple(b))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PowerSeries):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)


def f1(S: NumericalSemigroup, w: Sequence | None, D: int) -> PowerSeries:
    if D < 0:
        raise ValueError("truncation degree must be non-negative")
    w = weight_vector(S, w)
    return PowerSeries.from_terms(dict(zip(S.generators, w)), D)


def expand_G(S: NumericalSemigroup, w: Sequence | None, D: int) -> PowerSeries:
    """Coefficients of ``1 / (1 - F_1(z))`` through degree ``D``."""
    return (PowerSeries.one(D) - f1(S, w, D)).inverse()


def f_powers(S: NumericalSemigroup, w: Sequence | None, D: int,
             t_max: int | None = None) -> Iterator[PowerSeries]:
    """Yield ``F_0 = 1, F_1, F_2, ...`` truncated at ``D``.

    Stops after ``t_max`` (default ``D // a_1``, past which every power is
    identically zero below degree ``D``).
    """
    base = f1(S, w, D)
    if t_max is None:
        t_max = D // S.multiplicity
    power = PowerSeries.one(D)
    yield power
    for _ in range(t_max):
        power = power * base
        yield power


def f_t(S: NumericalSemigroup, w: Sequence | None, t: int, D: int) -> PowerSeries:
    if t < 0:
        raise ValueError("t must be non-negative")
    for i, p in enumerate(f_powers(S, w, D, t_max=t)):
        if i == t:
            return p
    raise AssertionError("unreachable")


def sum_f_t(S: NumericalSemigroup, w: Sequence | None, D: int) -> PowerSeries:
    total = PowerSeries.zero(D)
    for p in f_powers(S, w, D):
        total = total + p
    return total
