"""Constructive witnesses for pairs ``(M; I)``.

A witness is a semigroup ``S`` whose gap set contains ``I``, with ``M`` in
``S`` and ``M`` at least the largest generator. Appending ``M`` as a
generator when needed, the recurrence of ``S`` has order exactly ``M`` and its
solution vanishes on every point of ``I``.

The search is a greedy scan over ``n = 1..M``: ``n`` joins the candidate
generators when it is not already generated and the enlarged semigroup still
avoids ``I``. This yields the largest semigroup avoiding ``I`` that is
generated inside ``[1, M]``, in its minimal generating set. Failure of the
scan is *not* a proof that no recurrence exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .errors import InvalidQuery, WitnessNotFound
from .rational import as_rational, format_rationals
from .recurrence import (
    RecurrenceSpec,
    build_recurrence,
    pad_order,
    verify_vanishing,
    weight_vector,
)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class PairQuery:
    order: int
    target_set: tuple[int, ...]

    def __post_init__(self) -> None:
        if isinstance(self.order, bool) or not isinstance(self.order, int) or self.order < 1:
            raise InvalidQuery(f"order must be a positive integer, got {self.order!r}")
        targets = tuple(sorted(set(self.target_set)))
        if not targets:
            raise InvalidQuery("target set must be nonempty")
        if targets[0] < 1:
            raise InvalidQuery(f"target set entries must be positive, got {targets[0]}")
        object.__setattr__(self, "target_set", targets)


@dataclass(frozen=True)
class WitnessCertificate:
    order: int
    target_set: tuple[int, ...]
    generators: tuple[int, ...]
    weights: tuple[Fraction, ...]
    recurrence: RecurrenceSpec
    verified_zero_set: tuple[int, ...]
    dimension_lower_bound: int
    frobenius_threshold: int
    padded: bool

    def to_json(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "target_set": list(self.target_set),
            "generators": list(self.generators),
            "weights": format_rationals(self.weights),
            "padded": self.padded,
            "alphas": format_rationals(self.recurrence.alphas),
            "verified_zero_set": list(self.verified_zero_set),
            "dimension_lower_bound": self.dimension_lower_bound,
            "frobenius_threshold": self.frobenius_threshold,
        }

    @classmethod
    def from_json(cls, doc: dict[str, Any]) -> "WitnessCertificate":
        alphas = tuple(as_rational(a) for a in doc["alphas"])
        return cls(
            order=int(doc["order"]),
            target_set=tuple(int(i) for i in doc["target_set"]),
            generators=tuple(int(a) for a in doc["generators"]),
            weights=tuple(as_rational(x) for x in doc["weights"]),
            recurrence=RecurrenceSpec(len(alphas), alphas),
            verified_zero_set=tuple(int(k) for k in doc["verified_zero_set"]),
            dimension_lower_bound=int(doc["dimension_lower_bound"]),
            frobenius_threshold=int(doc["frobenius_threshold"]),
            padded=bool(doc.get("padded", False)),
        )


def _with_generator(member: list[bool], n: int) -> list[bool]:
    out = list(member)
    for k in range(n, len(out)):
        if not out[k] and out[k - n]:
            out[k] = True
    return out


def _greedy_generators(M: int, targets: tuple[int, ...]) -> list[int]:
    member = [True] + [False] * max(M, targets[-1])
    blocked = set(targets)
    chosen: list[int] = []
    for n in range(1, M + 1):
        if n in blocked or member[n]:
            continue
        trial = _with_generator(member, n)
        if any(trial[i] for i in targets):
            continue
        chosen.append(n)
        member = trial
    return chosen


def find_witness(query: PairQuery | int, target_set: Iterable[int] | None = None,
                 weights: Sequence | None = None) -> WitnessCertificate:
    """Search for a semigroup witnessing an order-``M`` recurrence vanishing on ``I``.

    Raises :class:`WitnessNotFound` when the greedy scan fails.
    """
    if not isinstance(query, PairQuery):
        query = PairQuery(query, tuple(target_set or ()))
    M, targets = query.order, query.target_set

    chosen = _greedy_generators(M, targets)
    if not chosen:
        raise WitnessNotFound(M, targets, "every integer in 1..M is blocked")
    d = math.gcd(*chosen)
    if d != 1:
        raise WitnessNotFound(
            M, targets, f"largest semigroup avoiding the target set has gcd {d}",
            tuple(chosen),
        )
    S = NumericalSemigroup.from_generators(chosen)
    if M not in S:
        raise WitnessNotFound(M, targets, f"{M} is a gap of {S}", S.generators)

    w = weight_vector(S, weights)
    n_generators = len(S.generators)
    # every order above K is a member of S no smaller than its largest generator
    K = max(S.frobenius, S.largest_generator - 1)
    padded = M != S.largest_generator
    if padded:
        S, w = pad_order(S, w, M, Fraction(1))
    rec = build_recurrence(S, w)
    report = verify_vanishing(S, w)
    if not report.verdict:
        raise AssertionError(f"recurrence zeros disagree with gaps for {S}")
    return WitnessCertificate(
        order=M,
        target_set=targets,
        generators=S.generators,
        weights=w,
        recurrence=rec,
        verified_zero_set=report.zero_set,
        dimension_lower_bound=n_generators,
        frobenius_threshold=K,
        padded=padded,
    )


def check_certificate(cert: WitnessCertificate) -> list[str]:
    """Re-derive everything in ``cert`` from scratch; return the failed checks."""
    problems: list[str] = []
    try:
        S = NumericalSemigroup.from_generators(cert.generators)
        w = weight_vector(S, cert.weights)
    except ValueError as exc:
        return [f"invalid generators or weights: {exc}"]
    if tuple(S.generators) != tuple(cert.generators):
        problems.append("generators are not strictly increasing")
    rec = build_recurrence(S, w)
    if rec != cert.recurrence:
        problems.append("recurrence coefficients do not match generators and weights")
    if cert.recurrence.order != cert.order:
        problems.append(
            f"recurrence order {cert.recurrence.order} differs from requested order {cert.order}"
        )
    if cert.recurrence.alphas[-1] == 0:
        problems.append("leading coefficient vanishes")
    report = verify_vanishing(S, w)
    if not report.verdict:
        problems.append("recurrence zero set differs from the gap set")
    if report.zero_set != tuple(cert.verified_zero_set):
        problems.append("recorded zero set does not match recomputation")
    missing = sorted(set(cert.target_set) - set(report.zero_set))
    if missing:
        problems.append(f"target points {missing} are not zeros of the solution")
    if not cert.target_set:
        problems.append("target set is empty")
    return problems


def certify(cert: WitnessCertificate) -> bool:
    return not check_certificate(cert)
