"""Exception hierarchy.

Every validation failure raised by the library derives from
:class:`GapRecError`, which is itself a ``ValueError`` so callers that only
care about "bad input" can catch the builtin.
"""

from __future__ import annotations


class GapRecError(ValueError):
    pass


class EmptyGenerators(GapRecError):
    def __init__(self) -> None:
        super().__init__("generator list is empty")


class NonPositiveGenerator(GapRecError):
    def __init__(self, value: int) -> None:
        self.value = value
        super().__init__(f"generators must be positive integers, got {value!r}")


class GcdNotOne(GapRecError):
    """The generators share a common factor, so the gap set would be infinite."""

    def __init__(self, gcd: int, generators: tuple[int, ...]) -> None:
        self.gcd = gcd
        self.generators = generators
        joined = ",".join(map(str, generators))
        super().__init__(f"gcd({joined})={gcd}; try --reduce")


class LengthMismatch(GapRecError):
    def __init__(self, n_weights: int, n_generators: int) -> None:
        self.n_weights = n_weights
        self.n_generators = n_generators
        super().__init__(
            f"got {n_weights} weights for {n_generators} generators"
        )


class NonPositiveWeight(GapRecError):
    def __init__(self, value) -> None:
        self.value = value
        super().__init__(f"weights must be strictly positive, got {value}")


class BetaNotGreater(GapRecError):
    def __init__(self, beta: int, largest: int) -> None:
        self.beta = beta
        self.largest = largest
        super().__init__(
            f"padding element {beta} must exceed the largest generator {largest}"
        )


class BetaNotInSemigroup(GapRecError):
    def __init__(self, beta: int) -> None:
        self.beta = beta
        super().__init__(f"padding element {beta} is a gap of the semigroup")


class TruncationTooSmall(GapRecError):
    def __init__(self, degree: int, frobenius: int) -> None:
        self.degree = degree
        self.frobenius = frobenius
        super().__init__(
            f"truncation degree {degree} is below the Frobenius number {frobenius}"
        )


class InvalidQuery(GapRecError):
    pass


class WitnessNotFound(Exception):
    """The greedy witness search failed.

    This is a search failure only. It says nothing about whether a suitable
    recurrence exists.
    """

    def __init__(self, order: int, target_set: tuple[int, ...], reason: str,
                 candidates: tuple[int, ...] = ()) -> None:
        self.order = order
        self.target_set = target_set
        self.reason = reason
        self.candidates = candidates
        super().__init__(f"no witness found for order {order}: {reason}")
