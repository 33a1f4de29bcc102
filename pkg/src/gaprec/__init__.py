"""Recurrences whose solutions vanish exactly on the gaps of a numerical semigroup."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BetaNotGreater,
    BetaNotInSemigroup,
    EmptyGenerators,
    GapRecError,
    GcdNotOne,
    InvalidQuery,
    LengthMismatch,
    NonPositiveGenerator,
    NonPositiveWeight,
    TruncationTooSmall,
    WitnessNotFound,
)
from .recurrence import (  # noqa: E402
    CharPoly,
    RecurrenceSpec,
    SequenceWindow,
    build_recurrence,
    characteristic_polynomial,
    default_degree,
    pad_order,
    run_recurrence,
    verify_vanishing,
    weight_vector,
    zero_set,
)
from .semigroup import NumericalSemigroup, contains, frobenius, gaps, new_semigroup, reduce_gcd  # noqa: E402
from .series import PowerSeries, expand_G, f1, f_t, sum_f_t  # noqa: E402
from .walk import (  # noqa: E402
    VisitEstimate,
    WalkConfig,
    exact_visit_probabilities,
    normalize_weights,
    simulate,
    step_distribution,
)
from .witness import PairQuery, WitnessCertificate, certify, check_certificate, find_witness  # noqa: E402
