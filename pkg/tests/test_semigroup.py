import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaprec import (
    EmptyGenerators,
    GcdNotOne,
    NonPositiveGenerator,
    contains,
    frobenius,
    gaps,
    new_semigroup,
    reduce_gcd,
)
from gaprec.semigroup import reachable

from oracles import naive_members


def test_three_five():
    S = new_semigroup([3, 5])
    assert gaps(S) == (1, 2, 4, 7)
    assert frobenius(S) == 7 == 3 * 5 - 3 - 5


def test_trivial_semigroup():
    S = new_semigroup([1])
    assert gaps(S) == ()
    assert frobenius(S) is None


def test_two_three():
    S = new_semigroup([2, 3])
    assert gaps(S) == (1,)
    assert frobenius(S) == 1


def test_gcd_error_carries_value():
    with pytest.raises(GcdNotOne) as info:
        new_semigroup([4, 6])
    assert info.value.gcd == 2
    assert "try --reduce" in str(info.value)


@pytest.mark.parametrize("raw", [[], [0, 3], [-2, 3]])
def test_invalid_generators(raw):
    exc = EmptyGenerators if not raw else NonPositiveGenerator
    with pytest.raises(exc):
        new_semigroup(raw)


def test_sorting_and_dedup_keep_redundant():
    S = new_semigroup([5, 3, 5, 6, 3])
    assert S.generators == (3, 5, 6)
    assert S.gaps == (1, 2, 4, 7)


@pytest.mark.parametrize(
    "raw, expected", [([4, 6], [2, 3]), ([3, 5], [3, 5]), ([10], [1])]
)
def test_reduce_gcd(raw, expected):
    assert reduce_gcd(raw) == expected


def test_reduce_gcd_rejects_bad_input():
    with pytest.raises(EmptyGenerators):
        reduce_gcd([])
    with pytest.raises(NonPositiveGenerator):
        reduce_gcd([0])


@pytest.mark.parametrize("k, expected", [(8, True), (7, False), (0, True), (10**9, True)])
def test_contains(k, expected):
    assert contains(new_semigroup([3, 5]), k) is expected


def test_contains_beyond_sieve_bound():
    S = new_semigroup([7, 11, 13])
    assert S.sieve_bound < 500
    assert all(contains(S, k) for k in range(S.frobenius + 1, 500))


generator_lists = st.lists(st.integers(1, 20), min_size=1, max_size=4).filter(
    lambda xs: math.gcd(*xs) == 1
)


@settings(max_examples=80, deadline=None)
@given(generator_lists)
def test_sieve_matches_naive_enumeration(raw):
    S = new_semigroup(raw)
    bound = 200
    members = naive_members(S.generators, bound)
    for k in range(bound + 1):
        assert contains(S, k) == (k in members)


@settings(max_examples=80, deadline=None)
@given(generator_lists)
def test_sieve_bound_self_certifies(raw):
    S = new_semigroup(raw)
    a1 = S.generators[0]
    tail = S.membership[-a1:]
    assert len(tail) == a1 and all(tail)
    if S.frobenius is not None:
        assert S.frobenius < a1 * S.generators[-1]


@settings(max_examples=80, deadline=None)
@given(generator_lists)
def test_gap_set_agrees_with_membership(raw):
    S = new_semigroup(raw)
    top = (S.frobenius or 0) + S.generators[-1]
    assert list(S.gaps) == [k for k in range(1, top + 1) if not contains(S, k)]
    if S.gaps:
        assert max(S.gaps) == S.frobenius


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 30), st.integers(2, 30))
def test_sylvester(a, b):
    if math.gcd(a, b) != 1 or a == b:
        return
    assert frobenius(new_semigroup([a, b])) == a * b - a - b


@settings(max_examples=60, deadline=None)
@given(generator_lists, st.integers(0, 60))
def test_adding_a_member_keeps_gaps(raw, offset):
    S = new_semigroup(raw)
    beta = next(k for k in range(offset + 1, offset + 200) if contains(S, k))
    assert new_semigroup(list(S.generators) + [beta]).gaps == S.gaps


def test_reachable_without_gcd_condition():
    assert [k for k, m in enumerate(reachable([4, 6], 12)) if m] == [0, 4, 6, 8, 10, 12]
