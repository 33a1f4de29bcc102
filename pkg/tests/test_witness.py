import itertools
import math
import random
from dataclasses import replace
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaprec import (
    InvalidQuery,
    PairQuery,
    WitnessCertificate,
    WitnessNotFound,
    certify,
    check_certificate,
    contains,
    find_witness,
    new_semigroup,
)

from oracles import naive_members, random_generators


def brute_force_witness_exists(M, targets):
    """Any generator subset of 1..M with gcd 1, containing M in its span and avoiding targets."""
    bound = max(M, max(targets))
    for r in range(1, M + 1):
        for gens in itertools.combinations(range(1, M + 1), r):
            if math.gcd(*gens) != 1:
                continue
            members = naive_members(gens, bound)
            if M in members and not members & set(targets):
                return True
    return False


def test_three_five_witness():
    cert = find_witness(5, [1, 2, 4, 7])
    assert cert.generators == (3, 5)
    assert not cert.padded
    assert cert.recurrence.order == 5
    assert cert.verified_zero_set == (1, 2, 4, 7)
    assert cert.dimension_lower_bound == 2
    assert cert.frobenius_threshold == 7
    assert certify(cert)


def test_padded_witness():
    cert = find_witness(PairQuery(5, (1,)))
    assert cert.generators == (2, 3, 5)
    assert cert.padded
    assert cert.dimension_lower_bound == 2
    assert cert.recurrence.alphas == (0, -1, -1, 0, -1)
    assert cert.verified_zero_set == (1,)
    assert certify(cert)


def test_not_found_is_exhaustively_justified():
    with pytest.raises(WitnessNotFound) as info:
        find_witness(3, [1, 2])
    assert info.value.candidates == (3,)
    assert not brute_force_witness_exists(3, [1, 2])


@pytest.mark.parametrize("order, targets", [(0, [1]), (5, []), (5, [0, 2])])
def test_invalid_query(order, targets):
    with pytest.raises(InvalidQuery):
        PairQuery(order, tuple(targets))


def test_tampered_certificates_fail():
    cert = find_witness(5, [1, 2, 4, 7])
    bad_targets = replace(cert, target_set=(1, 2, 3))
    assert not certify(bad_targets)
    assert any("[3]" in p for p in check_certificate(bad_targets))
    bad_order = replace(cert, order=4)
    assert not certify(bad_order)
    assert any("order" in p for p in check_certificate(bad_order))
    bad_zeros = replace(cert, verified_zero_set=(1, 2, 4))
    assert not certify(bad_zeros)
    bad_gcd = replace(cert, generators=(3, 6))
    assert not certify(bad_gcd)


def test_json_round_trip():
    cert = find_witness(9, [1, 2, 5], weights=[F(1, 2), F(7, 3)])
    assert cert.generators == (3, 4, 9) and cert.weights == (F(1, 2), F(7, 3), 1)
    again = WitnessCertificate.from_json(cert.to_json())
    assert again == cert
    assert certify(again)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 25), st.sets(st.integers(1, 30), min_size=1, max_size=6))
def test_every_witness_certifies(M, targets):
    try:
        cert = find_witness(M, targets)
    except WitnessNotFound:
        return
    assert certify(cert)
    assert cert.recurrence.order == M
    assert set(targets) <= set(cert.verified_zero_set)
    assert cert.dimension_lower_bound >= 1


@pytest.mark.parametrize("M", range(1, 8))
def test_small_failures_agree_with_brute_force_when_nothing_exists(M):
    # greedy is not complete in general, but whenever brute force finds nothing
    # the greedy scan must not claim success
    for r in (1, 2):
        for targets in itertools.combinations(range(1, M + 3), r):
            exists = brute_force_witness_exists(M, targets)
            try:
                find_witness(M, targets)
                found = True
            except WitnessNotFound:
                found = False
            assert not found or exists


def _family(n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        gens = random_generators(rng, max_gen=20)
        S = new_semigroup(gens)
        if S.gaps:
            out.append(S)
    return out


def test_members_above_largest_generator_always_have_witnesses():
    for S in _family(20, 11):
        top = S.frobenius + 3 * S.largest_generator
        for beta in range(S.largest_generator + 1, top + 1):
            if not contains(S, beta):
                continue
            cert = find_witness(beta, S.gaps)
            assert cert.recurrence.order == beta
            assert cert.verified_zero_set == S.gaps


def test_every_order_above_threshold_has_a_witness():
    for S in _family(20, 12):
        beta0 = next(b for b in range(S.largest_generator, 10**6) if contains(S, b))
        K = find_witness(beta0, S.gaps).frobenius_threshold
        assert K >= S.frobenius
        for beta in range(K + 1, K + 3 * S.largest_generator + 1):
            assert find_witness(beta, S.gaps).frobenius_threshold == K


def test_frobenius_alone_is_not_a_threshold():
    # <2,7>: frobenius 5, yet order 6 admits no witness avoiding {1,3,5}
    S = new_semigroup([2, 7])
    assert S.frobenius == 5
    with pytest.raises(WitnessNotFound):
        find_witness(6, S.gaps)
    assert not brute_force_witness_exists(6, S.gaps)
    assert find_witness(7, S.gaps).frobenius_threshold == 6
