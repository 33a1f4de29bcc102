"""Independent brute-force oracles and the shared randomized test family.

Nothing here imports the sieve or the recurrence: membership is decided by
enumerating coefficient vectors directly.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction


def representable(k, generators):
    """Search n_1 a_1 + ... + n_N a_N = k directly, largest generator first."""
    if k == 0:
        return True
    if not generators:
        return False
    *rest, a = generators
    return any(representable(k - n * a, rest) for n in range(k // a, -1, -1))


def naive_members(generators, bound):
    gens = sorted(generators)
    return {k for k in range(bound + 1) if representable(k, gens)}


def naive_members_bfs(generators, bound):
    # cheaper closure for larger bounds: repeated addition from 0
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for a in generators:
                y = x + a
                if y <= bound and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def t_fold_sums(generators, t, bound):
    """Degrees reachable as a sum of exactly t generators (with repetition)."""
    return {
        sum(c) for c in itertools.combinations_with_replacement(generators, t)
        if sum(c) <= bound
    }


def random_generators(rng: random.Random, max_n=5, max_gen=40):
    while True:
        n = rng.randint(1, max_n)
        if n == 1:
            return [1]
        gens = rng.sample(range(1, max_gen + 1), n)
        if math.gcd(*gens) == 1:
            return sorted(gens)


def random_weights(rng: random.Random, n, max_num=10, max_den=10):
    return [Fraction(rng.randint(1, max_num), rng.randint(1, max_den)) for _ in range(n)]
