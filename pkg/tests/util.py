"""Shared helpers for the test suite: seeded generators and small
exhaustive enumerations used by both the unit tests and the acceptance
gate."""

import random
from functools import lru_cache
from itertools import product

from univoque.words import BinaryWord, PeriodicSeq, _primitive_root, is_extremal
from univoque.expansions import is_parry_admissible

SEED = 20260810


def random_purely_periodic(rng: random.Random, max_period: int) -> PeriodicSeq:
    q = rng.randint(1, max_period)
    return PeriodicSeq((), tuple(rng.randint(0, 1) for _ in range(q)))


def random_seq(rng: random.Random, max_pre: int, max_period: int) -> PeriodicSeq:
    p = rng.randint(0, max_pre)
    q = rng.randint(1, max_period)
    return PeriodicSeq(tuple(rng.randint(0, 1) for _ in range(p)),
                       tuple(rng.randint(0, 1) for _ in range(q)))


@lru_cache(maxsize=None)
def primitive_words(n: int) -> tuple[tuple[int, ...], ...]:
    """All primitive binary words of length exactly n."""
    return tuple(w for w in product((0, 1), repeat=n)
                 if len(_primitive_root(w)) == n)


@lru_cache(maxsize=None)
def extremal_members(max_period: int) -> tuple[PeriodicSeq, ...]:
    """All purely periodic extremal-set members with primitive period
    at most max_period."""
    out = []
    for q in range(1, max_period + 1):
        for w in primitive_words(q):
            s = PeriodicSeq((), w)
            if is_extremal(s):
                out.append(s)
    return tuple(out)


@lru_cache(maxsize=None)
def admissible_words(max_len: int) -> tuple[BinaryWord, ...]:
    """Finite words w such that w followed by zeros is a valid greedy
    expansion of 1 (every proper shift strictly below the whole)."""
    out = []
    for n in range(1, max_len + 1):
        for w in product((0, 1), repeat=n - 1):
            word = w + (1,)
            if is_parry_admissible(PeriodicSeq(word, (0,))):
                out.append(BinaryWord(word))
    return tuple(out)
