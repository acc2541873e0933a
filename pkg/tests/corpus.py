"""Seeded directive corpus shared by the property and acceptance tests."""

import random
from itertools import product

from rotederiv.morphisms import DirectiveSpec

SEED = 20240517


def random_directives(count=20, seed=SEED, max_period=6, max_preperiod=3):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        period = "".join(rng.choice("bB") for _ in range(rng.randint(2, max_period)))
        if set(period) != {"b", "B"}:
            continue
        pre = "".join(rng.choice("bB") for _ in range(rng.randint(0, max_preperiod)))
        out.append(DirectiveSpec(pre, period))
    return out


FIXED = [
    DirectiveSpec.parse(t)
    for t in ("|bB", "|bBb", "|BbbB", "b|bB", "|bBBBB", "bB|bbbbB", "|bbBBb", "BB|Bb", "|bBbBB", "B|bbB")
]


def periods(max_length):
    """All words over {b, B} of length <= max_length containing both letters."""
    return [
        "".join(w)
        for n in range(2, max_length + 1)
        for w in product("bB", repeat=n)
        if set(w) == {"b", "B"}
    ]
