"""Random scenario generators and independent brute-force oracles.

The oracles deliberately avoid the library's set machinery: they walk
plain token lists element by element so they can disagree with the
implementation if it is wrong.
"""

from __future__ import annotations

import random
from fractions import Fraction

from setchoice import Alternative, Environment, Individual, Society, Universe

DENOMS = (1, 2, 3, 4, 5, 8, 10, 100)


# --- generators -------------------------------------------------------------

def token_pool(size: int) -> tuple[str, ...]:
    return tuple(f"g{i:02d}" for i in range(size))


def random_universe(rng: random.Random, max_size=8, min_size=1) -> Universe:
    return Universe(token_pool(rng.randint(min_size, max_size)))


def random_members(rng: random.Random, universe: Universe,
                   min_size=1) -> tuple[str, ...]:
    k = rng.randint(min_size, len(universe))
    return tuple(rng.sample(universe.objectives, k))


def random_environment(rng: random.Random, universe: Universe,
                       max_alternatives=5) -> Environment:
    count = rng.randint(1, max_alternatives)
    return Environment(tuple(
        Alternative(f"alt{i}", universe.subset(random_members(rng, universe)))
        for i in range(count)))


def random_crisp_individual(rng, universe, ind_id) -> Individual:
    return Individual.crisp(ind_id, universe, random_members(rng, universe))


def random_fuzzy_individual(rng, universe, ind_id) -> Individual:
    while True:
        mu = {}
        for token in universe.objectives:
            if rng.random() < 0.7:
                den = rng.choice(DENOMS)
                mu[token] = Fraction(rng.randint(0, den), den)
        if any(v > 0 for v in mu.values()):
            return Individual(ind_id, universe, mu)


def random_society(rng, universe, max_individuals=5, crisp=False) -> Society:
    count = rng.randint(1, max_individuals)
    individuals = []
    for i in range(count):
        if crisp or rng.random() < 0.5:
            individuals.append(random_crisp_individual(rng, universe, f"ind{i}"))
        else:
            individuals.append(random_fuzzy_individual(rng, universe, f"ind{i}"))
    return Society(tuple(individuals))


def random_scenario_parts(rng, max_universe=8, max_alternatives=5,
                          max_individuals=5, crisp=False):
    universe = random_universe(rng, max_universe)
    environment = random_environment(rng, universe, max_alternatives)
    society = random_society(rng, universe, max_individuals, crisp=crisp)
    return universe, environment, society


# --- oracles ----------------------------------------------------------------

def oracle_union(token_lists) -> list[str]:
    out: list[str] = []
    for tokens in token_lists:
        for t in tokens:
            if t not in out:
                out.append(t)
    return out


def oracle_intersection(xs, ys) -> list[str]:
    return [t for t in xs if t in ys]


def oracle_difference(xs, ys) -> list[str]:
    return [t for t in xs if t not in ys]


def oracle_cardinal(offer_tokens, required_tokens) -> int:
    hits = 0
    for t in offer_tokens:
        if t in required_tokens:
            hits += 1
    return hits


def oracle_normalized(offer_tokens, required_tokens) -> Fraction:
    return Fraction(oracle_cardinal(offer_tokens, required_tokens),
                    len(required_tokens))


def oracle_fuzzy(offer_tokens, weights, universe_tokens) -> Fraction:
    covered = Fraction(0)
    total = Fraction(0)
    for t in universe_tokens:
        w = weights.get(t, Fraction(0))
        total += w
        if t in offer_tokens:
            covered += w
    return covered / total


def oracle_mean(values) -> Fraction:
    total = Fraction(0)
    for v in values:
        total += v
    return total / len(values)


def oracle_ranking(ids, values) -> list[list[str]]:
    """Comparison-sort grouping: decreasing value, ids sorted inside groups."""
    pairs = sorted(zip(ids, values), key=lambda p: (-p[1], p[0]))
    groups: list[list[str]] = []
    last = None
    for alt_id, value in pairs:
        if groups and value == last:
            groups[-1].append(alt_id)
        else:
            groups.append([alt_id])
            last = value
    return [sorted(g) for g in groups]
