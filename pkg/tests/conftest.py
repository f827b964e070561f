"""Shared corpus builders for property and acceptance tests."""

from stableset.oracle import random_problem

DENSITIES = (0.2, 0.5, 0.8)


def corpus_digraphs(count=1002, max_n=10):
    """Deterministic mixed-density random digraphs, n cycling 1..max_n."""
    out = []
    for seed in range(count):
        n = 1 + seed % max_n
        density = DENSITIES[seed % len(DENSITIES)]
        out.append(random_problem(n, density, seed))
    return out


def corpus_tournaments(count=201, max_n=9):
    out = []
    for seed in range(count):
        n = 1 + seed % max_n
        out.append(random_problem(n, 1.0, seed, tournament=True))
    return out
