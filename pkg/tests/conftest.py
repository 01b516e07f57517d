"""Shared corpus helpers for the test suite."""
import random

from gainspectra.gains import GainGraph, random_gains
from gainspectra.graphs import SimpleGraph, random_connected_graph, random_graph


def seeded_gain_graphs(count: int, n_max: int, seed: int = 0, connected: bool = False):
    """Deterministic list of random gain graphs, n between 1 and n_max."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randrange(1, n_max + 1)
        if connected:
            g = random_connected_graph(rng, n, rng.randrange(0, max(1, n)))
        else:
            g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6]))
        out.append(random_gains(g, rng.randrange(2**31)))
    return out


def seeded_graphs(count: int, n_max: int, seed: int = 0):
    rng = random.Random(seed)
    return [random_graph(rng, rng.randrange(1, n_max + 1), rng.choice([0.2, 0.4, 0.6, 0.8]))
            for _ in range(count)]
