"""Shared deterministic graph corpora for the test suite."""

import random

import pytest

from absspectra import Graph, generate, is_connected, is_regular


def random_graph(rng, n, p=0.5):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(n, pairs)


def random_connected_graph(rng, n):
    while True:
        g = random_graph(rng, n, p=rng.uniform(0.3, 0.8))
        if is_connected(g):
            return g


def random_connected_regular_graph(rng, n, r):
    """Pairing-model sample, rejected until simple and connected."""
    if (n * r) % 2 or r >= n:
        raise ValueError(f"no {r}-regular graph on {n} vertices")
    while True:
        points = [v for v in range(n) for _ in range(r)]
        rng.shuffle(points)
        pairs = list(zip(points[0::2], points[1::2]))
        if any(u == v for u, v in pairs):
            continue
        norm = {(min(u, v), max(u, v)) for u, v in pairs}
        if len(norm) != len(pairs):
            continue
        g = Graph(n, sorted(norm))
        if is_connected(g):
            assert is_regular(g) == r
            return g


def connected_corpus(seed=20240814, count=50, max_n=8):
    """Deterministic list of random connected graphs with n <= max_n."""
    rng = random.Random(seed)
    graphs = []
    while len(graphs) < count:
        n = rng.randint(2, max_n)
        graphs.append(random_connected_graph(rng, n))
    return graphs


def regular_corpus(seed=20240815):
    """Connected regular graphs with r in {2, 3} and n <= 8, plus small completes."""
    rng = random.Random(seed)
    graphs = [generate("cycle", n) for n in (3, 4, 5, 6)]
    graphs += [generate("complete", 4), generate("complete", 5)]
    graphs += [random_connected_regular_graph(rng, n, 3) for n in (4, 6, 8, 8)]
    graphs += [random_connected_regular_graph(rng, n, 2) for n in (5, 7, 8)]
    return graphs


@pytest.fixture(scope="session")
def golden_corpus():
    """Named families plus 50 seeded random connected graphs (n <= 8)."""
    graphs = []
    graphs += [generate("cycle", n) for n in range(3, 9)]
    graphs += [generate("complete", n) for n in range(3, 7)]
    graphs += [generate("path", n) for n in range(2, 11)]
    graphs += [generate("star", n) for n in range(3, 9)]
    graphs += [
        generate("complete_bipartite", a, b)
        for a in range(1, 8)
        for b in range(a, 8)
        if a + b <= 8
    ]
    graphs += connected_corpus()
    return graphs
