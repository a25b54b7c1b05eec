"""Shared graph builders for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

from starforest.graph import Graph


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def disjoint_union(*graphs: Graph) -> Graph:
    total = sum(g.n for g in graphs)
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(total, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Graph.from_edges(n, edges)


def ladder_graph(rungs: int) -> Graph:
    """2 x rungs grid; planar with maximum degree 3."""
    edges = []
    for i in range(rungs):
        edges.append((2 * i, 2 * i + 1))
        if i + 1 < rungs:
            edges.append((2 * i, 2 * i + 2))
            edges.append((2 * i + 1, 2 * i + 3))
    return Graph.from_edges(2 * rungs, edges)


def planar_low_degree(rng: random.Random, max_n: int = 10) -> Graph:
    """Planar graphs with max degree <= 3: ladders, trees, cycles with a chord."""
    kind = rng.randrange(4)
    if kind == 0:
        return ladder_graph(rng.randint(2, max_n // 2))
    if kind == 1:
        return random_tree(rng, rng.randint(2, max_n))
    if kind == 2:
        return cycle_graph(rng.randint(3, max_n))
    n = rng.randint(4, max_n)
    edges = {(i, (i + 1) % n) for i in range(n)}
    # one non-adjacent chord keeps the drawing planar and degrees at 3
    a = 0
    b = rng.randint(2, n - 2)
    edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(n, sorted(edges))
