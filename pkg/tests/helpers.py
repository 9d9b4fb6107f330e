"""Shared graph builders and oracles for the test suite."""

from __future__ import annotations

import itertools
import random

from burnkit import Graph, SplitPartition, from_edge_list, verify


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def fig_example_graph() -> Graph:
    """The eight-vertex example graph (vertices p..w mapped to 0..7)."""
    return from_edge_list(
        8, [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (4, 6), (3, 5), (3, 6), (6, 7)]
    )


P, Q, R, S, T, U, V, W = range(8)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        G = random_graph(rng, n, p)
        if _connected(G):
            return G


def _connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in G.adjacency[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == G.n


def random_tree(rng: random.Random, n: int) -> Graph:
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return from_edge_list(n, edges)


def random_split_graph(rng: random.Random, n: int, connected: bool = True) -> tuple[Graph, SplitPartition]:
    while True:
        clique_size = rng.randint(1, n)
        clique = list(range(clique_size))
        independent = list(range(clique_size, n))
        edges = [(u, v) for u in clique for v in clique if u < v]
        for w in independent:
            for c in clique:
                if rng.random() < 0.5:
                    edges.append((c, w))
        G = from_edge_list(n, edges)
        if not connected or _connected(G):
            return G, SplitPartition(frozenset(clique), frozenset(independent))


def random_connected_cograph(rng: random.Random, n: int) -> Graph:
    """Recursive union/join construction with a join at the top."""

    def build(size: int) -> list[tuple[int, int]] | None:
        # returns edges over 0..size-1
        if size == 1:
            return []
        left = rng.randint(1, size - 1)
        right = size - left
        left_edges = build(left)
        right_edges = [(u + left, v + left) for u, v in build(right)]
        edges = left_edges + right_edges
        if rng.random() < 0.5:
            edges += [(u, v + left) for u in range(left) for v in range(right)]
        return edges

    if n == 1:
        return from_edge_list(1, [])
    left = rng.randint(1, n - 1)
    right = n - left
    edges = build(left) + [(u + left, v + left) for u, v in build(right)]
    edges += [(u, v + left) for u in range(left) for v in range(right)]
    return from_edge_list(n, edges)


def random_interval_pairs(rng: random.Random, n: int) -> list[tuple[int, int]]:
    pairs = []
    for _ in range(n):
        start = rng.randint(0, 2 * n)
        pairs.append((start, start + rng.randint(1, 5)))
    return pairs


def all_optimal_sequences(G: Graph, k: int) -> list[tuple[int, ...]]:
    """Every verifying sequence of length k, by exhaustive enumeration."""
    return [S for S in itertools.permutations(range(G.n), k) if verify(G, S)]
