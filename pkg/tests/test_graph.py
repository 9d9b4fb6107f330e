import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burnkit import (
    DiskArrangement,
    IntervalSet,
    PermutationPair,
    RejectedInputError,
    DisconnectedGraphError,
    bfs_distances,
    components,
    diameter_path,
    disk_graph,
    from_edge_list,
    interval_graph,
    neighborhood,
    permutation_graph,
)
from burnkit.hardness import gen_spider, gen_spider_forest

from helpers import (
    complete_graph,
    cycle_graph,
    fig_example_graph,
    path_graph,
    random_graph,
    Q,
)


class TestFromEdgeList:
    def test_complete_graph(self):
        g = complete_graph(4)
        assert all(g.degree(v) == 3 for v in range(4))
        assert g.edge_count == 6

    def test_isolated_vertices_preserved(self):
        g = from_edge_list(2, [])
        assert len(components(g)) == 2

    def test_duplicate_and_reversed_edges_collapse(self):
        g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1

    def test_string_encoded_clique(self):
        # vertices 00,01,10,11 with all six pairs form a clique of size 4
        names = ["00", "01", "10", "11"]
        index = {name: i for i, name in enumerate(names)}
        pairs = [("00", "01"), ("00", "10"), ("00", "11"), ("01", "10"), ("01", "11"), ("10", "11")]
        g = from_edge_list(4, [(index[a], index[b]) for a, b in pairs])
        assert g == complete_graph(4)

    def test_rejects_out_of_range(self):
        with pytest.raises(RejectedInputError):
            from_edge_list(3, [(0, 3)])

    def test_rejects_self_loop(self):
        with pytest.raises(RejectedInputError):
            from_edge_list(3, [(1, 1)])


class TestBfsDistances:
    def test_path_end_to_end(self):
        assert bfs_distances(path_graph(5), 0)[4] == 4

    def test_spider_leaves_at_double_arm_length(self):
        for s, r in [(3, 2), (4, 3), (5, 4)]:
            g = gen_spider(s, r)
            leaves = [v for v in range(g.n) if g.degree(v) == 1]
            d = bfs_distances(g, leaves[0])
            assert all(d[leaf] == 2 * r for leaf in leaves[1:])

    def test_complete_graph_all_adjacent(self):
        d = bfs_distances(complete_graph(4), 2)
        assert sorted(d) == [0, 1, 1, 1]

    def test_unreachable_is_infinite(self):
        g = from_edge_list(3, [(0, 1)])
        assert bfs_distances(g, 0)[2] == math.inf


class TestNeighborhood:
    def test_radius_zero_is_identity(self):
        g = fig_example_graph()
        assert neighborhood(g, {3}, 0) == {3}

    def test_example_graph_ball(self):
        g = fig_example_graph()
        assert neighborhood(g, {Q}, 1) == {0, 1, 2, 3, 4}  # q with p, r, s, t

    def test_star_center_reaches_everything(self):
        g = gen_spider(5, 1)
        assert neighborhood(g, {0}, 1) == set(range(g.n))

    @given(st.integers(0, 10**6))
    @settings(max_examples=40, deadline=None)
    def test_matches_bfs_ball_and_is_monotone(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.random())
        v = rng.randrange(n)
        dist = bfs_distances(g, v)
        previous = set()
        for i in range(n + 2):
            ball = neighborhood(g, {v}, i)
            assert ball == {u for u in range(n) if dist[u] <= i}
            assert previous <= ball
            previous = ball
        component = {u for u in range(n) if dist[u] < math.inf}
        assert previous == component


class TestDiameterPath:
    def test_path_returns_itself(self):
        assert diameter_path(path_graph(6)) == list(range(6))

    def test_six_cycle(self):
        path = diameter_path(cycle_graph(6))
        assert len(path) == 4
        assert path == [0, 1, 2, 3]

    def test_complete_graph_single_edge(self):
        assert diameter_path(complete_graph(4)) == [0, 1]

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            diameter_path(from_edge_list(3, [(0, 1)]))

    def test_length_matches_all_pairs_oracle(self):
        rng = random.Random(7)
        for _ in range(15):
            n = rng.randint(2, 50)
            g = random_graph(rng, n, 0.15)
            if any(math.inf in bfs_distances(g, v) for v in range(n)):
                continue
            expected = max(max(bfs_distances(g, v)) for v in range(n))
            path = diameter_path(g)
            assert len(path) - 1 == expected
            dist = bfs_distances(g, path[0])
            assert [dist[v] for v in path] == list(range(len(path)))


class TestComponents:
    def test_connected(self):
        assert len(components(fig_example_graph())) == 1

    def test_edgeless(self):
        assert len(components(from_edge_list(5, []))) == 5

    def test_spider_forest(self):
        g = gen_spider_forest([2, 3, 4])
        assert len(components(g)) == 3


class TestIntervalGraph:
    def test_overlap_single_edge(self):
        g = interval_graph(IntervalSet.from_pairs([(0, 2), (1, 3)]))
        assert g.edges() == [(0, 1)]

    def test_disjoint_no_edge(self):
        g = interval_graph(IntervalSet.from_pairs([(0, 1), (2, 3)]))
        assert g.edge_count == 0

    def test_chain_of_three_triangle(self):
        g = interval_graph(IntervalSet.from_pairs([(0, 3), (1, 4), (2, 5)]))
        assert g == complete_graph(3)

    def test_shared_endpoint_counts(self):
        g = interval_graph(IntervalSet.from_pairs([(0, 1), (1, 2)]))
        assert g.edge_count == 1

    def test_rejects_empty_interval(self):
        with pytest.raises(RejectedInputError):
            IntervalSet.from_pairs([(2, 2)])

    def test_no_long_induced_cycles(self):
        import itertools

        rng = random.Random(11)
        for _ in range(20):
            n = rng.randint(4, 10)
            pairs = [(s, s + rng.randint(1, 5)) for s in (rng.randint(0, 12) for _ in range(n))]
            g = interval_graph(IntervalSet.from_pairs(pairs))
            for size in range(4, n + 1):
                for subset in itertools.combinations(range(n), size):
                    inside = set(subset)
                    degrees = [sum(1 for u in g.adjacency[v] if u in inside) for v in subset]
                    if all(d == 2 for d in degrees):
                        edge_total = sum(degrees) // 2
                        # a connected 2-regular induced subgraph is a cycle
                        assert not (edge_total == size and _induced_connected(g, inside))


def _induced_connected(g, inside):
    start = next(iter(inside))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.adjacency[v]:
            if u in inside and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == inside


class TestPermutationGraph:
    def test_eight_vertex_path_example(self):
        g = permutation_graph(PermutationPair((3, 1, 5, 2, 7, 4, 8, 6)))
        expected = {(0, 2), (1, 2), (1, 4), (3, 4), (3, 6), (5, 6), (5, 7)}
        assert set(g.edges()) == expected
        assert sorted(g.degree(v) for v in range(8)) == [1, 1, 2, 2, 2, 2, 2, 2]

    def test_identity_is_edgeless(self):
        g = permutation_graph(PermutationPair(tuple(range(1, 9))))
        assert g.edge_count == 0

    def test_rejects_non_bijection(self):
        with pytest.raises(RejectedInputError):
            PermutationPair((1, 1, 3))


class TestDiskGraph:
    def test_separated_disks(self):
        g = disk_graph(DiskArrangement.from_triples([(0, 0, 1), (3, 0, 1)]))
        assert g.edge_count == 0

    def test_tangent_disks_touch(self):
        g = disk_graph(DiskArrangement.from_triples([(0, 0, 1), (2, 0, 1)]))
        assert g.edge_count == 1

    def test_rejects_nonpositive_radius(self):
        with pytest.raises(RejectedInputError):
            DiskArrangement.from_triples([(0, 0, 0)])

    def test_exact_boundary_decisions_at_any_scale(self):
        from fractions import Fraction

        big = 10**8
        tangent = disk_graph(
            DiskArrangement.from_triples([(big, 0, 1), (big + 2, 0, 1)])
        )
        assert tangent.edge_count == 1
        epsilon = Fraction(1, 10**12)
        apart = DiskArrangement.from_triples([(0, 0, 1), (Fraction(2) + epsilon, 0, 1)])
        assert disk_graph(apart).edge_count == 0
        touching = DiskArrangement.from_triples([(0, 0, 1), (Fraction(2) - epsilon, 0, 1)])
        assert disk_graph(touching).edge_count == 1

    def test_hub_and_chains_realize_spider(self):
        # hub of radius 2 with three unit-disk chains of five at spacing 1.5
        triples = [(0, 0, 2)]
        for ux, uy in ((1, 0), (0, 1), (-1, 0)):
            for t in range(5):
                rho = 2 + 1.5 * t
                triples.append((ux * rho, uy * rho, 1))
        g = disk_graph(DiskArrangement.from_triples(triples))
        assert g == gen_spider(3, 5)
