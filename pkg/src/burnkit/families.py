"""Polynomial-time burners for special graph classes.

Paths and cycles burn in ceil(sqrt(n)) rounds, connected split graphs and
cographs in at most three, and connected interval graphs within one round of
optimal via their diameter path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .burning import coverage
from .errors import DisconnectedGraphError, NotBurnableIn3Error, RejectedInputError
from .graph import Graph, components, diameter_path, neighborhood


def _ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r >= n else r + 1


def burn_path(P) -> list[int]:
    """Optimal schedule for a path given end-to-end; prepends work right to left.

    Sources sit at 1-based positions n - i*i - i for i = 0..k-2, and the final
    (first-round) source at n-(k-1)^2-(k-1) when that stays positive, else at
    position 1.
    """
    path = list(P)
    n = len(path)
    if n == 0:
        raise RejectedInputError("cannot burn an empty path")
    k = _ceil_sqrt(n)
    schedule: list[int] = []
    for i in range(k - 1):
        position = n - i * i - i
        schedule.insert(0, path[position - 1])
    if n > (k - 1) ** 2 + k:
        position = n - (k - 1) ** 2 - (k - 1)
    else:
        position = 1
    schedule.insert(0, path[position - 1])
    return schedule


def burn_cycle(C) -> list[int]:
    """Optimal schedule for a cycle: ceil(sqrt(n)) arcs tiled around the ring.

    Consecutive coverage arcs of sizes 2(k-i)+1 are laid out in round order
    and shrunk by overlaps totalling k^2 - n, smallest arcs first, which keeps
    every placement legal (the wrap gap between the first and last source is
    always k).
    """
    cycle = list(C)
    n = len(cycle)
    if n < 3:
        raise RejectedInputError("a cycle needs at least three vertices")
    k = _ceil_sqrt(n)
    surplus = k * k - n
    overlap = [0] * k  # overlap[i] merges arc i into arc i+1 (1-based rounds)
    for i in range(k - 1, 0, -1):
        take = min(2 * (k - i) - 1, surplus)
        overlap[i] = take
        surplus -= take
    positions = [0]
    for i in range(1, k):
        positions.append(positions[-1] + 2 * (k - i) - overlap[i])
    return [cycle[p % n] for p in positions]


@dataclass(frozen=True)
class SplitPartition:
    """A clique/independent-set bipartition of a vertex set."""

    clique: frozenset[int]
    independent: frozenset[int]


def validate_split(G: Graph, sp: SplitPartition) -> None:
    if sp.clique & sp.independent or (sp.clique | sp.independent) != set(range(G.n)):
        raise RejectedInputError("partition must split the vertex set exactly")
    clique = sorted(sp.clique)
    for idx, v in enumerate(clique):
        row = set(G.adjacency[v])
        for u in clique[idx + 1 :]:
            if u not in row:
                raise RejectedInputError(f"clique part misses edge ({v}, {u})")
    for v in sp.independent:
        for u in G.adjacency[v]:
            if u in sp.independent:
                raise RejectedInputError(f"independent part contains edge ({v}, {u})")


def split_partition(G: Graph) -> SplitPartition | None:
    """Degree-sequence recognizer; None when the graph is not split."""
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    degrees = [G.degree(v) for v in order]
    best_m = 0
    for i in range(1, G.n + 1):
        if degrees[i - 1] >= i - 1:
            best_m = i
    left = sum(degrees[:best_m])
    right = best_m * (best_m - 1) + sum(degrees[best_m:])
    if left != right:
        return None
    sp = SplitPartition(frozenset(order[:best_m]), frozenset(order[best_m:]))
    try:
        validate_split(G, sp)
    except RejectedInputError:
        return None
    return sp


def burn_split(G: Graph, sp: SplitPartition, use_preferences: bool = True) -> list[int]:
    """Burn a split graph: first source in the clique, then independent vertices.

    Connected inputs finish in at most three rounds; disconnected ones keep
    seeding unburned independent vertices until everything is burned.  The
    preference clauses only steer tie-breaking and never affect validity.
    """
    validate_split(G, sp)
    if G.n == 0:
        raise RejectedInputError("cannot burn the empty graph")
    clique = sorted(sp.clique)
    independent = sorted(sp.independent)
    if not clique:
        # a lone vertex is trivially a clique; promote the smallest one
        clique = [independent[0]]
        independent = independent[1:]

    if use_preferences:
        # the clique vertex reaching most of the independent set leaves at
        # most one vertex uncovered whenever two rounds suffice
        first = max(
            clique,
            key=lambda c: (sum(1 for u in G.adjacency[c] if u in sp.independent), -c),
        )
    else:
        first = clique[0]
    schedule = [first]
    burned = {first}
    if len(burned) == G.n:
        return schedule

    unburned_independent = [v for v in independent if v not in burned]
    if unburned_independent:
        away_from_first = [v for v in unburned_independent if v not in G.adjacency[first]]
        second = (
            away_from_first[0]
            if use_preferences and away_from_first
            else unburned_independent[0]
        )
    else:
        second = min(v for v in range(G.n) if v not in burned)
    spread = neighborhood(G, burned, 1)
    schedule.append(second)
    burned |= {second} | spread
    if len(burned) == G.n:
        return schedule

    while len(burned) < G.n:
        spreading = set(burned)
        candidates = [v for v in independent if v not in burned]
        if not candidates:
            raise RejectedInputError("split partition inconsistent with the graph")
        schedule.append(candidates[0])
        burned |= {candidates[0]} | neighborhood(G, spreading, 1)
    return schedule


def burn_cograph(G: Graph) -> list[int]:
    """Burn a connected cograph in at most three rounds without recognizing it.

    Checks one round (single vertex), then scans for a two-round schedule,
    then falls back to a radius-based three-round schedule.  If nothing
    passes verification the input was not a connected cograph.
    """
    if G.n == 0:
        raise RejectedInputError("cannot burn the empty graph")
    if G.n == 1:
        return [0]
    for x1 in range(G.n):
        missing = [v for v in range(G.n) if v != x1 and v not in G.adjacency[x1]]
        if len(missing) > 1:
            continue
        if missing:
            return [x1, missing[0]]
        x2 = 0 if x1 != 0 else 1
        return [x1, x2]
    x1 = 0
    ball1 = neighborhood(G, {x1}, 1)
    x3 = min(v for v in range(G.n) if v not in ball1)
    x2 = min(v for v in range(G.n) if v not in (x1, x3))
    schedule = [x1, x2, x3]
    if len(neighborhood(G, {x1}, 2)) != G.n:
        raise NotBurnableIn3Error(
            "bounded three-round search failed; not a connected cograph"
        )
    return schedule


def burn_interval_approx(G: Graph) -> list[int]:
    """Burn a connected interval graph within one round of its optimum.

    Schedules the diameter path optimally; if off-path vertices stay
    uncovered, one extra source on any of them finishes the job.
    """
    if len(components(G)) != 1:
        raise DisconnectedGraphError("interval burner needs a connected graph")
    path = diameter_path(G)
    schedule = burn_path(path)
    covered = coverage(G, schedule)
    if len(covered) != G.n:
        extra = min(v for v in range(G.n) if v not in covered)
        schedule.append(extra)
    return schedule
