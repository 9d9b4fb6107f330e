"""Companion contact processes: firefighting and bootstrap percolation.

Firefighting is the dual game: fire starts at one vertex, one vertex per
round is permanently protected, and the goal is to maximize the vertices
that never burn.  Bootstrap percolation infects any vertex seeing at least
r infected neighbors until a fixed point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RejectedInputError, VertexCapError
from .graph import Graph


@dataclass(frozen=True)
class FirefightRun:
    """Outcome of one firefighting simulation.

    ``burned_steps`` holds the cumulative burned set after each round,
    starting with round 1 (the origin).  ``saved`` counts vertices never
    burned.  Invalid runs carry the offending round in ``violation``.
    """

    origin: int
    placements: tuple[int, ...]
    burned_steps: tuple[frozenset[int], ...]
    protected: frozenset[int]
    saved: int
    valid: bool
    violation: tuple[int, str] | None


def verify_firefighter(G: Graph, s: int, placements) -> FirefightRun:
    """Simulate a placement sequence against a fire starting at ``s``.

    Round 1 burns ``s``; each later round places the next firefighter (on an
    unburned, unprotected vertex, or the run is invalid) and then spreads
    fire to unprotected neighbors of burned vertices.  The run stops once a
    round spreads nothing; leftover placements are never consumed.
    """
    if not 0 <= s < G.n:
        raise RejectedInputError(f"fire origin {s} out of range")
    S = tuple(placements)
    for v in S:
        if not 0 <= v < G.n:
            raise RejectedInputError(f"placement vertex {v} out of range")
    burned = {s}
    protected: set[int] = set()
    steps = [frozenset(burned)]
    step = 1
    placed = 0
    while True:
        step += 1
        if placed < len(S):
            vertex = S[placed]
            placed += 1
            if vertex in burned:
                return _invalid(G, s, S, steps, protected, step, f"vertex {vertex} already burned")
            if vertex in protected:
                return _invalid(G, s, S, steps, protected, step, f"vertex {vertex} already protected")
            protected.add(vertex)
        spread = {
            u
            for v in burned
            for u in G.adjacency[v]
            if u not in burned and u not in protected
        }
        burned |= spread
        steps.append(frozenset(burned))
        if not spread:
            break
    return FirefightRun(
        origin=s,
        placements=S,
        burned_steps=tuple(steps),
        protected=frozenset(protected),
        saved=G.n - len(burned),
        valid=True,
        violation=None,
    )


def _invalid(G, s, S, steps, protected, step, reason) -> FirefightRun:
    burned = steps[-1]
    return FirefightRun(
        origin=s,
        placements=S,
        burned_steps=tuple(steps),
        protected=frozenset(protected),
        saved=G.n - len(burned),
        valid=False,
        violation=(step, reason),
    )


def _search_strategies(G: Graph, s: int, max_placements: int) -> FirefightRun:
    """Best strategy by (most saved, fewest placements, lexicographic order).

    Depth-first over placement prefixes; once no spread is possible, longer
    sequences change nothing and are skipped.
    """
    adjacency = G.adjacency
    best: dict[str, object] = {"seq": None, "saved": -1}

    def run_out(burned: frozenset[int], protected: frozenset[int]) -> int:
        burning = set(burned)
        while True:
            spread = {
                u
                for v in burning
                for u in adjacency[v]
                if u not in burning and u not in protected
            }
            if not spread:
                return len(burning)
            burning |= spread

    def consider(sequence: tuple[int, ...], saved: int) -> None:
        current = best["seq"]
        if (
            current is None
            or saved > best["saved"]
            or (saved == best["saved"] and len(sequence) < len(current))
            or (saved == best["saved"] and len(sequence) == len(current) and sequence < current)
        ):
            best["seq"] = sequence
            best["saved"] = saved

    def alive(burned: set[int], protected: set[int]) -> bool:
        return any(
            u not in burned and u not in protected
            for v in burned
            for u in adjacency[v]
        )

    def dfs(sequence: tuple[int, ...], burned: set[int], protected: set[int]) -> None:
        consider(sequence, G.n - run_out(frozenset(burned), frozenset(protected)))
        if len(sequence) >= max_placements or not alive(burned, protected):
            return
        for vertex in range(G.n):
            if vertex in burned or vertex in protected:
                continue
            spread = {
                u
                for v in burned
                for u in adjacency[v]
                if u not in burned and u not in protected and u != vertex
            }
            dfs(sequence + (vertex,), burned | spread, protected | {vertex})

    dfs((), {s}, set())
    return verify_firefighter(G, s, best["seq"])


def firefight_bruteforce(G: Graph, s: int, cap: int = 9) -> FirefightRun:
    """Optimal firefighting by exhaustive strategy search (tiny graphs only)."""
    if not 0 <= s < G.n:
        raise RejectedInputError(f"fire origin {s} out of range")
    if G.n > cap:
        raise VertexCapError(G.n, cap)
    return _search_strategies(G, s, max_placements=G.n)


def firefight_pk_free(G: Graph, s: int, k: int) -> FirefightRun:
    """Optimal firefighting for graphs with no induced path on k vertices.

    Such graphs never need more than k-2 placements, so the bounded search
    is polynomial for fixed k.  The caller asserts the structural property.
    """
    if not 0 <= s < G.n:
        raise RejectedInputError(f"fire origin {s} out of range")
    if k < 2:
        raise RejectedInputError("path bound k must be at least 2")
    return _search_strategies(G, s, max_placements=k - 2)


@dataclass(frozen=True)
class PercolationRun:
    seed: frozenset[int]
    threshold: int
    timeline: tuple[frozenset[int], ...]
    percolates: bool

    @property
    def steps(self) -> int:
        return len(self.timeline) - 1


def bootstrap_percolate(G: Graph, A, r: int) -> PercolationRun:
    """Iterate infection to a fixed point: a healthy vertex becomes infected
    once at least r vertices of its closed neighborhood are infected.

    The closed neighborhood is used literally; for a healthy vertex it
    contributes nothing extra since the vertex itself is not yet infected.
    """
    seed = frozenset(A)
    for v in seed:
        if not 0 <= v < G.n:
            raise RejectedInputError(f"seed vertex {v} out of range")
    if r < 2:
        raise RejectedInputError("infection threshold must be at least 2")
    timeline = [seed]
    current = set(seed)
    while True:
        infected = {
            v
            for v in range(G.n)
            if v not in current
            and sum(1 for u in G.adjacency[v] if u in current) + (v in current) >= r
        }
        if not infected:
            break
        current |= infected
        timeline.append(frozenset(current))
    return PercolationRun(
        seed=seed,
        threshold=r,
        timeline=tuple(timeline),
        percolates=len(current) == G.n,
    )
