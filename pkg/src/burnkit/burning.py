"""Burning-process semantics: step simulation, coverage, and verification.

A burning run places one new fire source per round and then spreads fire one
hop from everything burned in earlier rounds.  A sequence of k sources is
valid when no source lands on an already-burned vertex, and complete when
round k leaves no vertex unburned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSequenceError, RejectedInputError
from .graph import UNREACHED, Graph, _bfs


@dataclass(frozen=True)
class BurnSchedule:
    """Fire sources plus the per-vertex round and cause of burning.

    ``burn_step[v]`` is the 1-based round in which v burned (None if never);
    ``labels[v]`` is "a" for vertices ignited as sources, "b" for spread.
    """

    sources: tuple[int, ...]
    burn_step: tuple[int | None, ...]
    labels: tuple[str | None, ...]


@dataclass(frozen=True)
class BurnOutcome:
    valid: bool
    complete: bool
    schedule: BurnSchedule
    first_violation: tuple[int, str] | None


def _check_sequence(G: Graph, sequence) -> tuple[int, ...]:
    S = tuple(sequence)
    if not S:
        raise RejectedInputError("burning sequence must be nonempty")
    for v in S:
        if not 0 <= v < G.n:
            raise RejectedInputError(f"sequence vertex {v} out of range")
    return S


def simulate(G: Graph, sequence) -> BurnOutcome:
    """Run the burning process for len(sequence) rounds.

    Placement precedes spread within a round, and spread emanates only from
    vertices burned in earlier rounds.  An illegal placement (on an
    already-burned vertex) marks the outcome invalid but the process keeps
    running so that the final burned set still matches the coverage formula.
    """
    S = _check_sequence(G, sequence)
    burn_step: list[int | None] = [None] * G.n
    labels: list[str | None] = [None] * G.n
    burned: set[int] = set()
    first_violation: tuple[int, str] | None = None
    for step, source in enumerate(S, start=1):
        previously_burned = frozenset(burned)
        if source in previously_burned:
            if first_violation is None:
                first_violation = (step, f"source {source} already burned")
        else:
            burned.add(source)
            burn_step[source] = step
            labels[source] = "a"
        if step > 1:
            for v in previously_burned:
                for u in G.adjacency[v]:
                    if u not in burned:
                        burned.add(u)
                        burn_step[u] = step
                        labels[u] = "b"
    schedule = BurnSchedule(S, tuple(burn_step), tuple(labels))
    return BurnOutcome(
        valid=first_violation is None,
        complete=len(burned) == G.n,
        schedule=schedule,
        first_violation=first_violation,
    )


def coverage(G: Graph, sequence) -> set[int]:
    """Union of the k balls a k-round run reaches: radius k-i around source i."""
    S = _check_sequence(G, sequence)
    k = len(S)
    covered: set[int] = set()
    for i, source in enumerate(S):
        radius = k - i - 1
        dist = _bfs(G.adjacency, source, limit=radius)
        covered.update(v for v, d in enumerate(dist) if d != UNREACHED)
    return covered


def covers_all(G: Graph, sequence) -> bool:
    """Whether the coverage union equals the whole vertex set."""
    return len(coverage(G, sequence)) == G.n


def verify(G: Graph, sequence) -> bool:
    """Polynomial validity check for a burning sequence.

    True iff the k coverage balls together reach every vertex and no later
    source sits inside an earlier source's forbidden ball (which would mean
    it was already burned when placed).
    """
    S = _check_sequence(G, sequence)
    k = len(S)
    covered = bytearray(G.n)
    reached = 0
    for i, source in enumerate(S):
        radius = k - i - 1
        dist = _bfs(G.adjacency, source, limit=radius)
        for j in range(i + 1, k):
            d = dist[S[j]]
            if d != UNREACHED and d <= j - i - 1:
                return False
        for v, d in enumerate(dist):
            if d != UNREACHED and not covered[v]:
                covered[v] = 1
                reached += 1
    return reached == G.n


def clusters(G: Graph, sequence) -> list[frozenset[int]]:
    """Per-source coverage balls of a valid sequence (radius k-i around source i)."""
    S = _check_sequence(G, sequence)
    if not verify(G, S):
        raise InvalidSequenceError("clusters are defined only for valid burning sequences")
    k = len(S)
    out = []
    for i, source in enumerate(S):
        dist = _bfs(G.adjacency, source, limit=k - i - 1)
        out.append(frozenset(v for v, d in enumerate(dist) if d != UNREACHED))
    return out
