"""Immutable undirected graphs plus geometric builders.

Vertices are dense integers ``0..n-1``.  The geometric builders (interval
sets, permutation pairs, disk arrangements) use exact rational arithmetic so
adjacency decisions never flip with floating-point rounding.  Overlap is
closed-set: intervals or disks that share exactly one boundary point count
as overlapping.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DisconnectedGraphError, RejectedInputError

UNREACHED = -1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph held as sorted per-vertex neighbor tuples.

    Construction validates the representation: no self-loops, no parallel
    edges, symmetric adjacency, every endpoint below ``n``.  Instances are
    immutable and safe to share across threads.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "adjacency", tuple(tuple(row) for row in self.adjacency)
        )
        if self.n < 0:
            raise RejectedInputError("vertex count must be nonnegative")
        if len(self.adjacency) != self.n:
            raise RejectedInputError("adjacency list length must equal vertex count")
        arcs = set()
        for v, neighbors in enumerate(self.adjacency):
            previous = -1
            for u in neighbors:
                if not 0 <= u < self.n:
                    raise RejectedInputError(f"edge endpoint {u} out of range")
                if u == v:
                    raise RejectedInputError(f"self-loop at vertex {v}")
                if u <= previous:
                    raise RejectedInputError(
                        f"adjacency of vertex {v} must be strictly increasing"
                    )
                previous = u
                arcs.add((v, u))
        for v, u in arcs:
            if (u, v) not in arcs:
                raise RejectedInputError(f"edge ({v}, {u}) lacks its mirror arc")

    @property
    def edge_count(self) -> int:
        return sum(len(neighbors) for neighbors in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ordered pairs (u, v) with u < v."""
        return [(v, u) for v in range(self.n) for u in self.adjacency[v] if v < u]


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse, isolated vertices stay."""
    neighbor_sets: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise RejectedInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise RejectedInputError(f"self-loop at vertex {u}")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in neighbor_sets))


def _bfs(adjacency: Sequence[Sequence[int]], source: int, limit: int | None = None) -> list[int]:
    """Distances from ``source``; UNREACHED beyond the limit or in other components."""
    dist = [UNREACHED] * len(adjacency)
    dist[source] = 0
    queue = deque((source,))
    while queue:
        v = queue.popleft()
        d = dist[v]
        if limit is not None and d >= limit:
            continue
        for u in adjacency[v]:
            if dist[u] == UNREACHED:
                dist[u] = d + 1
                queue.append(u)
    return dist


def bfs_distances(G: Graph, source: int) -> list[int | float]:
    """Shortest-path distances from ``source``; unreachable vertices get ``math.inf``."""
    if not 0 <= source < G.n:
        raise RejectedInputError(f"source {source} out of range")
    return [math.inf if d == UNREACHED else d for d in _bfs(G.adjacency, source)]


def neighborhood(G: Graph, X: Iterable[int], i: int) -> set[int]:
    """Closed neighborhood at distance ``i``: every vertex within ``i`` hops of ``X``."""
    members = set(X)
    for v in members:
        if not 0 <= v < G.n:
            raise RejectedInputError(f"vertex {v} out of range")
    if i < 0:
        raise RejectedInputError("radius must be nonnegative")
    frontier = set(members)
    for _ in range(i):
        if not frontier:
            break
        nxt = set()
        for v in frontier:
            for u in G.adjacency[v]:
                if u not in members:
                    members.add(u)
                    nxt.add(u)
        frontier = nxt
    return members


def components(G: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest vertex."""
    seen = [False] * G.n
    out: list[frozenset[int]] = []
    for start in range(G.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque((start,))
        while queue:
            v = queue.popleft()
            for u in G.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        out.append(frozenset(comp))
    return out


def diameter_path(G: Graph) -> list[int]:
    """A longest shortest path, deterministic by smallest (source, target, path).

    Raises DisconnectedGraphError when the diameter is undefined.
    """
    if G.n == 0:
        raise DisconnectedGraphError("diameter undefined for the empty graph")
    rows: list[list[int]] = []
    best = -1
    for v in range(G.n):
        row = _bfs(G.adjacency, v)
        if UNREACHED in row:
            raise DisconnectedGraphError("diameter undefined for a disconnected graph")
        rows.append(row)
        ecc = max(row)
        if ecc > best:
            best = ecc
    source = min(v for v in range(G.n) if max(rows[v]) == best)
    target = min(u for u in range(G.n) if rows[source][u] == best)
    # Greedy minimal-neighbor descent on distances-to-target yields the
    # lexicographically smallest shortest path.
    to_target = rows[target]
    path = [source]
    current = source
    while current != target:
        current = min(u for u in G.adjacency[current] if to_target[u] == to_target[current] - 1)
        path.append(current)
    return path


# -- geometric inputs -------------------------------------------------------

Rational = Fraction | int | str


def _as_fraction(value) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise RejectedInputError(f"not a rational number: {value!r}") from exc


@dataclass(frozen=True)
class IntervalSet:
    """Closed intervals on the line with exact rational endpoints."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        for start, end in self.intervals:
            if not (isinstance(start, Fraction) and isinstance(end, Fraction)):
                raise RejectedInputError("interval endpoints must be Fractions")
            if not start < end:
                raise RejectedInputError(f"interval [{start}, {end}] must have start < end")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Rational, Rational]]) -> "IntervalSet":
        return cls(tuple((_as_fraction(s), _as_fraction(e)) for s, e in pairs))


def interval_graph(L: IntervalSet) -> Graph:
    """One vertex per interval; edge wherever two closed intervals intersect."""
    items = L.intervals
    n = len(items)
    edges = []
    for a in range(n):
        sa, ea = items[a]
        for b in range(a + 1, n):
            sb, eb = items[b]
            if max(sa, sb) <= min(ea, eb):
                edges.append((a, b))
    return from_edge_list(n, edges)


@dataclass(frozen=True)
class PermutationPair:
    """The identity sequence ``1..k`` together with a permutation of it."""

    perm: tuple[int, ...]

    def __post_init__(self):
        k = len(self.perm)
        if sorted(self.perm) != list(range(1, k + 1)):
            raise RejectedInputError("perm must be a bijection on 1..k")

    @property
    def k(self) -> int:
        return len(self.perm)

    @property
    def original(self) -> tuple[int, ...]:
        return tuple(range(1, self.k + 1))


def permutation_graph(pp: PermutationPair) -> Graph:
    """Vertex ``i-1`` per number ``i``; edge iff the pair is inverted by the permutation."""
    k = pp.k
    position = [0] * (k + 1)
    for idx, value in enumerate(pp.perm):
        position[value] = idx
    edges = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            if position[j] < position[i]:
                edges.append((i - 1, j - 1))
    return from_edge_list(k, edges)


@dataclass(frozen=True)
class DiskArrangement:
    """Disks in the plane with exact rational centers and positive radii."""

    disks: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def __post_init__(self):
        for x, y, r in self.disks:
            if not all(isinstance(c, Fraction) for c in (x, y, r)):
                raise RejectedInputError("disk coordinates must be Fractions")
            if r <= 0:
                raise RejectedInputError("disk radii must be strictly positive")

    @classmethod
    def from_triples(cls, triples: Iterable[tuple[Rational, Rational, Rational]]) -> "DiskArrangement":
        return cls(tuple((_as_fraction(x), _as_fraction(y), _as_fraction(r)) for x, y, r in triples))


def disk_graph(D: DiskArrangement) -> Graph:
    """Edge wherever two closed disks intersect (tangency counts).

    Decisions are exact: a float prescreen handles pairs with a clear
    margin, everything near the boundary falls back to rational arithmetic.
    """
    disks = D.disks
    n = len(disks)
    floats = [(float(x), float(y), float(r)) for x, y, r in disks]
    edges = []
    for a in range(n):
        xa, ya, ra = floats[a]
        for b in range(a + 1, n):
            xb, yb, rb = floats[b]
            lhs = (xa - xb) ** 2 + (ya - yb) ** 2
            rhs = (ra + rb) ** 2
            scale = max(1.0, abs(xa), abs(ya), abs(xb), abs(yb), ra + rb)
            if abs(lhs - rhs) > 1e-9 * scale * scale:
                adjacent = lhs < rhs
            else:
                sa = disks[a]
                sb = disks[b]
                adjacent = (sa[0] - sb[0]) ** 2 + (sa[1] - sb[1]) ** 2 <= (sa[2] + sb[2]) ** 2
            if adjacent:
                edges.append((a, b))
    return from_edge_list(n, edges)
