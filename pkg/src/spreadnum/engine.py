"""The spreading color change rule: closures, traces, and set validation.

A white vertex turns blue once it has at least ``p`` blue neighbors and one
of those blue neighbors has at most ``q`` white neighbors.  The rule is
monotone (blue sets only grow, white-neighbor counts only shrink), so the
closure of a seed set is unique no matter in which order eligible vertices
are processed.  The engine forces one vertex at a time in a canonical order:
lowest eligible white id first, attributed to its lowest-id usable blue
neighbor.  Traces are therefore reproducible fixtures.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph

#: Distinguished "no white-degree constraint" value for q.
INFINITY = math.inf

_STATUSES = frozenset({"exact", "formula", "open", "not_covered"})


@dataclass(frozen=True)
class SpreadParams:
    """The pair ``(p, q)``: blue-neighbor threshold and forcer white budget.

    ``q`` is a positive integer or :data:`INFINITY`; infinity is a
    distinguished value, never an integer sentinel.
    """

    p: int
    q: int | float

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p < 1:
            raise ValueError(f"p must be a positive integer, got {self.p!r}")
        if self.q != INFINITY and not (isinstance(self.q, int) and self.q >= 1):
            raise ValueError(f"q must be a positive integer or INFINITY, got {self.q!r}")

    @property
    def q_is_infinite(self) -> bool:
        return self.q == INFINITY

    def effective_q(self, n: int) -> int:
        """Finite threshold equivalent to q on a graph with ``n`` vertices."""
        return n if self.q_is_infinite else self.q


@dataclass(frozen=True)
class SpreadTrace:
    """Replayable record of one closure run.

    ``steps`` lists ``(forcer, forced)`` pairs in the order vertices turned
    blue; a forcer that colors several neighbors appears in consecutive
    steps.  ``final`` is always ``initial`` plus the forced vertices.
    """

    initial: frozenset[int]
    steps: tuple[tuple[int, int], ...]
    final: frozenset[int]

    @property
    def forced(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.steps)

    def to_json(self) -> dict:
        return {
            "initial": sorted(self.initial),
            "steps": [[f, w] for f, w in self.steps],
            "final": sorted(self.final),
        }

    @staticmethod
    def from_json(doc: dict) -> "SpreadTrace":
        return SpreadTrace(
            initial=frozenset(doc["initial"]),
            steps=tuple((f, w) for f, w in doc["steps"]),
            final=frozenset(doc["final"]),
        )


@dataclass(frozen=True)
class SigmaResult:
    """A computed spreading number.

    ``status`` is one of ``exact`` (solver-proven), ``formula`` (closed
    form), ``open`` (unresolved case) or ``not_covered`` (no known formula).
    ``value`` is absent for the last two.  A witness, when present, is a
    minimum spreading set of the stated size.
    """

    value: int | None
    status: str
    witness: frozenset[int] | None = None
    trace: SpreadTrace | None = None
    note: str | None = None

    def __post_init__(self) -> None:
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.witness is not None and self.value != len(self.witness):
            raise ValueError("witness size disagrees with value")

    def to_json(self) -> dict:
        doc: dict = {"status": self.status}
        if self.value is not None:
            doc["value"] = self.value
        if self.witness is not None:
            doc["witness"] = sorted(self.witness)
        if self.trace is not None:
            doc["trace"] = self.trace.to_json()
        if self.note is not None:
            doc["note"] = self.note
        return doc


def _close(
    adj: tuple[tuple[int, ...], ...],
    deg: tuple[int, ...],
    n: int,
    p: int,
    qe: int,
    seeds: Iterable[int],
    record: bool = False,
) -> tuple[bytearray, list[tuple[int, int]]]:
    """Run the rule to fixpoint; O(E + n log n).

    ``bc[v]`` counts blue neighbors of ``v``; the white-neighbor count of a
    vertex is always ``deg[v] - bc[v]``.  A white vertex enters the heap the
    moment it becomes eligible, and eligibility is monotone, so popping the
    heap yields the lowest-id eligible vertex at every step.
    """
    blue = bytearray(n)
    for v in seeds:
        blue[v] = 1
    bc = [0] * n
    for v in range(n):
        if blue[v]:
            for u in adj[v]:
                bc[u] += 1
    queued = bytearray(blue)
    heap = []
    for w in range(n):
        if not blue[w] and bc[w] >= p:
            for u in adj[w]:
                if blue[u] and deg[u] - bc[u] <= qe:
                    heap.append(w)
                    queued[w] = 1
                    break
    heapq.heapify(heap)
    push, pop = heapq.heappush, heapq.heappop
    steps: list[tuple[int, int]] = []
    while heap:
        w = pop(heap)
        if record:
            forcer = -1
            for u in adj[w]:
                if blue[u] and deg[u] - bc[u] <= qe:
                    forcer = u
                    break
            assert forcer >= 0, "queued vertex lost its usable blue neighbor"
            steps.append((forcer, w))
        blue[w] = 1
        for x in adj[w]:
            bc[x] += 1
            if blue[x]:
                # x just crossed the white-budget threshold: its white
                # neighbors with enough blue support become eligible.
                if deg[x] - bc[x] == qe:
                    for y in adj[x]:
                        if not queued[y] and bc[y] >= p:
                            push(heap, y)
                            queued[y] = 1
            elif not queued[x] and bc[x] == p:
                for u in adj[x]:
                    if blue[u] and deg[u] - bc[u] <= qe:
                        push(heap, x)
                        queued[x] = 1
                        break
        if deg[w] - bc[w] <= qe:
            # w itself is a usable forcer from now on.
            for y in adj[w]:
                if not queued[y] and bc[y] >= p:
                    push(heap, y)
                    queued[y] = 1
    return blue, steps


def _check_seeds(G: Graph, seeds: Iterable[int]) -> frozenset[int]:
    S = frozenset(seeds)
    for v in S:
        if not (isinstance(v, int) and 0 <= v < G.n):
            raise ValueError(f"seed vertex {v!r} not in 0..{G.n - 1}")
    return S


def closure(
    G: Graph, params: SpreadParams, seeds: Iterable[int]
) -> tuple[frozenset[int], SpreadTrace]:
    """Maximal blue set reachable from ``seeds``, with a replayable trace."""
    S = _check_seeds(G, seeds)
    blue, steps = _close(
        G.adj, G.degrees, G.n, params.p, params.effective_q(G.n), S, record=True
    )
    final = frozenset(v for v in range(G.n) if blue[v])
    return final, SpreadTrace(initial=S, steps=tuple(steps), final=final)


def closure_set(G: Graph, params: SpreadParams, seeds: Iterable[int]) -> frozenset[int]:
    """Like :func:`closure` but skips trace bookkeeping."""
    S = _check_seeds(G, seeds)
    blue, _ = _close(G.adj, G.degrees, G.n, params.p, params.effective_q(G.n), S)
    return frozenset(v for v in range(G.n) if blue[v])


def is_spreading_set(G: Graph, params: SpreadParams, seeds: Iterable[int]) -> bool:
    """True iff the closure of ``seeds`` is the whole vertex set."""
    S = _check_seeds(G, seeds)
    blue, _ = _close(G.adj, G.degrees, G.n, params.p, params.effective_q(G.n), S)
    return all(blue)


def check_spreading_sequence(
    G: Graph,
    params: SpreadParams,
    seeds: Iterable[int],
    sequence: Iterable[int],
) -> bool:
    """Check that coloring ``sequence`` in order is consistent with the rule.

    ``sequence`` must be a permutation of the non-seed vertices; at each step
    the next vertex needs at least ``p`` blue neighbors, one of which has at
    most ``q`` white neighbors (the vertex being colored counts as white).
    """
    S = _check_seeds(G, seeds)
    seq = list(sequence)
    if len(set(seq)) != len(seq) or set(seq) != set(range(G.n)) - S:
        raise ValueError("sequence is not a permutation of the non-seed vertices")
    qe = params.effective_q(G.n)
    deg = G.degrees
    blue = bytearray(G.n)
    bc = [0] * G.n
    for v in S:
        blue[v] = 1
    for v in range(G.n):
        if blue[v]:
            for u in G.adj[v]:
                bc[u] += 1
    for w in seq:
        if bc[w] < params.p:
            return False
        if not any(blue[u] and deg[u] - bc[u] <= qe for u in G.adj[w]):
            return False
        blue[w] = 1
        for u in G.adj[w]:
            bc[u] += 1
    return True


def verify_trace(G: Graph, params: SpreadParams, trace: SpreadTrace) -> bool:
    """Replay a trace step by step and confirm every force was legal."""
    qe = params.effective_q(G.n)
    deg = G.degrees
    blue = set(trace.initial)
    for forcer, forced in trace.steps:
        if forced in blue or forcer not in blue:
            return False
        if forcer not in G.adj[forced]:
            return False
        if sum(u in blue for u in G.adj[forced]) < params.p:
            return False
        if sum(u not in blue for u in G.adj[forcer]) > qe:
            return False
        blue.add(forced)
    return blue == set(trace.final)
