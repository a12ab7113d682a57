"""Undirected simple graphs with dense integer vertex ids, plus named families.

Vertices are always ``0..n-1``.  Graphs are immutable after construction and
safe to share between threads or workers.  The only ingestion format is a
plain edge-list text document (one ``u v`` pair per line, optional ``n COUNT``
header for isolated vertices); serialization reproduces it bit-exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Raised when an edge-list document cannot be parsed."""


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    ``adj[v]`` is the sorted tuple of neighbors of ``v``.  ``labels`` is an
    optional sorted tuple of ``(vertex, label)`` pairs used by gadget builders
    to tag constructed vertices.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[tuple[int, str], ...] | None = None

    @staticmethod
    def from_edges(
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: dict[int, str] | None = None,
    ) -> "Graph":
        """Build a graph on vertices ``0..n-1``; duplicate edges collapse."""
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        lab = None
        if labels is not None:
            for v in labels:
                if not 0 <= v < n:
                    raise ValueError(f"label on unknown vertex {v}")
            lab = tuple(sorted(labels.items()))
        return Graph(n, tuple(tuple(sorted(s)) for s in nbrs), lab)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @cached_property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @cached_property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once, as ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor sets as int bitmasks (bit v = vertex v)."""
        masks = []
        for a in self.adj:
            m = 0
            for v in a:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    @cached_property
    def label_map(self) -> dict[int, str]:
        return dict(self.labels) if self.labels else {}

    def components(self) -> list[frozenset[int]]:
        """Connected components, ordered by smallest contained vertex."""
        seen = bytearray(self.n)
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = 1
            queue = deque((s,))
            while queue:
                u = queue.popleft()
                for v in self.adj[u]:
                    if not seen[v]:
                        seen[v] = 1
                        comp.append(v)
                        queue.append(v)
            out.append(frozenset(comp))
        return out

    @cached_property
    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    @cached_property
    def is_tree(self) -> bool:
        return self.is_connected and self.edge_count == self.n - 1

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``vertices`` plus the new->old id mapping."""
        old = tuple(sorted(set(vertices)))
        pos = {v: i for i, v in enumerate(old)}
        edges = [
            (pos[u], pos[v])
            for u in old
            for v in self.adj[u]
            if v > u and v in pos
        ]
        return Graph.from_edges(len(old), edges), old


def parse_edge_list(text: str) -> Graph:
    """Parse an edge-list document.

    Lines are ``u v`` integer pairs (0-based ids); an optional ``n COUNT``
    line fixes the vertex count so isolated vertices survive.  Self-loops and
    non-integer tokens are rejected with their line number.
    """
    header: int | None = None
    edges: list[tuple[int, int]] = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens:
            continue
        if tokens[0] == "n":
            if header is not None:
                raise GraphFormatError(f"line {lineno}: duplicate 'n' header")
            if len(tokens) != 2:
                raise GraphFormatError(f"line {lineno}: header must be 'n COUNT'")
            try:
                header = int(tokens[1])
            except ValueError:
                raise GraphFormatError(
                    f"line {lineno}: non-integer vertex count {tokens[1]!r}"
                ) from None
            if header < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(
                f"line {lineno}: non-integer token in {raw!r}"
            ) from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    n = max(max_id + 1, header if header is not None else 0)
    return Graph.from_edges(n, edges)


def serialize_edge_list(G: Graph) -> str:
    """Deterministic edge-list text; ``parse_edge_list`` round-trips it."""
    lines = [f"n {G.n}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Named families


def path(n: int) -> Graph:
    _require_size("path", n, 1)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _require_size("cycle", n, 3)
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _require_size("complete", n, 1)
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(r: int, s: int) -> Graph:
    _require_size("complete_bipartite", r, 1)
    _require_size("complete_bipartite", s, 1)
    return Graph.from_edges(r + s, ((i, r + j) for i in range(r) for j in range(s)))


def star(n: int) -> Graph:
    """Star on ``n`` vertices: center 0 joined to leaves ``1..n-1``."""
    _require_size("star", n, 1)
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """Cartesian product; vertex ``(g, h)`` gets id ``g * H.n + h``."""
    edges = []
    for g in range(G.n):
        for h, h2 in H.edges():
            edges.append((g * H.n + h, g * H.n + h2))
    for g, g2 in G.edges():
        for h in range(H.n):
            edges.append((g * H.n + h, g2 * H.n + h))
    return Graph.from_edges(G.n * H.n, edges)


def grid(m: int, n: int) -> Graph:
    """Grid with ``m`` columns and ``n`` rows; cell ``(c, r)`` (1-based) has
    id ``(c - 1) * n + (r - 1)``."""
    _require_size("grid", m, 1)
    _require_size("grid", n, 1)
    return cartesian_product(path(m), path(n))


def _require_size(family: str, value: int, minimum: int) -> None:
    if not isinstance(value, int) or value < minimum:
        raise ValueError(f"{family} requires integer size >= {minimum}, got {value}")


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "grid": (grid, 2),
    "cartesian_product": (cartesian_product, 2),
}


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with its parameters.

    ``args`` holds ints for the parametric families and two ``Graph`` values
    for ``cartesian_product``.  Size parameters are validated on
    construction so closed-form evaluators can trust a spec without
    building the graph.
    """

    family: str
    args: tuple

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if len(self.args) != FAMILIES[self.family][1]:
            raise ValueError(
                f"{self.family} takes {FAMILIES[self.family][1]} parameter(s), "
                f"got {len(self.args)}"
            )
        if self.family == "cartesian_product":
            if not all(isinstance(g, Graph) for g in self.args):
                raise ValueError("cartesian_product takes two Graph values")
            return
        minimum = 3 if self.family == "cycle" else 1
        for a in self.args:
            _require_size(self.family, a, minimum)


def build_family(spec: FamilySpec) -> Graph:
    """Construct the graph described by ``spec``."""
    builder, _ = FAMILIES[spec.family]
    return builder(*spec.args)


def family_from_tokens(tokens: list[str]) -> FamilySpec:
    """Parse CLI-style tokens like ``["grid", "3", "3"]``."""
    if not tokens:
        raise ValueError("empty family description")
    name, raw_args = tokens[0], tokens[1:]
    if name == "cartesian_product":
        raise ValueError("cartesian_product is not constructible from the CLI")
    try:
        args = tuple(int(a) for a in raw_args)
    except ValueError:
        raise ValueError(f"non-integer family parameter in {raw_args}") from None
    return FamilySpec(name, args)


@dataclass(frozen=True)
class StructureReport:
    """Degree extremes, connectivity and components of a graph."""

    max_degree: int
    min_degree: int
    is_connected: bool
    is_tree: bool
    components: tuple[frozenset[int], ...]

    def to_json(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "is_connected": self.is_connected,
            "is_tree": self.is_tree,
            "components": [sorted(c) for c in self.components],
        }


def structure_report(G: Graph) -> StructureReport:
    return StructureReport(
        max_degree=G.max_degree,
        min_degree=G.min_degree,
        is_connected=G.is_connected,
        is_tree=G.is_tree,
        components=tuple(G.components()),
    )
