"""Tree algorithms: partitions, spreading numbers, bounds, and certificates.

For ``p = 1`` the spreading number of a tree equals the size of the smallest
partition of its vertices into induced subtrees of maximum degree ``q + 1``,
computed here by a single bottom-up pass.  For ``p >= 2`` the number does
not depend on ``q`` at all, so the solver only ever runs with ``q = 1``.
Trees with spreading number exactly ``ceil(((p-1)n + 1) / p)`` are
recognized by a set-plus-ordering certificate ("property P(n,p)"): a seed
set of that size together with an ordering of the remaining vertices in
which each one sees at least ``p`` earlier-blue neighbors, subject to two
edge-counting balance conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .engine import (
    INFINITY,
    SigmaResult,
    SpreadParams,
    closure,
)
from .graphs import Graph
from .solver import BudgetExhausted, sigma_exact


def _require_tree(T: Graph) -> None:
    if T.n < 1 or not T.is_tree:
        raise ValueError("expected a tree (connected, |E| = n - 1)")


@dataclass(frozen=True)
class RootedTree:
    """A tree with a BFS layering: parent, depth, and children per vertex.

    The root sits at depth 0 and carries parent -1; children are listed in
    ascending id order, so traversals derived from this structure are
    deterministic.
    """

    tree: Graph
    root: int
    parent: tuple[int, ...]
    depth: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_tree(T: Graph, root: int | None = None) -> "RootedTree":
        """Root at ``root``, defaulting to the lowest-id non-leaf vertex."""
        _require_tree(T)
        if root is None:
            root = next((v for v in range(T.n) if T.degree(v) >= 2), 0)
        if not 0 <= root < T.n:
            raise ValueError(f"root {root} out of range")
        parent = [-1] * T.n
        depth = [0] * T.n
        children: list[list[int]] = [[] for _ in range(T.n)]
        seen = bytearray(T.n)
        seen[root] = 1
        order = [root]
        for u in order:
            for v in T.adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    children[u].append(v)
                    order.append(v)
        return RootedTree(
            tree=T,
            root=root,
            parent=tuple(parent),
            depth=tuple(depth),
            children=tuple(tuple(c) for c in children),
        )

    def layers(self) -> list[list[int]]:
        """Vertices grouped by depth, each layer in ascending id order."""
        out: list[list[int]] = [[] for _ in range(max(self.depth) + 1)]
        for v in range(self.tree.n):
            out[self.depth[v]].append(v)
        return out


@dataclass(frozen=True)
class Partition:
    """Disjoint vertex sets covering a tree, each inducing a subtree."""

    parts: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def to_json(self) -> dict:
        return {"count": len(self.parts), "parts": [sorted(p) for p in self.parts]}


def partition_is_valid(T: Graph, q: int, partition: Partition) -> bool:
    """Check the partition contract: cover, disjoint, connected, degree."""
    seen: set[int] = set()
    for part in partition:
        if not part or part & seen:
            return False
        seen |= part
        sub, _ = T.induced(part)
        if not sub.is_connected or sub.max_degree > q + 1:
            return False
    return seen == set(range(T.n))


def subtree_partition(T: Graph, q: int) -> Partition:
    """Smallest partition of a tree into induced subtrees of max degree q+1.

    Single bottom-up pass over a BFS layering (linear time): the deepest
    vertex whose remaining degree exceeds ``q + 1`` keeps itself plus its
    ``q + 1`` lowest-id child subtrees as one part, its remaining child
    subtrees split off as whole parts, and the processed subtree is removed.
    Whatever survives to the root is one final part.
    """
    _require_tree(T)
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"q must be a positive integer, got {q!r}")
    n = T.n
    if n == 1:
        return Partition((frozenset({0}),))
    rooted = RootedTree.from_tree(T)
    root, parent, depth, children = (
        rooted.root,
        rooted.parent,
        rooted.depth,
        rooted.children,
    )
    removed = bytearray(n)
    alive = [len(children[v]) for v in range(n)]
    parts: list[frozenset[int]] = []

    def take(top: int) -> frozenset[int]:
        comp = []
        stack = [top]
        while stack:
            x = stack.pop()
            removed[x] = 1
            comp.append(x)
            stack.extend(c for c in children[x] if not removed[c])
        return frozenset(comp)

    for x in sorted(range(n), key=lambda v: (-depth[v], v)):
        if removed[x]:
            continue
        deg_now = alive[x] + (0 if x == root else 1)
        if deg_now <= q + 1:
            continue
        cs = [c for c in children[x] if not removed[c]]
        for d in cs[q + 1 :]:
            parts.append(take(d))
        kept = {x}
        removed[x] = 1
        for c in cs[: q + 1]:
            kept |= take(c)
        parts.append(frozenset(kept))
        if x != root:
            alive[parent[x]] -= 1
    rest = frozenset(v for v in range(n) if not removed[v])
    if rest:
        parts.append(rest)
    result = Partition(tuple(parts))
    assert partition_is_valid(T, q, result)
    return result


def _part_seed(T: Graph, part: frozenset[int]) -> int:
    """Lowest-id leaf of the subtree induced by ``part``."""
    for v in sorted(part):
        if sum(1 for u in T.adj[v] if u in part) <= 1:
            return v
    raise AssertionError("induced subtree without a leaf")


def sigma_tree(T: Graph, params: SpreadParams) -> SigmaResult:
    """Spreading number of a tree, with a validated witness.

    ``p = 1``: one seed per part of :func:`subtree_partition` (a leaf of the
    part) spreads the whole tree; with unlimited white budget a single
    vertex suffices.  ``p >= 2``: the value is independent of ``q``, so it
    is computed by exact search at ``q = 1`` and revalidated under the
    requested parameters.
    """
    _require_tree(T)
    p = params.p
    if p == 1:
        if params.q_is_infinite:
            seeds = frozenset({0})
        else:
            parts = subtree_partition(T, params.q)
            seeds = frozenset(_part_seed(T, part) for part in parts)
        final, trace = closure(T, params, seeds)
        assert final == frozenset(range(T.n)), "partition seeds failed to spread"
        return SigmaResult(
            value=len(seeds), status="exact", witness=seeds, trace=trace
        )
    base = sigma_exact(T, SpreadParams(p, 1))
    witness = base.witness
    assert witness is not None
    final, trace = closure(T, params, witness)
    assert final == frozenset(range(T.n)), "q=1 witness must spread for larger q"
    return SigmaResult(value=base.value, status="exact", witness=witness, trace=trace)


def tree_lower_bound(n: int, p: int) -> int:
    """``ceil(((p-1)n + 1) / p)``: no tree on n vertices does better (p >= 2)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"bound requires p >= 2, got {p!r}")
    return ((p - 1) * n + p) // p


@dataclass(frozen=True)
class UpperBoundReport:
    bound: int
    attained: bool
    reason: str

    def to_json(self) -> dict:
        return {"bound": self.bound, "attained": self.attained, "reason": self.reason}


def tree_upper_bound(T: Graph, p: int, q: int | float) -> UpperBoundReport:
    """Extremal upper bound for trees of order at least 5, any ``q``.

    ``p = 2``: at most ``n - 1``, with equality exactly for stars.
    ``p >= 3``: at most ``n``, with equality exactly when every degree is
    below ``p``.
    """
    _require_tree(T)
    if not isinstance(p, int) or p < 2:
        raise ValueError("extremal bound stated for integer p >= 2")
    SpreadParams(p, q)  # reject malformed q the same way the engine would
    n = T.n
    if n < 5:
        raise ValueError("extremal bound requires at least 5 vertices")
    if p == 2:
        is_star = T.max_degree == n - 1
        return UpperBoundReport(
            bound=n - 1,
            attained=is_star,
            reason="star" if is_star else "has two branching/internal vertices",
        )
    if T.max_degree < p:
        return UpperBoundReport(
            bound=n, attained=True, reason=f"maximum degree {T.max_degree} below p"
        )
    return UpperBoundReport(
        bound=n,
        attained=False,
        reason="a vertex of degree >= p exists, so its complement spreads",
    )


@dataclass(frozen=True)
class PnpStep:
    """Per-step bookkeeping for the tightness certificate."""

    vertex: int
    pulled: tuple[int, ...]  # seed-component vertices absorbed at this step
    blue_neighbors: int  # neighbors of ``vertex`` inside the step's forest
    seed_edges: int  # edges inside seed part of the forest (k_t)
    forest_components: int  # components of the forest (c_t)

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "pulled": list(self.pulled),
            "blue_neighbors": self.blue_neighbors,
            "seed_edges": self.seed_edges,
            "forest_components": self.forest_components,
        }


@dataclass(frozen=True)
class PnpReport:
    """Outcome of checking property P(n,p) for one set and ordering."""

    holds: bool
    reason: str | None
    seed_set: frozenset[int]
    ordering: tuple[int, ...]
    remainder: int  # rem(n-1, p)
    excess_sum: int  # sum over steps of (blue_neighbors - p)
    seed_edges: int  # |E(T[S])|
    steps: tuple[PnpStep, ...]

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "reason": self.reason,
            "set": sorted(self.seed_set),
            "ordering": list(self.ordering),
            "remainder": self.remainder,
            "excess_sum": self.excess_sum,
            "seed_edges": self.seed_edges,
            "steps": [s.to_json() for s in self.steps],
        }


def _seed_components(T: Graph, S: frozenset[int]) -> dict[int, frozenset[int]]:
    """Map each seed vertex to its connected component within T[S]."""
    comp: dict[int, frozenset[int]] = {}
    seen: set[int] = set()
    for s in sorted(S):
        if s in seen:
            continue
        stack = [s]
        group: set[int] = set()
        while stack:
            u = stack.pop()
            if u in group:
                continue
            group.add(u)
            stack.extend(v for v in T.adj[u] if v in S and v not in group)
        fz = frozenset(group)
        seen |= group
        for u in group:
            comp[u] = fz
    return comp


def check_property_pnp(
    T: Graph, p: int, S, ordering
) -> PnpReport:
    """Evaluate the tightness certificate for ``(S, ordering)``.

    The growing forest starts from the first ordered vertex plus every seed
    component adjacent to it; each later vertex joins together with the
    still-unused seed components adjacent to it.  Requirements: every
    ordered vertex has at least ``p`` neighbors inside its own forest, the
    total excess over ``p`` fits inside ``rem(n-1, p)``, and the seed set
    spends exactly the leftover remainder on internal edges.
    """
    _require_tree(T)
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"certificate requires integer p >= 2, got {p!r}")
    S = frozenset(S)
    if not S <= set(range(T.n)):
        raise ValueError("seed set contains unknown vertices")
    ordering = tuple(ordering)
    if set(ordering) != set(range(T.n)) - S or len(set(ordering)) != len(ordering):
        raise ValueError("ordering is not a permutation of the non-seed vertices")
    n = T.n
    need = tree_lower_bound(n, p)
    remainder = (n - 1) % p
    seed_edges_total = sum(1 for u, v in T.edges() if u in S and v in S)
    if len(S) != need:
        return PnpReport(
            holds=False,
            reason=f"seed set has size {len(S)}, certificate needs {need}",
            seed_set=S,
            ordering=ordering,
            remainder=remainder,
            excess_sum=0,
            seed_edges=seed_edges_total,
            steps=(),
        )
    comp = _seed_components(T, S)
    used: set[int] = set()
    forest: set[int] = set()
    steps: list[PnpStep] = []
    blue_counts: list[int] = []
    for t, v in enumerate(ordering, 1):
        pulled: set[int] = set()
        for u in T.adj[v]:
            if u in S and u not in used:
                pulled |= comp[u] - used
        used |= pulled
        forest.add(v)
        forest |= pulled
        nfi = sum(1 for u in T.adj[v] if u in forest)
        blue_counts.append(nfi)
        k_t = sum(1 for u, w in T.edges() if u in forest and w in forest and u in S and w in S)
        c_t = len(_forest_components(T, forest))
        steps.append(
            PnpStep(
                vertex=v,
                pulled=tuple(sorted(pulled)),
                blue_neighbors=nfi,
                seed_edges=k_t,
                forest_components=c_t,
            )
        )
        # Invariant of the forest construction on trees: vertices = internal
        # seed edges + components + accumulated forced-neighbor counts.
        assert len(forest) == k_t + c_t + sum(blue_counts), "forest balance broken"
    excess = sum(c - p for c in blue_counts)
    if ordering:
        assert forest == set(range(n)), "complete ordering must absorb every seed"
        assert n - 1 == p * len(ordering) + seed_edges_total + excess
    reason = None
    if any(c < p for c in blue_counts):
        first = next(t for t, c in enumerate(blue_counts, 1) if c < p)
        reason = f"step {first}: vertex {ordering[first - 1]} has fewer than {p} forest neighbors"
    elif remainder < excess:
        reason = f"excess {excess} exceeds remainder {remainder}"
    elif seed_edges_total != remainder - excess:
        reason = (
            f"seed set induces {seed_edges_total} edges, certificate needs "
            f"{remainder - excess}"
        )
    return PnpReport(
        holds=reason is None,
        reason=reason,
        seed_set=S,
        ordering=ordering,
        remainder=remainder,
        excess_sum=excess,
        seed_edges=seed_edges_total,
        steps=tuple(steps),
    )


def _forest_components(T: Graph, vertices: set[int]) -> list[set[int]]:
    comps = []
    seen: set[int] = set()
    for s in vertices:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for v in T.adj[u]:
                if v in vertices and v not in comp:
                    comp.add(v)
                    stack.append(v)
        seen |= comp
        comps.append(comp)
    return comps


def search_property_pnp(T: Graph, p: int, max_n: int = 14) -> PnpReport | None:
    """Exhaustively look for a tightness certificate; None if there is none.

    Candidate seed sets of the required size are enumerated (vertices of
    degree below ``p`` are always included); an ordering exists iff the set
    spreads under ``(p, infinity)``, because once a vertex has ``p`` blue
    neighbors it keeps them, so greedy extension never needs to backtrack.
    The found/none outcome is cross-checked against the tree's spreading
    number, which equals the lower bound exactly when a certificate exists.
    """
    _require_tree(T)
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"certificate requires integer p >= 2, got {p!r}")
    if T.n > max_n:
        raise BudgetExhausted(
            f"certificate search is desk-scale only (n <= {max_n})", evaluations=0
        )
    n = T.n
    need = tree_lower_bound(n, p)
    deg = T.degrees
    forced = [v for v in range(n) if deg[v] < p]
    free = [v for v in range(n) if deg[v] >= p]
    params = SpreadParams(p, INFINITY)
    report: PnpReport | None = None
    if len(forced) <= need and need - len(forced) <= len(free):
        for combo in combinations(free, need - len(forced)):
            seeds = frozenset(forced) | frozenset(combo)
            final, trace = closure(T, params, seeds)
            if len(final) != n:
                continue
            report = check_property_pnp(T, p, seeds, trace.forced)
            assert report.holds, "spreading order must certify"
            break
    attained = sigma_tree(T, SpreadParams(p, 1)).value == need
    assert attained == (report is not None), (
        "certificate existence must match attainment of the lower bound"
    )
    return report


def tight_tree(n: int, p: int) -> Graph:
    """A tree of order ``n`` whose spreading number meets the lower bound.

    Seeds ``0..f-1`` (f the bound) and forced vertices ``f..n-1`` form two
    independent sets; consecutive forced vertices share one seed neighbor,
    each grabbing ``p`` seeds, with the last taking all leftovers.
    """
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"construction requires p >= 2, got {p!r}")
    if not isinstance(n, int) or n < p + 1:
        raise ValueError(f"construction requires n >= p + 1, got {n!r}")
    f = tree_lower_bound(n, p)
    t = n - f
    edges = []
    for i in range(1, t):
        lo = (i - 1) * (p - 1)
        edges.extend((f - 1 + i, w) for w in range(lo, lo + p))
    lo = (t - 1) * (p - 1)
    edges.extend((n - 1, w) for w in range(lo, f))
    return Graph.from_edges(n, edges)
