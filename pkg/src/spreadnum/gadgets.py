"""Hardness-reduction gadget builders and desk-scale certification.

Two constructions transfer known-hard problems into this setting.  The
q-forcing gadget hangs a clique chain off every vertex so that q-forcing
the result costs exactly the zero-forcing number of the base graph.  The
spreading gadget adds ``p - 1`` universal vertices, each carrying ``p``
private leaves, so that (p,q)-spreading the result costs exactly the
q-forcing number of the base graph plus ``p (p - 1)``.  The certifiers
recompute both sides exactly on small graphs and also validate the
constructive "lift" of every minimum base set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import SpreadParams, is_spreading_set
from .graphs import Graph
from .solver import DEFAULT_EVALUATION_BUDGET, Budget, enumerate_minimum_sets, sigma_exact


def build_qforcing_gadget(G: Graph, q: int) -> Graph:
    """Attach the clique-chain gadget to every vertex; needs ``q >= 2``.

    Vertex ``i`` gains companions ``a1..a(q-1)``, ``b1..bq``, ``c1..cq``:
    the a's hang off ``i``, the a's and b's form one clique, the b's and
    c's another.  Output has ``3 q n`` vertices; labels record each
    companion's role and owner, e.g. ``"b2^i"``.
    """
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"gadget requires integer q >= 2, got {q!r}")
    n = G.n
    edges = list(G.edges())
    labels = {v: f"v{v}" for v in range(n)}
    for i in range(n):
        base = n + i * (3 * q - 1)
        a = list(range(base, base + q - 1))
        b = list(range(base + q - 1, base + 2 * q - 1))
        c = list(range(base + 2 * q - 1, base + 3 * q - 1))
        for j, v in enumerate(a, 1):
            labels[v] = f"a{j}^{i}"
            edges.append((i, v))
        for j, v in enumerate(b, 1):
            labels[v] = f"b{j}^{i}"
        for j, v in enumerate(c, 1):
            labels[v] = f"c{j}^{i}"
        ab = a + b
        edges.extend((ab[x], ab[y]) for x in range(len(ab)) for y in range(x + 1, len(ab)))
        bc = b + c
        edges.extend((bc[x], bc[y]) for x in range(len(bc)) for y in range(x + 1, len(bc)))
    return Graph.from_edges(3 * q * n, edges, labels)


def build_spreading_gadget(G: Graph, p: int) -> Graph:
    """Add ``p - 1`` universal vertices with ``p`` private leaves each.

    Output has ``n + (p - 1) + p (p - 1)`` vertices; universal vertices are
    labeled ``"u1".."u(p-1)"`` and leaves ``"leaf j^uk"``.
    """
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"gadget requires integer p >= 2, got {p!r}")
    n = G.n
    edges = list(G.edges())
    labels = {v: f"v{v}" for v in range(n)}
    leaf_base = n + p - 1
    for k in range(1, p):
        u = n + k - 1
        labels[u] = f"u{k}"
        edges.extend((u, v) for v in range(n))
        for j in range(1, p + 1):
            leaf = leaf_base + (k - 1) * p + (j - 1)
            labels[leaf] = f"leaf{j}^u{k}"
            edges.append((u, leaf))
    return Graph.from_edges(n + (p - 1) + p * (p - 1), edges, labels)


def gadget_leaves(G: Graph) -> frozenset[int]:
    """Vertices labeled as gadget leaves (the forced part of any lift)."""
    return frozenset(v for v, lab in G.label_map.items() if lab.startswith("leaf"))


@dataclass(frozen=True)
class QForcingCertificate:
    """Exact comparison of zero forcing on G and q-forcing on its gadget."""

    zero_forcing: int
    gadget_forcing: int
    equal: bool
    lifts_checked: int
    lifts_valid: bool

    def to_json(self) -> dict:
        return {
            "zero_forcing": self.zero_forcing,
            "gadget_forcing": self.gadget_forcing,
            "equal": self.equal,
            "lifts_checked": self.lifts_checked,
            "lifts_valid": self.lifts_valid,
        }


@dataclass(frozen=True)
class SpreadingCertificate:
    """Exact comparison of q-forcing on G and spreading on its gadget."""

    forcing: int
    gadget_spreading: int
    expected: int
    equal: bool
    lifts_checked: int
    lifts_valid: bool

    def to_json(self) -> dict:
        return {
            "forcing": self.forcing,
            "gadget_spreading": self.gadget_spreading,
            "expected": self.expected,
            "equal": self.equal,
            "lifts_checked": self.lifts_checked,
            "lifts_valid": self.lifts_valid,
        }


def certify_qforcing_gadget(
    G: Graph, q: int, budget: int | None = None, lift_limit: int | None = None
) -> QForcingCertificate:
    """Check ``q-forcing(gadget) == zero-forcing(G)`` by exact search.

    Also validates the constructive direction: every minimum zero-forcing
    set of ``G`` (up to ``lift_limit`` of them) must q-force the gadget
    as-is, since original vertices keep their ids.
    """
    shared = Budget(DEFAULT_EVALUATION_BUDGET if budget is None else budget)
    zero = sigma_exact(G, SpreadParams(1, 1), shared).value
    gadget = build_qforcing_gadget(G, q)
    qf_params = SpreadParams(1, q)
    lifts = enumerate_minimum_sets(G, SpreadParams(1, 1), limit=lift_limit, budget=shared)
    lifts_valid = all(is_spreading_set(gadget, qf_params, S) for S in lifts)
    gadget_value = sigma_exact(gadget, qf_params, shared).value
    assert zero is not None and gadget_value is not None
    return QForcingCertificate(
        zero_forcing=zero,
        gadget_forcing=gadget_value,
        equal=gadget_value == zero,
        lifts_checked=len(lifts),
        lifts_valid=lifts_valid,
    )


def certify_spreading_gadget(
    G: Graph,
    p: int,
    q: int,
    budget: int | None = None,
    lift_limit: int | None = None,
) -> SpreadingCertificate:
    """Check ``spreading(gadget) == q-forcing(G) + p (p - 1)`` exactly.

    The gadget's leaves have degree 1 < p, so the solver pins them into
    every candidate automatically; the constructive lift of a minimum
    q-forcing set is that set plus all leaves.
    """
    shared = Budget(DEFAULT_EVALUATION_BUDGET if budget is None else budget)
    qf_params = SpreadParams(1, q)
    forcing = sigma_exact(G, qf_params, shared).value
    gadget = build_spreading_gadget(G, p)
    sp_params = SpreadParams(p, q)
    leaves = gadget_leaves(gadget)
    lifts = enumerate_minimum_sets(G, qf_params, limit=lift_limit, budget=shared)
    lifts_valid = all(is_spreading_set(gadget, sp_params, S | leaves) for S in lifts)
    gadget_value = sigma_exact(gadget, sp_params, shared).value
    assert forcing is not None and gadget_value is not None
    expected = forcing + p * (p - 1)
    return SpreadingCertificate(
        forcing=forcing,
        gadget_spreading=gadget_value,
        expected=expected,
        equal=gadget_value == expected,
        lifts_checked=len(lifts),
        lifts_valid=lifts_valid,
    )
