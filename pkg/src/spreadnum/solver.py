"""Exact minimum spreading sets by ascending-cardinality subset search.

This is the reference oracle for every formula and tree algorithm in the
package.  Candidate sets are enumerated as int bitmasks in ascending size,
so the first feasible cardinality is optimal and no branch-and-bound
bookkeeping is needed.  Three reductions keep the search honest at desk
scale: vertices of degree below ``p`` can never be forced and are fixed in
every candidate, components are solved independently, and candidates in
which every member keeps more than ``q`` outside neighbors are skipped
because no force can ever begin from them.
"""

from __future__ import annotations

from itertools import combinations

from .engine import SigmaResult, SpreadParams, _close, closure
from .graphs import Graph


class BudgetExhausted(RuntimeError):
    """Search gave up before proving a value; never reports a wrong exact.

    ``lower_bound`` is the best cardinality proven unreachable plus one (or
    the static bound) at the moment the budget ran out; ``upper_bound`` is a
    feasible value if one was already found.
    """

    def __init__(
        self,
        message: str,
        *,
        evaluations: int,
        lower_bound: int | None = None,
        upper_bound: int | None = None,
    ) -> None:
        super().__init__(message)
        self.evaluations = evaluations
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound


#: Evaluation cap applied when no budget is given, so a search on an
#: oversized graph reports exhaustion instead of running forever.  Far above
#: anything a desk-scale instance needs; pass ``Budget(None)`` to lift it.
DEFAULT_EVALUATION_BUDGET = 5_000_000


class Budget:
    """Counts closure evaluations; hardware-independent 'gave up' behavior."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None) -> None:
        if limit is not None and limit < 1:
            raise ValueError("budget must be a positive evaluation count")
        self.limit = limit
        self.used = 0

    def charge(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExhausted(
                f"closure-evaluation budget of {self.limit} exhausted",
                evaluations=self.used - 1,
            )


def _as_budget(budget: int | Budget | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(DEFAULT_EVALUATION_BUDGET if budget is None else budget)


def lower_bound(G: Graph, params: SpreadParams) -> int:
    """Static lower bound on the spreading number; never exceeds it.

    Takes the best of: ``min(p, n)``; the number of vertices of degree below
    ``p`` (they can never be forced); and, on trees with ``p >= 2``, the
    ceiling of ``((p-1)n + 1) / p``.
    """
    n = G.n
    p = params.p
    lb = max(min(p, n), sum(1 for d in G.degrees if d < p))
    if p >= 2 and G.is_tree:
        lb = max(lb, ((p - 1) * n + p) // p)
    return lb


def _search_component(
    G: Graph, params: SpreadParams, budget: Budget, k_max: int | None = None
) -> tuple[int, frozenset[int]] | None:
    """Smallest spreading set of a connected graph, or None above ``k_max``.

    Raises :class:`BudgetExhausted` (annotated with the best bounds known at
    that point) if the evaluation budget runs out first.
    """
    n = G.n
    p = params.p
    qe = params.effective_q(n)
    adj, deg, masks = G.adj, G.degrees, G.neighbor_masks
    forced = [v for v in range(n) if deg[v] < p]
    free = [v for v in range(n) if deg[v] >= p]
    forced_mask = 0
    for v in forced:
        forced_mask |= 1 << v
    lo = max(lower_bound(G, params), len(forced))
    hi = n if k_max is None else min(k_max, n)
    for k in range(lo, hi + 1):
        r = k - len(forced)
        if r > len(free):
            break
        for combo in combinations(free, r):
            smask = forced_mask
            for v in combo:
                smask |= 1 << v
            if k < n and not any(
                deg[v] - (masks[v] & smask).bit_count() <= qe
                for v in forced + list(combo)
            ):
                continue  # no member could ever start a force
            try:
                budget.charge()
            except BudgetExhausted as exc:
                exc.lower_bound = k
                raise
            blue, _ = _close(adj, deg, n, p, qe, forced + list(combo))
            if all(blue):
                return k, frozenset(forced + list(combo))
    return None


def sigma_exact(
    G: Graph, params: SpreadParams, budget: int | Budget | None = None
) -> SigmaResult:
    """Exact spreading number with a re-validated witness and trace.

    Components are independent (the rule never crosses them), so the value
    is the sum of per-component minima.  Deterministic: candidate sets are
    enumerated in a fixed lexicographic order.  Without an explicit budget
    the search is capped at :data:`DEFAULT_EVALUATION_BUDGET` closure
    evaluations and raises :class:`BudgetExhausted` beyond that, so the
    call always terminates.
    """
    if G.n < 1:
        raise ValueError("graph must have at least one vertex")
    b = _as_budget(budget)
    total = 0
    witness: set[int] = set()
    comps = G.components()
    for idx, comp in enumerate(comps):
        sub, old_ids = G.induced(comp)
        try:
            found = _search_component(sub, params, b)
        except BudgetExhausted as exc:
            solved_lb = total + (exc.lower_bound or 0)
            for rest in comps[idx + 1 :]:
                rsub, _ = G.induced(rest)
                solved_lb += lower_bound(rsub, params)
            raise BudgetExhausted(
                str(exc), evaluations=exc.evaluations, lower_bound=solved_lb
            ) from None
        assert found is not None  # a full component always spreads itself
        k, local = found
        total += k
        witness.update(old_ids[v] for v in local)
    final, trace = closure(G, params, witness)
    assert final == frozenset(range(G.n)), "witness failed re-validation"
    return SigmaResult(
        value=total, status="exact", witness=frozenset(witness), trace=trace
    )


def sigma_upper_search(
    G: Graph, params: SpreadParams, k_max: int, budget: int | Budget | None = None
) -> tuple[int, frozenset[int]] | None:
    """Smallest spreading set of size at most ``k_max``, or None.

    Used by gadget certification to confirm that nothing beats a
    construction-provided upper bound without enumerating larger sets.
    """
    if G.n < 1:
        raise ValueError("graph must have at least one vertex")
    if not G.is_connected:
        raise ValueError("bounded search expects a connected graph")
    return _search_component(G, params, _as_budget(budget), k_max=k_max)


def enumerate_minimum_sets(
    G: Graph,
    params: SpreadParams,
    limit: int | None = None,
    budget: int | Budget | None = None,
) -> list[frozenset[int]]:
    """All (up to ``limit``) spreading sets of minimum cardinality.

    Each returned set has been validated by running it to closure; output is
    sorted, so repeated runs agree element for element.
    """
    b = _as_budget(budget)
    k = sigma_exact(G, params, b).value
    n, p = G.n, params.p
    qe = params.effective_q(n)
    adj, deg, masks = G.adj, G.degrees, G.neighbor_masks
    forced = [v for v in range(n) if deg[v] < p]
    free = [v for v in range(n) if deg[v] >= p]
    out: list[frozenset[int]] = []
    if k - len(forced) < 0 or k - len(forced) > len(free):
        return out
    for combo in combinations(free, k - len(forced)):
        members = forced + list(combo)
        smask = 0
        for v in members:
            smask |= 1 << v
        if k < n and not any(
            deg[v] - (masks[v] & smask).bit_count() <= qe for v in members
        ):
            continue
        b.charge()
        blue, _ = _close(adj, deg, n, p, qe, members)
        if all(blue):
            out.append(frozenset(members))
            if limit is not None and len(out) >= limit:
                break
    return sorted(out, key=sorted)
