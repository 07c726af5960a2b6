"""Chromatic-number bounds and an exact solver with verifiable witnesses.

The exact solver is DSATUR-ordered branch and bound: a greedy clique pins
its vertices to distinct colors, a greedy DSATUR coloring seeds the upper
bound, and the search only ever tries used colors plus one fresh color per
node, which kills color-permutation symmetry. Work is metered in node
expansions so results are budget-honest: on exhaustion the result degrades
to (clique lower bound, best coloring found) with exact=False, never to a
wrong claim.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, VertexColoring, iter_bits

DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True)
class ChiResult:
    """Bounds plus a proper coloring witnessing the upper bound."""

    lower: int
    upper: int
    witness: VertexColoring
    exact: bool

    def to_json(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "classes": self.witness.classes(),
        }


def verify_proper(g: Graph, vc: VertexColoring) -> bool:
    """True iff vc covers all vertices and no edge is monochromatic."""
    if len(vc.class_of) != g.n:
        raise ValueError("coloring does not cover every vertex")
    masks = [0] * vc.k
    for v, c in enumerate(vc.class_of):
        masks[c] |= 1 << v
    return all((g.adj[v] & masks[c]) == 0 for v, c in enumerate(vc.class_of))


def _trivial_lower(g: Graph) -> int:
    if g.n == 0:
        return 0
    return 2 if any(g.adj) else 1


def greedy_upper(g: Graph, order="dsatur") -> ChiResult:
    """Greedy coloring; order is "dsatur", "degeneracy", or a vertex sequence."""
    n = g.n
    if n == 0:
        return ChiResult(0, 0, VertexColoring(0, ()), True)
    if order == "dsatur":
        assign = _dsatur_greedy(g)
    else:
        if order == "degeneracy":
            seq = _degeneracy_order(g)
            seq.reverse()
        else:
            seq = list(order)
            if sorted(seq) != list(range(n)):
                raise ValueError("order must be a permutation of range(n)")
        assign = [-1] * n
        for v in seq:
            forbid = 0
            for u in iter_bits(g.adj[v]):
                if assign[u] >= 0:
                    forbid |= 1 << assign[u]
            c = 0
            while (forbid >> c) & 1:
                c += 1
            assign[v] = c
    witness = VertexColoring.normalized(assign)
    lower = _trivial_lower(g)
    return ChiResult(lower, witness.k, witness, witness.k == lower)


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    deg = [g.adj[v].bit_count() for v in range(n)]
    assign = [-1] * n
    neigh = [0] * n  # bitmask of colors seen on colored neighbors
    for _ in range(n):
        pick, psat, pdeg = -1, -1, -1
        for v in range(n):
            if assign[v] < 0:
                s = neigh[v].bit_count()
                if s > psat or (s == psat and deg[v] > pdeg):
                    pick, psat, pdeg = v, s, deg[v]
        c = 0
        while (neigh[pick] >> c) & 1:
            c += 1
        assign[pick] = c
        for u in iter_bits(g.adj[pick]):
            neigh[u] |= 1 << c
    return assign


def _degeneracy_order(g: Graph) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (ties by index)."""
    remaining = (1 << g.n) - 1
    out = []
    for _ in range(g.n):
        best, bdeg = -1, g.n + 1
        for v in iter_bits(remaining):
            d = (g.adj[v] & remaining).bit_count()
            if d < bdeg:
                best, bdeg = v, d
        out.append(best)
        remaining &= ~(1 << best)
    return out


def _greedy_clique(g: Graph) -> list[int]:
    """Grow a clique greedily from every seed vertex; keep the largest."""
    n = g.n
    best: list[int] = []
    order = sorted(range(n), key=lambda v: (-g.adj[v].bit_count(), v))
    for v in order:
        if g.adj[v].bit_count() + 1 <= len(best):
            continue
        clique = [v]
        cand = g.adj[v]
        while cand:
            pick, pkey = -1, (-1, 0)
            for u in iter_bits(cand):
                key = ((g.adj[u] & cand).bit_count(), -u)
                if key > pkey:
                    pick, pkey = u, key
            clique.append(pick)
            cand &= g.adj[pick]
        if len(clique) > len(best):
            best = clique
    return best


def clique_lower(g: Graph) -> int:
    if g.n == 0:
        return 0
    return len(_greedy_clique(g))


class _Budget(Exception):
    pass


class _Done(Exception):
    pass


def chi_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> ChiResult:
    """Exact chromatic number within a node-expansion budget.

    Returns exact bounds when the search finishes; on budget exhaustion the
    lower bound falls back to the greedy clique and exact is False.
    """
    n = g.n
    if n == 0:
        return ChiResult(0, 0, VertexColoring(0, ()), True)
    adj = g.adj
    deg = [adj[v].bit_count() for v in range(n)]
    clique = _greedy_clique(g)
    lb = max(1, len(clique))
    seed = greedy_upper(g, "dsatur")
    best_k = seed.upper
    best_assign = list(seed.witness.class_of)
    if lb >= best_k:
        return ChiResult(best_k, best_k, seed.witness, True)

    colors = [-1] * n
    neigh = [0] * n
    for i, v in enumerate(clique):
        colors[v] = i
        for u in iter_bits(adj[v]):
            neigh[u] |= 1 << i
    nodes = 0

    def search(used: int, uncolored: int) -> None:
        nonlocal nodes, best_k, best_assign
        nodes += 1
        if nodes > budget:
            raise _Budget
        if uncolored == 0:
            best_k = used
            best_assign = colors[:]
            if best_k <= lb:
                raise _Done
            return
        pick, psat, pdeg = -1, -1, -1
        for v in range(n):
            if colors[v] < 0:
                s = neigh[v].bit_count()
                if s > psat or (s == psat and deg[v] > pdeg):
                    pick, psat, pdeg = v, s, deg[v]
        forbid = neigh[pick]
        row = adj[pick]
        for c in range(used + 1):
            if c >= best_k - 1:
                break
            if (forbid >> c) & 1:
                continue
            bit = 1 << c
            colors[pick] = c
            changed = 0
            for u in iter_bits(row):
                if colors[u] < 0 and not (neigh[u] & bit):
                    neigh[u] |= bit
                    changed |= 1 << u
            search(used + (1 if c == used else 0), uncolored - 1)
            for u in iter_bits(changed):
                neigh[u] &= ~bit
        colors[pick] = -1

    exact = True
    try:
        search(len(clique), n - len(clique))
    except _Done:
        pass
    except _Budget:
        exact = False
    witness = VertexColoring.normalized(best_assign)
    if exact:
        return ChiResult(best_k, best_k, witness, True)
    return ChiResult(lb, best_k, witness, False)
