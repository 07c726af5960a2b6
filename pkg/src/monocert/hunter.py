"""Counterexample hunting for monochromatic acyclic patterns.

Core pieces: forest containment, the folklore minimum-degree tree
embedding, an exhaustive arrowing check on complete graphs, candidate-graph
generators, and ``hunt``, which searches candidate hosts for an edge
coloring avoiding a pattern in every color.

The shared search kernel backtracks over edges in a BFS-derived order and
assigns one color at a time; a branch dies as soon as every color choice
would complete a copy of that color's pattern. Containment tests are
incremental: along a live branch each class was pattern-free before the new
edge arrived, so only copies through the new edge need to be sought, and
the memo keyed by the class's edge set stays sound. Work is metered in
partial colorings visited (one per backtracking node entered), which is the
deterministic "colorings examined" unit reported everywhere; budgets cap
that count and exhaustion flags are set honestly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb, log2

from .graphs import (
    EdgeColoring,
    Graph,
    InternalInconsistencyError,
    canonical_edge,
    color_subgraph,
    complete_graph,
    complete_multipartite,
    component_masks,
    induced_subgraph,
    iter_bits,
    parse_graph,
    write_graph,
)
from . import chromatic
from .chromatic import chi_exact


@dataclass(frozen=True)
class AcyclicPattern:
    """A forest to be forbidden monochromatically."""

    graph: Graph

    def __post_init__(self):
        g = self.graph
        if g.m != g.n - len(component_masks(g)):
            raise ValueError("pattern contains a cycle")

    @property
    def is_tree(self) -> bool:
        return self.graph.n >= 1 and self.graph.m == self.graph.n - 1


def path_pattern(k: int) -> AcyclicPattern:
    from .graphs import path_graph

    return AcyclicPattern(path_graph(k))


def star_pattern(leaves: int) -> AcyclicPattern:
    from .graphs import star_graph

    return AcyclicPattern(star_graph(leaves))


def matching_pattern(k: int) -> AcyclicPattern:
    """k pairwise disjoint edges."""
    if k < 1:
        raise ValueError("need at least one edge")
    return AcyclicPattern(Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)]))


# ---------------------------------------------------------------------------
# containment

def _embedding_order(p: Graph, seed: tuple[int, int] | None = None):
    """(vertex, parent) placement order; parent -1 means free placement.

    Components are taken largest first; within a component placement follows
    BFS, so every non-root vertex has exactly one already-placed neighbor
    (patterns are forests). With a seed edge its component comes first and
    both endpoints are assumed placed.
    """
    placed = set()
    order: list[tuple[int, int]] = []

    def bfs(queue: list[int]) -> None:
        while queue:
            x = queue.pop(0)
            for y in p.neighbors(x):
                if y not in placed:
                    placed.add(y)
                    order.append((y, x))
                    queue.append(y)

    if seed is not None:
        placed.update(seed)
        bfs(list(seed))
    comps = [tuple(iter_bits(m)) for m in component_masks(p)]
    deg = [p.adj[v].bit_count() for v in range(p.n)]
    for comp in sorted(comps, key=lambda c: (-len(c), c)):
        if comp[0] in placed:
            continue
        root = max(comp, key=lambda z: (deg[z], -z))
        placed.add(root)
        order.append((root, -1))
        bfs([root])
    return tuple(order)


def _dfs_embed(rows, n: int, pdeg, order, i: int, used: int, images) -> bool:
    if i == len(order):
        return True
    pv, parent = order[i]
    need = pdeg[pv]
    if parent >= 0:
        cand = rows[images[parent]] & ~used
    else:
        cand = ((1 << n) - 1) & ~used
    for w in iter_bits(cand):
        if rows[w].bit_count() >= need:
            images[pv] = w
            if _dfs_embed(rows, n, pdeg, order, i + 1, used | (1 << w), images):
                return True
    return False


def contains_forest(g: Graph, h: AcyclicPattern) -> tuple[int, ...] | None:
    """Injective embedding of h into g preserving edges, or None."""
    p = h.graph
    if p.n > g.n:
        return None
    if p.n == 0:
        return ()
    pdeg = [p.adj[v].bit_count() for v in range(p.n)]
    order = _embedding_order(p)
    images = [-1] * p.n
    if _dfs_embed(g.adj, g.n, pdeg, order, 0, 0, images):
        return tuple(images)
    return None


# ---------------------------------------------------------------------------
# folklore embedding

def peel_core_vertices(g: Graph, d: int) -> tuple[int, ...] | None:
    """Original ids surviving repeated deletion of degree < d vertices."""
    alive = (1 << g.n) - 1
    changed = True
    while changed and alive:
        changed = False
        for v in iter_bits(alive):
            if (g.adj[v] & alive).bit_count() < d:
                alive &= ~(1 << v)
                changed = True
    if not alive:
        return None
    return tuple(iter_bits(alive))


def peel_to_min_degree(g: Graph, d: int) -> Graph | None:
    """Maximum subgraph of minimum degree >= d, relabeled 0..k-1; None if empty."""
    core = peel_core_vertices(g, d)
    if core is None:
        return None
    return induced_subgraph(g, core)


def embed_tree_folklore(g: Graph, h: AcyclicPattern, chi_lower: int) -> tuple[int, ...]:
    """Embed a tree on at most chi_lower vertices, greedily, into the peeled core.

    Any graph with chi >= k keeps a non-empty subgraph of minimum degree
    k-1, and a greedy parent-by-parent placement inside it can never get
    stuck. chi_lower must be a true lower bound on chi(g); an empty core
    refutes it and raises InternalInconsistencyError.
    """
    if not h.is_tree:
        raise ValueError("pattern must be a tree")
    k = h.graph.n
    if k > chi_lower:
        raise ValueError(f"tree has {k} vertices, above chi_lower={chi_lower}")
    core = peel_core_vertices(g, k - 1)
    if core is None:
        raise InternalInconsistencyError(
            f"no subgraph of minimum degree {k - 1} exists, so chi(g) < {k} "
            f"<= chi_lower={chi_lower}; the supplied bound cannot be correct"
        )
    core_mask = 0
    for v in core:
        core_mask |= 1 << v
    order = _embedding_order(h.graph)
    images = [-1] * k
    used = 0
    for pv, parent in order:
        if parent < 0:
            cand = core_mask & ~used
        else:
            cand = g.adj[images[parent]] & core_mask & ~used
        if not cand:
            raise InternalInconsistencyError(
                "greedy tree embedding stalled inside a core of sufficient degree"
            )
        w = (cand & -cand).bit_length() - 1
        images[pv] = w
        used |= 1 << w
    for u, v in h.graph.edges():
        if not g.has_edge(images[u], images[v]):
            raise InternalInconsistencyError("embedding failed to preserve an edge")
    return tuple(images)


# ---------------------------------------------------------------------------
# search kernel

class _PatternMatcher:
    """Does adding edge (u, v) to a pattern-free class create the pattern?

    Matching patterns get a direct search for enough disjoint edges; other
    forests get a seeded embedding from every pattern edge mapped onto
    (u, v), memoized by the class's edge-index mask (sound because on live
    branches the class minus the new edge is pattern-free, so "contains a
    copy through (u, v)" and "contains a copy" coincide).
    """

    __slots__ = ("n", "pn", "pdeg", "match_size", "plans", "cache")

    def __init__(self, pattern: AcyclicPattern, host_n: int):
        p = pattern.graph
        if p.m == 0:
            raise ValueError("pattern needs at least one edge")
        self.n = host_n
        self.pn = p.n
        self.pdeg = [p.adj[v].bit_count() for v in range(p.n)]
        if all(d == 1 for d in self.pdeg):
            self.match_size = p.m
            self.plans = ()
        else:
            self.match_size = None
            plans = []
            for a, b in p.edges():
                order = _embedding_order(p, seed=(a, b))
                plans.append((a, b, order))
                plans.append((b, a, order))
            self.plans = tuple(plans)
        self.cache: dict[int, bool] = {}

    def creates(self, rows, u: int, v: int, mask: int) -> bool:
        if self.match_size is not None:
            k = self.match_size
            if k == 1:
                return True
            return _exists_matching(rows, (1 << u) | (1 << v), k - 1, self.n)
        hit = self.cache.get(mask)
        if hit is not None:
            return hit
        res = self._embed_any(rows, u, v)
        if len(self.cache) > 1_000_000:
            self.cache.clear()
        self.cache[mask] = res
        return res

    def _embed_any(self, rows, u: int, v: int) -> bool:
        du = rows[u].bit_count()
        dv = rows[v].bit_count()
        pdeg = self.pdeg
        images = [-1] * self.pn
        for a, b, order in self.plans:
            if pdeg[a] > du or pdeg[b] > dv:
                continue
            images[a] = u
            images[b] = v
            if _dfs_embed(rows, self.n, pdeg, order, 0, (1 << u) | (1 << v), images):
                return True
        return False


def _exists_matching(rows, excl: int, k: int, n: int) -> bool:
    """k disjoint edges avoiding excl vertices; every vertex may be skipped."""
    if k == 0:
        return True
    v = -1
    for w in range(n):
        if not (excl >> w) & 1 and rows[w] & ~excl:
            v = w
            break
    if v < 0:
        return False
    for x in iter_bits(rows[v] & ~excl):
        if _exists_matching(rows, excl | (1 << v) | (1 << x), k - 1, n):
            return True
    return _exists_matching(rows, excl | (1 << v), k, n)


def _bfs_edge_order(g: Graph) -> list[tuple[int, int]]:
    """Edges sorted so each BFS-discovered vertex brings its back edges."""
    pos = [-1] * g.n
    nxt = 0
    for start in range(g.n):
        if pos[start] >= 0:
            continue
        pos[start] = nxt
        nxt += 1
        frontier = [start]
        while frontier:
            new = []
            for u in frontier:
                for w in iter_bits(g.adj[u]):
                    if pos[w] < 0:
                        pos[w] = nxt
                        nxt += 1
                        new.append(w)
            frontier = new
    return sorted(
        g.edges(),
        key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])),
    )


class _BudgetHit(Exception):
    pass


def _search_avoiding(
    g: Graph, patterns, budget: int | None = None
) -> tuple[EdgeColoring | None, bool, int]:
    """Find a t-coloring of E(g) with no pattern monochromatic.

    Returns (coloring or None, exhausted, partial colorings visited);
    exhausted is True only when the whole tree was covered and nothing was
    found.
    """
    n = g.n
    edges = _bfs_edge_order(g)
    t = len(patterns)
    matchers: dict[int, _PatternMatcher] = {}
    per_color = []
    for p in patterns:
        key = id(p)
        if key not in matchers:
            matchers[key] = _PatternMatcher(p, n)
        per_color.append(matchers[key])
    E = len(edges)
    rows = [[0] * n for _ in range(t)]
    masks = [0] * t
    assign = [-1] * E
    nodes = 0
    found: list[int] | None = None

    def rec(i: int) -> bool:
        nonlocal nodes, found
        nodes += 1
        if budget is not None and nodes > budget:
            raise _BudgetHit
        if i == E:
            found = assign[:]
            return True
        u, v = edges[i]
        ub, vb, eb = 1 << u, 1 << v, 1 << i
        for c in range(t):
            rc = rows[c]
            rc[u] |= vb
            rc[v] |= ub
            masks[c] |= eb
            if not per_color[c].creates(rc, u, v, masks[c]):
                assign[i] = c
                if rec(i + 1):
                    return True
                assign[i] = -1
            rc[u] &= ~vb
            rc[v] &= ~ub
            masks[c] &= ~eb
        return False

    try:
        rec(0)
    except _BudgetHit:
        return None, False, nodes
    if found is not None:
        coloring = EdgeColoring(t, {edges[i]: found[i] + 1 for i in range(E)})
        return coloring, False, nodes
    return None, True, nodes


@dataclass(frozen=True)
class ArrowingResult:
    arrowing: bool
    avoiding: EdgeColoring | None
    colorings_examined: int


def ramsey_bruteforce(patterns, n: int, guard_bits: int = 28) -> ArrowingResult:
    """Exhaustively decide whether K_n forces some pattern monochromatic.

    Refuses instances whose raw search space exceeds 2**guard_bits
    (C(n,2) * log2(t) bits); within the guard the answer is always
    definitive, with an explicit avoiding coloring on the negative side.
    """
    patterns = list(patterns)
    t = len(patterns)
    if t < 1:
        raise ValueError("need at least one pattern")
    bits = comb(n, 2) * (log2(t) if t > 1 else 0.0)
    if bits > guard_bits:
        raise ValueError(
            f"search space is 2^{bits:.1f}, above the 2^{guard_bits} guard"
        )
    found, exhausted, nodes = _search_avoiding(complete_graph(n), patterns, None)
    assert exhausted or found is not None
    return ArrowingResult(found is None, found, nodes)


# ---------------------------------------------------------------------------
# candidate generators

def mycielskian(g: Graph) -> Graph:
    """Mycielski step: chi rises by exactly 1, triangle-freeness is kept."""
    n = g.n
    edges = list(g.edges())
    out = list(edges)
    for u, v in edges:
        out.append((n + u, v))
        out.append((n + v, u))
    apex = 2 * n
    out.extend((n + i, apex) for i in range(n))
    return Graph.from_edges(2 * n + 1, out)


def kneser_graph(n: int, k: int) -> Graph:
    """k-subsets of an n-set, adjacent when disjoint."""
    if not 0 < k <= n:
        raise ValueError("need 0 < k <= n")
    subsets = list(combinations(range(n), k))
    masks = []
    for s in subsets:
        m = 0
        for x in s:
            m |= 1 << x
        masks.append(m)
    edges = [
        (i, j)
        for i in range(len(subsets))
        for j in range(i + 1, len(subsets))
        if not masks[i] & masks[j]
    ]
    return Graph.from_edges(len(subsets), edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) drawn edge by edge in lexicographic order."""
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def generate_candidates(kind: str, **params):
    """Stream candidate host graphs.

    Kinds: "mycielski" (steps graphs, starting from K2 itself), "kneser"
    (single graph), "complete-multipartite" (single graph), "random"
    (count seeded G(n,p) draws, optionally filtered to exact chi >= chi_min;
    draws whose exact chi cannot be settled in budget are dropped), and
    "graph6-stream" (one graph per non-blank line).
    """
    if kind == "mycielski":
        steps = int(params["steps"])
        if steps < 1:
            raise ValueError("steps must be at least 1")
        g = complete_graph(2)
        yield g
        for _ in range(steps - 1):
            g = mycielskian(g)
            yield g
    elif kind == "kneser":
        yield kneser_graph(int(params["n"]), int(params["k"]))
    elif kind == "complete-multipartite":
        yield complete_multipartite([int(s) for s in params["sizes"]])
    elif kind == "random":
        n = int(params["n"])
        p = float(params["p"])
        count = int(params["count"])
        rng = random.Random(int(params.get("seed", 0)))
        chi_min = params.get("chi_min")
        budget = int(params.get("chi_budget", chromatic.DEFAULT_BUDGET))
        attempts = 0
        produced = 0
        limit = int(params.get("max_attempts", 200 * max(count, 1)))
        while produced < count and attempts < limit:
            attempts += 1
            g = random_graph(n, p, rng)
            if chi_min is not None:
                r = chi_exact(g, budget=budget)
                if not r.exact or r.lower < int(chi_min):
                    continue
            produced += 1
            yield g
    elif kind == "graph6-stream":
        for line in params["lines"]:
            line = line.strip()
            if line:
                yield parse_graph(line, "g6")
    else:
        raise ValueError(f"unknown candidate kind {kind!r}")


# ---------------------------------------------------------------------------
# the hunt

@dataclass(frozen=True)
class CandidateOutcome:
    graph6: str
    chi_lower: int
    chi_upper: int
    chi_is_exact: bool
    searched: bool
    skipped_reason: str | None
    colorings_examined: int
    exhausted: bool
    counterexample: bool

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "chi_lower": self.chi_lower,
            "chi_upper": self.chi_upper,
            "chi_is_exact": self.chi_is_exact,
            "searched": self.searched,
            "skipped_reason": self.skipped_reason,
            "colorings_examined": self.colorings_examined,
            "exhausted": self.exhausted,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class HuntReport:
    pattern: Graph
    t: int
    ramsey_value: int
    colorings_budget: int
    candidates: tuple[CandidateOutcome, ...]
    colorings_examined: int
    counterexample: tuple[Graph, EdgeColoring] | None

    def to_json(self) -> dict:
        cex = None
        if self.counterexample is not None:
            g, ec = self.counterexample
            cex = {
                "graph6": write_graph(g, "g6").strip(),
                "coloring": [[u, v, c] for (u, v), c in sorted(ec.colors.items())],
            }
        return {
            "pattern": {"n": self.pattern.n, "edges": [list(e) for e in self.pattern.edges()]},
            "t": self.t,
            "ramsey_value": self.ramsey_value,
            "colorings_budget": self.colorings_budget,
            "candidates_examined": len(self.candidates),
            "candidates": [c.to_json() for c in self.candidates],
            "colorings_examined": self.colorings_examined,
            "counterexample": cex,
        }


def check_hunt_counterexample(
    pattern: AcyclicPattern,
    t: int,
    ramsey_value: int,
    g: Graph,
    ec: EdgeColoring,
    chi_budget: int = chromatic.DEFAULT_BUDGET,
) -> list[str]:
    """Re-verify a claimed counterexample from scratch; empty list means good."""
    problems = []
    if ec.t != t:
        problems.append(f"coloring has t={ec.t}, expected {t}")
    if ec.extended:
        problems.append("coloring is extended; counterexamples use genuine colors")
    try:
        ec.validate_cover(g)
    except ValueError as e:
        problems.append(str(e))
        return problems
    r = chi_exact(g, budget=chi_budget)
    if not r.exact:
        problems.append("chromatic number did not resolve exactly within budget")
    elif r.lower < ramsey_value:
        problems.append(f"chi={r.lower} is below ramsey_value={ramsey_value}")
    for c in range(1, ec.t + 1):
        if contains_forest(color_subgraph(g, ec, c), pattern) is not None:
            problems.append(f"color {c} contains the pattern")
    return problems


def hunt(
    pattern: AcyclicPattern,
    t: int,
    ramsey_value: int,
    candidates,
    colorings_budget: int = 10_000_000,
    chi_budget: int = chromatic.DEFAULT_BUDGET,
) -> HuntReport:
    """Search candidate hosts for a coloring avoiding the pattern everywhere.

    Candidates whose exact chromatic number cannot be established within
    chi_budget are skipped (recorded, never assumed); eligible ones need
    exact chi >= ramsey_value. Any find is re-verified from scratch before
    being reported, and the hunt stops at the first verified counterexample.
    """
    if t < 1:
        raise ValueError("need at least one color")
    if ramsey_value < 1:
        raise ValueError("ramsey_value must be positive")
    outcomes = []
    total = 0
    counterexample = None
    for g in candidates:
        ident = write_graph(g, "g6").strip()
        r = chi_exact(g, budget=chi_budget)
        if not r.exact:
            outcomes.append(CandidateOutcome(
                ident, r.lower, r.upper, False, False,
                "chromatic number unresolved within budget", 0, False, False,
            ))
            continue
        if r.lower < ramsey_value:
            outcomes.append(CandidateOutcome(
                ident, r.lower, r.upper, True, False,
                f"chi={r.lower} below ramsey_value={ramsey_value}", 0, False, False,
            ))
            continue
        coloring, exhausted, nodes = _search_avoiding(
            g, [pattern] * t, colorings_budget
        )
        total += nodes
        if coloring is not None:
            problems = check_hunt_counterexample(
                pattern, t, ramsey_value, g, coloring, chi_budget
            )
            if problems:
                raise InternalInconsistencyError(
                    "search produced a coloring that failed re-verification: "
                    + "; ".join(problems)
                )
            outcomes.append(CandidateOutcome(
                ident, r.lower, r.upper, True, True, None, nodes, False, True,
            ))
            counterexample = (g, coloring)
            break
        outcomes.append(CandidateOutcome(
            ident, r.lower, r.upper, True, True, None, nodes, exhausted, False,
        ))
    return HuntReport(
        pattern=pattern.graph,
        t=t,
        ramsey_value=ramsey_value,
        colorings_budget=colorings_budget,
        candidates=tuple(outcomes),
        colorings_examined=total,
        counterexample=counterexample,
    )


# Goodness regressions: (name, pattern, t, ramsey value). The path-4 entry
# for t=3 is carried as a config only; no outcome is asserted for it.
GOODNESS_REGRESSIONS = (
    ("star-2", star_pattern(2), 2, 3),
    ("star-3", star_pattern(3), 2, 6),
    ("path-4", path_pattern(4), 2, 5),
    ("path-4-t3", path_pattern(4), 3, 6),
)
