"""Monochromatic matchings in t-edge-colored graphs.

The target vector (n_1 >= ... >= n_t) has matching Ramsey number
R = n_1 + 1 + sum_i (n_i - 1); any graph with chi >= R carries a
monochromatic matching of n_i edges in some color i. Two routes produce
certificates: the direct one runs maximum matching per color class, and the
reduction route contracts each class of a proper vertex coloring to a
single node, colors the resulting complete graph by picking the smallest
genuine color on each class pair, finds the matching there, and lifts it
back through recorded provenance edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import (
    EdgeColoring,
    Graph,
    InternalInconsistencyError,
    VertexColoring,
    canonical_edge,
    color_subgraph,
    complete_graph,
    iter_bits,
)
from .chromatic import verify_proper


@dataclass(frozen=True)
class MatchingTargets:
    """Matching sizes per color, held in non-increasing order."""

    targets: tuple[int, ...]

    def __post_init__(self):
        if not self.targets:
            raise ValueError("need at least one target")
        if any(x < 1 for x in self.targets):
            raise ValueError("targets must be at least 1")
        if list(self.targets) != sorted(self.targets, reverse=True):
            raise ValueError("targets must be non-increasing; use MatchingTargets.of")

    @staticmethod
    def of(values) -> "MatchingTargets":
        return MatchingTargets(tuple(sorted(values, reverse=True)))

    @property
    def t(self) -> int:
        return len(self.targets)


def ramsey_matching_number(targets: MatchingTargets) -> int:
    """n_1 + 1 + sum(n_i - 1) over all targets."""
    return targets.targets[0] + 1 + sum(x - 1 for x in targets.targets)


@dataclass(frozen=True)
class MatchingCertificate:
    color: int
    target: int
    edges: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "color": self.color,
            "target": self.target,
            "edges": [list(e) for e in self.edges],
        }

    @staticmethod
    def from_json(data: dict) -> "MatchingCertificate":
        return MatchingCertificate(
            color=int(data["color"]),
            target=int(data["target"]),
            edges=tuple(canonical_edge(int(u), int(v)) for u, v in data["edges"]),
        )


# ---------------------------------------------------------------------------
# maximum matching (blossom contraction, O(V^3))

def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    """Maximum-cardinality matching as a sorted list of canonical edges.

    Classic blossom algorithm: repeatedly BFS for an augmenting path from
    each free vertex, contracting odd cycles onto their base as they are
    found. Deterministic: vertices and neighbors are scanned in index order.
    """
    n = g.n
    nbr = [g.neighbors(v) for v in range(n)]
    match = [-1] * n
    for u in range(n):  # greedy warm start
        if match[u] < 0:
            for v in nbr[u]:
                if match[v] < 0:
                    match[u], match[v] = v, u
                    break
    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used = [False] * n
        x = a
        while True:
            x = base[x]
            used[x] = True
            if match[x] < 0:
                break
            x = p[match[x]]
        y = b
        while True:
            y = base[y]
            if used[y]:
                return y
            y = p[match[y]]

    def mark_path(v: int, b_: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b_:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_augmenting(root: int) -> int:
        for i in range(n):
            p[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in nbr[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] >= 0 and p[match[to]] >= 0):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for x in range(n):
                        if blossom[base[x]]:
                            base[x] = cur
                            if not used[x]:
                                used[x] = True
                                q.append(x)
                elif p[to] < 0:
                    p[to] = v
                    if match[to] < 0:
                        return to
                    used[match[to]] = True
                    q.append(match[to])
        return -1

    for v in range(n):
        if match[v] < 0:
            end = find_augmenting(v)
            while end >= 0:  # flip the found path back to the root
                pv = p[end]
                ppv = match[pv]
                match[end] = pv
                match[pv] = end
                end = ppv
    return sorted(canonical_edge(u, match[u]) for u in range(n) if u < match[u])


def find_mono_matching(
    g: Graph,
    ec: EdgeColoring,
    targets: MatchingTargets,
    chi_lower: int | None = None,
) -> MatchingCertificate | None:
    """First color (ascending) whose class holds its target matching.

    The certificate's edge list is truncated to exactly the target size.
    When the caller vouches chi_lower >= ramsey_matching_number(targets),
    a miss is impossible and raises InternalInconsistencyError instead of
    returning None.
    """
    if ec.extended:
        raise ValueError("need a genuine coloring, not an extended one")
    if ec.t != targets.t:
        raise ValueError(f"coloring has t={ec.t} but targets have t={targets.t}")
    ec.validate_cover(g)
    for color in range(1, ec.t + 1):
        want = targets.targets[color - 1]
        mm = maximum_matching(color_subgraph(g, ec, color))
        if len(mm) >= want:
            return MatchingCertificate(color, want, tuple(mm[:want]))
    if chi_lower is not None and chi_lower >= ramsey_matching_number(targets):
        raise InternalInconsistencyError(
            "no color reached its matching target although the claimed "
            f"chromatic lower bound {chi_lower} meets the matching Ramsey "
            f"number {ramsey_matching_number(targets)}; the bound cannot be correct"
        )
    return None


# ---------------------------------------------------------------------------
# reduction route

@dataclass(frozen=True)
class ReducedInstance:
    """Complete graph on merged color classes with provenance per pair.

    classes are sorted vertex tuples; edge_color maps each class pair (i, j),
    i < j, to the smallest genuine color appearing on a crossing edge, and
    provenance records the lexicographically smallest crossing edge of that
    color.
    """

    t: int
    classes: tuple[tuple[int, ...], ...]
    edge_color: dict[tuple[int, int], int]
    provenance: dict[tuple[int, int], tuple[int, int]]

    @property
    def k(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "classes": [list(c) for c in self.classes],
            "pairs": [
                {
                    "i": i,
                    "j": j,
                    "color": self.edge_color[(i, j)],
                    "provenance": list(self.provenance[(i, j)]),
                }
                for (i, j) in sorted(self.edge_color)
            ],
        }


def kiraly_reduce(g: Graph, ec: EdgeColoring, vc: VertexColoring) -> ReducedInstance:
    """Contract a properly colored host onto its color classes.

    Classes with no crossing edge are merged first (smallest index pairs
    first), so every remaining pair carries at least one edge; each pair is
    then colored by its smallest crossing genuine color, with the smallest
    such edge recorded as provenance.
    """
    if ec.extended:
        raise ValueError("need a genuine coloring, not an extended one")
    ec.validate_cover(g)
    if not verify_proper(g, vc):
        raise ValueError("vertex coloring is not proper")
    classes = [sorted(cls) for cls in vc.classes()]
    masks = [_mask(cls) for cls in classes]

    def crossing(i: int, j: int) -> bool:
        return any(g.adj[u] & masks[j] for u in classes[i])

    merged = True
    while merged:
        merged = False
        k = len(classes)
        for i in range(k):
            for j in range(i + 1, k):
                if not crossing(i, j):
                    classes[i] = sorted(classes[i] + classes[j])
                    masks[i] |= masks[j]
                    del classes[j]
                    del masks[j]
                    merged = True
                    break
            if merged:
                break

    edge_color: dict[tuple[int, int], int] = {}
    provenance: dict[tuple[int, int], tuple[int, int]] = {}
    k = len(classes)
    for i in range(k):
        for j in range(i + 1, k):
            best: tuple[int, tuple[int, int]] | None = None
            for u in classes[i]:
                for w in iter_bits(g.adj[u] & masks[j]):
                    cand = (ec.color_of(u, w), canonical_edge(u, w))
                    if best is None or cand < best:
                        best = cand
            if best is None:
                raise InternalInconsistencyError(
                    f"classes {i} and {j} survived merging without a crossing edge"
                )
            edge_color[(i, j)] = best[0]
            provenance[(i, j)] = best[1]
    return ReducedInstance(ec.t, tuple(tuple(c) for c in classes), edge_color, provenance)


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lift_matching(
    ri: ReducedInstance, pairs, color: int
) -> list[tuple[int, int]]:
    """Map disjoint class pairs of one color back to their provenance edges."""
    seen: set[int] = set()
    out = []
    for a, b in pairs:
        i, j = (a, b) if a < b else (b, a)
        if (i, j) not in ri.edge_color:
            raise ValueError(f"({i},{j}) is not a class pair of the instance")
        if i in seen or j in seen:
            raise ValueError(f"class {i if i in seen else j} used twice")
        if ri.edge_color[(i, j)] != color:
            raise ValueError(
                f"pair ({i},{j}) has color {ri.edge_color[(i, j)]}, not {color}"
            )
        seen.add(i)
        seen.add(j)
        out.append(ri.provenance[(i, j)])
    assert len({v for e in out for v in e}) == 2 * len(out)
    return sorted(out)


def find_mono_matching_kiraly(
    g: Graph,
    ec: EdgeColoring,
    vc: VertexColoring,
    targets: MatchingTargets,
    chi_lower: int | None = None,
) -> MatchingCertificate | None:
    """Reduction route: contract, match on the class graph, lift."""
    if ec.t != targets.t:
        raise ValueError(f"coloring has t={ec.t} but targets have t={targets.t}")
    ri = kiraly_reduce(g, ec, vc)
    kg = complete_graph(ri.k)
    rec = EdgeColoring(ec.t, dict(ri.edge_color)) if ri.edge_color else None
    for color in range(1, ec.t + 1):
        want = targets.targets[color - 1]
        if rec is None:
            continue
        mm = maximum_matching(color_subgraph(kg, rec, color))
        if len(mm) >= want:
            lifted = lift_matching(ri, mm[:want], color)
            return MatchingCertificate(color, want, tuple(lifted))
    if chi_lower is not None and chi_lower >= ramsey_matching_number(targets):
        raise InternalInconsistencyError(
            "reduction route found no matching although the claimed chromatic "
            f"lower bound {chi_lower} meets the matching Ramsey number; "
            "the bound cannot be correct"
        )
    return None


# ---------------------------------------------------------------------------
# extended complete graph and properly colored cycles

def extend_with_color_zero(g: Graph, ec: EdgeColoring) -> tuple[Graph, EdgeColoring]:
    """Complete graph on V(g) whose non-edges of g take the reserved color 0."""
    if ec.extended:
        raise ValueError("coloring is already extended")
    ec.validate_cover(g)
    kg = complete_graph(g.n)
    colors = dict(ec.colors)
    for e in kg.edges():
        if e not in colors:
            colors[e] = 0
    return kg, EdgeColoring(ec.t, colors, extended=True)


def find_properly_colored_cycle(
    k: Graph, ec: EdgeColoring, max_n: int = 12
) -> list[int] | None:
    """First cycle whose consecutive edges (wrap included) differ in color.

    Color 0 participates like any other color. Exhaustive DFS over simple
    cycles anchored at their minimum vertex; refuses hosts larger than
    max_n vertices.
    """
    if k.n > max_n:
        raise ValueError(f"host has {k.n} vertices, above the max_n={max_n} guard")
    ec.validate_cover(k)
    col = {e: c for e, c in ec.colors.items()}

    def edge_col(u: int, v: int) -> int:
        return col[canonical_edge(u, v)]

    n = k.n
    for s in range(n):
        # cycles whose minimum vertex is s; all other vertices > s
        path = [s]

        def dfs(v: int, depth: int, used: int, prev_color: int) -> list[int] | None:
            for w in iter_bits(k.adj[v]):
                if w == s and depth >= 2:
                    c = edge_col(v, s)
                    if c != prev_color and c != edge_col(s, path[1]):
                        return path[:]
                if w <= s or (used >> w) & 1:
                    continue
                c = edge_col(v, w)
                if c == prev_color:
                    continue
                path.append(w)
                hit = dfs(w, depth + 1, used | (1 << w), c)
                if hit is not None:
                    return hit
                path.pop()
            return None

        hit = dfs(s, 0, 1 << s, -1)
        if hit is not None:
            return hit
    return None
