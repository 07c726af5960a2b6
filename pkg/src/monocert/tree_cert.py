"""Monochromatic-tree certificates from 2-edge-colorings.

Pipeline: the red and blue component families form a bipartite multigraph
with one link per vertex (its red component on the left, its blue component
on the right). A proper edge coloring of that multigraph with exactly its
maximum degree many colors exists because it is bipartite; reading each
vertex's link color back yields a proper vertex coloring of the host graph
with max-component-size many classes. A largest monochromatic component
therefore spans at least chi(G) vertices, and its BFS spanning tree is the
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    EdgeColoring,
    Graph,
    InternalInconsistencyError,
    VertexColoring,
    canonical_edge,
    color_subgraph,
    connected_components,
    iter_bits,
)
from .chromatic import verify_proper

RED, BLUE = 1, 2


@dataclass(frozen=True)
class DualMultigraph:
    """Bipartite multigraph of red components vs blue components.

    ``links`` holds one (left index, right index, vertex) triple per vertex
    of the host graph, in vertex order; the degree of a node equals the size
    of its component because components of the two colors overlap in exactly
    their shared vertices.
    """

    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]
    links: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        n = len(self.links)
        for side in (self.left, self.right):
            mins = [comp[0] for comp in side]
            if mins != sorted(mins):
                raise ValueError("components must be ordered by minimum vertex")
        seen = set()
        ldeg = [0] * len(self.left)
        rdeg = [0] * len(self.right)
        for li, ri, v in self.links:
            if v in seen:
                raise ValueError(f"vertex {v} has two links")
            seen.add(v)
            if v not in self.left[li] or v not in self.right[ri]:
                raise ValueError(f"link for vertex {v} joins components not containing it")
            ldeg[li] += 1
            rdeg[ri] += 1
        if seen != set(range(n)):
            raise ValueError("links must cover vertices 0..n-1 exactly once")
        for i, comp in enumerate(self.left):
            if ldeg[i] != len(comp):
                raise ValueError(f"left node {i} degree {ldeg[i]} != component size {len(comp)}")
        for i, comp in enumerate(self.right):
            if rdeg[i] != len(comp):
                raise ValueError(f"right node {i} degree {rdeg[i]} != component size {len(comp)}")

    def max_degree(self) -> int:
        """Largest number of links at any node (0 for the empty dual)."""
        counts: dict[tuple[str, int], int] = {}
        for li, ri, _ in self.links:
            counts[("L", li)] = counts.get(("L", li), 0) + 1
            counts[("R", ri)] = counts.get(("R", ri), 0) + 1
        return max(counts.values(), default=0)


@dataclass(frozen=True)
class TreeCertificate:
    color: int
    edges: tuple[tuple[int, int], ...]
    vertices: tuple[int, ...]
    chi_lower_used: int

    def to_json(self) -> dict:
        return {
            "color": self.color,
            "edges": [list(e) for e in self.edges],
            "vertices": list(self.vertices),
            "chi_lower_used": self.chi_lower_used,
        }

    @staticmethod
    def from_json(data: dict) -> "TreeCertificate":
        return TreeCertificate(
            color=int(data["color"]),
            edges=tuple(canonical_edge(int(u), int(v)) for u, v in data["edges"]),
            vertices=tuple(int(v) for v in data["vertices"]),
            chi_lower_used=int(data["chi_lower_used"]),
        )


def _require_two_coloring(ec: EdgeColoring) -> None:
    if ec.extended:
        raise ValueError("need a genuine coloring, not an extended one")
    if ec.t != 2:
        raise ValueError(f"need exactly 2 colors, got t={ec.t}")


def build_dual(g: Graph, ec: EdgeColoring) -> DualMultigraph:
    """Dual multigraph of the red/blue component families."""
    _require_two_coloring(ec)
    ec.validate_cover(g)
    red = connected_components(color_subgraph(g, ec, RED))
    blue = connected_components(color_subgraph(g, ec, BLUE))
    red_of = {v: i for i, comp in enumerate(red) for v in comp}
    blue_of = {v: i for i, comp in enumerate(blue) for v in comp}
    links = tuple((red_of[v], blue_of[v], v) for v in range(g.n))
    return DualMultigraph(tuple(red), tuple(blue), links)


def edge_color_dual(b: DualMultigraph) -> dict[int, int]:
    """Properly edge-color the dual with exactly max_degree colors.

    Links are inserted one at a time. If no color is free at both endpoints,
    take a color free on the left and one free on the right and flip the
    alternating two-color path starting at the right endpoint; in a
    bipartite multigraph that path can never reach the left endpoint (it
    would have to close with the wrong parity), so afterwards the left
    color is free at both ends. Returns {vertex label: color in 1..Delta}.
    """
    delta = b.max_degree()
    nl = len(b.left)
    # node id: left i -> i, right j -> nl + j
    color_at: list[dict[int, int]] = [dict() for _ in range(nl + len(b.right))]
    ends: list[tuple[int, int]] = []
    link_color: list[int] = []
    for li, ri, _v in b.links:
        p, q = li, nl + ri
        ends.append((p, q))
        idx = len(link_color)
        common = 0
        for c in range(1, delta + 1):
            if c not in color_at[p] and c not in color_at[q]:
                common = c
                break
        if not common:
            alpha = next(c for c in range(1, delta + 1) if c not in color_at[p])
            beta = next(c for c in range(1, delta + 1) if c not in color_at[q])
            # walk the alpha/beta alternating path from q, then flip it
            path = []
            node, want = q, alpha
            while want in color_at[node]:
                e2 = color_at[node][want]
                path.append(e2)
                a, bb = ends[e2]
                node = bb if node == a else a
                want = beta if want == alpha else alpha
            for e2 in path:
                old = link_color[e2]
                for nd in ends[e2]:
                    del color_at[nd][old]
            for e2 in path:
                new = beta if link_color[e2] == alpha else alpha
                link_color[e2] = new
                for nd in ends[e2]:
                    color_at[nd][new] = e2
            common = alpha
        link_color.append(common)
        color_at[p][common] = idx
        color_at[q][common] = idx
    if link_color and len(set(link_color)) != delta:
        raise InternalInconsistencyError(
            "edge coloring of the dual did not use exactly max_degree colors"
        )
    return {b.links[i][2]: link_color[i] for i in range(len(link_color))}


def vertex_coloring_from_dual(
    g: Graph, b: DualMultigraph, link_colors: dict[int, int]
) -> VertexColoring:
    """Turn a proper link coloring into a proper vertex coloring of g."""
    seen_l: list[set[int]] = [set() for _ in b.left]
    seen_r: list[set[int]] = [set() for _ in b.right]
    for li, ri, v in b.links:
        if v not in link_colors:
            raise ValueError(f"vertex {v} has no link color")
        c = link_colors[v]
        if c in seen_l[li] or c in seen_r[ri]:
            raise ValueError("link coloring is not proper on the dual")
        seen_l[li].add(c)
        seen_r[ri].add(c)
    order = sorted(set(link_colors[v] for v in range(g.n)))
    remap = {c: i for i, c in enumerate(order)}
    vc = VertexColoring(len(order), tuple(remap[link_colors[v]] for v in range(g.n)))
    if not verify_proper(g, vc):
        raise ValueError("link coloring does not come from this graph's dual")
    return vc


def max_mono_component(g: Graph, ec: EdgeColoring) -> tuple[int, tuple[int, ...]]:
    """Largest monochromatic component; ties by minimum vertex, then red first."""
    _require_two_coloring(ec)
    ec.validate_cover(g)
    if g.n == 0:
        raise ValueError("the empty graph has no components")
    best_key = None
    best = None
    for color in (RED, BLUE):
        for comp in connected_components(color_subgraph(g, ec, color)):
            key = (-len(comp), comp[0], color)
            if best_key is None or key < best_key:
                best_key, best = key, (color, comp)
    return best


def mono_tree_certificate(g: Graph, ec: EdgeColoring, chi_lower: int) -> TreeCertificate:
    """Spanning tree of a largest monochromatic component.

    chi_lower must be a true lower bound on chi(g); the certificate's
    component is then guaranteed to reach that size, and falling short
    raises InternalInconsistencyError rather than returning a weak witness.
    """
    color, comp = max_mono_component(g, ec)
    if len(comp) < chi_lower:
        raise InternalInconsistencyError(
            f"largest monochromatic component has {len(comp)} vertices, "
            f"below the claimed chromatic lower bound {chi_lower}; "
            "the supplied bound cannot be correct"
        )
    sub = color_subgraph(g, ec, color)
    root = comp[0]
    seen = 1 << root
    frontier = [root]
    tree_edges = []
    while frontier:
        nxt = []
        for u in frontier:
            for w in iter_bits(sub.adj[u] & ~seen):
                seen |= 1 << w
                tree_edges.append(canonical_edge(u, w))
                nxt.append(w)
        frontier = nxt
    return TreeCertificate(
        color=color,
        edges=tuple(sorted(tree_edges)),
        vertices=tuple(comp),
        chi_lower_used=chi_lower,
    )
