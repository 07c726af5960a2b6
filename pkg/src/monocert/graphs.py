"""Core graph and coloring types plus parsing and serialization.

Vertices are the integers 0..n-1. Adjacency is stored as one Python-int
bitset row per vertex; arbitrary-width ints make dense instances up to a few
hundred vertices cheap without a sparse fallback, and bit tricks (``&``,
``bit_count``) do the heavy lifting everywhere else in the package.

Supported text formats: edge list ("u v" per line, 0-indexed, ``#``
comments, optional ``# n <count>`` directive for isolated vertices), DIMACS
.col ("p edge n m" / "e u v", 1-indexed, translated at this boundary), and
graph6 (single line, optional ``>>graph6<<`` header).
"""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphParseError(ValueError):
    """Malformed graph or coloring text; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InternalInconsistencyError(RuntimeError):
    """A guarantee backed by a caller-supplied precondition failed.

    Raised when an extraction that is theorem-backed under its stated
    precondition (usually a chromatic lower bound) cannot deliver the
    promised object. It means the precondition was false, not that a
    search was unlucky.
    """


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    """Return the edge as an ordered pair; loops are never representable."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with one bitset adjacency row per vertex."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency needs exactly one row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {u} has bits outside 0..{self.n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u in range(self.n):
            row = self.adj[u]
            for v in iter_bits(row):
                if not (self.adj[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency at ({u},{v})")

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Build from an iterable of pairs; duplicates collapse, loops raise."""
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            u, v = canonical_edge(u, v)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as canonical pairs, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if v > u]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """Path on n vertices (n-1 edges)."""
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Star with the given number of leaves; vertex 0 is the center."""
    if leaves < 0:
        raise ValueError("leaf count must be non-negative")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(sizes) -> Graph:
    """Complete multipartite graph; parts are consecutive vertex ranges."""
    sizes = list(sizes)
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    n = sum(sizes)
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]]
    return Graph.from_edges(n, edges)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ g.adj[v]) & ~(1 << v) for v in range(g.n)))


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph with vertices relabeled 0..k-1 in sorted order."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for u in keep
        for v in iter_bits(g.adj[u])
        if v > u and v in index
    ]
    return Graph.from_edges(len(keep), edges)


def component_masks(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by minimum vertex."""
    comps = []
    seen = 0
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, ordered by minimum vertex."""
    return [tuple(iter_bits(mask)) for mask in component_masks(g)]


@dataclass(frozen=True, eq=True)
class EdgeColoring:
    """Colors keyed by canonical edge; genuine colors are 1..t.

    Color 0 is reserved for the complement edges of an extended complete
    graph and is legal only when ``extended`` is set. Instances are treated
    as immutable: nothing in the package mutates ``colors`` after
    construction, so sharing across operations is safe.
    """

    t: int
    colors: dict[tuple[int, int], int] = field(default_factory=dict)
    extended: bool = False

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("need at least one genuine color")
        low = 0 if self.extended else 1
        for (u, v), c in self.colors.items():
            if not (0 <= u < v):
                raise ValueError(f"edge ({u},{v}) is not a canonical pair")
            if not low <= c <= self.t:
                raise ValueError(
                    f"color {c} on edge ({u},{v}) outside {low}..{self.t}"
                )
        object.__setattr__(self, "colors", dict(self.colors))

    def color_of(self, u: int, v: int) -> int:
        e = canonical_edge(u, v)
        try:
            return self.colors[e]
        except KeyError:
            raise ValueError(f"edge {e} has no color") from None

    def covers(self, g: Graph) -> bool:
        return all(e in self.colors for e in g.edges())

    def validate_cover(self, g: Graph) -> None:
        """Require a bijection between colored edges and E(g)."""
        ge = set(g.edges())
        for e in self.colors:
            if e not in ge:
                raise ValueError(f"colored edge {e} is not an edge of the graph")
        for e in ge:
            if e not in self.colors:
                raise ValueError(f"edge {e} of the graph has no color")

    def edges_of_color(self, c: int) -> list[tuple[int, int]]:
        return sorted(e for e, col in self.colors.items() if col == c)


def color_subgraph(g: Graph, ec: EdgeColoring, c: int) -> Graph:
    """Spanning subgraph keeping only edges of color c (0 allowed if extended)."""
    low = 0 if ec.extended else 1
    if not low <= c <= ec.t:
        raise ValueError(f"color {c} outside {low}..{ec.t}")
    edges = [e for e in g.edges() if ec.color_of(*e) == c]
    return Graph.from_edges(g.n, edges)


@dataclass(frozen=True)
class VertexColoring:
    """Assignment of vertices to classes 0..k-1; every class non-empty."""

    k: int
    class_of: tuple[int, ...]

    def __post_init__(self):
        seen = set()
        for v, c in enumerate(self.class_of):
            if not 0 <= c < self.k:
                raise ValueError(f"vertex {v} has class {c} outside 0..{self.k - 1}")
            seen.add(c)
        if len(seen) != self.k:
            raise ValueError("every class must be non-empty")

    @staticmethod
    def normalized(assign) -> "VertexColoring":
        """Relabel arbitrary class ids to 0..k-1 by first occurrence."""
        remap: dict[int, int] = {}
        out = []
        for c in assign:
            if c not in remap:
                remap[c] = len(remap)
            out.append(remap[c])
        return VertexColoring(len(remap), tuple(out))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.class_of):
            out[c].append(v)
        return out


# ---------------------------------------------------------------------------
# text formats

_FORMATS = {
    "edges": "edges", "edge-list": "edges", "edgelist": "edges",
    "dimacs": "dimacs", "dimacs-col": "dimacs", "col": "dimacs",
    "g6": "g6", "graph6": "g6",
}


def _norm_format(fmt: str) -> str:
    try:
        return _FORMATS[fmt.lower()]
    except KeyError:
        raise ValueError(f"unknown graph format {fmt!r}") from None


def parse_graph(text: str | bytes, fmt: str = "edges") -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    fmt = _norm_format(fmt)
    if fmt == "edges":
        return _parse_edge_list(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    return _parse_graph6(text)


def write_graph(g: Graph, fmt: str = "edges") -> str:
    fmt = _norm_format(fmt)
    if fmt == "edges":
        lines = [f"# n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
        return "\n".join(lines) + "\n"
    if fmt == "dimacs":
        lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges()]
        return "\n".join(lines) + "\n"
    return _to_graph6(g) + "\n"


def _parse_edge_list(text: str) -> Graph:
    edges = []
    declared = -1
    max_seen = -1
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        comment = raw.split("#", 1)[1].strip() if "#" in raw else ""
        if not line:
            # "# n <count>" declares isolated trailing vertices
            parts = comment.split()
            if len(parts) == 2 and parts[0] == "n" and parts[1].isdigit():
                declared = int(parts[1])
            continue
        toks = line.split()
        if len(toks) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", ln)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {line!r}", ln) from None
        if u < 0 or v < 0:
            raise GraphParseError(f"negative vertex in {line!r}", ln)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", ln)
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    n = max_seen + 1
    if declared >= 0:
        if max_seen >= declared:
            raise GraphParseError(
                f"vertex {max_seen} outside declared range 0..{declared - 1}"
            )
        n = declared
    return Graph.from_edges(n, edges)


def _parse_dimacs(text: str) -> Graph:
    n = -1
    edges = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        toks = line.split()
        if toks[0] == "p":
            if n >= 0:
                raise GraphParseError("duplicate problem line", ln)
            if len(toks) != 4 or toks[1] not in ("edge", "edges", "col"):
                raise GraphParseError(f"bad problem line {line!r}", ln)
            try:
                n = int(toks[2])
            except ValueError:
                raise GraphParseError(f"bad vertex count in {line!r}", ln) from None
            if n < 0:
                raise GraphParseError("negative vertex count", ln)
        elif toks[0] == "e":
            if n < 0:
                raise GraphParseError("edge before problem line", ln)
            if len(toks) != 3:
                raise GraphParseError(f"bad edge line {line!r}", ln)
            try:
                u, v = int(toks[1]), int(toks[2])
            except ValueError:
                raise GraphParseError(f"non-integer vertex in {line!r}", ln) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"vertex outside 1..{n} in {line!r}", ln)
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u}", ln)
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(f"unrecognized line {line!r}", ln)
    if n < 0:
        raise GraphParseError("missing problem line")
    return Graph.from_edges(n, edges)


# graph6: 6-bit groups, each stored as a printable byte (value + 63). The
# vertex count is one byte for n <= 62, '~' + 3 bytes up to 258047, then
# '~~' + 6 bytes. Edge bits run column-wise over the upper triangle.

def _g6_encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def _to_graph6(g: Graph) -> str:
    out = [_g6_encode_n(g.n)]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | ((row >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc, nbits = 0, 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def _parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError("empty graph6 string")
    if "\n" in s:
        raise GraphParseError("expected a single graph6 line")
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise GraphParseError(f"invalid graph6 byte {ch!r}")
        vals.append(o - 63)
    i = 0
    if vals[0] < 63:
        n, i = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        i = 4
    elif len(vals) >= 8:
        n = 0
        for j in range(2, 8):
            n = (n << 6) | vals[j]
        i = 8
    else:
        raise GraphParseError("truncated graph6 vertex count")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - i != need:
        raise GraphParseError(
            f"graph6 body has {len(vals) - i} groups, expected {need}"
        )
    rows = [0] * n
    bit = 0
    u, v = 0, 1
    for group in vals[i:]:
        for k in range(5, -1, -1):
            if bit >= nbits:
                break
            if (group >> k) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, tuple(rows))


def parse_edge_coloring(text: str | bytes, t: int | None = None) -> EdgeColoring:
    """Parse "u v c" lines (0-indexed vertices, colors 1..t).

    Color 0 never appears in files; t defaults to the largest color seen.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii")
    colors: dict[tuple[int, int], int] = {}
    max_c = 0
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 3:
            raise GraphParseError(f"expected 'u v c', got {line!r}", ln)
        try:
            u, v, c = int(toks[0]), int(toks[1]), int(toks[2])
        except ValueError:
            raise GraphParseError(f"non-integer field in {line!r}", ln) from None
        if u < 0 or v < 0:
            raise GraphParseError(f"negative vertex in {line!r}", ln)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", ln)
        if c < 1:
            raise GraphParseError(f"color {c} below 1 (0 is reserved)", ln)
        e = canonical_edge(u, v)
        if e in colors:
            raise GraphParseError(f"edge {e} colored twice", ln)
        colors[e] = c
        max_c = max(max_c, c)
    if t is None:
        t = max(max_c, 1)
    elif max_c > t:
        raise GraphParseError(f"color {max_c} exceeds declared t={t}")
    return EdgeColoring(t, colors)


def write_edge_coloring(ec: EdgeColoring) -> str:
    """Serialize genuine colorings; extended ones have no file form."""
    if any(c == 0 for c in ec.colors.values()):
        raise ValueError("color 0 never appears in coloring files")
    lines = [f"{u} {v} {c}" for (u, v), c in sorted(ec.colors.items())]
    return "\n".join(lines) + "\n" if lines else ""
