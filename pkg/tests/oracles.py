"""Brute-force oracles, independent of the library's algorithms.

Each oracle favors transparency over speed and shares no code path with the
implementation it checks: chromatic number by subset DP over independent
sets, matching number by memoized take-or-skip recursion (with a literal
edge-subset variant for tiny graphs), components by union-find, and forest
containment by trying every injection.
"""

from itertools import combinations, permutations

from monocert.graphs import Graph, iter_bits


def chromatic_number_dp(g: Graph) -> int:
    """Subset DP: peel one independent set containing the lowest vertex."""
    n = g.n
    if n == 0:
        return 0
    if n > 16:
        raise ValueError("oracle meant for n <= 16")
    adj = g.adj
    size = 1 << n
    dp = [0] * size
    for mask in range(1, size):
        v = (mask & -mask).bit_length() - 1
        best = n + 1

        def grow(chosen: int, cand: int) -> None:
            nonlocal best
            rest = dp[mask & ~chosen] + 1
            if rest < best:
                best = rest
            c = cand
            while c:
                u = c & -c
                c ^= u
                ub = u.bit_length() - 1
                grow(chosen | u, c & ~adj[ub])

        grow(1 << v, mask & ~(1 << v) & ~adj[v])
        dp[mask] = best
    return dp[size - 1]


def matching_number_recursive(g: Graph) -> int:
    """Memoized take-or-skip recursion on the lowest remaining vertex."""
    adj = g.adj
    memo: dict[int, int] = {0: 0}

    def nu(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        v = (mask & -mask).bit_length() - 1
        best = nu(mask & ~(1 << v))
        for u in iter_bits(adj[v] & mask):
            cand = 1 + nu(mask & ~(1 << v) & ~(1 << u))
            if cand > best:
                best = cand
        memo[mask] = best
        return best

    return nu((1 << g.n) - 1)


def matching_number_subsets(g: Graph) -> int:
    """Literal check of every edge subset; only for very small graphs."""
    edges = g.edges()
    if len(edges) > 16:
        raise ValueError("oracle meant for m <= 16")
    best = 0
    for size in range(len(edges), 0, -1):
        if size <= best:
            break
        for subset in combinations(edges, size):
            seen = set()
            ok = True
            for u, v in subset:
                if u in seen or v in seen:
                    ok = False
                    break
                seen.add(u)
                seen.add(v)
            if ok:
                best = size
                break
    return best


def components_union_find(g: Graph) -> list[tuple[int, ...]]:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(sorted(vs)) for vs in groups.values()), key=lambda c: c[0])


def contains_injection(g: Graph, h: Graph) -> bool:
    """Try every injective vertex map; only for tiny patterns."""
    if h.n > g.n:
        return False
    hedges = h.edges()
    for image in permutations(range(g.n), h.n):
        if all(g.has_edge(image[u], image[v]) for u, v in hedges):
            return True
    return False


def max_mono_component_size(g: Graph, colors: dict, color: int) -> int:
    """Largest component of one color class, via union-find."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, v), c in colors.items():
        if c == color:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    sizes: dict[int, int] = {}
    for v in range(g.n):
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    return max(sizes.values(), default=0)
