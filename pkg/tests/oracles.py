"""Independent brute-force oracles the test suite checks the library against.

Everything here is deliberately naive: subset scans, permutation scans,
and a from-scratch graph6 encoder. Nothing imports the algorithms under
test beyond the Graph value type itself.
"""

from itertools import combinations, permutations

from p3iso.graphcore import Graph


def closed_nbhd_set(g: Graph, vs) -> set[int]:
    out = set(vs)
    for v in vs:
        out.update(g.neighbors(v))
    return out


def _induced_edges(g: Graph, keep: set[int]) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.edges() if u in keep and v in keep]


def has_p3_after(g: Graph, d) -> bool:
    keep = set(range(g.n)) - closed_nbhd_set(g, d)
    deg = {v: 0 for v in keep}
    for u, v in _induced_edges(g, keep):
        deg[u] += 1
        deg[v] += 1
    return any(c >= 2 for c in deg.values())


def brute_iota_p3(g: Graph) -> int:
    """Minimum size of a P3-isolating set by exhaustive subset scan."""
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            if not has_p3_after(g, combo):
                return k
    raise AssertionError("full vertex set always isolates")


def brute_min_isolating_sets(g: Graph, k: int) -> list[tuple[int, ...]]:
    return [c for c in combinations(range(g.n), k) if not has_p3_after(g, c)]


def brute_has_induced_cycle(g: Graph, k: int) -> bool:
    """k-subset scan: some k vertices induce exactly a k-cycle."""
    for combo in combinations(range(g.n), k):
        keep = set(combo)
        edges = _induced_edges(g, keep)
        if len(edges) != k:
            continue
        deg = {v: 0 for v in combo}
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if any(d != 2 for d in deg.values()):
            continue
        # connected 2-regular on k vertices = k-cycle
        adj = {v: [] for v in combo}
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {combo[0]}
        stack = [combo[0]]
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) == k:
            return True
    return False


def brute_is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    g_edges = set(g.edges())
    for perm in permutations(range(h.n)):
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in h.edges()}
        if mapped == g_edges:
            return True
    return False


def canon_key_brute(g: Graph) -> tuple:
    """Minimum edge-set over all permutations; exact canonical key, tiny n only."""
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        if best is None or key < best:
            best = key
    return (g.n, best)


def all_graphs(n: int):
    """Every labeled graph on n vertices (2^(n(n-1)/2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        yield Graph.from_edges(n, edges)


def residual_after(g: Graph, d):
    keep = set(range(g.n)) - closed_nbhd_set(g, d)
    edges = [(u, v) for u, v in g.edges() if u in keep and v in keep]
    return keep, edges


def residual_has_k1(keep, edges):
    return bool(keep)


def residual_has_k2(keep, edges):
    return bool(edges)


def residual_has_k3(keep, edges):
    es = set(map(frozenset, edges))
    return any(frozenset((a, b)) in es and frozenset((b, c)) in es
               and frozenset((a, c)) in es
               for a, b, c in combinations(sorted(keep), 3))


def residual_has_cycle_k(k):
    def check(keep, edges):
        es = set(map(frozenset, edges))
        for combo in combinations(sorted(keep), k):
            for perm in permutations(combo[1:]):
                cyc = (combo[0],) + perm
                if all(frozenset((cyc[i], cyc[(i + 1) % k])) in es
                       for i in range(k)):
                    return True
        return False
    return check


def residual_has_any_cycle(keep, edges):
    # a graph is a forest iff every edge merges two components
    parent = {v: v for v in keep}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return True
        parent[ru] = rv
    return False


def brute_iota_family(g: Graph, residual_check) -> int:
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            keep, edges = residual_after(g, combo)
            if not residual_check(keep, edges):
                return k
    raise AssertionError("full vertex set always isolates")


def encode_graph6_reference(g: Graph) -> str:
    """Reference graph6 encoder written directly from the format definition."""
    if g.n <= 62:
        header = chr(g.n + 63)
    elif g.n <= 258047:
        header = "~" + "".join(chr(((g.n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        header = "~~" + "".join(chr(((g.n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = []
    for j in range(g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chunks = [bits[i:i + 6] for i in range(0, len(bits), 6)]
    body = "".join(chr(sum(b << (5 - i) for i, b in enumerate(ch)) + 63) for ch in chunks)
    return header + body
