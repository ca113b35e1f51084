"""Pattern detection: family copies, induced k-cycles, small-graph isomorphism.

"Contains a copy" always means subgraph copy (extra edges among the image
vertices are fine); induced matching is used for induced cycles and full
isomorphism. All operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphcore import Graph, VertexSet, bit_indices


@dataclass(frozen=True)
class IsolationFamily:
    """A family of forbidden connected graphs for isolation.

    kind is one of "k1", "k2", "k3", "p3", "cycle" (with k), "anycycle",
    or "list" (with explicit member graphs).
    """

    kind: str
    k: int | None = None
    members: tuple[Graph, ...] = ()

    def __post_init__(self):
        if self.kind not in {"k1", "k2", "k3", "p3", "cycle", "anycycle", "list"}:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "cycle":
            if self.k is None or self.k < 3:
                raise ValueError("cycle family needs k >= 3")
        if self.kind == "list":
            if not self.members:
                raise ValueError("list family needs at least one graph")
            from .graphcore import is_connected
            for h in self.members:
                if not is_connected(h) or h.n == 0:
                    raise ValueError("list family members must be connected and nonempty")

    def __str__(self) -> str:
        return f"cycle:{self.k}" if self.kind == "cycle" else self.kind


K1 = IsolationFamily("k1")
K2 = IsolationFamily("k2")
K3 = IsolationFamily("k3")
P3 = IsolationFamily("p3")
ANY_CYCLE = IsolationFamily("anycycle")


def cycle_family(k: int) -> IsolationFamily:
    return IsolationFamily("cycle", k=k)


def family_from_name(name: str) -> IsolationFamily:
    """Parse "k1" | "k2" | "k3" | "p3" | "anycycle" | "cycle:k"."""
    name = name.strip().lower()
    if name.startswith("cycle:"):
        return cycle_family(int(name.split(":", 1)[1]))
    simple = {"k1": K1, "k2": K2, "k3": K3, "p3": P3, "anycycle": ANY_CYCLE}
    if name not in simple:
        raise ValueError(f"unknown family {name!r}")
    return simple[name]


@dataclass(frozen=True)
class IsoWitness:
    """An embedding of a pattern graph H into a host graph G.

    mapping[i] is the G-vertex that H-vertex i maps to. The mapping is
    injective and preserves adjacency; when ``induced`` it also preserves
    non-adjacency.
    """

    mapping: tuple[int, ...]
    induced: bool

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(self.mapping))


# -- family copies -----------------------------------------------------------


def _find_p3(g: Graph, alive: int) -> tuple[int, int, int] | None:
    """A path a-c-b inside ``alive``, centered on a max-degree vertex.

    The center is a maximum-residual-degree vertex, smallest label on ties;
    its two smallest alive neighbors are the ends.
    """
    best = None
    best_deg = 1
    for c in bit_indices(alive):
        d = (g.rows[c] & alive).bit_count()
        if d > best_deg:
            best, best_deg = c, d
    if best is None:
        return None
    it = bit_indices(g.rows[best] & alive)
    a = next(it)
    b = next(it)
    return (a, best, b)


def _find_triangle(g: Graph, alive: int) -> tuple[int, int, int] | None:
    for v in bit_indices(alive):
        nbrs = g.rows[v] & alive
        for u in bit_indices(nbrs >> (v + 1)):
            u += v + 1
            common = nbrs & g.rows[u] & alive
            common &= ~((1 << (u + 1)) - 1)
            for w in bit_indices(common):
                return (v, u, w)
    return None


def _find_cycle_subgraph(g: Graph, k: int, alive: int) -> tuple[int, ...] | None:
    """Vertices of a k-cycle subgraph (chords permitted), in cycle order."""
    verts = [v for v in bit_indices(alive)]
    for a in verts:
        higher = alive & ~((1 << a) - 1)

        def extend(path: list[int], used: int):
            last = path[-1]
            if len(path) == k:
                return tuple(path) if (g.rows[last] >> a) & 1 else None
            for u in bit_indices(g.rows[last] & higher & ~used):
                got = extend(path + [u], used | (1 << u))
                if got:
                    return got
            return None

        got = extend([a], 1 << a)
        if got:
            return got
    return None


def _find_any_cycle(g: Graph, alive: int) -> tuple[int, ...] | None:
    """Vertices of some cycle in the induced subgraph, in cycle order."""
    seen = 0
    parent: dict[int, int] = {}
    for root in bit_indices(alive):
        if (seen >> root) & 1:
            continue
        stack = [(root, -1)]
        while stack:
            v, par = stack.pop()
            if (seen >> v) & 1:
                continue
            seen |= 1 << v
            parent[v] = par
            for u in bit_indices(g.rows[v] & alive):
                if u == par:
                    continue
                if (seen >> u) & 1:
                    # back edge v-u closes a cycle; walk parents to recover it
                    path_v = []
                    x = v
                    while x != -1:
                        path_v.append(x)
                        x = parent[x]
                    anc = set(path_v)
                    path_u = []
                    x = u
                    while x not in anc:
                        path_u.append(x)
                        x = parent[x]
                    meet = x
                    cyc = path_u + [meet] + path_v[: path_v.index(meet)][::-1]
                    if len(cyc) >= 3:
                        return tuple(cyc)
                else:
                    stack.append((u, v))
    return None


def contains_copy(g: Graph, fam: IsolationFamily,
                  within: VertexSet | None = None) -> IsoWitness | None:
    """A subgraph copy of some family member inside g (or a subset of g)."""
    alive = g.full_mask() if within is None else within.bits
    if within is not None and within.graph_order != g.n:
        raise ValueError("vertex set does not belong to this graph")
    if fam.kind == "k1":
        for v in bit_indices(alive):
            return IsoWitness((v,), induced=False)
        return None
    if fam.kind == "k2":
        for v in bit_indices(alive):
            row = g.rows[v] & alive
            for u in bit_indices(row >> (v + 1)):
                return IsoWitness((v, v + 1 + u), induced=False)
        return None
    if fam.kind == "p3":
        found = _find_p3(g, alive)
        return IsoWitness(found, induced=False) if found else None
    if fam.kind == "k3":
        found = _find_triangle(g, alive)
        return IsoWitness(found, induced=False) if found else None
    if fam.kind == "cycle":
        found = _find_cycle_subgraph(g, fam.k, alive)
        return IsoWitness(found, induced=False) if found else None
    if fam.kind == "anycycle":
        found = _find_any_cycle(g, alive)
        return IsoWitness(found, induced=False) if found else None
    for h in fam.members:
        mapping = _find_mapping(h, g, induced=False, host_alive=alive)
        if mapping:
            return IsoWitness(mapping, induced=False)
    return None


# -- induced cycles ------------------------------------------------------------


def has_induced_cycle(g: Graph, k: int) -> IsoWitness | None:
    """An induced k-cycle, found by DFS over induced paths.

    Paths are anchored at the minimum-labeled cycle vertex, and the
    traversal direction is tie-broken toward the smaller second vertex so
    each cycle is seen once.
    """
    if k < 3:
        raise ValueError("cycle length must be >= 3")
    if g.n < k:
        return None
    for a in range(g.n):
        higher = ~((1 << (a + 1)) - 1)
        starts = g.rows[a] & higher

        def extend(path: list[int], blocked: int):
            # blocked: vertices adjacent to an interior path vertex (chord ban)
            last = path[-1]
            if len(path) == k - 2:
                for u in bit_indices(g.rows[last] & g.rows[a] & higher & ~blocked):
                    if u <= path[0]:
                        continue  # direction tie-break
                    if u not in path:
                        return tuple([a] + path + [u])
                return None
            cand = g.rows[last] & higher & ~blocked & ~g.rows[a]
            for u in bit_indices(cand):
                if u in path:
                    continue
                got = extend(path + [u], blocked | g.rows[last])
                if got:
                    return got
            return None

        for b in bit_indices(starts):
            got = extend([b], 1 << a)
            if got:
                return IsoWitness(got, induced=True)
    return None


def count_induced_cycles(g: Graph, k: int) -> int:
    """Number of induced k-cycles (each counted once); test/report helper."""
    if k < 3:
        raise ValueError("cycle length must be >= 3")
    count = 0
    for a in range(g.n):
        higher = ~((1 << (a + 1)) - 1)

        def extend(path, blocked):
            nonlocal count
            last = path[-1]
            if len(path) == k - 2:
                for u in bit_indices(g.rows[last] & g.rows[a] & higher & ~blocked):
                    if u > path[0] and u not in path:
                        count += 1
                return
            for u in bit_indices(g.rows[last] & higher & ~blocked & ~g.rows[a]):
                if u not in path:
                    extend(path + [u], blocked | g.rows[last])

        for b in bit_indices(g.rows[a] & higher):
            extend([b], 1 << a)
    return count


# -- isomorphism ----------------------------------------------------------------


def _refine_colors(g: Graph, init: tuple[int, ...] | None = None) -> tuple[int, ...]:
    """1-dimensional color refinement; colors are small dense ints."""
    colors = list(init) if init is not None else [g.degree(v) for v in range(g.n)]
    while True:
        sigs = []
        for v in range(g.n):
            nbr = sorted(colors[u] for u in bit_indices(g.rows[v]))
            sigs.append((colors[v], tuple(nbr)))
        relabel = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [relabel[s] for s in sigs]
        if new == colors:
            return tuple(new)
        colors = new


def triangle_counts(g: Graph) -> tuple[int, ...]:
    """Number of triangles through each vertex."""
    counts = [0] * g.n
    for v in range(g.n):
        row = g.rows[v]
        for u in bit_indices(row):
            counts[v] += (row & g.rows[u]).bit_count()
    return tuple(c // 2 for c in counts)


def _find_mapping(pattern: Graph, host: Graph, *, induced: bool,
                  fixed: dict[int, int] | None = None,
                  host_alive: int | None = None) -> tuple[int, ...] | None:
    """Backtracking embedding of pattern into host.

    ``fixed`` pins pattern vertices to host vertices up front. In induced
    mode non-edges must map to non-edges (with equal orders this is full
    isomorphism). Intended for tiny patterns only.
    """
    alive = host.full_mask() if host_alive is None else host_alive
    pn = pattern.n
    if pn > alive.bit_count():
        return None
    # order pattern vertices to keep the partial map connected where possible
    order: list[int] = []
    placed = set()
    if fixed:
        order.extend(sorted(fixed))
        placed.update(fixed)
    while len(order) < pn:
        best = None
        best_key = (-1, -1)
        for v in range(pn):
            if v in placed:
                continue
            anchored = sum(1 for u in pattern.neighbors(v) if u in placed)
            key = (anchored, pattern.degree(v))
            if key > best_key:
                best, best_key = v, key
        order.append(best)
        placed.add(best)

    mapping: dict[int, int] = dict(fixed) if fixed else {}
    used = 0
    for hv in mapping.values():
        if not (alive >> hv) & 1:
            return None
        used |= 1 << hv
    # validate the fixed part
    for pv, hv in mapping.items():
        for pu, hu in mapping.items():
            if pu <= pv:
                continue
            pe = pattern.has_edge(pv, pu)
            he = host.has_edge(hv, hu)
            if pe and not he:
                return None
            if induced and not pe and he:
                return None

    start = len(mapping)
    exact_degrees = induced and host.n == pn and host_alive is None

    def place(i: int) -> bool:
        nonlocal used
        if i == pn:
            return True
        pv = order[i]
        cand = alive & ~used
        for u in pattern.neighbors(pv):
            if u in mapping:
                cand &= host.rows[mapping[u]]
        pdeg = pattern.degree(pv)
        for hv in bit_indices(cand):
            hdeg = host.degree(hv)
            if hdeg < pdeg or (exact_degrees and hdeg != pdeg):
                continue
            if induced:
                hrow = host.rows[hv]
                if any(not pattern.has_edge(pv, pu) and (hrow >> hu) & 1
                       for pu, hu in mapping.items()):
                    continue
            mapping[pv] = hv
            used |= 1 << hv
            if place(i + 1):
                return True
            used &= ~(1 << hv)
            del mapping[pv]
        return False

    if not place(start):
        return None
    return tuple(mapping[v] for v in range(pn))


def find_isomorphism(g: Graph, h: Graph,
                     fixed: dict[int, int] | None = None) -> IsoWitness | None:
    """An isomorphism h -> g (mapping[i] = image of h-vertex i), or None.

    ``fixed`` pins h-vertices to g-vertices; used to normalize catalog
    copies to a prescribed labeling.
    """
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    mapping = _find_mapping(h, g, induced=True, fixed=fixed)
    return IsoWitness(mapping, induced=True) if mapping else None


def is_isomorphic(g: Graph, h: Graph) -> IsoWitness | None:
    """Isomorphism test with invariant screening then refinement-guided search."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    if sorted(triangle_counts(g)) != sorted(triangle_counts(h)):
        return None
    cg = sorted(_refine_colors(g))
    ch = sorted(_refine_colors(h))
    if cg != ch:
        return None
    return find_isomorphism(g, h)


# -- catalog lookup --------------------------------------------------------------


def catalog_fingerprint(g: Graph) -> tuple:
    return (g.n, g.edge_count, tuple(sorted(g.degrees())),
            tuple(sorted(triangle_counts(g))))


@lru_cache(maxsize=1)
def _catalog_fingerprints() -> tuple[tuple[str, tuple, Graph], ...]:
    from .generators import catalog_graphs_raw

    return tuple((cid, catalog_fingerprint(h), h)
                 for cid, h in catalog_graphs_raw().items())


def catalog_match(g: Graph) -> str | None:
    """Which of the 12 exceptional graphs g is a copy of, if any.

    Short-circuits on order not in {3, 7, 11, 15}, then screens against the
    precomputed catalog fingerprints before running the isomorphism search.
    """
    if g.n not in (3, 7, 11, 15):
        return None
    fp = catalog_fingerprint(g)
    for cid, hfp, h in _catalog_fingerprints():
        if h.n == g.n and hfp == fp and is_isomorphic(g, h):
            return cid
    return None
