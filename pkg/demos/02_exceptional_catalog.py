"""The twelve exceptional graphs.

These are the only connected subcubic graphs without induced 6-cycles
whose P3-isolation number exceeds floor(n/4); each attains (n+1)/4. The
catalog re-verifies every documented property when it loads, so the
embedded edge lists cannot drift silently.
"""

from p3iso import catalog, catalog_match, distance, emit_graph6, has_induced_cycle
from p3iso import generators as gen

print(f"{'id':5s} {'n':>2s} {'m':>2s} {'iota':>4s} {'maxdeg':>6s}  graph6")
for e in catalog():
    print(f"{e.id:5s} {e.order:2d} {e.graph.edge_count:2d} {e.iota:4d} "
          f"{e.max_degree:6d}  {emit_graph6(e.graph)}")

g15 = gen.catalog_entry("G15").graph
print("\nG15 has no induced 6-cycle:", has_induced_cycle(g15, 6) is None)
low = [v for v in range(g15.n) if g15.degree(v) == 2]
print("G15 degree-2 vertices (1-based):", [v + 1 for v in low])
print("their pairwise distances:",
      [distance(g15, low[i], low[j]) for i in range(3) for j in range(i + 1, 3)])

# catalog_match recognizes copies up to isomorphism, and only copies
print("a shuffled C11 matches:", catalog_match(gen.cycle(11)))
print("C15 matches nothing (same order as G15, below the bound):",
      catalog_match(gen.cycle(15)))
