"""Exact isolation numbers with re-checkable certificates.

A set D is F-isolating when G - N[D] contains no copy of a graph in F.
For F = {P3} the residual edges form a matching; the solver finds a
minimum D by iterative-deepening hitting-set search and returns it as a
certificate that can be re-validated independently.
"""

from p3iso import (K1, K2, P3, cycle_family, is_isolating, isolation_number,
                   isolation_number_additive)
from p3iso import generators as gen

c6 = gen.cycle(6)
cert = isolation_number(c6)
print(f"C6: iota = {cert.value}, minimum set (1-based) = "
      f"{[v + 1 for v in cert.set]}")
print("  re-check:", is_isolating(c6, P3, cert.set))

# Budgeted mode answers the predicate "iota <= k" without insisting on the
# exact value; exceeding the budget is a result, not an error.
c7 = gen.cycle(7)
budgeted = isolation_number(c7, P3, budget=1)
print(f"C7 within budget 1? exact={budgeted.exact}, reported value ="
      f" {budgeted.value} (meaning iota > 1)")

# Other families: K1-isolation is domination, K2-isolation kills all edges.
star = gen.complete(2)
print("domination number of K2:", isolation_number(star, K1).value)
print("K2-isolation number of C5:", isolation_number(gen.cycle(5), K2).value)
print("C6-isolation number of C6:", isolation_number(c6, cycle_family(6)).value)

# The isolation number is additive over components.
two_cycles = gen.disjoint_union(gen.cycle(7), gen.cycle(7))
print("iota(C7 + C7) =", isolation_number_additive(two_cycles).value,
      "(2 per component)")

# The spine construction attains floor(n/4) exactly.
for n in (8, 12, 16, 20):
    b = gen.construction_B_p3(n)
    print(f"iota(B_{n}) = {isolation_number(b).value} = floor({n}/4)")
