"""From the minimal matching to the F-polynomial, one flip at a time.

The rank-5 instance with root d = (1,1,2,1,1) is small enough to watch in
full: 13 configurations survive, one carries a closed cycle (coefficient 2),
and five reachable configurations are rejected because an edge path in them
would join differently-colored marked corners.
"""

from dimercluster import parse_quiver
from dimercluster.base_graph import BaseGraph
from dimercluster.flip_poset import FlipPoset
from dimercluster.cluster_invariants import dimer_f_polynomial
from dimercluster.mixed_dimer import (
    count_cycles,
    is_flippable,
    minimal_matching,
    support_components,
)
from dimercluster.tran_oracle import tran_f_polynomial

quiver = parse_quiver("n=5; 1>0,2>1,3>2,2>4")
d = (1, 1, 2, 1, 1)
graph = BaseGraph(quiver)

print("=== the minimal matching ===")
m = minimal_matching(graph, d)
for edge in sorted(m):
    print("  %s -- %s  x%d" % (edge[0], edge[1], m[edge]))
print("tiles flippable from here:",
      [i for i in range(5) if is_flippable(graph, d, m, i)])
print()

print("=== breadth-first flips ===")
poset = FlipPoset(quiver, d)
by_rank = {}
for e in poset.elements:
    by_rank.setdefault(sum(e), []).append(e)
for r in sorted(by_rank):
    row = ["%s(c=%d)" % (",".join(map(str, e)), 2 ** count_cycles(poset.configs[e]))
           for e in by_rank[r]]
    print("  rank %d: %s" % (r, "  ".join(row)))
print("rejected as polychromatic:",
      " ".join(",".join(map(str, e)) for e in sorted(poset.excluded)))
print()

print("=== why a configuration gets weight 2 ===")
doubled = (1, 1, 1, 0, 1)
config = poset.configs[doubled]
for verts, edges in support_components(config):
    shape = "cycle" if len(edges) == len(verts) else "path/tree"
    print("  component with %d vertices, %d edges -> %s"
          % (len(verts), len(edges), shape))
print()

print("=== the F-polynomial, two independent ways ===")
f_dimer = dimer_f_polynomial(quiver, d, poset=poset)
f_cond = tran_f_polynomial(quiver, d)
print("poset route:     F =", f_dimer.render())
print("condition route: F =", f_cond.render())
print("equal:", f_dimer == f_cond)
