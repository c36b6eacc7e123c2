"""Raising a path to r-connectivity.

A path on n vertices has two leaves and n - 2 vertices of degree two, so
every r-connected supergraph needs at least ceil(((r-1)*2 + (r-2)*(n-2)) / 2)
new edges. The construction below closes the path into a cycle, adds
near-diameters when r is odd, then joins vertices j steps apart. The result
is the Harary graph H_{r,n}, which meets the bound.
"""

from treeaug import Graph, augmentation_lower_bound, harary_graph, HararySpec, vertex_connectivity
from treeaug.path import path_augmentation

n = 7
tree = Graph.path(n)

for r in (2, 3, 5, 6):
    h, eca = path_augmentation(tree, r)
    kappa, _ = vertex_connectivity(h)
    bound = augmentation_lower_bound(tree, r).bound
    print(f"P{n}, r={r}: added {len(eca)} edges (bound {bound}), kappa={kappa}, "
          f"Harary: {h == harary_graph(HararySpec(r, n))}")

# Which step put each edge in? The tags keep the construction readable.
_, eca = path_augmentation(tree, 5)
for (u, v), tag in eca.items():
    print(f"  {u}-{v}  {tag}")

# r = 6 on seven vertices is the complete graph
h, _ = path_augmentation(tree, 6)
print("P7 with r=6 is K7:", h == Graph.complete(7))
