"""Round-by-round augmentation of a tree that is not a path.

The leaves are chained first. Each chain edge closes a fundamental cycle,
and those cycles become the pi nodes of the block tree. Round j then
raises every degree-j vertex (the alpha nodes) by one, pairing them across
cycles where possible.
"""

from treeaug import Graph, augmentation_lower_bound, nonpath_augmentation, verify_augmentation
from treeaug.nonpath import replay_block_trees, tag_round
from treeaug.oracle import OracleLimits, brute_force_min_augmentation

# A small caterpillar with a forked end.
tree = Graph.from_edges(8, [(1, 2), (2, 3), (3, 4), (2, 5), (3, 6), (4, 7), (4, 8)])
r = 4

h, eca = nonpath_augmentation(tree, r, tie_break="search")
print("leaf chain:", [e for e, tag in eca.items() if tag == "leaf-chain"])

for bt in replay_block_trees(tree, eca):
    print(f"\n(C,{bt.round})-block tree")
    for k, cycle in enumerate(bt.cycles):
        print(f"  pi{k + 1}: cycle {cycle}, alpha {list(bt.alpha[k])}")
    for e, tag in eca.items():
        if tag_round(tag) == bt.round:
            print(f"  add {e}  [{tag}]")

report = verify_augmentation(tree, eca.edges, r)
print(f"\n{report.eca_size} edges, bound {report.lower_bound}, kappa {report.achieved_kappa}")

size, example = brute_force_min_augmentation(tree, r, OracleLimits(max_n=8, max_r=4))
print(f"exhaustive minimum: {size}; first minimal set in lexicographic order: {example.edges}")

# Always taking the lowest-label move does not always work:
stuck = Graph.from_edges(6, [(1, 2), (1, 5), (2, 3), (2, 4), (5, 6)])
try:
    nonpath_augmentation(stuck, 3)
except Exception as exc:  # PatternExhaustedError
    print("\nlowest-label rule on", stuck.sorted_edges(), "->", exc)
print("with backtracking:", nonpath_augmentation(stuck, 3, tie_break="search")[1].edges,
      "bound", augmentation_lower_bound(stuck, 3).bound)
