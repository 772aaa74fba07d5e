"""
The forest of primary positioned semigroups
===========================================

For k = (2,3) in N^2 there are thirteen primary positioned semigroups.
Twelve of them are roots (irreducible, with B(S) empty); the last hangs
below one of the roots. The brute-force oracle confirms the count.
"""

from conesemi import (GRLEX, PositionedContext, build_forest, build_tree, compare, cone_new, emit,
                      from_gaps, orthant)

forest = build_forest(orthant(2), (2, 3), GRLEX)
print(emit(forest, "text"))

report = compare(orthant(2), (2, 3))
print("\n".join(report.lines()))

# a deeper tree, over the cone spanned by (1,0) and (1,1)
diag = cone_new(2, [(1, 0), (1, 1)])
root = from_gaps(diag, [
    (1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (1, 0), (2, 1), (3, 2), (4, 3), (5, 4),
    (6, 5), (4, 2), (5, 3), (6, 4), (7, 5), (3, 0), (6, 3), (7, 4), (8, 4), (9, 5),
])
tree = build_tree(root, (11, 5))
print()
print(f"tree below the genus-{root.genus} root has {len(tree)} nodes")
for node in tree.nodes:
    pad = "  " * node.depth
    print(f"{pad}- genus {node.semigroup.genus}, added {node.beta}")

# walking back up: removing beta(S) from any non-root node returns its parent
leaf = tree.nodes[-1]
ctx = PositionedContext(leaf.semigroup, (11, 5))
print()
print("leaf beta:", ctx.beta, "parent recovered:", ctx.psi() == tree.nodes[leaf.parent_id].semigroup)

# the DOT rendering can be piped into graphviz
print()
print(emit(forest, "dot")[:200], "...")
