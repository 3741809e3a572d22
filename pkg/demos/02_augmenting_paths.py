# Augmenting paths and why the symmetric difference grows a matching.
#
# An augmenting path alternates non-matching / matching edges and has both
# endpoints unmatched. Flipping its edges (symmetric difference) turns k
# matching edges into k+1.

from blossom import (
    augment,
    edges_of_path,
    find_augmenting_path,
    graph,
    is_augmenting_path,
    symmetric_difference,
)

g = graph([(1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6), (3, 7)])
m = graph([(2, 3), (4, 5)])
print("matching:", sorted(m))

p = find_augmenting_path(g, m)
print("augmenting path found:", p)
assert is_augmenting_path(g, m, p)

# flip the path's edges by hand...
flipped = symmetric_difference(m, edges_of_path(p))
print("after flipping:", sorted(flipped))

# ...which is exactly what augment does, with its checks on
assert augment(m, p) == flipped
assert len(flipped) == len(m) + 1

# once no augmenting path exists, the matching is maximum (Berge's lemma)
assert find_augmenting_path(g, flipped) is None
print("no further augmenting path: matching is maximum")
