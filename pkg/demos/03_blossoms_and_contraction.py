# Odd cycles, blossoms, and contraction.
#
# A plain alternating search fails on odd cycles. The fix: when the search
# finds one (packaged as a blossom), contract the cycle to a fresh vertex,
# search the smaller graph, and lift the answer back.

from blossom import (
    ContractionMap,
    find_path_or_blossom,
    fresh_vertex,
    graph,
    is_augmenting_path,
    is_blossom,
    lift_path,
    quotient_graph,
    vertices,
)

g = graph([(1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6), (3, 7)])
m = graph([(2, 3), (4, 5)])

# the search cannot return an augmenting path here directly: every route to
# vertex 6 crosses the odd cycle 3-4-5, so it reports a blossom instead
found = find_path_or_blossom(g, m)
print("search returned:", found)
assert is_blossom(g, m, found.stem, found.cycle)

# contract the cycle to a fresh vertex
target = fresh_vertex(vertices(g))
cmap = ContractionMap(frozenset(vertices(g) - set(found.cycle)), target)
qg = quotient_graph(cmap, g)
qm = quotient_graph(cmap, m)
print(f"contracted cycle {found.cycle} to vertex {target}")
print("contracted graph:", sorted(qg))
print("contracted matching:", sorted(qm))

# the contracted graph is blossom-free, so the search finds a path there
inner = find_path_or_blossom(qg, qm)
print("search on the contracted graph returned:", inner)
assert is_augmenting_path(qg, qm, inner.path)

# lifting replaces the fresh vertex with the right segment of the cycle
lifted = lift_path(found.cycle, m, inner.path, g, target)
print("lifted back:", lifted)
assert is_augmenting_path(g, m, lifted)
