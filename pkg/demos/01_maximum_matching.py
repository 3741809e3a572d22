# Finding a maximum matching, end to end.
#
# A graph is just a frozenset of (min, max) vertex pairs; build one with
# graph(...) and hand it to find_maximum_matching.

from blossom import find_maximum_matching, graph, is_matching, vertices

g = graph(
    [
        (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7),
        (6, 7), (7, 8), (8, 9), (8, 10), (9, 10), (10, 11), (8, 12),
    ]
)
print(f"graph: {len(vertices(g))} vertices, {len(g)} edges")

m = find_maximum_matching(g)
print(f"maximum matching: {len(m)} edges")
for a, b in sorted(m):
    print(f"  {a} -- {b}")

assert is_matching(m) and m <= g

# Two vertices stay unmatched here: the graph has 12 vertices but no
# perfect matching, because 9, 11 and 12 compete for the same neighbours.
unmatched = sorted(vertices(g) - vertices(m))
print(f"unmatched vertices: {unmatched}")
