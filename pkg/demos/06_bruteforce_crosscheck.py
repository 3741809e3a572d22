# Cross-checking the solver against the brute-force oracle.
#
# The oracle solves small instances by exhaustive search and never shares
# code with the solver, so agreement on random graphs is meaningful
# evidence. The oracle's augmenting-path search doubles as a Berge check:
# a matching is maximum exactly when no augmenting path exists.

import random

from blossom import (
    brute_force_augmenting_path,
    brute_force_maximum_matching,
    find_maximum_matching,
)

rng = random.Random(2024)
trials = 200
for i in range(trials):
    n = rng.randint(1, 12)
    p = rng.choice([0.2, 0.4, 0.6, 0.8])
    g = frozenset(
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    )
    fast = find_maximum_matching(g)
    slow = brute_force_maximum_matching(g)
    assert len(fast) == len(slow), (sorted(g), sorted(fast), sorted(slow))
    assert brute_force_augmenting_path(g, fast) is None

print(f"{trials} random graphs: solver size == brute-force size on every one,")
print("and no solver result admits an augmenting path.")
