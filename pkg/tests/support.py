"""Shared fixture graphs and instance generators for the test suite."""

from __future__ import annotations

import itertools
import random

from blossom import edge, edges_of_path, graph, is_blossom, is_matching

TRIANGLE = graph([(1, 2), (2, 3), (1, 3)])
PATH4 = graph([(1, 2), (2, 3), (3, 4)])

# 7 vertices; with DEMO7_MATCHING the only way to augment runs through the
# odd cycle 3-4-5, so this pair exercises contraction end to end
DEMO7 = graph([(1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6), (3, 7)])
DEMO7_MATCHING = graph([(2, 3), (4, 5)])

# 12 vertices; DEMO12_MATCHING is one of its maximum matchings (5 edges)
DEMO12 = graph(
    [
        (1, 2),
        (1, 3),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (5, 7),
        (6, 7),
        (7, 8),
        (8, 9),
        (8, 10),
        (9, 10),
        (10, 11),
        (8, 12),
    ]
)
DEMO12_MATCHING = graph([(1, 2), (3, 4), (5, 6), (7, 8), (9, 10)])

# a triangle hanging off a matched tail: no augmenting path exists, but the
# search must contract the triangle to find that out
TAILED_TRIANGLE = graph([(1, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
TAILED_TRIANGLE_MATCHING = graph([(2, 3), (4, 5)])


def k_pairs(n: int, first: int = 1) -> list[tuple[int, int]]:
    """All edges of the complete graph on ``n`` vertices starting at ``first``."""
    return [edge(u, v) for u, v in itertools.combinations(range(first, first + n), 2)]


def all_graphs(n: int):
    """Every graph on the labelled vertices 1..n (all edge subsets)."""
    pairs = k_pairs(n)
    for bits in range(1 << len(pairs)):
        yield frozenset(p for i, p in enumerate(pairs) if bits >> i & 1)


def all_matchings(g) -> list[frozenset]:
    """Every matching contained in the graph, including the empty one."""
    edges = sorted(g)
    out = [frozenset()]
    chosen: list[tuple[int, int]] = []

    def extend(start: int, used: set[int]) -> None:
        for j in range(start, len(edges)):
            a, b = edges[j]
            if a in used or b in used:
                continue
            chosen.append((a, b))
            out.append(frozenset(chosen))
            extend(j + 1, used | {a, b})
            chosen.pop()

    extend(0, set())
    return out


def random_graph(rng: random.Random, n: int, p: float, first: int = 1) -> frozenset:
    return frozenset(e for e in k_pairs(n, first) if rng.random() < p)


def random_matching(rng: random.Random, g) -> frozenset:
    edges = sorted(g)
    rng.shuffle(edges)
    used: set[int] = set()
    out = []
    for a, b in edges:
        if a not in used and b not in used and rng.random() < 0.7:
            used.update((a, b))
            out.append((a, b))
    return frozenset(out)


def random_blossom_instance(rng: random.Random, max_vertices: int = 12):
    """A random graph and matching together with a blossom of the pair.

    The blossom is planted: an even alternating stem, an odd alternating
    cycle, then extra vertices, extra matched pairs away from the blossom,
    and random extra edges anywhere (none of which can break the blossom
    properties).
    """
    k = rng.randint(1, 3)
    j = rng.randint(0, min(2, (max_vertices - 2 * k - 1) // 2))
    core = 2 * j + 2 * k + 1
    extra = rng.randint(0, max_vertices - core)
    total = core + extra
    ids = list(range(1, total + 1))
    rng.shuffle(ids)
    stem = ids[: 2 * j]
    base = ids[2 * j]
    inner = ids[2 * j + 1 : core]
    others = ids[core:]
    cycle = [base] + inner + [base]
    whole = stem + cycle
    path_edges = edges_of_path(whole)
    g = set(path_edges)
    m = {path_edges[t] for t in range(1, len(path_edges), 2)}
    for i in range(0, len(others) - 1, 2):
        if rng.random() < 0.6:
            e = edge(others[i], others[i + 1])
            g.add(e)
            m.add(e)
    for _ in range(rng.randint(0, total)):
        u, v = rng.sample(ids, 2)
        g.add(edge(u, v))
    gf, mf = frozenset(g), frozenset(m)
    assert is_matching(mf) and mf <= gf
    assert is_blossom(gf, mf, stem, cycle)
    return gf, mf, stem, cycle


def dimacs(n: int, edges) -> str:
    """Render a graph as DIMACS edge-format text with 1-based ids."""
    lines = [f"p edge {n} {len(edges)}"]
    lines += [f"e {u} {v}" for u, v in sorted(edges)]
    return "\n".join(lines) + "\n"
