"""The maximum-matching engine: recursive augmenting-path search with cycle
contraction, and the top augmentation loop."""

from __future__ import annotations

from collections.abc import Iterable

from .assembly import AugmentingPath, find_path_or_blossom
from .certificate import ContractionStep, MaximalityCertificate
from .contraction import ContractionMap, fresh_vertex, lift_path, quotient_graph
from .forest import InvariantViolation, Trace, build_odd_set_cover, run_search
from .graph import Edge, graph, vertices
from .matching import augment


def find_augmenting_path(
    g: Iterable[Edge], matching: Iterable[Edge], *, trace: Trace | None = None
) -> list[int] | None:
    """An augmenting path for the matching, or None when none exists.

    When the search turns up a blossom instead of a path, the blossom's cycle
    is contracted to a fresh vertex, the search recurses on the contracted
    graph and matching, and any path found there is lifted back through the
    cycle. Fresh vertices are allocated past the current maximum id, so
    nested contractions can never collide with original vertices.
    """
    gset = frozenset(g)
    bound = max(len(vertices(gset)), 1)
    return _search_levels(gset, frozenset(matching), 0, bound, trace)


def _search_levels(
    g: frozenset[Edge],
    matching: frozenset[Edge],
    depth: int,
    bound: int,
    trace: Trace | None,
) -> list[int] | None:
    if depth > bound:
        raise InvariantViolation("contraction recursion exceeded the vertex count")
    found = find_path_or_blossom(g, matching, trace=trace)
    if found is None:
        return None
    if isinstance(found, AugmentingPath):
        return list(found.path)
    target = fresh_vertex(vertices(g))
    cmap = ContractionMap(frozenset(vertices(g) - set(found.cycle)), target)
    inner = _search_levels(
        quotient_graph(cmap, g), quotient_graph(cmap, matching), depth + 1, bound, trace
    )
    if inner is None:
        return None
    return lift_path(found.cycle, matching, inner, g, target)


def find_maximum_matching(
    g: Iterable[Edge], *, trace: Trace | None = None
) -> frozenset[Edge]:
    """A maximum-cardinality matching of the graph.

    Starts from the empty matching and augments until no augmenting path
    remains; each augmentation grows the matching by exactly one edge, so at
    most half the vertex count plus one searches run.
    """
    gset = graph(g)
    matching: frozenset[Edge] = frozenset()
    for _ in range(len(vertices(gset)) // 2 + 2):
        path = find_augmenting_path(gset, matching, trace=trace)
        if path is None:
            return matching
        matching = augment(matching, path)
    raise InvariantViolation("augmentation loop failed to terminate")


def certify_maximality(
    g: Iterable[Edge], matching: Iterable[Edge], *, trace: Trace | None = None
) -> MaximalityCertificate | None:
    """Rerun the failing search chain for a maximum matching and package the
    resulting odd set cover with the contraction history.

    Returns None when an augmenting path exists, in which case the matching
    is not maximum and nothing can be certified.
    """
    contractions: list[ContractionStep] = []
    cur_g = frozenset(g)
    cur_m = frozenset(matching)
    while True:
        found = find_path_or_blossom(cur_g, cur_m, trace=trace)
        if found is None:
            state = run_search(cur_g, cur_m).state
            cover = build_odd_set_cover(cur_g, cur_m, state)
            return MaximalityCertificate(tuple(contractions), cur_g, cur_m, cover)
        if isinstance(found, AugmentingPath):
            return None
        target = fresh_vertex(vertices(cur_g))
        contractions.append(ContractionStep(found.stem, found.cycle, target))
        cmap = ContractionMap(frozenset(vertices(cur_g) - set(found.cycle)), target)
        cur_g = quotient_graph(cmap, cur_g)
        cur_m = quotient_graph(cmap, cur_m)
