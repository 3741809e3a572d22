"""Assemble the forest search's two tree paths into an augmenting path or a
blossom."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import TypeVar

from .contraction import is_blossom, prefix_until
from .forest import Trace, run_search
from .graph import Edge, vertices
from .matching import is_augmenting_path

T = TypeVar("T")


@dataclass(frozen=True)
class AugmentingPath:
    path: list[int]


@dataclass(frozen=True)
class FoundBlossom:
    stem: list[int]
    cycle: list[int]


def longest_disjoint_prefixes(
    first: Sequence[T], second: Sequence[T]
) -> tuple[list[T] | None, list[T] | None]:
    """Split two sequences sharing a common suffix into prefixes that overlap
    only at their final element.

    Returns (None, None) when either input is empty. Well defined whenever
    both inputs are root-ward traversals of one tree, which is how the search
    produces them.
    """
    if not first or not second:
        return None, None
    head = second[0]
    pfx = prefix_until(lambda x: x == head, first)
    if pfx[-1] == head:
        return pfx, [head]
    rest1, rest2 = longest_disjoint_prefixes(first, second[1:])
    if rest2 is not None:
        return rest1, [head] + rest2
    return rest1, rest2


def find_path_or_blossom(
    g: Iterable[Edge],
    matching: Iterable[Edge],
    *,
    check_invariants: bool = False,
    trace: Trace | None = None,
) -> AugmentingPath | FoundBlossom | None:
    """Find an augmenting path or a blossom, or None when neither exists.

    An edge with both endpoints unmatched is itself an augmenting path and is
    returned directly (smallest such edge first). Otherwise the forest search
    runs: tips in different trees assemble into an augmenting path, tips in
    the same tree into a blossom whose cycle closes at the paths' first
    shared vertex.
    """
    gset = frozenset(g)
    mset = frozenset(matching)
    matched = vertices(mset)
    free = min(
        (e for e in gset if e[0] not in matched and e[1] not in matched), default=None
    )
    if free is not None:
        found = AugmentingPath([free[0], free[1]])
        assert is_augmenting_path(gset, mset, found.path)
        return found
    paths = run_search(
        gset, mset, check_invariants=check_invariants, trace=trace
    ).paths
    if paths is None:
        return None
    p1, p2 = paths
    if not set(p1) & set(p2):
        assert p1[-1] != p2[-1]
        found = AugmentingPath(list(reversed(p1)) + p2)
        assert is_augmenting_path(gset, mset, found.path)
        return found
    assert p1[-1] == p2[-1]
    pfx1, pfx2 = longest_disjoint_prefixes(p1, p2)
    assert pfx1 is not None and pfx2 is not None
    stem = list(reversed(p1[len(pfx1) :]))
    cycle = list(reversed(pfx1)) + pfx2
    assert is_blossom(gset, mset, stem, cycle)
    return FoundBlossom(stem, cycle)
