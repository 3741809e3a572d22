"""Odd-set-cover maximality certificates: capacity, coverage, verification,
and the certificate text format.

An odd set cover is a collection of odd-cardinality vertex sets covering
every edge. Its capacity bounds the size of every matching, so a cover whose
capacity equals a matching's size proves that matching maximum. The solver
builds covers for the graph its final failed search ran on, which may be a
contraction of the input; a certificate therefore carries the contraction
history, and verification replays it.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .contraction import ContractionMap, is_blossom, quotient_graph
from .graph import Edge, vertices
from .matching import is_matching


def capacity(s: Iterable[int]) -> int:
    """1 for a singleton, k for a set of 2k+1 vertices."""
    n = len(frozenset(s))
    if n % 2 == 0:
        raise ValueError("capacity is defined for odd-cardinality sets only")
    return max(n // 2, 1)


def covers(s: Iterable[int], e: Edge) -> bool:
    """Whether the odd set covers the edge: a singleton must intersect it, a
    larger set must contain both endpoints."""
    sset = frozenset(s)
    if len(sset) % 2 == 0:
        raise ValueError("covers is defined for odd-cardinality sets only")
    if len(sset) == 1:
        return e[0] in sset or e[1] in sset
    return e[0] in sset and e[1] in sset


def is_odd_set_cover(cover: Iterable[Iterable[int]], g: Iterable[Edge]) -> bool:
    """Whether every member is odd and every edge of the graph is covered."""
    sets = [frozenset(s) for s in cover]
    if any(len(s) % 2 == 0 for s in sets):
        return False
    return all(any(covers(s, e) for s in sets) for e in g)


def cover_capacity(cover: Iterable[Iterable[int]]) -> int:
    """Sum of the member capacities."""
    return sum(capacity(s) for s in cover)


@dataclass(frozen=True)
class VerificationReport:
    matching_ok: bool
    subset_ok: bool
    cover_ok: bool
    capacity: int
    matching_size: int

    @property
    def verdict(self) -> bool:
        return (
            self.matching_ok
            and self.subset_ok
            and self.cover_ok
            and self.capacity == self.matching_size
        )


def verify_maximum(
    g: Iterable[Edge], matching: Iterable[Edge], cover: Iterable[Iterable[int]]
) -> VerificationReport:
    """Check a matching against an odd set cover of the same graph.

    A true verdict means the matching is a matching inside the graph and the
    cover is valid with capacity equal to the matching size, which proves the
    matching maximum. Failures land in the report; nothing is raised.
    """
    gset = frozenset(g)
    mset = frozenset(matching)
    sets = [frozenset(s) for s in cover]
    cap = sum(capacity(s) for s in sets if len(s) % 2 == 1)
    return VerificationReport(
        matching_ok=is_matching(mset),
        subset_ok=mset <= gset,
        cover_ok=is_odd_set_cover(sets, gset),
        capacity=cap,
        matching_size=len(mset),
    )


@dataclass(frozen=True)
class ContractionStep:
    """One recorded contraction: the blossom found and the fresh vertex its
    cycle was contracted to."""

    stem: list[int]
    cycle: list[int]
    fresh: int


@dataclass(frozen=True)
class MaximalityCertificate:
    """Contraction history plus an odd set cover of the final contracted
    graph, whose capacity equals the final matching's size."""

    contractions: tuple[ContractionStep, ...]
    final_graph: frozenset[Edge]
    final_matching: frozenset[Edge]
    cover: frozenset[frozenset[int]]


def verify_certificate(
    g: Iterable[Edge],
    matching: Iterable[Edge],
    contractions: Sequence[ContractionStep],
    cover: Iterable[Iterable[int]],
) -> tuple[VerificationReport, list[str]]:
    """Replay the contraction history and verify the cover on the result.

    Each recorded step must be a genuine blossom of the graph it was found
    in, contracted to a genuinely fresh vertex; the cover is then checked
    against the final graph and matching. Returns the report together with a
    list of problems found during the replay (empty when the history is
    sound). The certificate proves the original matching maximum only when
    the report's verdict is true and there are no problems.
    """
    problems: list[str] = []
    cur_g = frozenset(g)
    cur_m = frozenset(matching)
    for step in contractions:
        if step.fresh in vertices(cur_g):
            problems.append(
                f"contraction target {step.fresh} already occurs in the graph"
            )
            break
        if not is_blossom(cur_g, cur_m, step.stem, step.cycle):
            problems.append(
                f"recorded stem/cycle for target {step.fresh} is not a blossom "
                f"of the graph it was contracted in"
            )
            break
        cmap = ContractionMap(frozenset(vertices(cur_g) - set(step.cycle)), step.fresh)
        cur_g = quotient_graph(cmap, cur_g)
        cur_m = quotient_graph(cmap, cur_m)
    report = verify_maximum(cur_g, cur_m, cover)
    return report, problems


def format_certificate(
    contractions: Sequence[ContractionStep],
    cover: Iterable[Iterable[int]],
    *,
    offset: int = 0,
) -> str:
    """Serialize a certificate.

    One ``x`` line per contraction (fresh vertex, stem length, stem vertices,
    then cycle vertices including the repeated base), then one ``s`` line per
    cover set; ``c`` lines are comments. ``offset`` is added to every vertex
    id on output, so internal 0-based ids can be written 1-based.
    """
    lines = [
        "c odd set cover for the graph reached after the listed contractions",
        "c x <fresh> <stem length> <stem vertices> <cycle vertices>",
    ]
    for step in contractions:
        body = [step.fresh + offset, len(step.stem)]
        body += [v + offset for v in step.stem]
        body += [v + offset for v in step.cycle]
        lines.append("x " + " ".join(str(n) for n in body))
    for s in sorted(tuple(sorted(s)) for s in cover):
        lines.append("s " + " ".join(str(v + offset) for v in s))
    return "\n".join(lines) + "\n"


def parse_certificate(
    text: str, *, offset: int = 0
) -> tuple[list[ContractionStep], frozenset[frozenset[int]]]:
    """Parse the certificate text format; ``offset`` is subtracted from every
    vertex id on input. Raises ValueError with a line number on bad input."""
    contractions: list[ContractionStep] = []
    cover: set[frozenset[int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        try:
            numbers = [int(t) for t in tokens[1:]]
        except ValueError as exc:
            raise ValueError(f"line {line_no}: non-integer field") from exc
        if kind == "x":
            if len(numbers) < 2:
                raise ValueError(f"line {line_no}: truncated contraction record")
            fresh, stem_len = numbers[0] - offset, numbers[1]
            rest = [n - offset for n in numbers[2:]]
            if stem_len < 0 or len(rest) < stem_len + 3:
                raise ValueError(f"line {line_no}: malformed contraction record")
            contractions.append(
                ContractionStep(stem=rest[:stem_len], cycle=rest[stem_len:], fresh=fresh)
            )
        elif kind == "s":
            if not numbers:
                raise ValueError(f"line {line_no}: empty cover set")
            cover.add(frozenset(n - offset for n in numbers))
        else:
            raise ValueError(f"line {line_no}: unknown line type {kind!r}")
    return contractions, frozenset(cover)
