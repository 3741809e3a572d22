"""Command-line front end: DIMACS-style graph files and the solve, verify,
and oracle subcommands.

Graph files use the DIMACS edge dialect: ``c`` comment lines, one
``p edge <vertices> <edges>`` header, and ``e <u> <v>`` lines with 1-based
vertex ids. Matchings are written as ``m <u> <v>`` lines preceded by an
``s <size>`` line. Vertex ids are 1-based in every file; internally they are
shifted down by one.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import TextIO

from .certificate import (
    format_certificate,
    parse_certificate,
    verify_certificate,
)
from .forest import InvariantViolation
from .graph import Edge, edge
from .matching import is_matching
from .oracle import OracleLimitError, brute_force_maximum_matching
from .solver import certify_maximality, find_maximum_matching

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VERIFY = 2
EXIT_INTERNAL = 3
EXIT_ORACLE_LIMIT = 4


class GraphFormatError(ValueError):
    """A malformed input file, with the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class GraphFile:
    """A parsed graph file: declared vertex and edge counts plus the edge
    list with 1-based ids, duplicates collapsed, in file order."""

    vertex_count: int
    edge_count: int
    edges: tuple[tuple[int, int], ...]

    def to_graph(self) -> frozenset[Edge]:
        """The graph with internal 0-based vertex ids."""
        return frozenset(edge(a - 1, b - 1) for a, b in self.edges)


def parse_graph_file(text: str) -> GraphFile:
    """Parse the DIMACS edge dialect, whitespace-tolerantly."""
    vertex_count: int | None = None
    edge_count = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if vertex_count is not None:
                raise GraphFormatError(line_no, "duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise GraphFormatError(line_no, "expected 'p edge <vertices> <edges>'")
            try:
                vertex_count, edge_count = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise GraphFormatError(line_no, "problem line counts must be integers")
            if vertex_count < 0 or edge_count < 0:
                raise GraphFormatError(line_no, "problem line counts must not be negative")
        elif kind == "e":
            if vertex_count is None:
                raise GraphFormatError(line_no, "edge line before the problem line")
            if len(tokens) != 3:
                raise GraphFormatError(line_no, "expected 'e <u> <v>'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphFormatError(line_no, "edge endpoints must be integers")
            if u == v:
                raise GraphFormatError(line_no, f"self-loop at vertex {u}")
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise GraphFormatError(
                    line_no, f"vertex id out of range 1..{vertex_count}"
                )
            pair = (u, v) if u < v else (v, u)
            if pair not in seen:
                seen.add(pair)
                edges.append(pair)
        else:
            raise GraphFormatError(line_no, f"unknown line type {kind!r}")
    if vertex_count is None:
        raise GraphFormatError(0, "missing 'p edge' problem line")
    return GraphFile(vertex_count, edge_count, tuple(edges))


def format_graph_file(gf: GraphFile) -> str:
    """Serialize a graph file; inverse of ``parse_graph_file`` for files whose
    declared edge count matches the edge list."""
    lines = [f"p edge {gf.vertex_count} {len(gf.edges)}"]
    lines += [f"e {u} {v}" for u, v in gf.edges]
    return "\n".join(lines) + "\n"


def parse_matching_file(text: str, vertex_count: int) -> frozenset[Edge]:
    """Parse ``m <u> <v>`` lines into an internal 0-based edge set; ``c``
    comments and the ``s`` size line are tolerated."""
    pairs: set[Edge] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] in ("c", "s"):
            continue
        if tokens[0] != "m" or len(tokens) != 3:
            raise GraphFormatError(line_no, "expected 'm <u> <v>'")
        try:
            u, v = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise GraphFormatError(line_no, "matched endpoints must be integers")
        if u == v:
            raise GraphFormatError(line_no, f"self-loop at vertex {u}")
        if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
            raise GraphFormatError(line_no, f"vertex id out of range 1..{vertex_count}")
        pairs.add(edge(u - 1, v - 1))
    return frozenset(pairs)


def _print_matching(matching: frozenset[Edge], out: TextIO) -> None:
    print(f"s {len(matching)}", file=out)
    for a, b in sorted(matching):
        print(f"m {a + 1} {b + 1}", file=out)


def _read(path: str, err: TextIO) -> str | None:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=err)
        return None


def run_solve(
    graph_path: str,
    certificate_path: str | None = None,
    trace: bool = False,
    out: TextIO | None = None,
    err: TextIO | None = None,
) -> int:
    """Solve a graph file and print the maximum matching in ``s``/``m`` form.

    With a certificate path, the failing search for the final matching is
    rerun and its odd set cover, for the final contracted graph, is written
    there together with the contraction history. With trace enabled, one
    record per search iteration goes to standard error (0-based vertex ids).
    """
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    text = _read(graph_path, err)
    if text is None:
        return EXIT_PARSE
    try:
        gf = parse_graph_file(text)
    except GraphFormatError as exc:
        print(f"error: {graph_path}: {exc}", file=err)
        return EXIT_PARSE
    g = gf.to_graph()
    tracer = (lambda line: print(line, file=err)) if trace else None
    try:
        matching = find_maximum_matching(g, trace=tracer)
        certificate_text = None
        if certificate_path is not None:
            certificate = certify_maximality(g, matching)
            if certificate is None:
                raise InvariantViolation("computed matching admits an augmenting path")
            certificate_text = format_certificate(
                certificate.contractions, certificate.cover, offset=1
            )
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal error: {exc}", file=err)
        return EXIT_INTERNAL
    _print_matching(matching, out)
    if certificate_text is not None:
        try:
            with open(certificate_path, "w", encoding="utf-8") as handle:
                handle.write(certificate_text)
        except OSError as exc:
            print(f"error: cannot write {certificate_path}: {exc}", file=err)
            return EXIT_PARSE
    return EXIT_OK


def run_verify(
    graph_path: str,
    matching_path: str,
    certificate_path: str | None = None,
    out: TextIO | None = None,
    err: TextIO | None = None,
) -> int:
    """Check a matching file against a graph file, and optionally a
    certificate of maximality; prints a human-readable report."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    graph_text = _read(graph_path, err)
    matching_text = _read(matching_path, err) if graph_text is not None else None
    if graph_text is None or matching_text is None:
        return EXIT_PARSE
    try:
        gf = parse_graph_file(graph_text)
        matching = parse_matching_file(matching_text, gf.vertex_count)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    g = gf.to_graph()
    matching_ok = is_matching(matching)
    subset_ok = matching <= g
    print(f"matching: {len(matching)} edges", file=out)
    print(f"pairwise vertex-disjoint: {'yes' if matching_ok else 'no'}", file=out)
    print(f"contained in the graph: {'yes' if subset_ok else 'no'}", file=out)
    ok = matching_ok and subset_ok
    if certificate_path is not None:
        certificate_text = _read(certificate_path, err)
        if certificate_text is None:
            return EXIT_PARSE
        try:
            steps, cover = parse_certificate(certificate_text, offset=1)
        except ValueError as exc:
            print(f"error: {certificate_path}: {exc}", file=err)
            return EXIT_PARSE
        report, problems = verify_certificate(g, matching, steps, cover)
        print(f"contractions replayed: {len(steps)}", file=out)
        for problem in problems:
            print(f"certificate problem: {problem}", file=out)
        print(f"cover sets: {len(cover)}", file=out)
        print(f"cover valid on final graph: {'yes' if report.cover_ok else 'no'}", file=out)
        print(
            f"cover capacity {report.capacity} vs final matching size "
            f"{report.matching_size}",
            file=out,
        )
        certified = report.verdict and not problems
        print(f"maximality certified: {'yes' if certified else 'no'}", file=out)
        ok = ok and certified
    print(f"verdict: {'ok' if ok else 'FAIL'}", file=out)
    return EXIT_OK if ok else EXIT_VERIFY


def run_oracle(
    graph_path: str, out: TextIO | None = None, err: TextIO | None = None
) -> int:
    """Solve a graph file by brute force and print the result in ``s``/``m``
    form; refuses inputs beyond the exhaustive-search limits."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    text = _read(graph_path, err)
    if text is None:
        return EXIT_PARSE
    try:
        gf = parse_graph_file(text)
    except GraphFormatError as exc:
        print(f"error: {graph_path}: {exc}", file=err)
        return EXIT_PARSE
    try:
        matching = brute_force_maximum_matching(gf.to_graph())
    except OracleLimitError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ORACLE_LIMIT
    _print_matching(matching, out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="blossom",
        description="Maximum-cardinality matching in general graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute a maximum matching")
    solve.add_argument("graph", help="graph file in DIMACS edge format")
    solve.add_argument(
        "--certificate",
        metavar="PATH",
        help="write an odd-set-cover maximality certificate to PATH",
    )
    solve.add_argument(
        "--trace",
        action="store_true",
        help="stream one search record per iteration to standard error "
        "(0-based vertex ids)",
    )
    solve.add_argument(
        "--seed",
        type=int,
        default=None,
        help="reserved; the solver is deterministic and ignores it",
    )

    verify = sub.add_parser("verify", help="check a matching and optional certificate")
    verify.add_argument("graph", help="graph file in DIMACS edge format")
    verify.add_argument("matching", help="matching file with 'm <u> <v>' lines")
    verify.add_argument("certificate", nargs="?", help="certificate file to check")

    oracle = sub.add_parser("oracle", help="solve small inputs by brute force")
    oracle.add_argument("graph", help="graph file in DIMACS edge format")

    args = parser.parse_args(argv)
    if args.command == "solve":
        return run_solve(args.graph, args.certificate, args.trace)
    if args.command == "verify":
        return run_verify(args.graph, args.matching, args.certificate)
    return run_oracle(args.graph)


if __name__ == "__main__":
    sys.exit(main())
