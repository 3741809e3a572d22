# Odd-set-cover certificates: proof that a matching is maximum.
#
# When the search fails, the odd-labelled vertices (plus a correction for
# matching edges the search never reached) form an odd set cover whose
# capacity equals the matching size. Since every matching fits under a
# cover's capacity, that equality proves maximality. Covers are built for
# the graph the failed search ran on, so a certificate also records the
# contractions that produced that graph, and verification replays them.

from blossom import (
    certify_maximality,
    find_maximum_matching,
    format_certificate,
    graph,
    parse_certificate,
    verify_certificate,
)

g = graph(
    [
        (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7),
        (6, 7), (7, 8), (8, 9), (8, 10), (9, 10), (10, 11), (8, 12),
    ]
)
m = find_maximum_matching(g)
print(f"maximum matching has {len(m)} edges")

cert = certify_maximality(g, m)
print(f"contractions recorded: {len(cert.contractions)}")
for step in cert.contractions:
    print(f"  cycle {step.cycle} (stem {step.stem}) -> fresh vertex {step.fresh}")
print("cover of the final contracted graph:", sorted(tuple(sorted(s)) for s in cert.cover))

text = format_certificate(cert.contractions, cert.cover)
print("serialized certificate:")
print(text)

steps, cover = parse_certificate(text)
report, problems = verify_certificate(g, m, steps, cover)
print("replayed contractions:", len(steps), "problems:", problems)
print(f"cover capacity {report.capacity} == final matching size {report.matching_size}")
print("maximality certified:", report.verdict and not problems)
assert report.verdict and not problems
