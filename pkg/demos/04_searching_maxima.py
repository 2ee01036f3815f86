"""Exhaustive searches for maximum-length codes.

Every run below finishes in well under a second and reproduces a
published extremal value.  Run me with:  python demos/04_searching_maxima.py
"""

from circuitcodes import (
    CodeParams,
    SearchOptions,
    enumerate_max,
    family_symmetric_max,
    format_sequence,
    lookup,
    max_length,
    symmetric_max,
)

for d, k in [(3, 1), (5, 2), (6, 3)]:
    rec = max_length(CodeParams(d, k))
    known = lookup(CodeParams(d, k), "general")
    expect = f", published value {known.expected_length}" if known else ""
    print(f"K({d},{k}) = {rec.n}  ({rec.nodes} nodes, "
          f"{len(rec.witnesses)} witness class(es){expect})")

print("\nunique maximum (6,3) code:")
for cls in enumerate_max(CodeParams(6, 3)):
    print(" ", format_sequence(cls.representative.word))

rec = symmetric_max(CodeParams(8, 4))
print(f"\nsymmetric maximum at (8,4): {rec.n} (published 4k+6 = 22)")
print("  witness:", format_sequence(rec.witnesses[0]))

rec = family_symmetric_max(CodeParams(8, 4), l=3)
print(f"family maximum at (8,4) with a bit run >= 7: {rec.n} (published 4k+2l = 22)")

# decision mode answers "is there a code of length >= N?" and stops early
rec = max_length(CodeParams(5, 2), SearchOptions(target=14))
print(f"\ndecision (5,2) >= 14: reached={rec.n >= 14} after {rec.nodes} nodes")

# budgets keep impossible scales honest: the run below admits truncation
rec = max_length(CodeParams(16, 9), SearchOptions(node_budget=2000))
print(f"(16,9) with a 2000-node budget: exhaustive={rec.exhaustive} "
      f"(stop: {rec.stop_reason}); published value is 4k+8 = 44")
