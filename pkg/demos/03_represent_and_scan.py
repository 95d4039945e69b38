"""
Solving n = x^2 + y^2 - z^2 with small squares
==============================================

``represent`` first tries the certified patch (the mechanism of the existence
argument), then any form in K, then exhaustive search. ``scan`` compares the
solver with an independent brute-force oracle over a range of n.
"""

from boundedrep import brute_force_oracle, represent, scan

for n in (9, 2, 6, 1000003, 987654323):
    res = represent(n)
    print(n, res.outcome, res.path.value if res.path else "-", res.triple.xyz() if res.found else "")
    print("   oracle:", brute_force_oracle(n).xyz() if brute_force_oracle(n) else None)

report = scan(1, 3000)
summary = report.summary()
print("paths", summary["path_counts"])
print("exceptional n", summary["exceptional"][:20], "... max", summary["max_exceptional"])
print("disagreements", summary["disagreements"])
