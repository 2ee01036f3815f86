"""Deciding whether a cycle is a circuit code of spread k.

The requirement: any two cycle vertices at cycle distance c must sit at
cube distance >= min(c, k).  Run me with:  python demos/02_verifying_codes.py
"""

from circuitcodes import CodeParams, bit_runs, brute_force_check, check_spread

# the 4-cycle of the square is a (2,1) code
print("square at spread 1:", check_spread((1, 2, 1, 2), CodeParams(2, 1)))

# the full Gray cycle of the 3-cube fails spread 2: vertices x1 and x4
# are three steps apart on the cycle but adjacent in the cube
gray3 = (1, 2, 1, 3, 1, 2, 1, 3)
report = check_spread(gray3, CodeParams(3, 2))
print("Gray cycle at spread 2:", report.to_line())

# an independent checker built on pairwise coordinate-set comparison
# must agree; the two share no arithmetic
print("independent checker agrees:", brute_force_check(gray3, CodeParams(3, 2)) is not None)

# bit runs: maximal stretches of pairwise-distinct labels
runs = bit_runs(gray3)
print(f"\nbit runs of the Gray cycle: longest {runs.longest}")
for seg in runs.runs:
    print(f"  start {seg.start}, length {seg.length}")
