"""Tour of the transition-sequence algebra.

A transition sequence records which coordinate flips at each step of a
walk on the hypercube.  Run me with:  python demos/01_transition_sequences.py
"""

from circuitcodes import (
    Segment,
    delta,
    expand_vertices,
    hamming_distance,
    is_closed,
    parse_sequence,
)

word = parse_sequence("1,2,1,3,1,2,1,3", d=3)
print("word:", word)
print("closed (every label an even number of times):", is_closed(word))

walk = expand_vertices(word, d=3)
print("\nvertex walk (coordinate sets, starting at the origin):")
for i, vertex in enumerate(walk, start=1):
    print(f"  x{i} = {set(vertex) or '{}'}")

# the odd-multiplicity count of a segment equals the cube distance
# between the vertices at its two ends
seg = Segment(start=2, length=3)
print(f"\nsegment {seg}: labels", word[1:4])
print("delta (labels occurring an odd number of times):", delta(word, seg))
print("cube distance x2 -> x5:", hamming_distance(walk[1], walk[4]))

# segments wrap around the end of the cyclic word
wrapping = Segment(start=7, length=4)
print(f"\nwrapping segment {wrapping} has delta {delta(word, wrapping)}")
