"""Canonical forms: cyclic words modulo rotation and relabeling.

Two codes are isomorphic when their words match after a cyclic shift and
a permutation of the coordinate labels.  Run me with:
python demos/03_canonical_forms.py
"""

from circuitcodes import are_isomorphic, canonical_form, classify, format_sequence

for word in [(2, 1, 2, 1), (3, 1, 3, 1), (1, 2, 1, 2)]:
    form = canonical_form(word)
    print(f"{format_sequence(word):12s} -> {format_sequence(form.word)}"
          f"   (shift {form.shift}, relabeling {dict(form.relabeling)})")

print("\n(1,2,1,2) vs (2,3,2,3):", are_isomorphic((1, 2, 1, 2), (2, 3, 2, 3)))
print("(1,2,1,2) vs (1,2,2,1):", are_isomorphic((1, 2, 1, 2), (1, 2, 2, 1)))

# classify a pile of words into isomorphism classes
words = [(1, 2, 1, 2), (2, 1, 2, 1), (3, 1, 3, 1), (1, 2, 3, 1, 2, 3), (2, 3, 1, 2, 3, 1)]
print("\nclasses:")
for cls in classify(words):
    print(f"  {format_sequence(cls.representative.word)}  x{cls.count}")

# reversal is not part of the default isomorphism, but can be opted in;
# on a chiral word the two notions genuinely differ
chiral = (1, 1, 1, 2, 3, 3)
plain = canonical_form(chiral).word
wide = canonical_form(chiral, include_reversal=True).word
print(f"\nreversal off: {format_sequence(plain)}   reversal on: {format_sequence(wide)}")
