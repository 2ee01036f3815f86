"""Canonical forms for cyclic words under rotation and label permutation.

Two transition sequences describe isomorphic codes when one can be turned
into the other by a cyclic shift plus a relabeling of the coordinates.
The canonical representative of a class is computed by brute force over
rotations: relabel each rotation by first occurrence (the first new label
becomes 1, the next 2, ...) and keep the lexicographically smallest
word.  Traversal reversal is not part of the default isomorphism; it can
be opted in, which additionally scans rotations of the reversed word.

Word lengths stay small in this domain, so the quadratic scan is
preferred over a minimal-rotation algorithm for its obvious correctness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Word, as_word


def _first_occurrence_relabel(word: Word) -> tuple[Word, dict[int, int]]:
    mapping: dict[int, int] = {}
    out = []
    for c in word:
        if c not in mapping:
            mapping[c] = len(mapping) + 1
        out.append(mapping[c])
    return tuple(out), mapping


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical word plus the transform that produced it from the input.

    ``word == relabel(rotate(reverse?(input), shift))`` where the
    relabeling is given as (old, new) pairs for the labels that occur.
    """

    word: Word
    shift: int
    relabeling: tuple[tuple[int, int], ...]
    reversal_used: bool = False

    def relabel_map(self) -> dict[int, int]:
        return dict(self.relabeling)


def canonical_form(
    word: Sequence[int], include_reversal: bool = False
) -> CanonicalForm:
    """Smallest first-occurrence word over all rotations.

    Ties prefer the forward orientation, then the smaller shift; the
    result is a fixed point of canonicalization.
    """
    w = as_word(word)
    n = len(w)
    if n == 0:
        return CanonicalForm(word=(), shift=0, relabeling=())
    best_word: Word | None = None
    best = (0, False)
    orientations = [(w, False)]
    if include_reversal:
        orientations.append((w[::-1], True))
    for base, reversed_flag in orientations:
        for s in range(n):
            cand, _ = _first_occurrence_relabel(base[s:] + base[:s])
            if best_word is None or cand < best_word:
                best_word = cand
                best = (s, reversed_flag)
    shift, reversed_flag = best
    base = w[::-1] if reversed_flag else w
    _, mapping = _first_occurrence_relabel(base[shift:] + base[:shift])
    assert best_word is not None
    return CanonicalForm(
        word=best_word,
        shift=shift,
        relabeling=tuple(sorted(mapping.items())),
        reversal_used=reversed_flag,
    )


def are_isomorphic(
    a: Sequence[int], b: Sequence[int], include_reversal: bool = False
) -> bool:
    """True iff the words are related by shift + relabeling (+ optional
    reversal)."""
    wa, wb = tuple(a), tuple(b)
    if len(wa) != len(wb):
        return False
    return (
        canonical_form(wa, include_reversal).word
        == canonical_form(wb, include_reversal).word
    )


@dataclass(frozen=True)
class IsomorphismClass:
    """One isomorphism class of codes: canonical representative + how many
    of the classified inputs fell into it."""

    representative: CanonicalForm
    count: int


def classify(
    words: Iterable[Sequence[int]], include_reversal: bool = False
) -> list[IsomorphismClass]:
    """Partition words by canonical form.

    Classes come back sorted by representative word, counts summing to
    the input size, independent of input order.
    """
    buckets: dict[Word, int] = {}
    for w in words:
        key = canonical_form(w, include_reversal).word
        buckets[key] = buckets.get(key, 0) + 1
    out = []
    for key in sorted(buckets):
        # the representative is self-canonical: identity transform
        out.append(
            IsomorphismClass(
                representative=canonical_form(key, include_reversal),
                count=buckets[key],
            )
        )
    return out
