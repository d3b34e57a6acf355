"""Trace-word combinatorics: canonical rotations and adjoint placements.

A word over the letters ``z`` (the matrix) and ``s`` (its adjoint) stands
for a product of matrices inside a trace.  The trace is invariant under
cyclic rotation, so each word is represented by its lexicographically
minimal rotation.  Collection stops there: a word and its reversal with
letters swapped have conjugate traces, but we deliberately keep such
conjugate pairs as separate terms so emitted formulas show both, e.g.
tr(Z*Z*Z)(tr Z) and tr(ZZZ*)(tr Z*) stay distinct.

The placement table for a partition aggregates, once and for all, the
C(d, d/2) ways of marking half of the d letter slots as adjoints: the
slots are split into consecutive segments of the part lengths, each
segment is canonicalized, and identical factor multisets are merged with
a multiplicity.  The table depends only on the partition, so it is cached
and every numeric or symbolic evaluation reuses it.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb

from .errors import PreconditionError


def canonical_rotation(word: str) -> str:
    """Lexicographically minimal cyclic rotation ('s' sorts before 'z')."""
    if len(word) <= 1:
        return word
    doubled = word + word
    return min(doubled[i : i + len(word)] for i in range(len(word)))


@lru_cache(maxsize=None)
def placement_terms(parts: tuple[int, ...]) -> tuple[tuple[tuple[str, ...], int], ...]:
    """Aggregated adjoint placements for one partition of an even d.

    Returns ``((factor_words, multiplicity), ...)`` sorted by factor tuple,
    where ``factor_words`` is the sorted tuple of canonical segment words
    and the multiplicities sum to C(d, d/2).
    """
    d = sum(parts)
    if d % 2:
        raise PreconditionError(f"adjoint placements need even total degree, got {d}")
    half = d // 2
    counts: dict[tuple[str, ...], int] = {}
    for adjoint_slots in itertools.combinations(range(d), half):
        marked = set(adjoint_slots)
        letters = "".join("s" if i in marked else "z" for i in range(d))
        factors = []
        pos = 0
        for part in parts:
            factors.append(canonical_rotation(letters[pos : pos + part]))
            pos += part
        key = tuple(sorted(factors))
        counts[key] = counts.get(key, 0) + 1
    assert sum(counts.values()) == comb(d, half)
    return tuple(sorted(counts.items()))


def word_text(word: str) -> str:
    """Human form of a word: z -> Z, s -> Z*."""
    return "".join("Z" if ch == "z" else "Z*" for ch in word)


def word_json(word: str) -> str:
    """JSON form of a word: z -> Z, s -> s."""
    return "".join("Z" if ch == "z" else "s" for ch in word)
