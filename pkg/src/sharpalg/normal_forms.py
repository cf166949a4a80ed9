"""Normal forms of words: standardization, packing, parkization.

Each map sends an arbitrary word to a canonical representative
(permutation, packed word, parking function) and each algebra in this
package is spanned by the fibers of one of them.  Standardization commutes
with taking arbitrary subsequences, packing and parkization only with
taking contiguous factors; ``restriction_check`` probes exactly that.
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations

from .words import Word

__all__ = [
    "std",
    "pack",
    "park",
    "is_permutation",
    "is_packed",
    "is_parking",
    "restriction_check",
    "avoids",
]


def std(w: Word) -> Word:
    """Standardization: relabel letters 1..n by value, ties left to right.

    >>> std((3, 6, 5, 1, 8, 2, 1, 2, 2))
    (6, 8, 7, 1, 9, 3, 2, 4, 5)
    """
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    result = [0] * len(w)
    for rank, i in enumerate(order, start=1):
        result[i] = rank
    return tuple(result)


def pack(w: Word) -> Word:
    """Packing: collapse the letter set onto an initial segment 1..m.

    >>> pack((4, 1, 5, 1))
    (2, 1, 3, 1)
    """
    rank = {a: r for r, a in enumerate(sorted(set(w)), start=1)}
    return tuple(rank[a] for a in w)


def _first_gap(w: Word) -> int:
    """Smallest i with fewer than i letters <= i, or len(w) + 1 if none."""
    n = len(w)
    counts = [0] * (n + 1)
    for a in w:
        if a <= n:
            counts[a] += 1
    seen = 0
    for i in range(1, n + 1):
        seen += counts[i]
        if seen < i:
            return i
    return n + 1


def park(w: Word) -> Word:
    """Parkization: repeatedly shift letters down over the first gap.

    Each round finds the smallest value i not yet reachable (fewer than i
    letters are <= i) and decrements every letter above it; the result is
    the parking function canonically attached to ``w``.

    >>> park((3, 5, 1, 1, 11, 8, 8, 2))
    (3, 5, 1, 1, 8, 6, 6, 2)
    """
    current = w
    while True:
        gap = _first_gap(current)
        if gap == len(current) + 1:
            return tuple(current)
        current = tuple(a - 1 if a > gap else a for a in current)


def is_permutation(w: Word) -> bool:
    """True if ``w`` is a bijective word on 1..n."""
    return sorted(w) == list(range(1, len(w) + 1))


def is_packed(w: Word) -> bool:
    """True if the letter set of ``w`` is exactly 1..m for some m."""
    letters = set(w)
    return letters == set(range(1, len(letters) + 1))


def is_parking(w: Word) -> bool:
    """True if ``w`` sorts to a word with i-th letter at most i."""
    return len(w) > 0 and _first_gap(w) == len(w) + 1


_NORMAL_FORMS = {"std": std, "pack": pack, "park": park}


def restriction_check(map_name: str, u: Word, window: Iterable[int]) -> bool:
    """Does restricting before or after normalizing give the same answer?

    ``window`` holds 1-based positions.  For ``std`` any position set is
    allowed; ``pack`` and ``park`` require a contiguous block, since only
    factors restrict cleanly for them.
    """
    if map_name not in _NORMAL_FORMS:
        raise ValueError(f"unknown normal form {map_name!r}")
    positions = sorted(window)
    if not positions or positions[0] < 1 or positions[-1] > len(u):
        raise ValueError(f"window {positions} out of range for length {len(u)}")
    if len(set(positions)) != len(positions):
        raise ValueError("window positions must be distinct")
    if map_name in ("pack", "park") and positions != list(
        range(positions[0], positions[-1] + 1)
    ):
        raise ValueError(f"{map_name} only restricts to contiguous factors")
    f = _NORMAL_FORMS[map_name]
    normalized = f(u)
    sub = tuple(u[i - 1] for i in positions)
    sub_of_normalized = tuple(normalized[i - 1] for i in positions)
    return f(sub) == f(sub_of_normalized)


def avoids(w: Word, pattern: Word) -> bool:
    """True if no subsequence of ``w`` packs to ``pattern``.

    Patterns are packed words, so equalities in the pattern constrain
    equalities in the occurrence (e.g. 121 asks for a repeated low letter
    around a strictly larger one).
    """
    p = pack(pattern)
    for positions in combinations(range(len(w)), len(p)):
        if pack(tuple(w[i] for i in positions)) == p:
            return False
    return True
