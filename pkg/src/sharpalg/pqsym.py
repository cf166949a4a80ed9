"""The sharp product on parking functions.

``G[a]`` is the sum of all words whose parking normal form is ``a``.
Unlike standardization and packing, parking does not restrict to factors
of a word, so both products are computed directly on word fibers over a
sufficiently large alphabet and read off on normal forms.
"""

from __future__ import annotations

from functools import lru_cache

from .lincomb import LinComb
from .normal_forms import is_parking, park
from .words import Word, delete_doubled, sharp, words_over

__all__ = [
    "parking_functions",
    "park_fiber",
    "product_PF",
    "sharp_PF",
    "dprime_k",
]


@lru_cache(maxsize=None)
def parking_functions(n: int) -> tuple[Word, ...]:
    """All parking functions of length n, in lexicographic order."""
    return tuple(w for w in words_over(n, n) if is_parking(w))


@lru_cache(maxsize=None)
def _fibers_over(n: int, alphabet: int) -> dict[Word, tuple[Word, ...]]:
    """Group the words of length n over 1..alphabet by parking normal form."""
    buckets: dict[Word, list[Word]] = {}
    for w in words_over(alphabet, n):
        buckets.setdefault(park(w), []).append(w)
    return {a: tuple(ws) for a, ws in buckets.items()}


def park_fiber(a: Word, alphabet: int) -> tuple[Word, ...]:
    """Words over 1..alphabet that park to ``a``."""
    if not is_parking(a):
        raise ValueError(f"not a parking function: {a!r}")
    return _fibers_over(len(a), alphabet).get(a, ())


def product_PF(a: Word, b: Word) -> LinComb:
    """Ordinary product: concatenations of fiber words that stay parking."""
    n = len(a) + len(b)
    terms = []
    for u in park_fiber(a, n):
        for v in park_fiber(b, n):
            c = u + v
            if is_parking(c):
                terms.append((c, 1))
    return LinComb(terms)


def sharp_PF(a: Word, b: Word) -> LinComb:
    """Sharp product: overlapping gluings of fiber words that stay parking."""
    if len(a) == 0 or len(b) == 0:
        raise ValueError("sharp factors must be nonempty")
    n = len(a) + len(b) - 1
    terms = []
    for u in park_fiber(a, n):
        for v in park_fiber(b, n):
            c = sharp(u, v)
            if c is not None and is_parking(c):
                terms.append((c, 1))
    return LinComb(terms)


def dprime_k(c: Word, k: int) -> Word | None:
    """Doubled-letter deletion restricted to stay inside parking functions."""
    d = delete_doubled(c, k)
    if d is None or not is_parking(d):
        return None
    return d
