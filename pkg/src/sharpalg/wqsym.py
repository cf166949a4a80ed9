"""The sharp product on packed words (surjection fibers).

``M[u]`` is the sum of all words whose packing is ``u``.  The module
provides the doubled-letter deletion, the sharp and ordinary products on
packed labels, the pseudo-order on packed words (the analogue of weak
order with half inversions for equalities), interval supports, scan
extremes, and the non-secability predicate behind the freeness count.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .fqsym import _splits_into_intervals, vee, wedge
from .lincomb import LinComb
from .normal_forms import is_packed, pack, std
from .words import Word, delete_doubled

__all__ = [
    "packed_words",
    "dk_M",
    "product_M",
    "sharp_M",
    "half_inversion_table",
    "pseudo_leq",
    "vee_pw",
    "wedge_pw",
    "sharp_S_pw",
    "sharp_E_pw",
    "sharp_interval_pw",
    "s_in_m",
    "e_in_m",
    "is_nonsecable_pw",
    "g_in_m",
]

vee_pw = vee
wedge_pw = wedge


@lru_cache(maxsize=None)
def packed_words(n: int) -> tuple[Word, ...]:
    """All packed words of length n, by placing the positions of each letter."""
    if n == 0:
        return ((),)
    out: list[Word] = []

    def place(remaining: tuple[int, ...], letter: int, filled: dict[int, int]) -> None:
        if not remaining:
            out.append(tuple(filled[i] for i in range(n)))
            return
        for size in range(1, len(remaining) + 1):
            for chosen in combinations(remaining, size):
                rest = tuple(i for i in remaining if i not in set(chosen))
                for i in chosen:
                    filled[i] = letter
                place(rest, letter + 1, filled)

    place(tuple(range(n)), 1, {})
    return tuple(out)


def _check_packed(u: Word) -> None:
    if not is_packed(u):
        raise ValueError(f"not a packed word: {u!r}")


def dk_M(u: Word, k: int) -> Word | None:
    """Doubled-letter deletion; a packed word stays packed."""
    _check_packed(u)
    return delete_doubled(u, k)


def product_M(u: Word, v: Word) -> LinComb:
    """Ordinary product: words whose two halves pack to the factors."""
    _check_packed(u)
    _check_packed(v)
    k = len(u)
    terms = [
        (w, 1)
        for w in packed_words(k + len(v))
        if pack(w[:k]) == u and pack(w[k:]) == v
    ]
    return LinComb(terms)


def sharp_M(u: Word, v: Word) -> LinComb:
    """Sharp product: overlapping halves pack to the factors."""
    _check_packed(u)
    _check_packed(v)
    k, l = len(u), len(v)
    if k == 0 or l == 0:
        raise ValueError("sharp factors must be nonempty")
    terms = [
        (w, 1)
        for w in packed_words(k + l - 1)
        if pack(w[:k]) == u and pack(w[k - 1:]) == v
    ]
    return LinComb(terms)


def half_inversion_table(u: Word) -> tuple[int, ...]:
    """For each pair i < j: 2 if u_i > u_j, 1 if equal, 0 otherwise.

    Comparing tables pointwise gives the pseudo-order on packed words of
    the same evaluation-free kind (any fixed length).
    """
    n = len(u)
    return tuple(
        2 if u[i] > u[j] else 1 if u[i] == u[j] else 0
        for i in range(n)
        for j in range(i + 1, n)
    )


def pseudo_leq(u: Word, v: Word) -> bool:
    if len(u) != len(v):
        raise ValueError("words must have equal length")
    return all(a <= b for a, b in zip(half_inversion_table(u), half_inversion_table(v)))


def sharp_S_pw(u: Word, v: Word) -> Word:
    """Multiplicative image on the upper scan extreme."""
    _check_packed(u)
    _check_packed(v)
    return vee(u, v)


def sharp_E_pw(u: Word, v: Word) -> Word:
    """Multiplicative image on the lower scan extreme."""
    _check_packed(u)
    _check_packed(v)
    return wedge(u, v)


def sharp_interval_pw(u: Word, v: Word) -> tuple[Word, Word, frozenset]:
    """Support of the sharp product with its pseudo-order endpoints."""
    comb = sharp_M(u, v)
    members = frozenset(comb.support())
    return wedge(u, v), vee(u, v), members


def s_in_m(u: Word) -> LinComb:
    """Upper multiplicative element: sum of the pseudo-order down-set."""
    _check_packed(u)
    return LinComb(
        (w, 1) for w in packed_words(len(u)) if pseudo_leq(w, u)
    )


def e_in_m(u: Word) -> LinComb:
    """Lower multiplicative element: sum of the pseudo-order up-set."""
    _check_packed(u)
    return LinComb(
        (w, 1) for w in packed_words(len(u)) if pseudo_leq(u, w)
    )


def g_in_m(sigma: Word) -> LinComb:
    """Embedding of a permutation label: the packed words standardizing to it."""
    return LinComb(
        (u, 1) for u in packed_words(len(sigma)) if std(u) == sigma
    )


def is_nonsecable_pw(u: Word) -> bool:
    """No overlap position splits the word into two packed-word factors.

    A splitting prefix must use a set of letters that is an interval
    topped by the overlap letter, possibly together with an interval
    containing the maximum, and must share only the overlap letter with
    the rest of the word.
    """
    _check_packed(u)
    n = len(u)
    if n < 2:
        return False
    top = max(u)
    for k in range(2, n):
        prefix = set(u[:k])
        if not _splits_into_intervals(prefix, u[k - 1], top):
            continue
        if prefix & set(u[k - 1:]) == {u[k - 1]}:
            return False
    return True
