"""The sharp product on permutations (standardization fibers).

``G[s]`` denotes the sum of all words standardizing to the permutation
``s``; these sums are closed under both the concatenation product
(convolution of patterns) and the overlapping sharp product.  The support
of a sharp product is an interval of the left weak order, with endpoints
given by the two relabeling scans ``wedge`` and ``vee``, which also drive
the multiplicative bases ``S`` (order ideals) and ``E`` (order filters).

Freeness of the sharp algebra is witnessed by three families of
generators (non-secable, non-interval, non-internal-interval
permutations, all equinumerous) and by the associated overlapping
``bullet`` composition with its unique maximal factorization.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations as _itertools_permutations

from .lincomb import LinComb
from .normal_forms import std
from .words import Word

__all__ = [
    "permutations",
    "inverse",
    "inversions",
    "weak_leq",
    "dk_G",
    "dk_G_inverse",
    "dk_F",
    "dk_F_inverse",
    "convolution",
    "sharp_G",
    "sharp_F",
    "vee",
    "wedge",
    "sharp_S",
    "sharp_E",
    "sharp_interval",
    "s_in_g",
    "e_in_g",
    "is_nonsecable",
    "is_noninterval",
    "is_non_internal_interval",
    "bullet",
    "bullet_factorize",
    "bullet_length",
]

Permutation = Word


@lru_cache(maxsize=None)
def permutations(n: int) -> tuple[Permutation, ...]:
    """All permutations of 1..n in one-line notation."""
    return tuple(_itertools_permutations(range(1, n + 1)))


def inverse(sigma: Permutation) -> Permutation:
    out = [0] * len(sigma)
    for i, a in enumerate(sigma, start=1):
        out[a - 1] = i
    return tuple(out)


def inversions(sigma: Permutation) -> frozenset[tuple[int, int]]:
    """Positions (i, j), i < j, carrying a descent of values."""
    n = len(sigma)
    return frozenset(
        (i, j)
        for i in range(1, n)
        for j in range(i + 1, n + 1)
        if sigma[i - 1] > sigma[j - 1]
    )


@lru_cache(maxsize=None)
def _inversion_table(n: int) -> dict[Permutation, frozenset]:
    return {sigma: inversions(sigma) for sigma in permutations(n)}


def weak_leq(tau: Permutation, sigma: Permutation) -> bool:
    """Left weak order: containment of inversion sets."""
    if len(tau) != len(sigma):
        raise ValueError("weak order only compares equal sizes")
    return inversions(tau) <= inversions(sigma)


def _check_position(k: int, n: int) -> None:
    if not 1 <= k <= n - 1:
        raise ValueError(f"position k={k} out of range for size {n}")


def dk_G(sigma: Permutation, k: int) -> Permutation | None:
    """Descend in the G basis: positions k, k+1 must carry consecutive values.

    Mirrors deleting a doubled letter at position k in every word of the
    fiber; returns None when no fiber word has that doubling.
    """
    _check_position(k, len(sigma))
    if sigma[k] != sigma[k - 1] + 1:
        return None
    return std(sigma[:k] + sigma[k + 1:])


def dk_G_inverse(tau: Permutation, k: int) -> Permutation:
    """The unique preimage of ``tau`` under :func:`dk_G` at position k."""
    _check_position(k, len(tau) + 1)
    v = tau[k - 1]
    bumped = [a if a <= v else a + 1 for a in tau]
    return tuple(bumped[:k] + [v + 1] + bumped[k:])


def dk_F(sigma: Permutation, k: int) -> Permutation | None:
    """Descend in the F basis: the values k, k+1 must be adjacent as a factor."""
    _check_position(k, len(sigma))
    i = sigma.index(k)
    if i + 1 >= len(sigma) or sigma[i + 1] != k + 1:
        return None
    return std(sigma[: i + 1] + sigma[i + 2:])


def dk_F_inverse(tau: Permutation, k: int) -> Permutation:
    """The unique preimage of ``tau`` under :func:`dk_F` at position k."""
    _check_position(k, len(tau) + 1)
    bumped = [a if a <= k else a + 1 for a in tau]
    i = bumped.index(k)
    return tuple(bumped[: i + 1] + [k + 1] + bumped[i + 1:])


def convolution(alpha: Permutation, beta: Permutation) -> LinComb:
    """Concatenation product of the two fibers, regrouped by pattern.

    Sums the permutations whose first block patterns to ``alpha`` and
    second block to ``beta``, one per choice of values for the first block.
    """
    k, n = len(alpha), len(alpha) + len(beta)
    terms = []
    for chosen in combinations(range(1, n + 1), k):
        rest = sorted(set(range(1, n + 1)) - set(chosen))
        prefix = tuple(chosen[a - 1] for a in alpha)
        suffix = tuple(rest[b - 1] for b in beta)
        terms.append((prefix + suffix, 1))
    return LinComb(terms)


def sharp_G(alpha: Permutation, beta: Permutation) -> LinComb:
    """Sharp product in the G basis.

    The support consists of the permutations of size ``k + l - 1`` whose
    first k letters pattern to ``alpha`` and whose last l letters pattern
    to ``beta``, the two blocks sharing position k.  Terms are enumerated
    by the value set of the first block.
    """
    k, l = len(alpha), len(beta)
    if k == 0 or l == 0:
        raise ValueError("sharp factors must be nonempty")
    n = k + l - 1
    everything = set(range(1, n + 1))
    terms = []
    for chosen in combinations(range(1, n + 1), k):
        v = chosen[alpha[-1] - 1]
        second = sorted((everything - set(chosen)) | {v})
        if second[beta[0] - 1] != v:
            continue
        prefix = tuple(chosen[a - 1] for a in alpha)
        suffix = tuple(second[b - 1] for b in beta[1:])
        terms.append((prefix + suffix, 1))
    return LinComb(terms)


def sharp_F(sigma: Permutation, tau: Permutation) -> LinComb:
    """Sharp product in the F basis, transported through inversion."""
    product = sharp_G(inverse(sigma), inverse(tau))
    return LinComb((inverse(gamma), c) for gamma, c in product.items())


def vee(alpha: Word, beta: Word) -> Word:
    """Upper envelope of a sharp product: relabel and stack both factors.

    Letters of ``alpha`` at most its last letter slide just below the
    first letter of ``beta``; the rest jump above all of ``beta``.  Works
    verbatim on packed words, where it bounds the product support above.
    """
    ak, b1, mb = alpha[-1], beta[0], max(beta)
    first = tuple(a + b1 - 1 if a <= ak else a + mb - 1 for a in alpha)
    second = tuple(b if b < b1 else b + ak - 1 for b in beta[1:])
    return first + second


def wedge(alpha: Word, beta: Word) -> Word:
    """Lower envelope of a sharp product; dual relabeling to :func:`vee`."""
    ak, b1, ma = alpha[-1], beta[0], max(alpha)
    first = tuple(a if a < ak else a + b1 - 1 for a in alpha)
    second = tuple(b + ak - 1 if b <= b1 else b + ma - 1 for b in beta[1:])
    return first + second


def sharp_S(alpha: Permutation, beta: Permutation) -> Permutation:
    """Sharp product of order-ideal basis elements: a single S label."""
    return vee(alpha, beta)


def sharp_E(alpha: Permutation, beta: Permutation) -> Permutation:
    """Sharp product of order-filter basis elements: a single E label."""
    return wedge(alpha, beta)


def sharp_interval(
    alpha: Permutation, beta: Permutation
) -> tuple[Permutation, Permutation, frozenset[Permutation]]:
    """Endpoints and members of the weak-order interval of a sharp product."""
    lo, hi = wedge(alpha, beta), vee(alpha, beta)
    n = len(lo)
    table = _inversion_table(n)
    lo_inv, hi_inv = table[lo], table[hi]
    members = frozenset(
        sigma for sigma, inv in table.items() if lo_inv <= inv <= hi_inv
    )
    return lo, hi, members


def s_in_g(sigma: Permutation) -> LinComb:
    """The order ideal below ``sigma``, as a sum of G labels."""
    inv = inversions(sigma)
    return LinComb(
        (tau, 1)
        for tau, t_inv in _inversion_table(len(sigma)).items()
        if t_inv <= inv
    )


def e_in_g(sigma: Permutation) -> LinComb:
    """The order filter above ``sigma``, as a sum of G labels."""
    inv = inversions(sigma)
    return LinComb(
        (tau, 1)
        for tau, t_inv in _inversion_table(len(sigma)).items()
        if inv <= t_inv
    )


def _consecutive(values: set[int]) -> bool:
    return max(values) - min(values) + 1 == len(values)


def _splits_into_intervals(values: set[int], end: int, top: int) -> bool:
    """Can ``values`` be cut into an integer interval with maximum ``end``
    plus a second interval that is empty or has maximum ``top``?"""
    if end not in values:
        return False
    if _consecutive(values) and max(values) == end:
        return True
    if top not in values or top == end:
        return False
    upper: set[int] = set()
    m = top
    while m in values:
        upper.add(m)
        rest = values - upper
        if rest and end in rest and _consecutive(rest) and max(rest) == end:
            return True
        m -= 1
    return False


def is_nonsecable(alpha: Permutation) -> bool:
    """No prefix splits off as interval-plus-top-interval values.

    A prefix of length 2 <= k < n makes ``alpha`` secable when its value
    set is, up to order, an integer interval topped by the k-th letter
    together with a second interval that is empty or reaches n.  Sizes
    below 2 are not part of the generator family.
    """
    n = len(alpha)
    if n < 2:
        return False
    for k in range(2, n):
        if _splits_into_intervals(set(alpha[:k]), alpha[k - 1], n):
            return False
    return True


def is_noninterval(alpha: Permutation) -> bool:
    """No proper prefix of length >= 2 has an integer interval as value set."""
    n = len(alpha)
    if n < 2:
        return False
    return not any(_consecutive(set(alpha[:k])) for k in range(2, n))


def is_non_internal_interval(alpha: Permutation) -> bool:
    """No proper factor of length >= 2 has value set {1..r}.

    These are exactly the inverses of the non-interval permutations.
    """
    n = len(alpha)
    if n < 2:
        return False
    for r in range(2, n):
        target = set(range(1, r + 1))
        for i in range(n - r + 1):
            if set(alpha[i: i + r]) == target:
                return False
    return True


def bullet(sigma: Permutation, tau: Permutation) -> Permutation:
    """Overlapping composition: the unique sharp term whose prefix values
    form an integer interval."""
    k, n = len(sigma), len(sigma) + len(tau) - 1
    shift = tau[0] - 1
    prefix = tuple(a + shift for a in sigma)
    rest = sorted(set(range(1, n + 1)) - set(prefix))
    pattern = std(tau[1:])
    return prefix + tuple(rest[r - 1] for r in pattern)


def _breakpoints(alpha: Permutation) -> list[int]:
    return [k for k in range(2, len(alpha)) if _consecutive(set(alpha[:k]))]


def bullet_factorize(alpha: Permutation) -> tuple[Permutation, ...]:
    """Maximal bullet factorization; every factor is non-interval.

    Adjacent factors overlap in one position, so a factorization into r
    parts cuts at r - 1 interior prefixes with interval value sets.
    """
    if not alpha:
        raise ValueError("cannot factor the empty permutation")
    marks = [1] + _breakpoints(alpha) + [len(alpha)]
    return tuple(
        std(alpha[a - 1: b]) for a, b in zip(marks, marks[1:])
    )


def bullet_length(alpha: Permutation) -> int:
    """Number of factors in the maximal bullet factorization."""
    return len(_breakpoints(alpha)) + 1
