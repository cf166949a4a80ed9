"""The sharp product on compositions: ribbon/complete/elementary bases
and the dual fundamental basis.

A composition of n is a tuple of positive integers summing to n.  It is
stored as the label of a ribbon sum ``R[I]`` (words with prescribed
descent positions); the complete and elementary bases ``S[I]``, ``L[I]``
are kept as linear combinations of ribbons.  The dual side stores
fundamental labels ``F[I]`` whose sharp product shuffles the binary
codes of the factors.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from math import comb

from .lincomb import LinComb
from .words import Word

__all__ = [
    "Composition",
    "compositions",
    "is_composition",
    "binary_code",
    "composition_of_code",
    "descent_composition",
    "sharp_R",
    "sharp_S_comp",
    "sharp_E_comp",
    "s_in_r",
    "lam_in_r",
    "to_s_coords",
    "psi_complete_to_ribbon",
    "psi_complete_to_elementary",
    "coproduct_R",
    "coproduct_S_n",
    "tensor_apply",
    "shuffles",
    "qsym_sharp_F",
    "comp_str",
    "parse_comp",
]

Composition = tuple[int, ...]


def is_composition(parts: tuple) -> bool:
    return (
        len(parts) > 0
        and all(isinstance(p, int) and p >= 1 for p in parts)
    )


def _check(parts: Composition) -> None:
    if not is_composition(parts):
        raise ValueError(f"not a composition: {parts!r}")


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[Composition, ...]:
    """All compositions of n, one per binary code of length n - 1."""
    if n == 0:
        return ()
    return tuple(
        composition_of_code(code) for code in product((0, 1), repeat=n - 1)
    )


def binary_code(parts: Composition) -> tuple[int, ...]:
    """Length sum-1 code: a run of part-1 zeros per part, ones as separators."""
    _check(parts)
    code: list[int] = []
    for p in parts:
        code.extend([0] * (p - 1))
        code.append(1)
    return tuple(code[:-1])


def composition_of_code(code: tuple[int, ...]) -> Composition:
    part = 1
    parts = []
    for bit in code:
        if bit:
            parts.append(part)
            part = 1
        else:
            part += 1
    parts.append(part)
    return tuple(parts)


def descent_composition(w: Word) -> Composition:
    """Composition recording the descent positions of a word."""
    if not w:
        raise ValueError("empty word has no descent composition")
    code = tuple(1 if w[i] > w[i + 1] else 0 for i in range(len(w) - 1))
    return composition_of_code(code)


def sharp_R(alpha: Composition, beta: Composition) -> Composition:
    """Sharp product of ribbons: glue the adjacent parts, sharing one unit."""
    _check(alpha)
    _check(beta)
    return alpha[:-1] + (alpha[-1] + beta[0] - 1,) + beta[1:]


def sharp_S_comp(alpha: Composition, beta: Composition) -> Composition:
    """The complete basis is multiplicative with the same glued label."""
    return sharp_R(alpha, beta)


def sharp_E_comp(alpha: Composition, beta: Composition) -> Composition:
    """The elementary basis is multiplicative with the same glued label."""
    return sharp_R(alpha, beta)


# Degree-2 generators in ribbon coordinates.
_X = LinComb.term((2,))
_Y = LinComb.term((1, 1))


def _eval_code(code: tuple[int, ...], images: dict[int, LinComb]) -> LinComb:
    """Fold a generator word under the sharp product of ribbons."""
    result = LinComb.term((1,))
    for bit in code:
        result = result.bilinear(
            images[bit], lambda a, b: LinComb.term(sharp_R(a, b))
        )
    return result


def s_in_r(parts: Composition) -> LinComb:
    """Complete basis element as a ribbon sum (all coarsenings)."""
    return _eval_code(binary_code(parts), {0: _X, 1: _X + _Y})


def lam_in_r(parts: Composition) -> LinComb:
    """Elementary basis element as a ribbon sum."""
    return _eval_code(binary_code(parts), {0: _Y, 1: _X + _Y})


def to_s_coords(ribbons: LinComb) -> LinComb:
    """Rewrite a ribbon combination in complete-basis coordinates.

    Labels of the result are compositions, read as S coordinates.  Uses
    sign-alternating inclusion-exclusion over the separator set of each
    ribbon code.
    """

    def one_ribbon(parts: Composition) -> LinComb:
        code = binary_code(parts)
        ones = [i for i, bit in enumerate(code) if bit]
        terms = []
        for r in range(len(ones) + 1):
            sign = -1 if (len(ones) - r) % 2 else 1
            for kept in combinations(ones, r):
                chosen = set(kept)
                lowered = tuple(
                    1 if i in chosen else 0 for i in range(len(code))
                )
                terms.append((composition_of_code(lowered), sign))
        return LinComb(terms)

    return ribbons.apply(one_ribbon)


def psi_complete_to_ribbon(ribbons: LinComb) -> LinComb:
    """The linear map sending each complete element to the same-index ribbon."""
    return to_s_coords(ribbons)


def psi_complete_to_elementary(ribbons: LinComb) -> LinComb:
    """The linear map sending each complete element to the elementary one."""
    return to_s_coords(ribbons).apply(lam_in_r)


def coproduct_R(parts: Composition) -> LinComb:
    """Sharp coproduct of a ribbon: each code letter goes left or right.

    Labels of the result are pairs of compositions; the empty code on a
    side contributes the degree-one composition (1).
    """
    code = binary_code(parts)
    positions = range(len(code))
    terms = []
    for r in range(len(code) + 1):
        for left in combinations(positions, r):
            chosen = set(left)
            left_code = tuple(code[i] for i in positions if i in chosen)
            right_code = tuple(code[i] for i in positions if i not in chosen)
            terms.append(
                ((composition_of_code(left_code), composition_of_code(right_code)), 1)
            )
    return LinComb(terms)


def coproduct_S_n(n: int) -> LinComb:
    """Sharp coproduct of S_n: binomial split into two complete pieces."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    return LinComb(
        (((i,), (n + 1 - i,)), comb(n - 1, i - 1)) for i in range(1, n + 1)
    )


def tensor_apply(pairs: LinComb, f) -> LinComb:
    """Apply a label-to-combination map to both legs of a pair combination."""
    total = LinComb.zero()
    for (a, b), c in pairs.items():
        fa, fb = f(a), f(b)
        for la, ca in fa.items():
            for lb, cb in fb.items():
                total += (c * ca * cb) * LinComb.term((la, lb))
    return total


def shuffles(u: tuple, v: tuple):
    """All interleavings, one per choice of positions for the first word.

    Yields duplicates when equal letters allow several choices; callers
    that sum over the generator get shuffle multiplicities for free.
    """
    n = len(u) + len(v)
    for spots in combinations(range(n), len(u)):
        chosen = set(spots)
        out = []
        i = j = 0
        for k in range(n):
            if k in chosen:
                out.append(u[i])
                i += 1
            else:
                out.append(v[j])
                j += 1
        yield tuple(out)


def qsym_sharp_F(alpha: Composition, beta: Composition) -> LinComb:
    """Sharp product of fundamentals: shuffle the binary codes."""
    _check(alpha)
    _check(beta)
    terms = [
        (composition_of_code(code), 1)
        for code in shuffles(binary_code(alpha), binary_code(beta))
    ]
    return LinComb(terms)


def comp_str(parts: Composition) -> str:
    return ",".join(map(str, parts))


def parse_comp(text: str) -> Composition:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"malformed composition {text!r}") from None
    if not is_composition(parts):
        raise ValueError(f"not a composition: {text!r}")
    return parts
