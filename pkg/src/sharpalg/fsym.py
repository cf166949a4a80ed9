"""The sharp product on standard tableaux (coplactic fibers).

``S[t]`` is the sum of all words whose recording tableau under row
insertion is ``t``.  Tableaux are stored in French convention: ``rows[0]``
is the bottom row, rows strictly increase left to right and columns
strictly increase bottom to top.  The span of these sums is not stable
under deleting doubled letters at a fixed position, but it is stable
under the sharp product: the product rule keeps the tableaux whose bottom
values restrict to the first factor and whose top values rectify to the
second.
"""

from __future__ import annotations

from bisect import bisect_right
from functools import lru_cache

from . import fqsym
from .lincomb import LinComb
from .words import Word

__all__ = [
    "Tableau",
    "SkewTableau",
    "rsk",
    "p_symbol",
    "q_symbol",
    "standard_tableaux",
    "tableau_size",
    "is_standard",
    "dbar_k",
    "dbar_k_inverse",
    "restrict",
    "reading_word",
    "rectify",
    "jdt_slide",
    "inner_corners",
    "sharp_tableaux",
    "plactic_class",
    "coplactic_class",
    "s_in_f",
    "s_in_g",
    "tableau_str",
    "parse_tableau",
]

Tableau = tuple[tuple[int, ...], ...]
SkewTableau = tuple[tuple[int | None, ...], ...]


def rsk(w: Word) -> tuple[Tableau, Tableau]:
    """Row insertion of a word; returns (insertion, recording) tableaux.

    Each letter bumps the leftmost strictly larger entry of the bottom
    row, the bumped entry moves one row up, and the recording tableau
    logs which cell was created at each step.
    """
    rows: list[list[int]] = []
    recording: list[list[int]] = []
    for time, x in enumerate(w, start=1):
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                recording.append([time])
                break
            row = rows[r]
            i = bisect_right(row, x)
            if i == len(row):
                row.append(x)
                recording[r].append(time)
                break
            x, row[i] = row[i], x
            r += 1
    return tuple(map(tuple, rows)), tuple(map(tuple, recording))


def p_symbol(w: Word) -> Tableau:
    return rsk(w)[0]


def q_symbol(w: Word) -> Tableau:
    return rsk(w)[1]


def tableau_size(t: Tableau) -> int:
    return sum(len(row) for row in t)


def is_standard(t: Tableau) -> bool:
    """Rows bottom-up, entries 1..n, increasing along rows and columns."""
    entries = [a for row in t for a in row]
    if sorted(entries) != list(range(1, len(entries) + 1)):
        return False
    for r, row in enumerate(t):
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            return False
        if r + 1 < len(t):
            above = t[r + 1]
            if len(above) > len(row):
                return False
            if any(above[c] <= row[c] for c in range(len(above))):
                return False
    return True


@lru_cache(maxsize=None)
def standard_tableaux(n: int) -> tuple[Tableau, ...]:
    """All standard tableaux with n cells, grown corner by corner."""
    if n == 0:
        return ((),)
    if n == 1:
        return (((1,),),)
    out = []
    for t in standard_tableaux(n - 1):
        lengths = [len(row) for row in t]
        for r in range(len(lengths) + 1):
            if r < len(lengths):
                if r > 0 and lengths[r] >= lengths[r - 1]:
                    continue
                grown = t[:r] + (t[r] + (n,),) + t[r + 1:]
            else:
                grown = t + ((n,),)
            out.append(grown)
    return tuple(out)


def dbar_k(sigma: Word, k: int) -> Word | None:
    """Value-side companion of the doubled-letter deletion on permutations.

    Defined when the values k, k+1 sit side by side in ``sigma``; removes
    k+1 and standardizes.  Conjugate under inversion of the position-side
    map used in the G basis.
    """
    return fqsym.dk_F(sigma, k)


def dbar_k_inverse(tau: Word, k: int) -> Word:
    return fqsym.dk_F_inverse(tau, k)


def restrict(t: Tableau, values: tuple[int, int]) -> SkewTableau:
    """Cells of ``t`` whose entries lie in the interval values = (lo, hi).

    Entries below the interval leave None padding (the inner shape),
    entries above are cut away, and the kept entries are standardized to
    1..hi-lo+1.  The result is a skew tableau; it is straight when lo == 1.
    """
    lo, hi = values
    n = tableau_size(t)
    if not 1 <= lo <= hi <= n:
        raise ValueError(f"value window ({lo}, {hi}) out of range for size {n}")
    rows = []
    for row in t:
        kept = tuple(
            None if a < lo else a - lo + 1 for a in row if a <= hi
        )
        if any(a is not None for a in kept):
            rows.append(kept)
    return tuple(rows)


def reading_word(skew: SkewTableau) -> Word:
    """Row reading: top row to bottom row, left to right."""
    out = []
    for row in reversed(skew):
        out.extend(a for a in row if a is not None)
    return tuple(out)


def rectify(skew: SkewTableau) -> Tableau:
    """Straighten a skew tableau: the insertion tableau of its reading word."""
    return p_symbol(reading_word(skew))


def inner_corners(skew: SkewTableau) -> list[tuple[int, int]]:
    """Cells (row, col) of the inner shape with no inner cell right or above."""
    inner = [sum(1 for a in row if a is None) for row in skew]
    corners = []
    for r, pad in enumerate(inner):
        if pad == 0:
            continue
        if r + 1 < len(skew) and inner[r + 1] >= pad:
            continue
        corners.append((r, pad - 1))
    return corners


def jdt_slide(skew: SkewTableau, corner: tuple[int, int]) -> SkewTableau:
    """One inward slide: the hole at an inner corner migrates to the border.

    At each step the smaller of the neighbors right of and above the hole
    moves into it, preserving row and column strictness.
    """
    r, c = corner
    if corner not in inner_corners(skew):
        raise ValueError(f"{corner} is not an inner corner")
    grid = [list(row) for row in skew]
    while True:
        right = None
        if c + 1 < len(grid[r]) and grid[r][c + 1] is not None:
            right = grid[r][c + 1]
        up = None
        if r + 1 < len(grid) and c < len(grid[r + 1]) and grid[r + 1][c] is not None:
            up = grid[r + 1][c]
        if right is None and up is None:
            break
        if up is None or (right is not None and right < up):
            grid[r][c], grid[r][c + 1] = right, None
            c += 1
        else:
            grid[r][c], grid[r + 1][c] = up, None
            r += 1
    del grid[r][c:]
    return tuple(tuple(row) for row in grid if any(a is not None for a in row))


def sharp_tableaux(t1: Tableau, t2: Tableau) -> LinComb:
    """Sharp product of recording-tableau sums.

    Keeps the standard tableaux of size k + l - 1 whose cells with values
    up to k reproduce ``t1`` and whose cells with values from k up
    rectify to ``t2``.
    """
    k, l = tableau_size(t1), tableau_size(t2)
    if k == 0 or l == 0:
        raise ValueError("sharp factors must be nonempty")
    n = k + l - 1
    terms = []
    for t in standard_tableaux(n):
        if restrict(t, (1, k)) != t1:
            continue
        if rectify(restrict(t, (k, n))) != t2:
            continue
        terms.append((t, 1))
    return LinComb(terms)


@lru_cache(maxsize=None)
def _classes_by_p(n: int) -> dict[Tableau, tuple[Word, ...]]:
    buckets: dict[Tableau, list[Word]] = {}
    for sigma in fqsym.permutations(n):
        buckets.setdefault(p_symbol(sigma), []).append(sigma)
    return {t: tuple(cls) for t, cls in buckets.items()}


def plactic_class(t: Tableau) -> tuple[Word, ...]:
    """Permutations with insertion tableau ``t``."""
    return _classes_by_p(tableau_size(t))[t]


def coplactic_class(t: Tableau) -> tuple[Word, ...]:
    """Permutations with recording tableau ``t``."""
    return tuple(fqsym.inverse(sigma) for sigma in plactic_class(t))


def s_in_f(t: Tableau) -> LinComb:
    """The tableau sum in F labels: its plactic class."""
    return LinComb((sigma, 1) for sigma in plactic_class(t))


def s_in_g(t: Tableau) -> LinComb:
    """The tableau sum in G labels: its coplactic class."""
    return LinComb((sigma, 1) for sigma in coplactic_class(t))


def tableau_str(t: Tableau) -> str:
    """Bottom-up row list, e.g. ``[[1,2,3],[4]]``."""
    return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in t) + "]"


def parse_tableau(text: str) -> Tableau:
    """Inverse of :func:`tableau_str`; the outer brackets may be omitted."""
    text = text.strip()
    if text.startswith("[[") and text.endswith("]]"):
        body = text[1:-1].strip()
    else:
        body = text
    if body in ("", "[]"):
        return ()
    rows = []
    depth = 0
    start = None
    for i, ch in enumerate(body):
        if ch == "[":
            if depth == 0:
                start = i + 1
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth == 0:
                chunk = body[start:i].strip()
                rows.append(
                    tuple(int(part) for part in chunk.split(",")) if chunk else ()
                )
            if depth < 0:
                raise ValueError(f"malformed tableau text {text!r}")
    if depth != 0:
        raise ValueError(f"malformed tableau text {text!r}")
    t = tuple(rows)
    if not is_standard(t):
        raise ValueError(f"not a standard tableau: {text!r}")
    return t
