"""Two quotients of the packed-word algebra: plane trees and segmented
compositions.

A word determines a plane tree by grafting the factors split at the
maximal letter under a common root; the tree remembers, for each pair of
adjacent positions, whether the letters compare <, =, or >.  Summing the
packed-word fibers of a tree gives a subalgebra for the sharp product;
its sectors (gaps between children, read left to right) correspond to
the letters of the word.

Coarser still, only the sequence of comparisons between adjacent letters
is kept: a segmented composition, written with commas for equalities and
bars for descents.  Sharp-multiplying two of these concatenates their
comparison sequences.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import NamedTuple

from .lincomb import LinComb, regroup_by_fiber
from .words import Word
from . import wqsym

__all__ = [
    "PlaneTree",
    "plane_tree_of_word",
    "plane_trees",
    "tree_sector_count",
    "tree_fiber_packed",
    "m_tree_in_m",
    "dk_tree",
    "sharp_trees_td",
    "ptree_str",
    "parse_ptree",
    "SegComp",
    "segmented_compositions",
    "seg_degree",
    "comparisons",
    "segcomp_of_comparisons",
    "segmented_of_word",
    "segmented_of_tree",
    "sharp_TC",
    "product_TC",
    "dk_TC",
    "tc_factorize",
    "m_seg_in_tree",
    "seg_str",
    "parse_seg",
]

# A plane tree is a leaf (None) or a tuple of at least two children.
PlaneTree = None | tuple


def plane_tree_of_word(w: Word) -> PlaneTree:
    """Split at every maximal letter and graft the factors under a root."""
    if not w:
        return None
    m = max(w)
    children: list[PlaneTree] = []
    factor: list[int] = []
    for a in w:
        if a == m:
            children.append(plane_tree_of_word(tuple(factor)))
            factor = []
        else:
            factor.append(a)
    children.append(plane_tree_of_word(tuple(factor)))
    return tuple(children)


def tree_sector_count(t: PlaneTree) -> int:
    """Number of sectors: one per gap between adjacent children."""
    if t is None:
        return 0
    return len(t) - 1 + sum(tree_sector_count(c) for c in t)


def _sector_gaps(t: PlaneTree, path: tuple[int, ...] = ()) -> list[tuple[tuple[int, ...], int]]:
    """Per sector in word order: (path of the vertex, index of the gap)."""
    out: list[tuple[tuple[int, ...], int]] = []
    for i, child in enumerate(t):
        if i > 0:
            out.append((path, i))
        if child is not None:
            out.extend(_sector_gaps(child, path + (i,)))
    return out


@lru_cache(maxsize=None)
def _tree_classes(n: int) -> dict[PlaneTree, tuple[Word, ...]]:
    buckets: dict[PlaneTree, list[Word]] = {}
    for u in wqsym.packed_words(n):
        buckets.setdefault(plane_tree_of_word(u), []).append(u)
    return {t: tuple(cls) for t, cls in buckets.items()}


def plane_trees(n: int) -> tuple[PlaneTree, ...]:
    """Trees with n sectors, ordered by their packed-word classes."""
    return tuple(_tree_classes(n).keys())


def tree_fiber_packed(t: PlaneTree) -> tuple[Word, ...]:
    """Packed words whose tree is ``t``."""
    return _tree_classes(tree_sector_count(t))[t]


def m_tree_in_m(t: PlaneTree) -> LinComb:
    return LinComb((u, 1) for u in tree_fiber_packed(t))


def dk_tree(t: PlaneTree, k: int) -> PlaneTree | None:
    """Doubled-letter deletion: defined when sectors k, k+1 share a vertex.

    Adjacent sectors at one vertex flank a leaf child; deleting the
    doubled letter removes that leaf.
    """
    n = tree_sector_count(t)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 1..{n - 1}")
    gaps = _sector_gaps(t)
    (p1, i1), (p2, i2) = gaps[k - 1], gaps[k]
    if p1 != p2:
        return None
    if i2 != i1 + 1:
        raise AssertionError("adjacent sectors at one vertex must be consecutive gaps")
    return _remove_child(t, p1, i1)


def _remove_child(t: PlaneTree, path: tuple[int, ...], idx: int) -> PlaneTree:
    if not path:
        if t[idx] is not None:
            raise AssertionError("only leaf children sit between adjacent gaps")
        return t[:idx] + t[idx + 1:]
    head = path[0]
    return t[:head] + (_remove_child(t[head], path[1:], idx),) + t[head + 1:]


def sharp_trees_td(t1: PlaneTree, t2: PlaneTree) -> LinComb:
    """Sharp product of tree fibers, regrouped from the packed-word level."""
    comb = m_tree_in_m(t1).bilinear(m_tree_in_m(t2), wqsym.sharp_M)
    return regroup_by_fiber(comb, plane_tree_of_word, tree_fiber_packed)


def ptree_str(t: PlaneTree) -> str:
    """Nested parentheses with a middle dot per leaf."""
    if t is None:
        return "·"
    return "(" + "".join(ptree_str(c) for c in t) + ")"


def parse_ptree(text: str) -> PlaneTree:
    pos = 0

    def node() -> PlaneTree:
        nonlocal pos
        if pos >= len(text):
            raise ValueError(f"malformed tree text {text!r}")
        ch = text[pos]
        if ch == "·" or ch == ".":
            pos += 1
            return None
        if ch == "(":
            pos += 1
            children = []
            while pos < len(text) and text[pos] != ")":
                children.append(node())
            if pos >= len(text):
                raise ValueError(f"malformed tree text {text!r}")
            pos += 1
            if len(children) < 2:
                raise ValueError("internal vertices need at least two children")
            return tuple(children)
        raise ValueError(f"malformed tree text {text!r}")

    t = node()
    if pos != len(text):
        raise ValueError(f"malformed tree text {text!r}")
    return t


class SegComp(NamedTuple):
    """A composition with two separator kinds: ``,`` (equal) and ``|`` (descent)."""

    parts: tuple[int, ...]
    seps: tuple[str, ...]


def _check_seg(seg: SegComp) -> None:
    if not seg.parts or any(p < 1 for p in seg.parts):
        raise ValueError(f"malformed segmented composition {seg!r}")
    if len(seg.seps) != len(seg.parts) - 1:
        raise ValueError(f"malformed segmented composition {seg!r}")
    if any(s not in (",", "|") for s in seg.seps):
        raise ValueError(f"malformed segmented composition {seg!r}")


def seg_degree(seg: SegComp) -> int:
    return sum(seg.parts)


def comparisons(seg: SegComp) -> tuple[str, ...]:
    """The adjacent-letter comparison sequence: < inside parts, then = or >."""
    _check_seg(seg)
    out: list[str] = []
    for i, p in enumerate(seg.parts):
        out.extend(["<"] * (p - 1))
        if i < len(seg.seps):
            out.append("=" if seg.seps[i] == "," else ">")
    return tuple(out)


def segcomp_of_comparisons(cs: tuple[str, ...]) -> SegComp:
    parts = [1]
    seps: list[str] = []
    for c in cs:
        if c == "<":
            parts[-1] += 1
        else:
            seps.append("," if c == "=" else "|")
            parts.append(1)
    return SegComp(tuple(parts), tuple(seps))


def segmented_of_word(w: Word) -> SegComp:
    """Read the comparison of each adjacent pair of letters."""
    if not w:
        raise ValueError("empty word has no segmented composition")
    cs = tuple(
        "<" if w[i] < w[i + 1] else "=" if w[i] == w[i + 1] else ">"
        for i in range(len(w) - 1)
    )
    return segcomp_of_comparisons(cs)


def segmented_of_tree(t: PlaneTree) -> SegComp:
    """Trees refine segmented compositions: read any word of the fiber."""
    return segmented_of_word(tree_fiber_packed(t)[0])


@lru_cache(maxsize=None)
def segmented_compositions(n: int) -> tuple[SegComp, ...]:
    """All 3^(n-1) segmented compositions of n."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    return tuple(
        segcomp_of_comparisons(cs) for cs in product("<=>", repeat=n - 1)
    )


def sharp_TC(a: SegComp, b: SegComp) -> SegComp:
    """Sharp product: concatenate the comparison sequences."""
    return segcomp_of_comparisons(comparisons(a) + comparisons(b))


def product_TC(a: SegComp, b: SegComp) -> LinComb:
    """Ordinary product: the boundary pair compares <, =, or >."""
    _check_seg(a)
    _check_seg(b)
    ca, cb = comparisons(a), comparisons(b)
    return LinComb(
        (segcomp_of_comparisons(ca + (c,) + cb), 1) for c in ("<", "=", ">")
    )


def dk_TC(a: SegComp, k: int) -> SegComp | None:
    """Doubled-letter deletion: defined when comparison k is an equality."""
    cs = comparisons(a)
    if not 1 <= k <= len(cs):
        raise ValueError(f"k={k} out of range 1..{len(cs)}")
    if cs[k - 1] != "=":
        return None
    return segcomp_of_comparisons(cs[: k - 1] + cs[k:])


def tc_factorize(a: SegComp) -> tuple[SegComp, ...]:
    """Factor into the three degree-2 generators, one per comparison."""
    return tuple(segcomp_of_comparisons((c,)) for c in comparisons(a))


def m_seg_in_tree(a: SegComp) -> LinComb:
    """Segmented sums regroup tree sums: all trees with these comparisons."""
    n = seg_degree(a)
    return LinComb(
        (t, 1) for t in plane_trees(n) if segmented_of_tree(t) == a
    )


def seg_str(seg: SegComp) -> str:
    """Parts interleaved with their separators, e.g. ``2,2|1``."""
    _check_seg(seg)
    out = [str(seg.parts[0])]
    for sep, p in zip(seg.seps, seg.parts[1:]):
        out.append(sep)
        out.append(str(p))
    return "".join(out)


def parse_seg(text: str) -> SegComp:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    parts: list[int] = []
    seps: list[str] = []
    current = ""
    for ch in text:
        if ch.isdigit():
            current += ch
        elif ch in (",", "|"):
            if not current:
                raise ValueError(f"malformed segmented composition {text!r}")
            parts.append(int(current))
            seps.append(ch)
            current = ""
        else:
            raise ValueError(f"malformed segmented composition {text!r}")
    if not current:
        raise ValueError(f"malformed segmented composition {text!r}")
    parts.append(int(current))
    seg = SegComp(tuple(parts), tuple(seps))
    _check_seg(seg)
    return seg
