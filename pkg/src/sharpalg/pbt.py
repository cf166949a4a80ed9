"""The sharp product on planar binary trees (sylvester fibers).

``P[T]`` is the sum of G labels over the permutations whose decreasing
tree has shape ``T``, equivalently the sum of F labels over the linear
extensions of the search-tree poset of ``T`` (root last).  A binary tree
is ``None`` (the empty tree / leaf) or a pair ``(left, right)`` of binary
trees; its size is the number of internal nodes.
"""

from __future__ import annotations

from functools import lru_cache

from . import fqsym
from .lincomb import LinComb, regroup_by_fiber
from .words import Word

__all__ = [
    "BinaryTree",
    "binary_trees",
    "tree_size",
    "decreasing_tree_shape",
    "search_tree",
    "sylvester_class",
    "linear_extensions",
    "p_in_g",
    "p_in_f",
    "dk_P",
    "sharp_trees",
    "tamari_leq",
    "tamari_min",
    "tamari_max",
    "class_min",
    "class_max",
    "h_basis_label",
    "left_comb",
    "right_comb",
    "btree_str",
    "parse_btree",
]

BinaryTree = None | tuple


@lru_cache(maxsize=None)
def binary_trees(n: int) -> tuple[BinaryTree, ...]:
    """All binary trees with n internal nodes."""
    if n == 0:
        return (None,)
    out = []
    for left_size in range(n):
        for left in binary_trees(left_size):
            for right in binary_trees(n - 1 - left_size):
                out.append((left, right))
    return tuple(out)


def tree_size(t: BinaryTree) -> int:
    if t is None:
        return 0
    return 1 + tree_size(t[0]) + tree_size(t[1])


def decreasing_tree_shape(sigma: Word) -> BinaryTree:
    """Shape of the decreasing tree: root at the maximum, recurse on sides."""
    if not sigma:
        return None
    i = sigma.index(max(sigma))
    return (decreasing_tree_shape(sigma[:i]), decreasing_tree_shape(sigma[i + 1:]))


def search_tree(t: BinaryTree, start: int = 1) -> tuple | None:
    """Label the nodes in symmetric (infix) order: ``(left, label, right)``."""
    if t is None:
        return None
    left_size = tree_size(t[0])
    return (
        search_tree(t[0], start),
        start + left_size,
        search_tree(t[1], start + left_size + 1),
    )


def _child_edges(labeled: tuple | None, edges: list[tuple[int, int]]) -> None:
    """Edges (child, parent): children must come before their parent."""
    if labeled is None:
        return
    left, v, right = labeled
    for sub in (left, right):
        if sub is not None:
            edges.append((sub[1], v))
            _child_edges(sub, edges)


def linear_extensions(elements: tuple[int, ...], edges: tuple[tuple[int, int], ...]) -> tuple[Word, ...]:
    """Sequences of the elements with every (before, after) edge respected."""
    below: dict[int, set[int]] = {e: set() for e in elements}
    for child, parent in edges:
        below[parent].add(child)
    out: list[Word] = []
    placed: list[int] = []
    remaining = set(elements)

    def grow() -> None:
        if not remaining:
            out.append(tuple(placed))
            return
        for e in sorted(remaining):
            if below[e] <= set(placed):
                placed.append(e)
                remaining.remove(e)
                grow()
                remaining.add(e)
                placed.pop()

    grow()
    return tuple(out)


@lru_cache(maxsize=None)
def _classes_by_shape(n: int) -> dict[BinaryTree, tuple[Word, ...]]:
    buckets: dict[BinaryTree, list[Word]] = {}
    for sigma in fqsym.permutations(n):
        buckets.setdefault(decreasing_tree_shape(sigma), []).append(sigma)
    return {t: tuple(cls) for t, cls in buckets.items()}


def sylvester_class(t: BinaryTree) -> tuple[Word, ...]:
    """Permutations whose decreasing tree has shape ``t``."""
    return _classes_by_shape(tree_size(t))[t]


def p_in_g(t: BinaryTree) -> LinComb:
    return LinComb((sigma, 1) for sigma in sylvester_class(t))


def p_in_f(t: BinaryTree) -> LinComb:
    """Same sum in F labels: the linear extensions of the search tree."""
    return LinComb((fqsym.inverse(sigma), 1) for sigma in sylvester_class(t))


def dk_P(t: BinaryTree, k: int) -> BinaryTree | None:
    """Doubled-letter deletion on tree sums.

    Nonzero exactly when node k is the left child of node k + 1 in the
    search tree; the two nodes merge into one that keeps k's left subtree
    and k + 1's right subtree.
    """
    n = tree_size(t)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 1..{n - 1}")
    labeled = search_tree(t)
    found = False

    def strip(node: tuple | None) -> BinaryTree:
        if node is None:
            return None
        return (strip(node[0]), strip(node[2]))

    def rebuild(node: tuple | None) -> BinaryTree:
        nonlocal found
        if node is None:
            return None
        left, v, right = node
        if v == k + 1 and left is not None and left[1] == k:
            found = True
            return (strip(left[0]), rebuild(right))
        return (rebuild(left), rebuild(right))

    result = rebuild(labeled)
    return result if found else None


def sharp_trees(t1: BinaryTree, t2: BinaryTree) -> LinComb:
    """Sharp product of tree sums, computed on a glued search-tree poset.

    The last infix node of ``t1`` is identified with the first infix node
    of ``t2`` (both become node k); the linear extensions of the glued
    poset are the F labels of the product, regrouped into complete
    sylvester classes.
    """
    k, l = tree_size(t1), tree_size(t2)
    if k == 0 or l == 0:
        raise ValueError("sharp factors must be nonempty")
    n = k + l - 1
    edges: list[tuple[int, int]] = []
    _child_edges(search_tree(t1), edges)
    shifted: list[tuple[int, int]] = []
    _child_edges(search_tree(t2), shifted)
    edges.extend((a + k - 1, b + k - 1) for a, b in shifted)
    extensions = linear_extensions(tuple(range(1, n + 1)), tuple(edges))
    comb = LinComb((sigma, 1) for sigma in extensions)
    return regroup_by_fiber(
        comb,
        lambda sigma: decreasing_tree_shape(fqsym.inverse(sigma)),
        lambda t: tuple(fqsym.inverse(s) for s in sylvester_class(t)),
    )


def _rotations_up(t: BinaryTree):
    """Trees one covering step up: some ((A,B),C) becomes (A,(B,C))."""
    if t is None:
        return
    left, right = t
    if left is not None:
        yield (left[0], (left[1], right))
    for moved in _rotations_up(left):
        yield (moved, right)
    for moved in _rotations_up(right):
        yield (left, moved)


@lru_cache(maxsize=None)
def _tamari_up_sets(n: int) -> dict[BinaryTree, frozenset]:
    """For each tree, the set of trees above or equal to it."""
    up: dict[BinaryTree, frozenset] = {}

    def reach(t: BinaryTree) -> frozenset:
        if t in up:
            return up[t]
        seen = {t}
        for s in _rotations_up(t):
            seen |= reach(s)
        up[t] = frozenset(seen)
        return up[t]

    for t in binary_trees(n):
        reach(t)
    return up


def tamari_leq(a: BinaryTree, b: BinaryTree) -> bool:
    na, nb = tree_size(a), tree_size(b)
    if na != nb:
        raise ValueError("trees must have equal size")
    return b in _tamari_up_sets(na)[a]


def class_min(t: BinaryTree) -> Word:
    """Inversion-minimal permutation of the sylvester class of ``t``."""
    return _class_extreme(t, smallest=True)


def class_max(t: BinaryTree) -> Word:
    """Inversion-maximal permutation of the sylvester class of ``t``."""
    return _class_extreme(t, smallest=False)


def _class_extreme(t: BinaryTree, smallest: bool) -> Word:
    cls = sylvester_class(t)
    best = (min if smallest else max)(cls, key=lambda s: len(fqsym.inversions(s)))
    inv_best = fqsym.inversions(best)
    for s in cls:
        other = fqsym.inversions(s)
        if not (inv_best <= other if smallest else other <= inv_best):
            raise ValueError(f"class of {t} has no inversion-extreme element")
    return best


def tamari_min(comb_support: frozenset) -> BinaryTree:
    """Smallest tree of a set that is an interval in the rotation order."""
    return _support_extreme(comb_support, smallest=True)


def tamari_max(comb_support: frozenset) -> BinaryTree:
    return _support_extreme(comb_support, smallest=False)


def _support_extreme(support: frozenset, smallest: bool) -> BinaryTree:
    for t in support:
        if all(
            (tamari_leq(t, s) if smallest else tamari_leq(s, t)) for s in support
        ):
            return t
    raise ValueError("support has no extreme tree in the rotation order")


def h_basis_label(t: BinaryTree) -> Word:
    """The inversion-maximal permutation of the class (multiplicative basis)."""
    return class_max(t)


def left_comb(n: int) -> BinaryTree:
    t: BinaryTree = None
    for _ in range(n):
        t = (t, None)
    return t


def right_comb(n: int) -> BinaryTree:
    t: BinaryTree = None
    for _ in range(n):
        t = (None, t)
    return t


def btree_str(t: BinaryTree) -> str:
    """Parenthesized pair form with ``.`` for the empty tree."""
    if t is None:
        return "."
    return "(" + btree_str(t[0]) + btree_str(t[1]) + ")"


def parse_btree(text: str) -> BinaryTree:
    """Inverse of :func:`btree_str`."""
    pos = 0

    def node() -> BinaryTree:
        nonlocal pos
        if pos >= len(text):
            raise ValueError(f"malformed tree text {text!r}")
        ch = text[pos]
        if ch == ".":
            pos += 1
            return None
        if ch == "(":
            pos += 1
            left = node()
            right = node()
            if pos >= len(text) or text[pos] != ")":
                raise ValueError(f"malformed tree text {text!r}")
            pos += 1
            return (left, right)
        raise ValueError(f"malformed tree text {text!r}")

    t = node()
    if pos != len(text):
        raise ValueError(f"malformed tree text {text!r}")
    return t
