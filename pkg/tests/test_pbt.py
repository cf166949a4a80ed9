"""Binary-tree-indexed algebra: sylvester classes, sharp product, Tamari order."""

import pytest

from sharpalg.fqsym import inverse, permutations, vee
from sharpalg.lincomb import LinComb
from sharpalg.normal_forms import avoids
from sharpalg.pbt import (
    binary_trees,
    btree_str,
    class_max,
    class_min,
    decreasing_tree_shape,
    dk_P,
    h_basis_label,
    left_comb,
    linear_extensions,
    p_in_f,
    p_in_g,
    parse_btree,
    right_comb,
    search_tree,
    sharp_trees,
    sylvester_class,
    tamari_leq,
    tamari_max,
    tamari_min,
    tree_size,
)


def lc(*labels):
    return LinComb((lab, 1) for lab in labels)


def test_catalan_counts():
    for n, count in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42)]:
        assert len(binary_trees(n)) == count


def test_tree_text_roundtrip():
    for n in range(0, 5):
        for t in binary_trees(n):
            assert parse_btree(btree_str(t)) == t
            assert tree_size(t) == n


def test_decreasing_tree_shape_examples():
    assert decreasing_tree_shape((1, 2, 3)) == left_comb(3)
    assert decreasing_tree_shape((3, 2, 1)) == right_comb(3)
    assert decreasing_tree_shape((1, 3, 2)) == decreasing_tree_shape((2, 3, 1))


def test_sylvester_classes_partition_permutations():
    for n in range(1, 6):
        members = [s for t in binary_trees(n) for s in sylvester_class(t)]
        assert sorted(members) == sorted(permutations(n))


def test_search_tree_is_infix_labeling():
    # infix labels are 1..n: left subtree before root before right subtree
    def labels(node):
        if node is None:
            return ()
        left, lab, right = node
        return labels(left) + (lab,) + labels(right)

    for t in binary_trees(4):
        assert labels(search_tree(t)) == (1, 2, 3, 4)


def test_basis_sums_related_by_inversion():
    for t in binary_trees(3):
        assert p_in_g(t).apply(inverse) == p_in_f(t)


def test_linear_extensions_of_chain():
    assert linear_extensions((1, 2, 3), ((1, 2), (2, 3))) == ((1, 2, 3),)
    assert len(linear_extensions((1, 2, 3), ())) == 6


def test_dk_single_tree_goldens():
    t = decreasing_tree_shape((2, 1, 3))
    assert dk_P(t, 1) is None and dk_P(t, 2) is None
    t = decreasing_tree_shape((1, 3, 2))
    assert dk_P(t, 1) == parse_btree("(.(..))")
    assert dk_P(t, 2) is None
    with pytest.raises(ValueError):
        dk_P(parse_btree("(..)"), 1)


def test_sharp_goldens():
    probe = parse_btree("((..).)")
    assert sharp_trees(probe, probe) == lc(parse_btree("(((..).).)"))
    assert sharp_trees(parse_btree("((..)(..))"), probe) == lc(
        parse_btree("(((..)(..)).)"), parse_btree("((..)((..).))")
    )
    one = parse_btree("(..)")
    for t in binary_trees(3):
        assert sharp_trees(one, t) == lc(t)
        assert sharp_trees(t, one) == lc(t)


def test_sharp_support_is_tamari_interval():
    for n1 in range(1, 4):
        for n2 in range(1, 4):
            for t1 in binary_trees(n1):
                for t2 in binary_trees(n2):
                    support = sharp_trees(t1, t2).support()
                    lo, hi = tamari_min(support), tamari_max(support)
                    members = {
                        t
                        for t in binary_trees(n1 + n2 - 1)
                        if tamari_leq(lo, t) and tamari_leq(t, hi)
                    }
                    assert members == set(support)


def test_tamari_combs_are_extremes():
    for n in range(1, 5):
        for t in binary_trees(n):
            assert tamari_leq(left_comb(n), t)
            assert tamari_leq(t, right_comb(n))


def test_class_extremes():
    t = decreasing_tree_shape((1, 3, 2))
    assert class_min(t) == (1, 3, 2)
    assert class_max(t) == (2, 3, 1)
    for n in range(1, 5):
        for t in binary_trees(n):
            cls = set(sylvester_class(t))
            assert class_min(t) in cls and class_max(t) in cls


def test_h_basis_labels_avoid_132():
    for n in range(1, 6):
        labels = {h_basis_label(t) for t in binary_trees(n)}
        avoiders = {s for s in permutations(n) if avoids(s, (1, 3, 2))}
        assert labels == avoiders


def test_h_basis_multiplicativity():
    # the scan of two class-maximal labels is the class-maximal label of
    # the Tamari-maximal support tree
    for n1 in range(1, 4):
        for n2 in range(1, 4):
            for t1 in binary_trees(n1):
                for t2 in binary_trees(n2):
                    top = tamari_max(sharp_trees(t1, t2).support())
                    assert vee(h_basis_label(t1), h_basis_label(t2)) == h_basis_label(top)
