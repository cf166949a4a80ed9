"""Plane-tree and segmented-composition algebras sitting inside packed words."""

from functools import reduce

from sharpalg.lincomb import LinComb
from sharpalg.normal_forms import avoids
from sharpalg.trialg import (
    SegComp,
    comparisons,
    dk_TC,
    dk_tree,
    m_seg_in_tree,
    m_tree_in_m,
    parse_ptree,
    parse_seg,
    plane_tree_of_word,
    plane_trees,
    product_TC,
    ptree_str,
    seg_str,
    segcomp_of_comparisons,
    segmented_compositions,
    segmented_of_tree,
    segmented_of_word,
    sharp_TC,
    sharp_trees_td,
    tc_factorize,
    tree_fiber_packed,
    tree_sector_count,
)
from sharpalg.wqsym import packed_words, sharp_M, vee_pw, wedge_pw


def lc(*labels):
    return LinComb((lab, 1) for lab in labels)


def test_plane_tree_of_word_golden():
    assert ptree_str(plane_tree_of_word((2, 4, 3, 4, 1, 1))) == "((··)(··)(···))"


def test_plane_tree_counts():
    # super-Catalan: 1, 3, 11, 45, 197
    for n, count in [(1, 1), (2, 3), (3, 11), (4, 45), (5, 197)]:
        assert len(plane_trees(n)) == count


def test_tree_text_roundtrip():
    for n in range(1, 5):
        for t in plane_trees(n):
            assert parse_ptree(ptree_str(t)) == t
            assert tree_sector_count(t) == n


def test_tree_fibers_partition_packed_words():
    for n in range(1, 6):
        members = [u for t in plane_trees(n) for u in tree_fiber_packed(t)]
        assert sorted(members) == sorted(packed_words(n))


def test_tree_fiber_golden():
    t = plane_tree_of_word((1, 2, 1))
    assert set(tree_fiber_packed(t)) == {(1, 3, 2), (2, 3, 1), (1, 2, 1)}


def class_min(words):
    from sharpalg.wqsym import pseudo_leq

    least = [m for m in words if all(pseudo_leq(m, x) for x in words)]
    assert len(least) == 1
    return least[0]


def class_max(words):
    from sharpalg.wqsym import pseudo_leq

    greatest = [m for m in words if all(pseudo_leq(x, m) for x in words)]
    assert len(greatest) == 1
    return greatest[0]


def test_fiber_maxima_are_pattern_avoiders():
    # each tree fiber has a greatest element; together they are exactly the
    # packed words avoiding 132 and 121
    for n in range(1, 5):
        maxes = {class_max(tree_fiber_packed(t)) for t in plane_trees(n)}
        avh = {
            u
            for u in packed_words(n)
            if avoids(u, (1, 3, 2)) and avoids(u, (1, 2, 1))
        }
        assert maxes == avh


def test_lower_generator_family_counts_and_closures():
    # reversal mirrors plane trees and reverses the packed-word order, so
    # the lower generator family is the reversal image of the upper one:
    # the 231/121-avoiders; both families are counted by plane trees and
    # closed under the matching boundary scan
    high = [(1, 3, 2), (1, 2, 1)]
    low = [(2, 3, 1), (1, 2, 1)]
    for n in range(1, 6):
        avh = {
            u for u in packed_words(n) if all(avoids(u, p) for p in high)
        }
        avl = {
            u for u in packed_words(n) if all(avoids(u, p) for p in low)
        }
        assert len(avl) == len(plane_trees(n))
        assert {tuple(reversed(u)) for u in avh} == avl
    for n1 in range(1, 4):
        for n2 in range(1, 4):
            for u in packed_words(n1):
                for v in packed_words(n2):
                    if all(avoids(u, p) and avoids(v, p) for p in high):
                        assert all(avoids(vee_pw(u, v), p) for p in high)
                    if all(avoids(u, p) and avoids(v, p) for p in low):
                        assert all(avoids(wedge_pw(u, v), p) for p in low)


def test_dk_tree_cases():
    t121 = plane_tree_of_word((1, 2, 1))
    assert dk_tree(t121, 1) is None and dk_tree(t121, 2) is None
    assert dk_tree(parse_ptree("((···)·)"), 1) == parse_ptree("((··)·)")
    assert dk_tree(parse_ptree("((···)·)"), 2) is None


def test_sharp_tree_goldens():
    up = parse_ptree("((··)·)")
    down = parse_ptree("(·(··))")
    assert sharp_trees_td(up, up) == lc(parse_ptree("(((··)·)·)"))
    assert sharp_trees_td(down, up) == lc(
        parse_ptree("((·(··))·)"),
        parse_ptree("(·((··)·))"),
        parse_ptree("(·(··)·)"),
    )


def test_sharp_trees_match_packed_route():
    from sharpalg.lincomb import regroup_by_fiber

    for n1 in range(1, 4):
        for n2 in range(1, 4):
            for t1 in plane_trees(n1):
                for t2 in plane_trees(n2):
                    direct = sharp_trees_td(t1, t2)
                    via_m = m_tree_in_m(t1).bilinear(m_tree_in_m(t2), sharp_M)
                    grouped = regroup_by_fiber(
                        via_m, plane_tree_of_word, tree_fiber_packed
                    )
                    assert grouped == direct


def test_segmented_of_word_golden():
    got = segmented_of_word((1, 6, 1, 5, 1, 1, 6, 2, 4, 4, 5, 4, 3))
    assert seg_str(got) == "2|2|1,2|2,2|1|1"


def test_segmented_comparison_bijection():
    for n in range(1, 6):
        labels = segmented_compositions(n)
        assert len(labels) == 3 ** (n - 1)
        for s in labels:
            assert segcomp_of_comparisons(comparisons(s)) == s


def test_seg_str_roundtrip():
    assert parse_seg("2,1|2|1,2") == SegComp(
        parts=(2, 1, 2, 1, 2), seps=(",", "|", "|", ",")
    )
    for s in segmented_compositions(4):
        assert parse_seg(seg_str(s)) == s


def test_sharp_TC_concatenates_comparisons():
    s1, s2 = parse_seg("2,2|1"), parse_seg("2|2")
    assert seg_str(sharp_TC(s1, s2)) == "2,2|2|2"
    assert comparisons(sharp_TC(s1, s2)) == comparisons(s1) + comparisons(s2)


def test_product_TC_three_terms():
    got = product_TC(parse_seg("2"), parse_seg("1,1"))
    assert got == lc(parse_seg("3,1"), parse_seg("2,1,1"), parse_seg("2|1,1"))


def test_dk_TC_cases():
    assert dk_TC(parse_seg("1,2"), 1) == parse_seg("2")
    assert dk_TC(parse_seg("2"), 1) is None
    assert dk_TC(parse_seg("1|1"), 1) is None
    assert dk_TC(parse_seg("1,1"), 1) == parse_seg("1")


def test_tc_unique_factorization():
    gens = set(segmented_compositions(2))
    for n in range(2, 6):
        seen = set()
        for s in segmented_compositions(n):
            factors = tc_factorize(s)
            assert all(f in gens for f in factors)
            assert reduce(sharp_TC, factors) == s
            assert factors not in seen
            seen.add(factors)


def test_segmented_classes_inside_trees():
    # each segmented label expands into plane trees, then into packed words
    for n in range(1, 5):
        total = LinComb.zero()
        for s in segmented_compositions(n):
            trees = m_seg_in_tree(s)
            assert trees
            for t in trees.support():
                assert segmented_of_tree(t) == s
            total += trees.apply(m_tree_in_m)
        assert total == LinComb((u, 1) for u in packed_words(n))


def test_tc_multiplicative_min_patterns():
    # minima of segmented classes avoid 132, 213, 121, 212
    patterns_s = [(1, 3, 2), (2, 1, 3), (1, 2, 1), (2, 1, 2)]
    patterns_e = [(3, 1, 2), (2, 3, 1), (2, 1, 2), (1, 2, 1)]
    for n in range(1, 5):
        mins = set()
        maxes = set()
        for s in segmented_compositions(n):
            words = [
                u
                for t in m_seg_in_tree(s).support()
                for u in tree_fiber_packed(t)
            ]
            mins.add(class_min(words))
            maxes.add(class_max(words))
        assert maxes == {
            u for u in packed_words(n) if all(avoids(u, p) for p in patterns_s)
        }
        assert mins == {
            u for u in packed_words(n) if all(avoids(u, p) for p in patterns_e)
        }
