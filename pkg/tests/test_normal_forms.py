"""Standardization, packing, parkization, and pattern avoidance."""

from sharpalg.normal_forms import (
    avoids,
    is_packed,
    is_parking,
    is_permutation,
    pack,
    park,
    restriction_check,
    std,
)
from sharpalg.words import words_over


def test_std_golden():
    assert std((3, 6, 5, 1, 8, 2, 1, 2, 2)) == (6, 8, 7, 1, 9, 3, 2, 4, 5)


def test_std_fixes_permutations():
    assert std((3, 1, 2)) == (3, 1, 2)
    assert std(()) == ()


def test_std_breaks_ties_left_to_right():
    assert std((1, 1)) == (1, 2)
    assert std((2, 1, 2)) == (2, 1, 3)


def test_pack_golden():
    assert pack((4, 1, 5, 1)) == (2, 1, 3, 1)
    assert pack((3, 3, 7)) == (1, 1, 2)
    assert pack((1, 2, 1)) == (1, 2, 1)


def test_park_golden():
    assert park((3, 5, 1, 1, 11, 8, 8, 2)) == (3, 5, 1, 1, 8, 6, 6, 2)
    assert park((1, 1, 4)) == (1, 1, 3)
    assert park((2, 2, 3)) == (1, 1, 2)


def test_park_fixes_parking_functions():
    for w in words_over(3, 3):
        if is_parking(w):
            assert park(w) == w


def test_park_reduces_to_std_without_repeats():
    for w in words_over(5, 3):
        if len(set(w)) == len(w):
            assert park(w) == std(w)


def test_predicates():
    assert is_permutation((2, 1, 3))
    assert not is_permutation((1, 1, 2))
    assert is_packed((2, 1, 2))
    assert not is_packed((3, 1, 3))
    assert is_parking((1, 1, 2))
    assert not is_parking((2, 2, 3))


def test_std_restricts_to_subsequences():
    # std commutes with restriction to any set of positions
    for w in words_over(3, 4):
        assert restriction_check("std", w, (1, 3))
        assert restriction_check("std", w, (2, 4))


def test_pack_and_park_restrict_to_factors():
    for w in words_over(3, 4):
        for lo in range(1, 5):
            for hi in range(lo, 5):
                window = tuple(range(lo, hi + 1))
                assert restriction_check("pack", w, window)
                assert restriction_check("park", w, window)


def test_avoids():
    assert avoids((1, 2, 3), (1, 3, 2))
    assert not avoids((1, 3, 2), (1, 3, 2))
    assert not avoids((2, 4, 3, 1), (1, 3, 2))  # subsequence 2,4,3
    assert avoids((1, 1, 2), (2, 1))
    assert not avoids((1, 1, 2), (1, 1))
