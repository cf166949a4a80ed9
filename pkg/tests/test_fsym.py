"""Tableau-indexed algebra: RSK, jeu de taquin, sharp product, stability."""

import pytest

from sharpalg.fsym import (
    coplactic_class,
    dbar_k,
    dbar_k_inverse,
    inner_corners,
    is_standard,
    jdt_slide,
    p_symbol,
    parse_tableau,
    plactic_class,
    q_symbol,
    reading_word,
    rectify,
    restrict,
    rsk,
    s_in_f,
    s_in_g,
    sharp_tableaux,
    standard_tableaux,
    tableau_size,
    tableau_str,
)
from sharpalg.fqsym import permutations, inverse, sharp_G
from sharpalg.lincomb import LinComb, NotInAlgebraError, regroup_by_fiber
from sharpalg.normal_forms import std
from sharpalg.realization import apply_dk, expand, regroup
from sharpalg.words import words_over

COL3 = ((1,), (2,), (3,))  # single column, rows listed bottom-up


def lc(*labels):
    return LinComb((lab, 1) for lab in labels)


def test_rsk_shapes_agree_and_are_standard_on_permutations():
    for sigma in permutations(4):
        p, q = rsk(sigma)
        assert is_standard(p) and is_standard(q)
        assert tuple(map(len, p)) == tuple(map(len, q))
        assert tableau_size(p) == 4


def test_rsk_inverse_swaps_symbols():
    for sigma in permutations(5):
        assert p_symbol(inverse(sigma)) == q_symbol(sigma)
        assert q_symbol(inverse(sigma)) == p_symbol(sigma)


def test_q_symbol_constant_under_standardization():
    for w in words_over(3, 4):
        assert q_symbol(w) == q_symbol(std(w))


def test_standard_tableaux_counts():
    # involutions of S_n: 1, 2, 4, 10, 26, 76
    for n, count in [(1, 1), (2, 2), (3, 4), (4, 10), (5, 26), (6, 76)]:
        assert len(standard_tableaux(n)) == count


def test_classes_partition_permutations():
    for n in range(1, 6):
        cop = [w for t in standard_tableaux(n) for w in coplactic_class(t)]
        pla = [w for t in standard_tableaux(n) for w in plactic_class(t)]
        assert sorted(cop) == sorted(permutations(n))
        assert sorted(pla) == sorted(permutations(n))


def test_coplactic_class_members_share_q_symbol():
    for t in standard_tableaux(4):
        for w in coplactic_class(t):
            assert q_symbol(w) == t
        for w in plactic_class(t):
            assert p_symbol(w) == t


def test_basis_sums_are_class_sums_related_by_inversion():
    for t in standard_tableaux(4):
        assert s_in_f(t).support() == frozenset(plactic_class(t))
        assert s_in_f(t).apply(inverse) == s_in_g(t)


def test_dbar_roundtrip():
    for n in range(1, 5):
        for tau in permutations(n):
            for k in range(1, n + 1):
                assert dbar_k(dbar_k_inverse(tau, k), k) == tau


def test_restrict_and_rectify():
    # bottom row 1,3,5 / second row 2,4: restriction to values 3..5
    t = ((1, 3, 5), (2, 4))
    skew = restrict(t, (3, 5))
    assert skew == ((None, 1, 3), (None, 2))
    assert reading_word(skew) == (2, 1, 3)
    assert rectify(skew) == ((1, 3), (2,))


def test_jdt_slide_preserves_rectification():
    t = ((1, 2, 5), (3, 4))
    skew = restrict(t, (2, 5))
    want = rectify(skew)
    while inner_corners(skew):
        skew = jdt_slide(skew, inner_corners(skew)[0])
    assert rectify(skew) == want


def test_sharp_golden_hook_times_column():
    got = sharp_tableaux(((1, 3), (2,)), COL3)
    assert got == lc(
        ((1, 3), (2,), (4,), (5,)),
        ((1, 3), (2, 4), (5,)),
    )


def test_sharp_golden_row_hook_times_column():
    got = sharp_tableaux(((1, 2), (3,)), COL3)
    assert got == lc(((1, 2), (3,), (4,), (5,)))


def test_sharp_golden_column_times_hook():
    got = sharp_tableaux(COL3, ((1, 3), (2,)))
    assert got == lc(((1, 5), (2,), (3,), (4,)))


def test_sharp_golden_column_times_row_hook():
    got = sharp_tableaux(COL3, ((1, 2), (3,)))
    assert got == lc(
        ((1, 4), (2, 5), (3,)),
        ((1, 4), (2,), (3,), (5,)),
    )


def test_sharp_golden_wide_hook_times_hook():
    got = sharp_tableaux(((1, 2, 3), (4,)), ((1, 2), (3,)))
    assert got == lc(
        ((1, 2, 3), (4, 5), (6,)),
        ((1, 2, 3, 5), (4,), (6,)),
        ((1, 2, 3, 5), (4, 6)),
    )


def test_sharp_agrees_with_permutation_route():
    # expanding into the permutation algebra, multiplying, and regrouping
    # by Q-symbol reproduces the tableau rule
    for n1 in range(1, 4):
        for n2 in range(1, 4):
            for t1 in standard_tableaux(n1):
                for t2 in standard_tableaux(n2):
                    direct = sharp_tableaux(t1, t2)
                    via_g = s_in_g(t1).bilinear(s_in_g(t2), sharp_G)
                    grouped = regroup_by_fiber(via_g, q_symbol, coplactic_class)
                    assert grouped == direct


def test_square_tableau_word_support():
    t = ((1, 2), (3, 4))
    words = expand("fsym", t, 4)
    perms = {w for w in words.support() if sorted(w) == [1, 2, 3, 4]}
    assert perms == {(2, 4, 1, 3), (3, 4, 1, 2)}


def test_square_tableau_breaks_under_first_deletion():
    t = ((1, 2), (3, 4))
    words = expand("fsym", t, 4)
    image = apply_dk(words, 1)
    assert image  # some fiber words do begin with a doubled letter
    with pytest.raises(NotInAlgebraError):
        regroup("fsym", image, 4)


def test_tableau_str_roundtrip():
    for t in standard_tableaux(4):
        assert parse_tableau(tableau_str(t)) == t
    assert tableau_str(((1, 3), (2,))) == "[[1,3],[2]]"
    assert parse_tableau("[1,3],[2]") == ((1, 3), (2,))
