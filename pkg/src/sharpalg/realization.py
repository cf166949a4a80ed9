"""Word-level realization of every algebra, and the product oracle.

Each algebra is a family of label sums realized inside the free
associative algebra: a label's *fiber* over the alphabet 1..N is the set
of words it sums, and a word's label is its normal form (standardize,
insert, pack, park, ...).  Products of basis elements can therefore be
computed two ways:

* by the combinatorial rule on labels, or
* by expanding both factors into words over a big enough alphabet,
  multiplying word by word, and regrouping the result into complete
  fibers.

The oracle functions implement the second route.  Regrouping fails with
:class:`NotInAlgebraError` whenever the word sum is not a label sum,
which is itself a meaningful negative result (used for the maps that do
not stay inside a subalgebra).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Callable

from . import fqsym, fsym, pbt, pqsym, sym_qsym, trialg, wqsym
from .lincomb import LinComb, NotInAlgebraError, regroup_by_fiber
from .normal_forms import pack, park, std
from .words import Word, delete_doubled, word_str

__all__ = [
    "Realization",
    "REALIZATIONS",
    "fiber_std",
    "fiber_pack",
    "words_with_relations",
    "expand",
    "regroup",
    "oracle_sharp",
    "oracle_concat",
    "apply_dk",
    "NotInAlgebraError",
]


def words_with_relations(rels: tuple[str, ...], alphabet: int) -> tuple[Word, ...]:
    """Words over 1..alphabet whose adjacent letters compare as prescribed.

    Relation codes per gap: ``<``, ``=``, ``>`` or ``<=``.
    """
    n = len(rels) + 1
    out: list[Word] = []
    prefix: list[int] = []

    def grow() -> None:
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        if i == 0:
            candidates = range(1, alphabet + 1)
        else:
            last = prefix[-1]
            rel = rels[i - 1]
            if rel == "<":
                candidates = range(last + 1, alphabet + 1)
            elif rel == "=":
                candidates = range(last, last + 1)
            elif rel == ">":
                candidates = range(1, last)
            elif rel == "<=":
                candidates = range(last, alphabet + 1)
            else:
                raise ValueError(f"unknown relation {rel!r}")
        for a in candidates:
            prefix.append(a)
            grow()
            prefix.pop()

    grow()
    return tuple(out)


def fiber_std(sigma: Word, alphabet: int) -> tuple[Word, ...]:
    """Words over 1..alphabet that standardize to ``sigma``.

    Values j and j+1 of the permutation may share a letter only when j
    occurs to the left of j+1; enumerate weakly increasing value chains
    with forced strict steps.
    """
    n = len(sigma)
    pos = fqsym.inverse(sigma)
    strict = [1 if pos[j] < pos[j - 1] else 0 for j in range(1, n)]
    r = sum(strict)
    if alphabet - r < 1:
        return ()
    jumps = [0]
    for s in strict:
        jumps.append(jumps[-1] + s)
    out = []
    for c in combinations_with_replacement(range(1, alphabet - r + 1), n):
        w = [0] * n
        for j in range(n):
            w[pos[j] - 1] = c[j] + jumps[j]
        out.append(tuple(w))
    return tuple(out)


def fiber_pack(u: Word, alphabet: int) -> tuple[Word, ...]:
    """Words over 1..alphabet that pack to ``u``: inject the letter set."""
    m = max(u) if u else 0
    out = []
    for chosen in combinations(range(1, alphabet + 1), m):
        out.append(tuple(chosen[a - 1] for a in u))
    return tuple(out)


def _fiber_union(parts: tuple[Word, ...], one_fiber, alphabet: int) -> tuple[Word, ...]:
    out: list[Word] = []
    for p in parts:
        out.extend(one_fiber(p, alphabet))
    return tuple(out)


@dataclass(frozen=True)
class Realization:
    """How one algebra lives on words."""

    name: str
    degree: Callable
    label_of_word: Callable
    fiber: Callable
    labels: Callable
    label_str: Callable
    sharp_rule: Callable
    concat_rule: Callable | None = None


def _sym_fiber(parts: sym_qsym.Composition, alphabet: int) -> tuple[Word, ...]:
    code = sym_qsym.binary_code(parts)
    rels = tuple(">" if bit else "<=" for bit in code)
    return words_with_relations(rels, alphabet)


def _tc_fiber(seg: trialg.SegComp, alphabet: int) -> tuple[Word, ...]:
    return words_with_relations(trialg.comparisons(seg), alphabet)


def _fsym_fiber(t: fsym.Tableau, alphabet: int) -> tuple[Word, ...]:
    return _fiber_union(fsym.coplactic_class(t), fiber_std, alphabet)


def _pbt_fiber(t: pbt.BinaryTree, alphabet: int) -> tuple[Word, ...]:
    return _fiber_union(pbt.sylvester_class(t), fiber_std, alphabet)


def _td_fiber(t: trialg.PlaneTree, alphabet: int) -> tuple[Word, ...]:
    return _fiber_union(trialg.tree_fiber_packed(t), fiber_pack, alphabet)


def _single(rule: Callable) -> Callable:
    def wrapped(a, b) -> LinComb:
        return LinComb.term(rule(a, b))

    return wrapped


REALIZATIONS: dict[str, Realization] = {
    "fqsym": Realization(
        name="fqsym",
        degree=len,
        label_of_word=std,
        fiber=fiber_std,
        labels=fqsym.permutations,
        label_str=word_str,
        sharp_rule=fqsym.sharp_G,
        concat_rule=fqsym.convolution,
    ),
    "fsym": Realization(
        name="fsym",
        degree=fsym.tableau_size,
        label_of_word=fsym.q_symbol,
        fiber=_fsym_fiber,
        labels=fsym.standard_tableaux,
        label_str=fsym.tableau_str,
        sharp_rule=fsym.sharp_tableaux,
    ),
    "pbt": Realization(
        name="pbt",
        degree=pbt.tree_size,
        label_of_word=lambda w: pbt.decreasing_tree_shape(std(w)),
        fiber=_pbt_fiber,
        labels=pbt.binary_trees,
        label_str=pbt.btree_str,
        sharp_rule=pbt.sharp_trees,
    ),
    "sym": Realization(
        name="sym",
        degree=sum,
        label_of_word=sym_qsym.descent_composition,
        fiber=_sym_fiber,
        labels=sym_qsym.compositions,
        label_str=sym_qsym.comp_str,
        sharp_rule=_single(sym_qsym.sharp_R),
    ),
    "wqsym": Realization(
        name="wqsym",
        degree=len,
        label_of_word=pack,
        fiber=fiber_pack,
        labels=wqsym.packed_words,
        label_str=word_str,
        sharp_rule=wqsym.sharp_M,
        concat_rule=wqsym.product_M,
    ),
    "td": Realization(
        name="td",
        degree=trialg.tree_sector_count,
        label_of_word=lambda w: trialg.plane_tree_of_word(pack(w)),
        fiber=_td_fiber,
        labels=trialg.plane_trees,
        label_str=trialg.ptree_str,
        sharp_rule=trialg.sharp_trees_td,
    ),
    "tc": Realization(
        name="tc",
        degree=trialg.seg_degree,
        label_of_word=trialg.segmented_of_word,
        fiber=_tc_fiber,
        labels=trialg.segmented_compositions,
        label_str=trialg.seg_str,
        sharp_rule=_single(trialg.sharp_TC),
        concat_rule=trialg.product_TC,
    ),
    "pqsym": Realization(
        name="pqsym",
        degree=len,
        label_of_word=park,
        fiber=pqsym.park_fiber,
        labels=pqsym.parking_functions,
        label_str=word_str,
        sharp_rule=pqsym.sharp_PF,
        concat_rule=pqsym.product_PF,
    ),
}


def expand(algebra: str, label, alphabet: int) -> LinComb:
    """The word sum a label stands for, over the alphabet 1..alphabet."""
    real = REALIZATIONS[algebra]
    return LinComb((w, 1) for w in real.fiber(label, alphabet))


def regroup(algebra: str, words: LinComb, alphabet: int) -> LinComb:
    """Rewrite a word sum as a label sum, or raise NotInAlgebraError."""
    real = REALIZATIONS[algebra]
    return regroup_by_fiber(
        words, real.label_of_word, lambda lab: real.fiber(lab, alphabet)
    )


def oracle_sharp(algebra: str, a, b) -> LinComb:
    """Sharp product computed on words: expand, glue pairwise, regroup."""
    real = REALIZATIONS[algebra]
    alphabet = real.degree(a) + real.degree(b) - 1
    left = expand(algebra, a, alphabet)
    right = expand(algebra, b, alphabet)
    by_first: dict[int, list[tuple[Word, int]]] = {}
    for w, c in right.items():
        by_first.setdefault(w[0], []).append((w, c))
    terms = []
    for u, cu in left.items():
        for v, cv in by_first.get(u[-1], ()):
            terms.append((u + v[1:], cu * cv))
    return regroup(algebra, LinComb(terms), alphabet)


def oracle_concat(algebra: str, a, b) -> LinComb:
    """Ordinary product computed on words: expand, concatenate, regroup."""
    real = REALIZATIONS[algebra]
    alphabet = real.degree(a) + real.degree(b)
    left = expand(algebra, a, alphabet)
    right = expand(algebra, b, alphabet)
    terms = []
    for u, cu in left.items():
        for v, cv in right.items():
            terms.append((u + v, cu * cv))
    return regroup(algebra, LinComb(terms), alphabet)


def apply_dk(words: LinComb, k: int) -> LinComb:
    """Linear extension of the doubled-letter deletion to word sums."""
    return words.apply(lambda w: delete_doubled(w, k))
