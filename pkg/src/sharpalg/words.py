"""Words over the positive integers and the overlapping (sharp) product.

A word is a tuple of letters >= 1.  The sharp product of ``u`` and ``v``
glues the last letter of ``u`` onto the first letter of ``v`` when the two
agree and is zero otherwise; together with zero this makes the set of
nonempty words a semigroup.  Zero is represented by ``None`` and absorbs
through every operation here, so linear extensions can simply drop it.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import product

Word = tuple[int, ...]

__all__ = [
    "Word",
    "sharp",
    "concat",
    "delete_doubled",
    "words_over",
    "word_str",
    "parse_word",
]


def sharp(u: Word | None, v: Word | None) -> Word | None:
    """Overlapping product: ``u[:-1] + v`` if ``u`` ends as ``v`` starts, else None.

    >>> sharp((2, 1, 1, 3, 1), (1, 4, 2))
    (2, 1, 1, 3, 1, 4, 2)
    >>> sharp((1, 2), (3, 4)) is None
    True
    """
    if u is None or v is None:
        return None
    if not u or not v:
        raise ValueError("sharp is only defined on nonempty words")
    if u[-1] != v[0]:
        return None
    return u + v[1:]


def concat(u: Word | None, v: Word | None) -> Word | None:
    """Concatenation, absorbing None."""
    if u is None or v is None:
        return None
    return u + v


def delete_doubled(w: Word | None, k: int) -> Word | None:
    """Drop position ``k + 1`` of ``w`` when letters ``k`` and ``k + 1`` agree.

    Positions are 1-based and ``k`` must satisfy ``1 <= k <= len(w) - 1``.
    Returns None when the two letters differ.

    >>> delete_doubled((3, 1, 1, 2), 2)
    (3, 1, 2)
    >>> delete_doubled((3, 1, 2), 1) is None
    True
    """
    if w is None:
        return None
    if not 1 <= k <= len(w) - 1:
        raise ValueError(f"position k={k} out of range for a word of length {len(w)}")
    if w[k - 1] != w[k]:
        return None
    return w[:k] + w[k + 1:]


def words_over(alphabet_size: int, length: int) -> Iterator[Word]:
    """All words of the given length over ``{1..alphabet_size}``."""
    if alphabet_size < 0 or length < 0:
        raise ValueError("alphabet size and length must be nonnegative")
    return product(range(1, alphabet_size + 1), repeat=length)


def word_str(w: Word) -> str:
    """Digit string for small letters, comma-separated once a letter reaches 10.

    >>> word_str((2, 1, 1, 3))
    '2113'
    >>> word_str((3, 11, 2))
    '3,11,2'
    """
    if any(a >= 10 for a in w):
        return ",".join(str(a) for a in w)
    return "".join(str(a) for a in w)


def parse_word(text: str) -> Word:
    """Inverse of :func:`word_str`; accepts both digit and comma forms."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        letters = tuple(int(part) for part in text.split(","))
    else:
        letters = tuple(int(ch) for ch in text)
    if any(a < 1 for a in letters):
        raise ValueError(f"letters must be >= 1: {text!r}")
    return letters


if __name__ == "__main__":
    import doctest

    doctest.testmod()
