"""Exact arithmetic for the overlapping (sharp) product of words and for
its combinatorial shadows: permutations, standard tableaux, binary trees,
compositions, packed words, plane trees, segmented compositions and
parking functions, each realized as sums of words in the free associative
algebra.
"""

from .lincomb import LinComb, NotInAlgebraError, Series
from .normal_forms import pack, park, std
from .words import Word, concat, delete_doubled, sharp

__all__ = [
    "LinComb",
    "NotInAlgebraError",
    "Series",
    "Word",
    "concat",
    "delete_doubled",
    "sharp",
    "std",
    "pack",
    "park",
]

__version__ = "0.1.0"
