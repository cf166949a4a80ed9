"""Integer linear combinations of hashable labels, and truncated series.

``LinComb`` is the workhorse value type of the package: products on basis
labels extend bilinearly through it, and operators that may annihilate a
label (returning None) extend linearly with the zero terms dropped.
``Series`` holds an integer power series truncated at a fixed order, just
enough to state generating-series identities for the freeness counts.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping
from typing import Any

__all__ = ["LinComb", "Series", "NotInAlgebraError", "regroup_by_fiber"]


class NotInAlgebraError(ValueError):
    """A sum of words (or finer labels) does not regroup into coarser fibers."""


class LinComb:
    """A finite formal sum of labels with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Any, int] | Iterable[tuple[Any, int]] = ()):
        data: dict[Any, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for label, coeff in items:
            c = data.get(label, 0) + coeff
            if c:
                data[label] = c
            elif label in data:
                del data[label]
        self._terms = data

    @classmethod
    def term(cls, label: Hashable, coeff: int = 1) -> "LinComb":
        return cls({label: coeff} if coeff else {})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    def items(self) -> Iterator[tuple[Any, int]]:
        return iter(self._terms.items())

    def coeff(self, label: Hashable) -> int:
        return self._terms.get(label, 0)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        return NotImplemented

    def __add__(self, other: "LinComb") -> "LinComb":
        data = dict(self._terms)
        for label, coeff in other._terms.items():
            c = data.get(label, 0) + coeff
            if c:
                data[label] = c
            else:
                del data[label]
        return LinComb(data)

    def __neg__(self) -> "LinComb":
        return LinComb({label: -c for label, c in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "LinComb":
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return LinComb()
        return LinComb({label: scalar * c for label, c in self._terms.items()})

    def __mul__(self, scalar: int) -> "LinComb":
        return self.__rmul__(scalar)

    def apply(self, f: Callable[[Any], Any]) -> "LinComb":
        """Linear extension of a label map; f may return None (zero),
        a single label, or a LinComb."""
        total = LinComb()
        for label, coeff in self._terms.items():
            image = f(label)
            if image is None:
                continue
            if not isinstance(image, LinComb):
                image = LinComb.term(image)
            total = total + coeff * image
        return total

    def bilinear(
        self, other: "LinComb", prod: Callable[[Any, Any], Any]
    ) -> "LinComb":
        """Bilinear extension of a product on labels; same return
        conventions as :meth:`apply`."""
        total = LinComb()
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                image = prod(a, b)
                if image is None:
                    continue
                if not isinstance(image, LinComb):
                    image = LinComb.term(image)
                total = total + (ca * cb) * image
        return total

    def render(self, label_str: Callable[[Any], str] = str) -> str:
        """Deterministic text form, terms sorted by their label text.

        Coefficient 1 is elided, e.g. ``3·F[1,4] + 2·F[2,3] + F[3,2]``.
        """
        if not self._terms:
            return "0"
        parts = []
        for text, coeff in sorted(
            (label_str(label), c) for label, c in self._terms.items()
        ):
            if coeff == 1:
                parts.append(text)
            elif coeff == -1:
                parts.append(f"-{text}")
            else:
                parts.append(f"{coeff}·{text}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LinComb({self.render()})"


def regroup_by_fiber(
    comb: LinComb,
    label_of: Callable[[Any], Any],
    fiber_of: Callable[[Any], Iterable[Any]],
) -> LinComb:
    """Rewrite a sum of fine labels as a sum over complete fibers.

    Every fiber ``fiber_of(L)`` that meets the support must be present in
    full and with one uniform coefficient; otherwise the combination does
    not live in the coarser algebra and ``NotInAlgebraError`` is raised.
    """
    buckets: dict[Any, dict[Any, int]] = {}
    for fine, coeff in comb.items():
        buckets.setdefault(label_of(fine), {})[fine] = coeff
    out: dict[Any, int] = {}
    for coarse, seen in buckets.items():
        coeffs = set(seen.values())
        if len(coeffs) != 1:
            raise NotInAlgebraError(
                f"fiber of {coarse!r} carries mixed coefficients {sorted(coeffs)}"
            )
        fiber = set(fiber_of(coarse))
        if set(seen) != fiber:
            missing = sorted(fiber - set(seen))[:3]
            raise NotInAlgebraError(
                f"fiber of {coarse!r} is incomplete, e.g. missing {missing}"
            )
        out[coarse] = coeffs.pop()
    return LinComb(out)


class Series:
    """An integer power series truncated at a fixed order.

    ``coeffs[i]`` is the coefficient of ``t**i``; arithmetic is exact and
    silently discards terms beyond ``order``.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int], order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        padded = list(coeffs)[: order + 1]
        padded += [0] * (order + 1 - len(padded))
        self.coeffs = tuple(padded)
        self.order = order

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Series):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __add__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        return Series(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order
        )

    def __sub__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        return Series(
            [self.coeffs[i] - other.coeffs[i] for i in range(order + 1)], order
        )

    def __mul__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if not a:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(out, order)

    def geom_inverse(self) -> "Series":
        """The sum of all powers of ``self``, i.e. ``1/(1 - self)``.

        Requires constant term 0 so the sum is finite in each degree.
        """
        if self.coeffs[0] != 0:
            raise ValueError("geometric inverse needs vanishing constant term")
        result = Series.one(self.order)
        power = Series.one(self.order)
        for _ in range(self.order):
            power = power * self
            result = result + power
        return result

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)}, order={self.order})"
