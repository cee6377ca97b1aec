"""Permutations of {1..d}: composition, cycle structure, canonical forms, ordering.

Conventions, fixed here and relied on everywhere else:

- Points are 1-based: a permutation of degree d moves the set {1, ..., d}.
- Permutations act on the right, so products read left to right:
  ``(p * q)(i) == q(p(i))``.  Under this convention a cyclic permutation
  ``(i1, ..., ik)`` literally equals the transposition product
  ``(ik, ik-1) * (ik-1, ik-2) * ... * (i2, i1)``.
- The cycle type of a permutation lists the lengths of its nontrivial
  cycles in non-increasing order; the identity has the empty type ``()``.

Cycle types are plain tuples of ints.  The total order on types compares
lengths positionwise with missing entries counting as 0; since every entry
is >= 2 this coincides with Python's tuple order.  The order on permutations
refines the type order cycle by cycle, see :meth:`Perm.sort_key`.

Text form: whitespace-separated disjoint cycles in parentheses, e.g.
``(1 2 3)(4 5)``; the identity is ``()``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "CycleType",
    "Perm",
    "all_permutations",
    "canonical_representative",
    "compare",
    "transposition_length",
    "validate_cycle_type",
]

CycleType = "tuple[int, ...]"


def validate_cycle_type(parts: Sequence[int], degree: int | None = None) -> tuple[int, ...]:
    """Check that ``parts`` is a weakly decreasing tuple of ints >= 2.

    When ``degree`` is given, also require that the parts fit inside it.

    >>> validate_cycle_type([3, 2], 5)
    (3, 2)
    >>> validate_cycle_type([2, 3])
    Traceback (most recent call last):
    ...
    ValueError: cycle type must be non-increasing, got (2, 3)
    """
    parts = tuple(int(k) for k in parts)
    if any(k < 2 for k in parts):
        raise ValueError(f"cycle type entries must be >= 2, got {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"cycle type must be non-increasing, got {parts}")
    if degree is not None and sum(parts) > degree:
        raise ValueError(f"cycle type {parts} does not fit in degree {degree}")
    return parts


def transposition_length(parts: Sequence[int]) -> int:
    """Minimal number of transpositions multiplying to a permutation of this type.

    >>> transposition_length((3, 2))
    3
    >>> transposition_length(())
    0
    """
    parts = validate_cycle_type(parts)
    return sum(parts) - len(parts)


@dataclass(frozen=True)
class Perm:
    """A permutation of {1..d}, stored as the tuple of images of 1..d."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images}")

    # -- construction ------------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> Perm:
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def transposition(cls, degree: int, i: int, j: int) -> Perm:
        if i == j:
            raise ValueError("transposition needs two distinct points")
        return cls.from_cycles(degree, [(i, j)])

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Perm:
        """Build a permutation from disjoint cycles (repeated points rejected).

        >>> str(Perm.from_cycles(5, [(1, 2, 3), (4, 5)]))
        '(1 2 3)(4 5)'
        """
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= degree:
                    raise ValueError(f"point {point} out of range 1..{degree}")
                if point in seen:
                    raise ValueError(f"repeated point {point} in cycle notation")
                seen.add(point)
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int) -> Perm:
        """Parse cycle notation like ``(1 2 3)(4 5)``; the identity is ``()``.

        Errors carry the offending position in ``text``.
        """
        cycles: list[list[int]] = []
        pos = 0
        n = len(text)
        while pos < n:
            if text[pos].isspace():
                pos += 1
                continue
            if text[pos] != "(":
                raise ValueError(f"expected '(' at position {pos} in {text!r}")
            pos += 1
            cycle: list[int] = []
            while True:
                while pos < n and text[pos].isspace():
                    pos += 1
                if pos >= n:
                    raise ValueError(f"unclosed cycle at position {pos} in {text!r}")
                if text[pos] == ")":
                    pos += 1
                    break
                match = re.match(r"\d+", text[pos:])
                if not match:
                    raise ValueError(f"expected point or ')' at position {pos} in {text!r}")
                cycle.append(int(match.group()))
                pos += match.end()
            if len(cycle) == 1:
                raise ValueError(f"singleton cycle {cycle} near position {pos} in {text!r}")
            if cycle:
                cycles.append(cycle)
        return cls.from_cycles(degree, cycles)

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def is_identity(self) -> bool:
        return all(image == point for point, image in enumerate(self.images, start=1))

    def support(self) -> tuple[int, ...]:
        """The moved points, ascending."""
        return tuple(p for p, image in enumerate(self.images, start=1) if image != p)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial disjoint cycles, each starting at its least point,
        listed by decreasing length with ties by least point.

        >>> Perm.parse("(4 5)(1 3 2)", 5).cycles()
        ((1, 3, 2), (4, 5))
        """
        seen: set[int] = set()
        cycles: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if start in seen or self.images[start - 1] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start - 1]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point - 1]
            cycles.append(tuple(cycle))
        cycles.sort(key=lambda c: (-len(c), c[0]))
        return tuple(cycles)

    def cycle_type(self) -> tuple[int, ...]:
        """Lengths of the nontrivial cycles, non-increasing; () for the identity.

        >>> Perm.parse("(1 2 3)(4 5)", 5).cycle_type()
        (3, 2)
        >>> Perm.identity(4).cycle_type()
        ()
        """
        return tuple(len(c) for c in self.cycles())

    def is_transposition(self) -> bool:
        return self.cycle_type() == (2,)

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def sign(self) -> int:
        return -1 if transposition_length(self.cycle_type()) % 2 else 1

    # -- group operations ---------------------------------------------------

    def __mul__(self, other: Perm) -> Perm:
        """Left-to-right product: ``(p * q)(i) == q(p(i))``.

        >>> str(Perm.parse("(1 2)", 3) * Perm.parse("(2 3)", 3))
        '(1 3 2)'
        """
        if not isinstance(other, Perm):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")
        return Perm(tuple(other.images[image - 1] for image in self.images))

    def inverse(self) -> Perm:
        inverse = [0] * self.degree
        for point, image in enumerate(self.images, start=1):
            inverse[image - 1] = point
        return Perm(tuple(inverse))

    def conjugate(self, g: Perm) -> Perm:
        """``g^-1 * self * g``, the simultaneous-conjugation action of ``g``."""
        return g.inverse() * self * g

    def __pow__(self, exponent: int) -> Perm:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Perm.identity(self.degree)
        for _ in range(exponent):
            result = result * self
        return result

    # -- ordering -----------------------------------------------------------

    def sort_key(self) -> tuple:
        """Key realizing the total order: first by cycle type, then comparing
        the disjoint-cycle decompositions cycle by cycle (cycles written from
        their least point, listed by decreasing length with ties by least
        point)."""
        return (self.cycle_type(), self.cycles())

    def _check_comparable(self, other: Perm) -> None:
        if not isinstance(other, Perm):
            raise TypeError(f"cannot compare Perm with {type(other).__name__}")
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")

    def __lt__(self, other: Perm) -> bool:
        self._check_comparable(other)
        return self.sort_key() < other.sort_key()

    def __le__(self, other: Perm) -> bool:
        self._check_comparable(other)
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other: Perm) -> bool:
        self._check_comparable(other)
        return self.sort_key() > other.sort_key()

    def __ge__(self, other: Perm) -> bool:
        self._check_comparable(other)
        return self.sort_key() >= other.sort_key()

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_identity():
            return "()"
        return "".join("(" + " ".join(map(str, cycle)) + ")" for cycle in self.cycles())

    def __repr__(self) -> str:
        return f"Perm.parse({str(self)!r}, {self.degree})"


def canonical_representative(parts: Sequence[int], degree: int) -> Perm:
    """The permutation ``(1..k1)(k1+1..k1+k2)...`` of the given type and degree.

    >>> str(canonical_representative((3, 2), 5))
    '(1 2 3)(4 5)'
    >>> str(canonical_representative((), 3))
    '()'
    """
    parts = validate_cycle_type(parts, degree)
    cycles = []
    next_point = 1
    for k in parts:
        cycles.append(tuple(range(next_point, next_point + k)))
        next_point += k
    return Perm.from_cycles(degree, cycles)


def compare(a: Union[Perm, Sequence[int]], b: Union[Perm, Sequence[int]]) -> int:
    """Three-way comparison of two permutations or two cycle types.

    Returns -1, 0 or 1; permutations must share a degree.

    >>> compare((3,), (2, 2))
    1
    >>> compare(Perm.parse("(1 3)", 3), Perm.parse("(1 2)", 3))
    1
    """
    if isinstance(a, Perm) != isinstance(b, Perm):
        raise TypeError("cannot compare a permutation with a cycle type")
    if isinstance(a, Perm):
        a._check_comparable(b)
        key_a, key_b = a.sort_key(), b.sort_key()
    else:
        key_a, key_b = validate_cycle_type(a), validate_cycle_type(b)
    return (key_a > key_b) - (key_a < key_b)


def all_permutations(degree: int, include_identity: bool = True) -> Iterator[Perm]:
    """All permutations of degree d (d <= 7 to stay at desk scale)."""
    if degree > 7:
        raise ValueError("refusing to enumerate S_d beyond d = 7")
    for images in _itertools_permutations(range(1, degree + 1)):
        p = Perm(images)
        if include_identity or not p.is_identity():
            yield p
