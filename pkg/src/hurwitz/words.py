"""Words of non-identity permutations and the Hurwitz-move action on them.

A word is a finite sequence of non-identity permutations of a common degree
(a monodromy factorization).  The move at position i replaces the adjacent
pair ``(g_i, g_{i+1})`` by ``(g_i * g_{i+1} * g_i^-1, g_i)``; its inverse
replaces it by ``(g_{i+1}, g_{i+1}^-1 * g_i * g_{i+1})``.  Both preserve the
left-to-right product.

Text form: ``d: letter | letter | ...`` with letters in cycle notation,
e.g. ``3: (1 2) | (2 3)``; the empty word of degree 3 is ``3:``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .perm import Perm

__all__ = [
    "DEFAULT_ORDER_CAP",
    "SubgroupCapExceeded",
    "SubgroupInfo",
    "TranspositionGraph",
    "Word",
    "make_word",
    "pull_letter_left",
    "pull_letter_right",
]

DEFAULT_ORDER_CAP = 40320  # 8!; target degrees never exceed 8


class SubgroupCapExceeded(RuntimeError):
    """The subgroup closure outgrew the configured cap."""


@dataclass(frozen=True)
class SubgroupInfo:
    """The subgroup generated by the letters of a word (a move invariant)."""

    order: int
    transitive: bool
    tag: str  # trivial | full_symmetric | alternating | other
    orbit_partition: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TranspositionGraph:
    """Graph on the moved points of a transposition word, one numbered edge
    per letter; isolated vertices are dropped."""

    degree: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def components(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Connected components as (sorted vertices, edge positions) pairs,
        ordered by least vertex.  Edge positions are 0-based into
        :attr:`edges`."""
        parent = {v: v for v in self.vertices}

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in self.edges:
            parent[find(a)] = find(b)
        members: dict[int, list[int]] = {}
        for v in self.vertices:
            members.setdefault(find(v), []).append(v)
        by_edge: dict[int, list[int]] = {root: [] for root in members}
        for position, (a, _) in enumerate(self.edges):
            by_edge[find(a)].append(position)
        component_list = [
            (tuple(sorted(vs)), tuple(by_edge[root])) for root, vs in members.items()
        ]
        component_list.sort(key=lambda item: item[0][0])
        return component_list

    def is_tree(self) -> bool:
        return (
            len(self.components()) == 1
            and len(self.edges) == len(self.vertices) - 1
        )


@dataclass(frozen=True)
class Word:
    """A sequence of non-identity permutations of one degree.

    Identity letters are dropped at construction, so ``Word(3, (p, id, q))``
    has length 2; the empty word is the semigroup unit.
    """

    degree: int
    letters: tuple[Perm, ...]

    def __post_init__(self) -> None:
        letters = tuple(p for p in self.letters if not p.is_identity())
        object.__setattr__(self, "letters", letters)
        for p in letters:
            if p.degree != self.degree:
                raise ValueError(
                    f"letter {p} has degree {p.degree}, word has degree {self.degree}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.letters)

    def __add__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")
        return Word(self.degree, self.letters + other.letters)

    # -- invariants -----------------------------------------------------

    def product(self) -> Perm:
        """Left-to-right product of the letters; the identity for the empty word."""
        result = Perm.identity(self.degree)
        for letter in self.letters:
            result = result * letter
        return result

    def type_vector(self) -> Counter:
        """Multiset of letter cycle types (the word's factorization type)."""
        return Counter(letter.cycle_type() for letter in self.letters)

    def generated_subgroup(self, order_cap: int = DEFAULT_ORDER_CAP) -> SubgroupInfo:
        """Closure of the letters under multiplication, with classification.

        Raises :class:`SubgroupCapExceeded` if the closure outgrows
        ``order_cap`` rather than truncating silently.
        """
        return _subgroup_info(self.degree, frozenset(self.letters), order_cap)

    def is_transposition_word(self) -> bool:
        return all(letter.is_transposition() for letter in self.letters)

    def transposition_graph(self) -> TranspositionGraph:
        """One edge per transposition letter, numbered by position."""
        edges = []
        for letter in self.letters:
            if not letter.is_transposition():
                raise ValueError(f"non-transposition letter {letter}")
            a, b = letter.support()
            edges.append((a, b))
        vertices = sorted({point for edge in edges for point in edge})
        return TranspositionGraph(self.degree, tuple(vertices), tuple(edges))

    # -- the braid action -------------------------------------------------

    def hurwitz_move(self, i: int, inverse: bool = False) -> Word:
        """Apply the move at position i (1-based, 1 <= i <= len - 1)."""
        if not 1 <= i <= len(self.letters) - 1:
            raise ValueError(f"move index {i} out of range for length {len(self.letters)}")
        a, b = self.letters[i - 1], self.letters[i]
        if inverse:
            pair = (b, b.inverse() * a * b)
        else:
            pair = (a * b * a.inverse(), a)
        return Word(self.degree, self.letters[: i - 1] + pair + self.letters[i + 1 :])

    def apply_moves(self, moves: Iterable[tuple[int, bool]]) -> Word:
        """Apply a sequence of (position, inverse) moves left to right."""
        word = self
        for i, inverse in moves:
            word = word.hurwitz_move(i, inverse)
        return word

    def simultaneous_conjugate(self, g: Perm) -> Word:
        """Conjugate every letter by g (letters become ``g^-1 * letter * g``)."""
        if g.degree != self.degree:
            raise ValueError(f"degree mismatch: {g.degree} != {self.degree}")
        return Word(self.degree, tuple(letter.conjugate(g) for letter in self.letters))

    def extract_central_power(self, g: Perm) -> tuple[Word, Word] | None:
        """Gather order(g) copies of the letter g at the front, if present.

        The leftmost occurrences are pulled left one at a time; a pulled copy
        stays g while the letters it crosses are conjugated by it, so the
        result is Hurwitz-equivalent to ``self`` and splits as
        ``(prefix, remainder)`` with ``prefix == g^order(g)`` (whose product
        is the identity).  Returns None when g occurs fewer than order(g)
        times.
        """
        if g.degree != self.degree:
            raise ValueError(f"degree mismatch: {g.degree} != {self.degree}")
        if g.is_identity():
            raise ValueError("central power of the identity is not defined")
        n = g.order()
        if sum(1 for letter in self.letters if letter == g) < n:
            return None
        word = self
        for target in range(1, n + 1):
            source = target
            while word.letters[source - 1] != g:
                source += 1
            word = pull_letter_left(word, source, target)
        return (
            Word(self.degree, word.letters[:n]),
            Word(self.degree, word.letters[n:]),
        )

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.letters:
            return f"{self.degree}:"
        return f"{self.degree}: " + " | ".join(str(letter) for letter in self.letters)

    def __repr__(self) -> str:
        return f"Word.parse({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> Word:
        """Parse ``d: letter | letter | ...`` (whitespace-insensitive)."""
        head, sep, rest = text.partition(":")
        if not sep:
            raise ValueError(f"missing ':' after the degree in {text!r}")
        try:
            degree = int(head.strip())
        except ValueError:
            raise ValueError(f"invalid degree {head.strip()!r} in {text!r}") from None
        if degree < 1:
            raise ValueError(f"degree must be positive in {text!r}")
        if not rest.strip():
            return cls(degree, ())
        letters = tuple(Perm.parse(part, degree) for part in rest.split("|"))
        if any(letter.is_identity() for letter in letters):
            raise ValueError(f"identity letter in {text!r}")
        return cls(degree, letters)


def make_word(degree: int, letters: Iterable[Perm]) -> Word:
    """Build a word, dropping identity letters and keeping the rest in order."""
    return Word(degree, tuple(letters))


def pull_letter_left(word: Word, source: int, target: int) -> Word:
    """Move the letter at 1-based position ``source`` left to ``target`` by
    inverse moves; the moved letter is unchanged, crossed letters are
    conjugated by it.  The result is in the Hurwitz orbit of ``word``."""
    if not 1 <= target <= source <= len(word):
        raise ValueError(f"bad pull {source} -> {target} in word of length {len(word)}")
    for i in range(source - 1, target - 1, -1):
        word = word.hurwitz_move(i, inverse=True)
    return word


def pull_letter_right(word: Word, source: int, target: int) -> Word:
    """Move the letter at position ``source`` right to ``target`` by forward
    moves; the moved letter is unchanged, crossed letters are conjugated."""
    if not 1 <= source <= target <= len(word):
        raise ValueError(f"bad pull {source} -> {target} in word of length {len(word)}")
    for i in range(source, target):
        word = word.hurwitz_move(i)
    return word


@lru_cache(maxsize=None)
def _subgroup_closure(degree: int, generators: frozenset) -> frozenset:
    elements = {Perm.identity(degree)}
    frontier = list(elements)
    while frontier:
        new = []
        for element in frontier:
            for g in generators:
                product = element * g
                if product not in elements:
                    elements.add(product)
                    new.append(product)
        frontier = new
    return frozenset(elements)


@lru_cache(maxsize=None)
def _subgroup_info(degree: int, generators: frozenset, order_cap: int) -> SubgroupInfo:
    elements = _subgroup_closure(degree, generators)
    if len(elements) > order_cap:
        raise SubgroupCapExceeded(
            f"subgroup order {len(elements)} exceeds cap {order_cap}"
        )
    order = len(elements)

    parent = list(range(degree + 1))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for g in generators:
        for point in range(1, degree + 1):
            a, b = find(point), find(g(point))
            if a != b:
                parent[a] = b
    blocks: dict[int, list[int]] = {}
    for point in range(1, degree + 1):
        blocks.setdefault(find(point), []).append(point)
    orbit_partition = tuple(sorted(tuple(sorted(b)) for b in blocks.values()))
    transitive = len(orbit_partition) == 1

    full_order = math.factorial(degree)
    if order == 1:
        tag = "trivial"
    elif order == full_order:
        tag = "full_symmetric"
    elif 2 * order == full_order and all(g.sign() == 1 for g in elements):
        tag = "alternating"
    else:
        tag = "other"
    return SubgroupInfo(order, transitive, tag, orbit_partition)
