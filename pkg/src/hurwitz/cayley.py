"""Finite groups as multiplication tables, their regular embeddings into a
symmetric group, and component counts for their identity-product words.

The regular embedding sends g to the permutation "multiply on the right
by g" of the group's own elements (numbered 1..N), which matches the
package's left-to-right product convention: the embedding is a homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterable

from .orbits import MoveTables, SearchLimits, _enumerate_ids, orbit_partition
from .perm import Perm
from .words import Word, _subgroup_closure

__all__ = [
    "CayleyStructureReport",
    "GroupTable",
    "automorphisms",
    "cayley_embed",
    "cayley_structure_check",
    "cyclic_table",
    "direct_product_table",
    "galois_components",
    "klein_four_table",
    "symmetric3_table",
    "word_class_vector",
]


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its multiplication table.

    ``table[a][b]`` is the index of a*b over elements 0..N-1.  Construction
    validates the group axioms and names the one that fails.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int

    def __post_init__(self) -> None:
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if any(len(row) != n for row in table):
            raise ValueError("table axiom fails: table is not square")
        if not 0 <= self.identity < n:
            raise ValueError("identity axiom fails: identity index out of range")
        for row in table:
            if any(not 0 <= x < n for x in row):
                raise ValueError("table axiom fails: entry out of range")
        e = self.identity
        if any(table[e][b] != b for b in range(n)) or any(
            table[a][e] != a for a in range(n)
        ):
            raise ValueError("identity axiom fails: e is not two-sided neutral")
        for a in range(n):
            if e not in table[a]:
                raise ValueError(f"inverse axiom fails: element {a} has no inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise ValueError(
                            f"associativity axiom fails at ({a}, {b}, {c})"
                        )

    @property
    def order(self) -> int:
        return len(self.table)

    def mult(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def center(self) -> tuple[int, ...]:
        n = self.order
        return tuple(
            a for a in range(n) if all(self.table[a][b] == self.table[b][a] for b in range(n))
        )

    def conjugacy_class_of(self, a: int) -> frozenset:
        return frozenset(
            self.mult(self.mult(self.inv(g), a), g) for g in range(self.order)
        )

    def subgroup_generated(self, generators: Iterable[int]) -> frozenset:
        elements = {self.identity}
        frontier = list(elements)
        generators = list(generators)
        while frontier:
            new = []
            for a in frontier:
                for g in generators:
                    b = self.mult(a, g)
                    if b not in elements:
                        elements.add(b)
                        new.append(b)
            frontier = new
        return frozenset(elements)


def cyclic_table(n: int) -> GroupTable:
    return GroupTable(
        tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0
    )


def klein_four_table() -> GroupTable:
    return GroupTable(tuple(tuple(a ^ b for b in range(4)) for a in range(4)), 0)


def direct_product_table(g: GroupTable, h: GroupTable) -> GroupTable:
    n, m = g.order, h.order

    def index(a: int, b: int) -> int:
        return a * m + b

    table = tuple(
        tuple(
            index(g.mult(a1, a2), h.mult(b1, b2))
            for a2 in range(n)
            for b2 in range(m)
        )
        for a1 in range(n)
        for b1 in range(m)
    )
    return GroupTable(table, index(g.identity, h.identity))


def symmetric3_table() -> GroupTable:
    """The symmetric group on 3 points as a table (elements in the
    permutation order)."""
    elements = sorted(
        (Perm(images) for images in _itertools_permutations((1, 2, 3))),
        key=Perm.sort_key,
    )
    index = {p: i for i, p in enumerate(elements)}
    table = tuple(
        tuple(index[a * b] for b in elements) for a in elements
    )
    return GroupTable(table, index[Perm.identity(3)])


def cayley_embed(gt: GroupTable) -> tuple[Perm, ...]:
    """Right-regular embedding: element g becomes the permutation of the
    group's points (numbered 1..N) sending x to x*g.  Faithful; the image is
    closed under composition and only the identity has fixed points.

    >>> [str(p) for p in cayley_embed(cyclic_table(3))]
    ['()', '(1 2 3)', '(1 3 2)']
    """
    n = gt.order
    return tuple(
        Perm(tuple(gt.mult(x, g) + 1 for x in range(n))) for g in range(n)
    )


def _left_multiplications(gt: GroupTable) -> tuple[Perm, ...]:
    n = gt.order
    return tuple(
        Perm(tuple(gt.mult(h, x) + 1 for x in range(n))) for h in range(n)
    )


def automorphisms(gt: GroupTable) -> list[tuple[int, ...]]:
    """All automorphisms, by brute force over bijections fixing the identity
    and preserving the table (desk scale: order <= 8)."""
    if gt.order > 8:
        raise ValueError("automorphism search is desk-scale only (order <= 8)")
    n = gt.order
    e = gt.identity
    others = [x for x in range(n) if x != e]
    found = []
    for images in _itertools_permutations(others):
        f = [0] * n
        f[e] = e
        for x, y in zip(others, images):
            f[x] = y
        if all(
            f[gt.mult(a, b)] == gt.mult(f[a], f[b]) for a in range(n) for b in range(n)
        ):
            found.append(tuple(f))
    return found


@dataclass(frozen=True)
class CayleyStructureReport:
    """Constructive check of the regular embedding's normalizer structure."""

    group_order: int
    centralizer_order: int
    normalizer_order: int
    aut_order: int
    amalgam_order: int
    amalgam_expected: int
    all_automorphisms_realized: bool

    @property
    def amalgam_check(self) -> bool:
        return self.amalgam_order == self.amalgam_expected

    @property
    def passed(self) -> bool:
        return (
            self.centralizer_order == self.group_order
            and self.all_automorphisms_realized
            and self.amalgam_check
            and self.normalizer_order == self.group_order * self.aut_order
        )


def cayley_structure_check(gt: GroupTable) -> CayleyStructureReport:
    """Verify, constructively, the structure around the regular image:

    - the centralizer is the left multiplications (order = group order);
    - every automorphism f is realized by the point permutation x -> f(x),
      which normalizes the image and conjugates g to f(g);
    - the group generated by the image and its centralizer has order
      |G|^2 / |Z(G)|;
    - the normalizer (generated by the image, the centralizer, and the
      automorphism permutations) has order |G| * |Aut(G)|.
    """
    n = gt.order
    right = cayley_embed(gt)
    left = _left_multiplications(gt)
    if any(r * l != l * r for r in right for l in left):
        raise AssertionError("left and right multiplications must commute")
    autos = automorphisms(gt)
    realized = True
    for f in autos:
        sigma_f = Perm(tuple(f[x] + 1 for x in range(n)))
        for g in range(n):
            if sigma_f.inverse() * right[g] * sigma_f != right[f[g]]:
                realized = False
    amalgam = _subgroup_closure(n, frozenset(right) | frozenset(left))
    auto_perms = frozenset(
        Perm(tuple(f[x] + 1 for x in range(n))) for f in autos
    )
    normalizer = _subgroup_closure(
        n, frozenset(right) | frozenset(left) | auto_perms
    )
    return CayleyStructureReport(
        group_order=n,
        centralizer_order=len(set(left)),
        normalizer_order=len(normalizer),
        aut_order=len(autos),
        amalgam_order=len(amalgam),
        amalgam_expected=n * n // len(gt.center()),
        all_automorphisms_realized=realized,
    )


def galois_components(
    gt: GroupTable, length: int, limits: SearchLimits | None = None
) -> tuple[int, list[Word]]:
    """Hurwitz orbits of identity-product words over the non-identity
    elements of G (inside the regular image) that generate all of G, fused
    under the automorphism action on letters.  Returns the class count and
    one canonical representative word per class.
    """
    limits = limits or SearchLimits()
    n = gt.order
    right = cayley_embed(gt)
    letters = [right[g] for g in range(n) if g != gt.identity]
    element_of = {right[g]: g for g in range(n)}
    tables = MoveTables(n, letters)
    ids = _enumerate_ids(
        n, length, tables, letters, None, Perm.identity(n), None, None, None, limits
    )
    full = []
    for state in ids:
        generators = {element_of[tables.perms[i]] for i in state}
        if len(gt.subgroup_generated(generators)) == n:
            full.append(state)
    partition = orbit_partition(n, full, tables, limits)

    parent = list(range(len(partition.canonicals)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for index, state in enumerate(partition.canonicals):
        for f in automorphisms(gt):
            mapped = tuple(
                tables.index[right[f[element_of[tables.perms[i]]]]] for i in state
            )
            other = partition.orbit_of[mapped]
            a, b = find(index), find(other)
            if a != b:
                parent[a] = b
    classes: dict[int, tuple[int, ...]] = {}
    for index, state in enumerate(partition.canonicals):
        root = find(index)
        if root not in classes or state < classes[root]:
            classes[root] = state
    representatives = sorted(
        (tables.decode(state) for state in classes.values()),
        key=lambda w: tuple(p.sort_key() for p in w),
    )
    return len(classes), representatives


def word_class_vector(gt: GroupTable, word: Word) -> tuple:
    """Multiset of G-conjugacy classes of a word's letters (the word's type
    in group terms), as a sorted tuple of frozensets."""
    right = cayley_embed(gt)
    element_of = {right[g]: g for g in range(gt.order)}
    classes = [gt.conjugacy_class_of(element_of[letter]) for letter in word.letters]
    return tuple(sorted((min(c) for c in classes)))
