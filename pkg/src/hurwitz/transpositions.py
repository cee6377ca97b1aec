"""The transposition calculus: distinguished central elements, regeneration,
geodesic/central splitting, and canonical forms for transposition words.

The central workhorse is :func:`split_tilde_bar`, which rewrites any
transposition word, by explicit Hurwitz moves, as a geodesic part (length =
transposition length of the product) followed by a product of squares.  All
other normal forms here are closed-form consequences of move invariants; the
orbit oracle certifies them in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import Perm, canonical_representative, transposition_length
from .words import Word

__all__ = [
    "IdentityTranspositionNormalForm",
    "StableCanonicalForm",
    "clebsch_hurwitz",
    "hurwitz_element",
    "reduce_identity_transpositions",
    "regenerate",
    "regenerate_word",
    "split_tilde_bar",
    "stable_canonical_form",
]


def hurwitz_element(degree: int, genus: int) -> Word:
    """The distinguished identity-product transposition word of given genus:
    ``genus + 1`` squares of (1 2) followed by one square of each of
    (2 3), ..., (d-1 d).  Length 2(genus + degree - 1); identity product.

    >>> str(hurwitz_element(3, 0))
    '3: (1 2) | (1 2) | (2 3) | (2 3)'
    """
    if degree < 2:
        raise ValueError("degree must be at least 2")
    if genus < 0:
        raise ValueError("genus must be non-negative")
    letters = [Perm.transposition(degree, 1, 2)] * (2 * (genus + 1))
    for i in range(2, degree):
        letters += [Perm.transposition(degree, i, i + 1)] * 2
    return Word(degree, tuple(letters))


def regenerate(p: Perm) -> Word:
    """The canonical transposition word of a permutation.

    Every cycle ``(i1, ..., ik)`` (written from its least point) contributes
    the letters ``(ik ik-1), (ik-1 ik-2), ..., (i2 i1)``; cycles appear
    in decreasing type order with ties by least moved point.  The result has
    length equal to the transposition length of p and product p, and each
    cycle's block has a tree graph.

    >>> str(regenerate(Perm.parse("(1 2 3)", 3)))
    '3: (2 3) | (1 2)'
    """
    letters = []
    for cycle in p.cycles():
        for a, b in zip(cycle[::-1], cycle[-2::-1]):
            letters.append(Perm.transposition(p.degree, a, b))
    return Word(p.degree, tuple(letters))


def regenerate_word(word: Word) -> Word:
    """Replace every letter by its canonical transposition word."""
    result = Word(word.degree, ())
    for letter in word.letters:
        result = result + regenerate(letter)
    return result


# ---------------------------------------------------------------------------
# word surgery: all helpers below mutate a list of letters by genuine
# Hurwitz moves, so the final word is always in the orbit of the input.


def _fwd(letters: list[Perm], i: int) -> None:
    a, b = letters[i], letters[i + 1]
    letters[i] = a * b * a.inverse()
    letters[i + 1] = a


def _inv(letters: list[Perm], i: int) -> None:
    a, b = letters[i], letters[i + 1]
    letters[i] = b
    letters[i + 1] = b.inverse() * a * b


def _pull_left(letters: list[Perm], source: int, target: int) -> None:
    """Move letters[source] to target (0-based), unchanged, via inverse moves."""
    for i in range(source - 1, target - 1, -1):
        _inv(letters, i)


def _components(letters: list[Perm]) -> list[tuple[list[int], list[int]]]:
    """Connected components of the transposition graph, as
    (sorted vertices, letter positions) pairs ordered by least vertex."""
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for letter in letters:
        a, b = letter.support()
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        parent[find(a)] = find(b)
    vertices: dict[int, list[int]] = {}
    for v in parent:
        vertices.setdefault(find(v), []).append(v)
    positions: dict[int, list[int]] = {root: [] for root in vertices}
    for pos, letter in enumerate(letters):
        positions[find(letter.support()[0])].append(pos)
    components = [
        (sorted(vs), positions[root]) for root, vs in vertices.items()
    ]
    components.sort(key=lambda item: item[0][0])
    return components


def _grow_path(letters: list[Perm], vertex_set: set[int], block_len: int) -> list[int]:
    """Rearrange block [0, block_len) by moves so that its first
    len(vertex_set) - 1 letters form a spanning path; returns the path's
    vertex order.  The block must be a connected component's letters,
    already pulled to the front."""
    path = list(letters[0].support())
    while len(path) < len(vertex_set):
        in_path = set(path)
        edge_count = len(path) - 1
        for q in range(edge_count, block_len):
            support = letters[q].support()
            inside = [v for v in support if v in in_path]
            if len(inside) == 1:
                break
        else:
            raise AssertionError("component not connected; cannot grow path")
        _pull_left(letters, q, edge_count)
        mover = letters[edge_count]
        anchor = next(v for v in mover.support() if v in in_path)
        new_vertex = next(v for v in mover.support() if v not in in_path)
        i0 = path.index(anchor)
        if i0 == len(path) - 1:
            path.append(new_vertex)
        else:
            _pull_left(letters, edge_count, i0 + 1)
            _fwd(letters, i0)
            _fwd(letters, i0)
            path.insert(i0 + 1, new_vertex)
    return path


def _peel_square(letters: list[Perm], path: list[int]) -> None:
    """With path edges at positions 0..k-2 and an excess letter at k-1
    (both endpoints on the path), rewrite by moves so that positions
    (a, a+1) hold an equal pair, then ship that square to the very end."""
    k = len(path)
    support = letters[k - 1].support()
    a, b = sorted(path.index(v) for v in support)
    if b == k - 1:
        for q in range(k - 2, a, -1):
            _fwd(letters, q)
    else:
        for q in range(k - 2, b, -1):
            _fwd(letters, q)
        _inv(letters, b)
        for q in range(b - 1, a, -1):
            _fwd(letters, q)
    if letters[a] != letters[a + 1]:
        raise AssertionError("square extraction failed")
    pos = a
    while pos + 2 < len(letters):
        _fwd(letters, pos + 1)
        _fwd(letters, pos)
        pos += 1


def split_tilde_bar(word: Word) -> tuple[Word, Word]:
    """Split a transposition word as geodesic * central, by explicit moves.

    Returns ``(tilde, bar)`` where ``tilde`` has length equal to the
    transposition length of the product, the same product as ``word``, and
    ``bar`` is a product of squares (identity product); ``tilde + bar`` is
    Hurwitz-equivalent to ``word``.  The length defect is always even.
    """
    if not word.is_transposition_word():
        raise ValueError("split requires a transposition word")
    letters = list(word.letters)
    bar_count = 0
    while True:
        head_len = len(letters) - bar_count
        head = letters[:head_len]
        target = None
        for vertices, positions in _components(head):
            if len(positions) >= len(vertices):
                target = (vertices, positions)
                break
        if target is None:
            break
        vertices, positions = target
        block_len = len(positions)
        for slot, position in enumerate(positions):
            _pull_left(letters, position, slot)
        path = _grow_path(letters, set(vertices), block_len)
        _peel_square(letters, path)
        bar_count += 2

    tilde = Word(word.degree, tuple(letters[: len(letters) - bar_count]))
    bar = Word(word.degree, tuple(letters[len(letters) - bar_count :]))
    defect = len(word) - transposition_length(word.product().cycle_type())
    assert defect % 2 == 0 and len(bar) == defect
    assert tilde.product() == word.product()
    return tilde, bar


# ---------------------------------------------------------------------------
# canonical forms


@dataclass(frozen=True)
class IdentityTranspositionNormalForm:
    """Normal form of an identity-product transposition word: per connected
    component M = {i1 < ... < ij}, the word
    ``(i1 i2)^(2k) (i2 i3)^2 ... (ij-1 ij)^2`` with multiplicity k >= 1.
    Components are listed by least point and are pairwise disjoint."""

    degree: int
    components: tuple[tuple[tuple[int, ...], int], ...]

    def to_word(self) -> Word:
        letters: list[Perm] = []
        for points, multiplicity in self.components:
            chain = list(zip(points, points[1:]))
            letters += [Perm.transposition(self.degree, *chain[0])] * (2 * multiplicity)
            for a, b in chain[1:]:
                letters += [Perm.transposition(self.degree, a, b)] * 2
        return Word(self.degree, tuple(letters))

    def total_length(self) -> int:
        return sum(2 * (k + len(points) - 2) for points, k in self.components)


def reduce_identity_transpositions(word: Word) -> IdentityTranspositionNormalForm:
    """Normal form of an identity-product transposition word.

    The component supports and the per-component multiplicities
    ``k = length/2 - |M| + 2`` are move invariants and pin the form; the
    test suite certifies the round trip against the orbit oracle.
    """
    if not word.is_transposition_word():
        raise ValueError("normal form requires a transposition word")
    if not word.product().is_identity():
        raise ValueError("normal form requires an identity product")
    components = []
    for vertices, positions in _components(list(word.letters)):
        length = len(positions)
        multiplicity = length // 2 - len(vertices) + 2
        if length % 2 or multiplicity < 1:
            raise AssertionError(
                f"component {vertices} has impossible length {length}"
            )
        components.append((tuple(vertices), multiplicity))
    form = IdentityTranspositionNormalForm(word.degree, tuple(components))
    assert form.total_length() == len(word)
    return form


def clebsch_hurwitz(word: Word) -> int:
    """Genus of a transitive identity-product transposition word.

    Such a word is equivalent to the distinguished word of genus
    ``length/2 - degree + 1``; requires (i) the letters to generate the full
    symmetric group and (ii) an identity product.
    """
    if not word.is_transposition_word():
        raise ValueError("expected a transposition word")
    if word.generated_subgroup().tag != "full_symmetric":
        raise ValueError(
            "condition (i) fails: letters do not generate the full symmetric group"
        )
    if not word.product().is_identity():
        raise ValueError("condition (ii) fails: product is not the identity")
    genus = len(word) // 2 - word.degree + 1
    assert len(word) % 2 == 0 and genus >= 0
    return genus


@dataclass(frozen=True)
class StableCanonicalForm:
    """Stable form of a word with at least 3(d-1) transposition letters and
    full symmetric generated subgroup: canonical representatives of the
    non-transposition letters (input order), a residual permutation, and a
    genus."""

    degree: int
    cycle_parts: tuple[Perm, ...]
    residual: Perm
    genus: int

    def reconstruction(self) -> Word:
        return (
            Word(self.degree, self.cycle_parts)
            + regenerate(self.residual)
            + hurwitz_element(self.degree, self.genus)
        )


def stable_canonical_form(word: Word) -> StableCanonicalForm:
    """Canonical form in the stable range (>= 3(d-1) transposition letters).

    The non-transposition letters are replaced by the canonical
    representatives of their types in input order; the residual permutation
    is ``(c_1 ... c_m)^-1 * product(word)``; the genus is
    ``(k - lt(residual))/2 - d + 1`` for k transposition letters.
    """
    degree = word.degree
    k = sum(1 for letter in word.letters if letter.is_transposition())
    if k < 3 * (degree - 1):
        raise ValueError(
            f"need at least 3(d-1) = {3 * (degree - 1)} transposition letters, got {k}"
        )
    if word.generated_subgroup().tag != "full_symmetric":
        raise ValueError("letters do not generate the full symmetric group")
    cycle_parts = tuple(
        canonical_representative(letter.cycle_type(), degree)
        for letter in word.letters
        if not letter.is_transposition()
    )
    prefix = Perm.identity(degree)
    for part in cycle_parts:
        prefix = prefix * part
    residual = prefix.inverse() * word.product()
    defect = k - transposition_length(residual.cycle_type())
    if defect % 2:
        raise ValueError("parity violation: input is not a genuine word")
    genus = defect // 2 - degree + 1
    assert genus >= 0
    return StableCanonicalForm(degree, cycle_parts, residual, genus)
