"""Ground-truth orbit machinery: exhaustive BFS over Hurwitz moves.

Everything else in the package is validated against this module.  Words are
interned as tuples of small ints (indices into the conjugation closure of the
letter set, ordered by the permutation order), so BFS states hash fast and
the minimum id-tuple of an orbit is the canonical word.

Budgets are explicit: an :class:`OrbitResult` that was cut off carries
``exhausted=False`` and must not be used for equality decisions;
:func:`hurwitz_equivalent` raises :class:`InconclusiveSearchError` instead of
guessing.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .perm import Perm, all_permutations
from .words import Word, _subgroup_info

__all__ = [
    "InconclusiveSearchError",
    "MoveTables",
    "OrbitResult",
    "SearchLimits",
    "enumerate_elements",
    "hurwitz_equivalent",
    "hurwitz_orbit",
    "orbit_count_mod_conjugation",
    "orbit_partition",
]


class InconclusiveSearchError(RuntimeError):
    """The state budget ran out before the question was decided."""


@dataclass(frozen=True)
class SearchLimits:
    max_states: int = 5_000_000

    def __post_init__(self) -> None:
        if self.max_states <= 0:
            raise ValueError("max_states must be positive")


DEFAULT_LIMITS = SearchLimits()


@dataclass(frozen=True)
class OrbitResult:
    """Outcome of one orbit enumeration.

    When ``exhausted`` is False, ``canonical`` and ``size`` are lower bounds
    over the states seen so far and must not back equality decisions.
    """

    canonical: Word
    size: int
    exhausted: bool
    states_explored: int


class MoveTables:
    """Dense conjugation tables over the closure of a letter set.

    The closure is taken under ``(a, b) -> a*b*a^-1`` and ``(a, b) ->
    a^-1*b*a`` so every word reachable by moves stays expressible.  Letters
    are indexed in increasing permutation order, hence id-tuples compare
    exactly like words.
    """

    def __init__(self, degree: int, letters: Iterable[Perm]):
        self.degree = degree
        closure = set(letters)
        if not all(p.degree == degree for p in closure):
            raise ValueError("letter degree mismatch")
        changed = True
        while changed:
            changed = False
            snapshot = list(closure)
            for a in snapshot:
                a_inverse = a.inverse()
                for b in snapshot:
                    for candidate in (a * b * a_inverse, a_inverse * b * a):
                        if candidate not in closure:
                            closure.add(candidate)
                            changed = True
        self.perms: list[Perm] = sorted(closure, key=Perm.sort_key)
        self.index: dict[Perm, int] = {p: i for i, p in enumerate(self.perms)}
        n = len(self.perms)
        self.fwd = [[0] * n for _ in range(n)]  # fwd[a][b] = a*b*a^-1
        self.binv = [[0] * n for _ in range(n)]  # binv[a][b] = b^-1*a*b
        for ia, a in enumerate(self.perms):
            a_inverse = a.inverse()
            for ib, b in enumerate(self.perms):
                self.fwd[ia][ib] = self.index[a * b * a_inverse]
                self.binv[ia][ib] = self.index[b.inverse() * a * b]

    def encode(self, word: Word) -> tuple[int, ...]:
        return tuple(self.index[letter] for letter in word.letters)

    def decode(self, ids: Sequence[int]) -> Word:
        return Word(self.degree, tuple(self.perms[i] for i in ids))

    def neighbors(self, state: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        fwd, binv = self.fwd, self.binv
        for i in range(len(state) - 1):
            a, b = state[i], state[i + 1]
            head, tail = state[:i], state[i + 2 :]
            yield head + (fwd[a][b], a) + tail
            yield head + (b, binv[a][b]) + tail


def _orbit_ids(
    tables: MoveTables, start: tuple[int, ...], max_states: int
) -> tuple[set[tuple[int, ...]], bool]:
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for neighbor in tables.neighbors(state):
            if neighbor not in seen:
                if len(seen) >= max_states:
                    return seen, False
                seen.add(neighbor)
                queue.append(neighbor)
    return seen, True


def hurwitz_orbit(word: Word, limits: SearchLimits = DEFAULT_LIMITS) -> OrbitResult:
    """Exhaustively enumerate the Hurwitz orbit of ``word``.

    Deterministic: repeated runs return the same canonical representative
    (the orbit minimum in the word order) and size.
    """
    tables = MoveTables(word.degree, word.letters)
    seen, exhausted = _orbit_ids(tables, tables.encode(word), limits.max_states)
    return OrbitResult(
        canonical=tables.decode(min(seen)),
        size=len(seen),
        exhausted=exhausted,
        states_explored=len(seen),
    )


def hurwitz_orbit_words(
    word: Word, limits: SearchLimits = DEFAULT_LIMITS
) -> tuple[set[Word], bool]:
    """The full orbit as a set of words, with the exhaustion flag."""
    tables = MoveTables(word.degree, word.letters)
    seen, exhausted = _orbit_ids(tables, tables.encode(word), limits.max_states)
    return {tables.decode(state) for state in seen}, exhausted


def _fast_invariants(word: Word) -> tuple:
    return (
        word.degree,
        len(word),
        word.product(),
        frozenset(word.type_vector().items()),
        word.generated_subgroup(),
    )


def hurwitz_equivalent(
    w1: Word, w2: Word, limits: SearchLimits = DEFAULT_LIMITS
) -> bool:
    """Decide Hurwitz equivalence exactly.

    Move-invariant quantities (length, product, type, generated subgroup)
    reject fast; otherwise a bidirectional BFS runs until the frontiers meet,
    one side's orbit is exhausted, or the budget runs out (raising
    :class:`InconclusiveSearchError`, never returning a guess).
    """
    if w1.degree != w2.degree:
        return False
    if w1 == w2:
        return True
    if _fast_invariants(w1) != _fast_invariants(w2):
        return False
    tables = MoveTables(w1.degree, set(w1.letters) | set(w2.letters))
    side_a = {tables.encode(w1)}
    side_b = {tables.encode(w2)}
    if side_a & side_b:
        return True
    queue_a, queue_b = deque(side_a), deque(side_b)
    # Meets are detected on insertion, so once either queue drains that
    # side's orbit is complete and disjoint from the other: answer False.
    while queue_a and queue_b:
        if len(side_a) + len(side_b) > limits.max_states:
            raise InconclusiveSearchError(
                f"budget {limits.max_states} exhausted with "
                f"{len(side_a)} + {len(side_b)} states"
            )
        if len(side_a) <= len(side_b):
            queue, seen, other = queue_a, side_a, side_b
        else:
            queue, seen, other = queue_b, side_b, side_a
        for _ in range(len(queue)):
            state = queue.popleft()
            for neighbor in tables.neighbors(state):
                if neighbor in other:
                    return True
                if neighbor not in seen:
                    seen.add(neighbor)
                    queue.append(neighbor)
    return False


@dataclass
class _Partition:
    """Orbit partition of an explicit word set, all sharing one MoveTables."""

    tables: MoveTables
    orbit_of: dict[tuple[int, ...], int] = field(default_factory=dict)
    canonicals: list[tuple[int, ...]] = field(default_factory=list)

    def canonical_words(self) -> list[Word]:
        return [self.tables.decode(state) for state in self.canonicals]


def orbit_partition(
    degree: int,
    words: Iterable[tuple[int, ...]],
    tables: MoveTables,
    limits: SearchLimits = DEFAULT_LIMITS,
) -> _Partition:
    """Partition an explicit, move-closed set of id-words into orbits."""
    partition = _Partition(tables)
    states = 0
    for start in words:
        if start in partition.orbit_of:
            continue
        orbit, exhausted = _orbit_ids(tables, start, limits.max_states - states)
        if not exhausted:
            raise InconclusiveSearchError(
                f"budget {limits.max_states} exhausted during orbit partition"
            )
        states += len(orbit)
        index = len(partition.canonicals)
        partition.canonicals.append(min(orbit))
        for state in orbit:
            partition.orbit_of[state] = index
    return partition


def _letters_by_constraint(
    degree: int, letter_types: Counter | None
) -> tuple[list[Perm], Counter | None]:
    letters = [p for p in all_permutations(degree, include_identity=False)]
    if letter_types is None:
        return letters, None
    letter_types = Counter(
        {tuple(parts): count for parts, count in letter_types.items()}
    )
    allowed = {t for t in letter_types}
    return [p for p in letters if p.cycle_type() in allowed], letter_types


def _enumerate_ids(
    degree: int,
    length: int,
    tables: MoveTables,
    letters: list[Perm],
    letter_types: Counter | None,
    product: Perm | None,
    product_type: tuple[int, ...] | None,
    galois: str | None,
    transitive: bool | None,
    limits: SearchLimits,
) -> list[tuple[int, ...]]:
    if letter_types is not None and sum(letter_types.values()) != length:
        raise ValueError("letter-type multiset size differs from the length")
    if galois == "trivial" and length > 0:
        return []
    if galois == "alternating":
        # The subgroup grows with the letters, so an alternating target
        # admits only even letters; the exact tag is still checked per word.
        letters = [p for p in letters if p.sign() == 1]
    by_type: dict[tuple[int, ...], list[Perm]] = {}
    for p in letters:
        by_type.setdefault(p.cycle_type(), []).append(p)
    identity = Perm.identity(degree)
    results: list[tuple[int, ...]] = []
    budget = limits.max_states

    letter_index = {p: i for i, p in enumerate(tables.perms)}

    def accept(word_letters: tuple[Perm, ...]) -> None:
        if galois is not None or transitive is not None:
            info = _subgroup_info(degree, frozenset(word_letters), 10**9)
            if galois is not None and info.tag != galois:
                return
            if transitive is not None and info.transitive != transitive:
                return
        results.append(tuple(letter_index[p] for p in word_letters))

    def extend(
        prefix: list[Perm], prefix_product: Perm, remaining: Counter | None
    ) -> None:
        nonlocal budget
        budget -= 1
        if budget < 0:
            raise InconclusiveSearchError("enumeration budget exhausted")
        depth = len(prefix)
        if depth == length:
            if product is not None and prefix_product != product:
                return
            if product_type is not None and prefix_product.cycle_type() != product_type:
                return
            accept(tuple(prefix))
            return
        if product is not None and depth == length - 1:
            # The last letter is forced by the product constraint.
            last = prefix_product.inverse() * product
            if last.is_identity():
                return
            if remaining is not None and remaining[last.cycle_type()] != 1:
                return
            prefix.append(last)
            extend(prefix, product, _consume(remaining, last.cycle_type()))
            prefix.pop()
            return
        if remaining is None:
            candidates = letters
        else:
            candidates = [
                p for t, ps in by_type.items() if remaining[t] > 0 for p in ps
            ]
        for p in candidates:
            prefix.append(p)
            extend(
                prefix,
                prefix_product * p,
                _consume(remaining, p.cycle_type()) if remaining is not None else None,
            )
            prefix.pop()

    def _consume(remaining: Counter | None, t: tuple[int, ...]) -> Counter | None:
        if remaining is None:
            return None
        consumed = Counter(remaining)
        consumed[t] -= 1
        return consumed

    extend([], identity, letter_types)
    return results


def _stratum_tables(degree: int, letters: list[Perm]) -> MoveTables:
    return MoveTables(degree, letters)


def enumerate_elements(
    degree: int,
    length: int,
    *,
    letter_types: Counter | None = None,
    product: Perm | None = None,
    product_type: tuple[int, ...] | None = None,
    galois: str | None = None,
    transitive: bool | None = None,
    limits: SearchLimits = DEFAULT_LIMITS,
) -> list[Word]:
    """Canonical representatives of the Hurwitz orbits in a stratum.

    The stratum is every word of the given degree and length over the
    non-identity letters, optionally filtered by an exact letter-type
    multiset, an exact product, a product cycle type, a generated-subgroup
    tag, and transitivity.  Deterministic; representatives sorted in
    the word order.
    """
    letters, letter_types = _letters_by_constraint(degree, letter_types)
    tables = _stratum_tables(degree, letters)
    ids = _enumerate_ids(
        degree, length, tables, letters, letter_types,
        product, product_type, galois, transitive, limits,
    )
    partition = orbit_partition(degree, ids, tables, limits)
    return sorted(partition.canonical_words(), key=lambda w: tuple(p.sort_key() for p in w))


def orbit_count_mod_conjugation(
    degree: int,
    length: int,
    *,
    letter_types: Counter | None = None,
    product: Perm | None = None,
    product_type: tuple[int, ...] | None = None,
    galois: str | None = None,
    transitive: bool | None = None,
    limits: SearchLimits = DEFAULT_LIMITS,
) -> tuple[int, list[Word]]:
    """Hurwitz orbits of a stratum fused under simultaneous conjugation.

    The constraints must be conjugation-invariant, so an exact product is
    only allowed when it is the identity (use ``product_type`` otherwise).
    Returns the fused count and one canonical representative per class.
    """
    if product is not None and not product.is_identity():
        raise ValueError("exact non-identity product is not conjugation-invariant")
    letters, letter_types = _letters_by_constraint(degree, letter_types)
    tables = _stratum_tables(degree, letters)
    ids = _enumerate_ids(
        degree, length, tables, letters, letter_types,
        product, product_type, galois, transitive, limits,
    )
    partition = orbit_partition(degree, ids, tables, limits)

    parent = list(range(len(partition.canonicals)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    conjugators = list(all_permutations(degree))
    for index, state in enumerate(partition.canonicals):
        word = tables.decode(state)
        for g in conjugators:
            conjugated = tables.encode(word.simultaneous_conjugate(g))
            other = partition.orbit_of.get(conjugated)
            if other is None:
                raise AssertionError("conjugate left the stratum; constraints not invariant")
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
