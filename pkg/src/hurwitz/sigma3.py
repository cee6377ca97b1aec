"""Complete classification of degree-3 words up to Hurwitz moves.

Every degree-3 word is classified by move invariants alone: the counts of
transposition and 3-cycle letters, the product, and the generated subgroup.
Identity-product words get an exact normal form over the seven standard
generators; other words get a representative up to simultaneous conjugation
together with a conjugator witness.  The orbit oracle certifies both
classifiers exhaustively in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orbits import SearchLimits, orbit_count_mod_conjugation
from .perm import Perm, all_permutations
from .words import Word

__all__ = [
    "Deg3ComponentCount",
    "Sigma3Form",
    "conjugacy_class_form",
    "count_components_deg3",
    "representative_word",
    "sigma3_generators",
    "sigma3_normal_form",
]

X12 = Perm.transposition(3, 1, 2)
X23 = Perm.transposition(3, 2, 3)
X13 = Perm.transposition(3, 1, 3)
C123 = Perm.parse("(1 2 3)", 3)
C132 = Perm.parse("(1 3 2)", 3)

_TRANSPOSITION_INDEX = {X12: 1, X23: 2, X13: 3}


def sigma3_generators() -> tuple[Word, ...]:
    """The seven standard identity-product generators s1..s7 of degree 3:

    s1 = x12^2, s2 = x23^2, s3 = x13^2, s4 = x123 x132,
    s5 = x123 x12 x23, s6 = x123^3, s7 = x132^3.
    """
    return (
        Word(3, (X12, X12)),
        Word(3, (X23, X23)),
        Word(3, (X13, X13)),
        Word(3, (C123, C132)),
        Word(3, (C123, X12, X23)),
        Word(3, (C123, C123, C123)),
        Word(3, (C132, C132, C132)),
    )


@dataclass(frozen=True)
class Sigma3Form:
    """Classification result for a degree-3 word.

    ``exact=True`` means the representative is the word itself as a semigroup
    element (identity product); ``exact=False`` means it represents the word
    only up to simultaneous conjugation, with ``conjugator`` a witness g such
    that conjugating the input by g lands in the representative's orbit.
    """

    family: str
    params: tuple[int, ...]
    exact: bool
    conjugator: Perm

    def representative(self) -> Word:
        return representative_word(self)


def _power(letters: tuple[Perm, ...], n: int) -> tuple[Perm, ...]:
    return letters * n


def representative_word(form: Sigma3Form) -> Word:
    """The representative word of a classification result."""
    s = sigma3_generators()
    family, params = form.family, form.params
    if family == "unit":
        return Word(3, ())
    if family == "s_i_power":
        i, n = params
        return Word(3, _power(s[i - 1].letters, n))
    if family == "s4_s6_s7":
        a, m, n = params
        return Word(
            3,
            _power(s[3].letters, a) + _power(s[5].letters, m) + _power(s[6].letters, n),
        )
    if family == "s1n_s2":
        (n,) = params
        return Word(3, _power(s[0].letters, n) + s[1].letters)
    if family == "s1n_s6m":
        n, m = params
        return Word(3, _power(s[0].letters, n) + _power(s[5].letters, m))
    if family == "s1n_s5_s6m":
        n, m = params
        return Word(3, _power(s[0].letters, n) + s[4].letters + _power(s[5].letters, m))
    if family == "s1n_s4_s6m":
        n, m = params
        return Word(3, _power(s[0].letters, n) + s[3].letters + _power(s[5].letters, m))
    if family == "x12_odd":
        (k,) = params
        return Word(3, (X12,) * (2 * k + 1))
    if family == "x123_x132":
        n, m = params
        return Word(3, (C123,) * n + (C132,) * m)
    if family == "x12n_x23":
        (n,) = params
        return Word(3, (X12,) * n + (X23,))
    if family == "x12_3cyc":
        n, p, q = params
        return Word(3, (X12,) * n + (C123,) * p + (C132,) * q)
    raise ValueError(f"unknown family {family!r}")


def _letter_counts(word: Word) -> tuple[int, int, int]:
    """(transpositions, count of (1 2 3), count of (1 3 2))."""
    t = sum(1 for letter in word.letters if letter.is_transposition())
    p = sum(1 for letter in word.letters if letter == C123)
    q = sum(1 for letter in word.letters if letter == C132)
    if t + p + q != len(word):
        raise AssertionError("degree-3 letters are transpositions or 3-cycles")
    return t, p, q


def _product_witness(word: Word, representative: Word) -> Perm:
    """First g (in the permutation order) conjugating the word's product to
    the representative's product.  For degree 3 the class of a word is pinned
    by its invariants, so any product-matching conjugator works."""
    target = representative.product()
    for g in sorted(all_permutations(3), key=Perm.sort_key):
        if word.product().conjugate(g) == target:
            return g
    raise AssertionError("no conjugator found; products not conjugate")


def sigma3_normal_form(word: Word) -> Sigma3Form:
    """Classify a degree-3 word.

    Identity-product words map to their exact normal form (one of the seven
    listed families over s1..s7); all other words map to a representative up
    to simultaneous conjugation, with a conjugator witness.
    """
    if word.degree != 3:
        raise ValueError("classifier is specific to degree 3")
    t, p, q = _letter_counts(word)
    c = p + q
    alpha = word.product()

    if alpha.is_identity():
        identity = Perm.identity(3)
        if t == 0 and c == 0:
            return Sigma3Form("unit", (), True, identity)
        if c == 0:
            distinct = {letter for letter in word.letters}
            if len(distinct) == 1:
                i = _TRANSPOSITION_INDEX[next(iter(distinct))]
                return Sigma3Form("s_i_power", (i, t // 2), True, identity)
            return Sigma3Form("s1n_s2", (t // 2 - 1,), True, identity)
        if t == 0:
            a = p % 3
            if q % 3 != a:
                raise AssertionError("identity product forces equal residues")
            return Sigma3Form(
                "s4_s6_s7", (a, (p - a) // 3, (q - a) // 3), True, identity
            )
        if c % 3 == 0:
            return Sigma3Form("s1n_s6m", (t // 2, c // 3), True, identity)
        if c % 3 == 1:
            return Sigma3Form("s1n_s5_s6m", (t // 2 - 1, (c - 1) // 3), True, identity)
        return Sigma3Form("s1n_s4_s6m", (t // 2, (c - 2) // 3), True, identity)

    if c == 0 and len({letter for letter in word.letters}) == 1:
        form = Sigma3Form("x12_odd", ((t - 1) // 2,), False, Perm.identity(3))
    elif t == 0:
        form = Sigma3Form("x123_x132", (max(p, q), min(p, q)), False, Perm.identity(3))
    elif c == 0:
        form = Sigma3Form("x12n_x23", (t - 1,), False, Perm.identity(3))
    else:
        # Representative x12^t x123^pp x132^qq.  The first exponent is kept
        # divisible by 3 where a non-trivial product allows it; for an even
        # transposition count with c divisible by 3, that shape would force
        # an identity product, so qq = 1 is used instead.
        if t % 2 == 1:
            qq = c % 3
        elif c % 3 == 0:
            qq = 1
        else:
            qq = c % 3
        form = Sigma3Form("x12_3cyc", (t, c - qq, qq), False, Perm.identity(3))
    witness = _product_witness(word, representative_word(form))
    return Sigma3Form(form.family, form.params, False, witness)


def conjugacy_class_form(word: Word) -> Sigma3Form:
    """Canonical descriptor of a degree-3 word up to moves and simultaneous
    conjugation.  Exact identity-product forms are canonicalized: the
    transposition-power family maps to i = 1 and the two 3-cycle cube
    exponents are sorted."""
    form = sigma3_normal_form(word)
    if not form.exact:
        return form
    if form.family == "s_i_power":
        canonical = Sigma3Form("s_i_power", (1, form.params[1]), False, form.conjugator)
    elif form.family == "s4_s6_s7":
        a, m, n = form.params
        canonical = Sigma3Form("s4_s6_s7", (a, max(m, n), min(m, n)), False, form.conjugator)
    else:
        canonical = Sigma3Form(form.family, form.params, False, form.conjugator)
    witness = _product_witness(word, representative_word(canonical))
    return Sigma3Form(canonical.family, canonical.params, False, witness)


# ---------------------------------------------------------------------------
# component counts for degree-3 coverings


@dataclass(frozen=True)
class Deg3ComponentCount:
    """Closed-form component count for a degree-3 stratum, with the floor
    formula where one exists and an optional oracle cross-check.  The final
    ``count`` prefers the oracle when it disagrees with the closed form."""

    length: int
    global_type: tuple[int, ...]
    galois: str
    space: str
    closed_form: int
    paper_formula: int | None
    oracle_count: int | None = None

    @property
    def count(self) -> int:
        if self.oracle_count is not None and self.oracle_count != self.closed_form:
            return self.oracle_count
        return self.closed_form

    @property
    def flagged(self) -> bool:
        return self.paper_formula is not None and self.paper_formula != self.count


def _count_alternating(length: int, global_type: tuple[int, ...]) -> tuple[int, int]:
    """(closed form, floor formula) for all-3-cycle strata of one length."""
    if length < 1:
        return 0, 0
    if global_type == ():
        ordered = sum(1 for p in range(length + 1) if (2 * p - length) % 3 == 0)
        closed = (ordered + (1 if length % 2 == 0 else 0)) // 2
        return closed, length // 6 + 1
    if global_type == (3,):
        ordered = sum(1 for p in range(length + 1) if (2 * p - length) % 3 != 0)
        return ordered // 2, -((-length) // 3)
    return 0, 0


def _count_full(length: int, global_type: tuple[int, ...]) -> int:
    count = 0
    for t in range(length + 1):
        c = length - t
        if global_type == ():
            if t % 2 == 0 and t >= 2 and (c >= 1 or t >= 4):
                count += 1
        elif global_type == (2,):
            if t % 2 == 1 and (t >= 3 or c >= 1):
                count += 1
        elif global_type == (3,):
            if t % 2 == 0 and t >= 2:
                count += 1
    return count


def count_components_deg3(
    length: int,
    global_type: tuple[int, ...] = (),
    galois: str = "alternating",
    space: str = "line",
    with_oracle: bool = False,
    limits: SearchLimits | None = None,
) -> Deg3ComponentCount:
    """Number of simultaneous-conjugation classes of degree-3 words of one
    length with the given global-monodromy type and generated-subgroup tag.

    ``space="line"`` requires the identity global type.  The closed form
    comes from the complete classification; ``with_oracle`` re-counts by
    exhaustive orbit enumeration (ground truth, returned when it differs).
    """
    global_type = tuple(global_type)
    if space not in ("line", "disc"):
        raise ValueError("space must be 'line' or 'disc'")
    if space == "line" and global_type != ():
        raise ValueError("coverings of the line have identity global monodromy")
    if galois == "alternating":
        closed, formula = _count_alternating(length, global_type)
    elif galois == "full_symmetric":
        closed = _count_full(length, global_type)
        formula = closed
    elif galois == "other":
        # Order-2 subgroup: all letters one repeated transposition.
        want_odd = global_type == (2,)
        ok = length >= 1 and (length % 2 == 1) == want_odd and global_type in ((), (2,))
        closed = 1 if ok else 0
        formula = closed
    elif galois == "trivial":
        closed = 1 if length == 0 and global_type == () else 0
        formula = closed
    else:
        raise ValueError(f"unknown galois tag {galois!r}")

    oracle_count = None
    if with_oracle:
        kwargs = {"galois": galois, "limits": limits or SearchLimits()}
        if global_type == ():
            kwargs["product"] = Perm.identity(3)
        else:
            kwargs["product_type"] = global_type
        oracle_count, _ = orbit_count_mod_conjugation(3, length, **kwargs)
    return Deg3ComponentCount(
        length, global_type, galois, space, closed, formula, oracle_count
    )
