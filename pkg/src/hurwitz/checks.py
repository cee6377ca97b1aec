"""Named verification checks: the acceptance suite behind ``hurwitz verify``.

Every check pits a closed form or a rewriting procedure against the
exhaustive orbit oracle (or against explicit move sequences, which certify
equivalence by construction).  Checks return a :class:`CheckResult`; they
never weaken a failing assertion, and known formula discrepancies are
reported as recorded values, not silently patched.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .cayley import (
    cayley_structure_check,
    cyclic_table,
    galois_components,
    klein_four_table,
    symmetric3_table,
    word_class_vector,
)
from .orbits import (
    MoveTables,
    SearchLimits,
    _enumerate_ids,
    _orbit_ids,
    hurwitz_equivalent,
    orbit_count_mod_conjugation,
    orbit_partition,
)
from .npsemi import OriginSet, dominates, member, origins, union
from .perm import Perm, all_permutations
from .sigma3 import (
    conjugacy_class_form,
    count_components_deg3,
    sigma3_generators,
    sigma3_normal_form,
)
from .transpositions import (
    hurwitz_element,
    reduce_identity_transpositions,
    stable_canonical_form,
)
from .words import Word, pull_letter_left

__all__ = ["CHECKS", "CheckResult", "run_check", "run_all"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    summary: str
    details: dict = field(default_factory=dict)


def _limits(options: dict) -> SearchLimits:
    return SearchLimits(options.get("max_states", 5_000_000))


# ---------------------------------------------------------------------------
# shared stratum helpers


def _transposition_letters(degree: int) -> list[Perm]:
    return [
        p
        for p in all_permutations(degree, include_identity=False)
        if p.is_transposition()
    ]


def _identity_transposition_stratum(
    degree: int, length: int, limits: SearchLimits, full_only: bool
) -> tuple[MoveTables, list[tuple[int, ...]]]:
    letters = _transposition_letters(degree)
    tables = MoveTables(degree, letters)
    ids = _enumerate_ids(
        degree,
        length,
        tables,
        letters,
        Counter({(2,): length}),
        Perm.identity(degree),
        None,
        "full_symmetric" if full_only else None,
        True if full_only else None,
        limits,
    )
    return tables, ids


# ---------------------------------------------------------------------------
# 1. Clebsch-Hurwitz: one orbit per genus


def check_clebsch_hurwitz(options: dict) -> CheckResult:
    """Every transitive identity-product transposition word of length L lies
    in the single orbit of the distinguished genus-(L/2 - d + 1) word;
    exhaustive at the configured degrees and lengths."""
    limits = _limits(options)
    if "degree" in options:
        degree = options["degree"]
        max_genus = options.get("max_genus", 2)
        cases = [
            (degree, [2 * (degree - 1 + g) for g in range(max_genus + 1)])
        ]
    else:
        cases = [(3, [4, 6, 8]), (4, [6, 8])]
    details = {}
    for degree, lengths in cases:
        for length in lengths:
            tables, ids = _identity_transposition_stratum(
                degree, length, limits, full_only=True
            )
            h = hurwitz_element(degree, length // 2 - degree + 1)
            orbit, exhausted = _orbit_ids(
                tables, tables.encode(h), limits.max_states
            )
            if not exhausted:
                raise AssertionError("orbit budget exhausted")
            if set(ids) != orbit:
                return CheckResult(
                    "clebsch-hurwitz",
                    False,
                    f"stratum d={degree} L={length} is not a single orbit",
                    details,
                )
            details[f"d={degree},L={length}"] = len(orbit)
    return CheckResult(
        "clebsch-hurwitz",
        True,
        "each stratum equals the distinguished word's orbit: "
        + ", ".join(f"{k}: {v} words" for k, v in details.items()),
        details,
    )


# ---------------------------------------------------------------------------
# 2. transposition normal form is a complete invariant


def check_transposition_normal_form(options: dict) -> CheckResult:
    """Two identity-product transposition words are equivalent iff their
    normal forms coincide; exhaustive per degree/length."""
    limits = _limits(options)
    cases = options.get("cases", [(3, 8), (4, 6)])
    details = {}
    for degree, max_length in cases:
        for length in range(0, max_length + 1, 2):
            tables, ids = _identity_transposition_stratum(
                degree, length, limits, full_only=False
            )
            partition = orbit_partition(degree, ids, tables, limits)
            form_of_orbit: dict[int, tuple] = {}
            for state in ids:
                form = reduce_identity_transpositions(tables.decode(state))
                orbit_id = partition.orbit_of[state]
                previous = form_of_orbit.setdefault(orbit_id, form.components)
                if previous != form.components:
                    return CheckResult(
                        "transposition-normal-form",
                        False,
                        f"orbit with two normal forms at d={degree} L={length}",
                        details,
                    )
            if len(set(form_of_orbit.values())) != len(form_of_orbit):
                return CheckResult(
                    "transposition-normal-form",
                    False,
                    f"distinct orbits share a normal form at d={degree} L={length}",
                    details,
                )
            details[f"d={degree},L={length}"] = len(form_of_orbit)
    return CheckResult(
        "transposition-normal-form",
        True,
        "normal forms separate orbits exactly; orbit counts "
        + ", ".join(f"{k}: {v}" for k, v in details.items()),
        details,
    )


# ---------------------------------------------------------------------------
# 3. genus addition for the distinguished central words


def check_genus_addition(options: dict) -> CheckResult:
    """Concatenating the distinguished words of genus g1 and g2 is
    equivalent to the one of genus g1 + g2 + d - 1 (oracle, d = 3)."""
    limits = _limits(options)
    degree = options.get("degree", 3)
    max_total = options.get("max_total_genus", 2)
    checked = []
    for g1 in range(max_total + 1):
        for g2 in range(max_total + 1 - g1):
            lhs = hurwitz_element(degree, g1) + hurwitz_element(degree, g2)
            rhs = hurwitz_element(degree, g1 + g2 + degree - 1)
            if not hurwitz_equivalent(lhs, rhs, limits):
                return CheckResult(
                    "genus-addition", False, f"failed at g1={g1}, g2={g2}", {}
                )
            checked.append((g1, g2))
    return CheckResult(
        "genus-addition",
        True,
        f"{len(checked)} genus pairs verified by the oracle at d={degree}",
        {"pairs": checked},
    )


# ---------------------------------------------------------------------------
# 4. degree-3 component counts vs the floor formulas


def check_deg3_counts(options: dict) -> CheckResult:
    """Oracle counts for all-3-cycle strata: the identity-product formula
    floor(b/6) + 1 must match except at b = 1 mod 6, b >= 7 (recorded and
    flagged); the 3-cycle-product formula -floor(-b/3) must match always."""
    limits = _limits(options)
    identity_lengths = options.get("identity_lengths", range(2, 13))
    global3_lengths = options.get("global3_lengths", range(1, 10))
    recorded = {}
    for b in identity_lengths:
        result = count_components_deg3(
            b, (), "alternating", "line", with_oracle=True, limits=limits
        )
        expect_mismatch = b % 6 == 1 and b >= 7
        recorded[f"identity b={b}"] = {
            "oracle": result.oracle_count,
            "formula": result.paper_formula,
            "flagged": result.flagged,
        }
        if result.oracle_count != result.closed_form:
            return CheckResult(
                "deg3-counts", False, f"closed form wrong at b={b}", recorded
            )
        if expect_mismatch != (result.oracle_count != result.paper_formula):
            return CheckResult(
                "deg3-counts",
                False,
                f"unexpected formula relation at b={b}",
                recorded,
            )
    for b in global3_lengths:
        result = count_components_deg3(
            b, (3,), "alternating", "disc", with_oracle=True, limits=limits
        )
        recorded[f"3-cycle b={b}"] = {
            "oracle": result.oracle_count,
            "formula": result.paper_formula,
        }
        if result.oracle_count != result.paper_formula:
            return CheckResult(
                "deg3-counts",
                False,
                f"3-cycle-product formula fails at b={b}",
                recorded,
            )
    flagged = [k for k, v in recorded.items() if v.get("flagged")]
    return CheckResult(
        "deg3-counts",
        True,
        f"oracle matches the formulas except the recorded mismatches {flagged}",
        recorded,
    )


# ---------------------------------------------------------------------------
# 5. (transposition, middle, d-cycle) triples


def check_triple_types(options: dict) -> CheckResult:
    """Identity-product triples of a transposition, a d-cycle and one more
    letter: exactly floor(d/2) middle types occur and each gives a single
    conjugation class."""
    limits = _limits(options)
    degrees = options.get("degrees", (4, 5))
    details = {}
    for degree in degrees:
        counts = {}
        for middle in sorted(
            {p.cycle_type() for p in all_permutations(degree, include_identity=False)}
        ):
            multiset = Counter({(2,): 1, (degree,): 1})
            multiset[middle] += 1
            count, _ = orbit_count_mod_conjugation(
                degree,
                3,
                letter_types=multiset,
                product=Perm.identity(degree),
                limits=limits,
            )
            if count:
                counts[middle] = count
        expected = {(degree - 1,)} | {
            tuple(sorted((i, degree - i), reverse=True))
            for i in range(2, degree // 2 + 1)
        }
        details[f"d={degree}"] = {str(k): v for k, v in counts.items()}
        if set(counts) != expected or any(v != 1 for v in counts.values()):
            return CheckResult(
                "triple-types", False, f"wrong stratification at d={degree}", details
            )
        if len(counts) != degree // 2:
            return CheckResult(
                "triple-types", False, f"wrong type count at d={degree}", details
            )
    return CheckResult(
        "triple-types",
        True,
        "each admissible middle type gives one component; totals "
        + ", ".join(f"d={d}: {d // 2}" for d in degrees),
        details,
    )


# ---------------------------------------------------------------------------
# 6. stable range: invariants determine the element


def check_stable_range(options: dict) -> CheckResult:
    """Random degree-3 pairs with equal type, equal product, full subgroup
    and >= 6 transposition letters are equivalent, and the stable canonical
    form reconstructs them (oracle-certified via cached orbits)."""
    limits = _limits(options)
    pair_target = options.get("instances", 200)
    rng = random.Random(options.get("seed", 20260810))
    letters = sorted(all_permutations(3, include_identity=False), key=Perm.sort_key)
    transpositions = [p for p in letters if p.is_transposition()]
    three_cycles = [p for p in letters if not p.is_transposition()]
    tables = MoveTables(3, letters)
    orbit_cache: dict[tuple, set] = {}

    def random_word(t: int, c: int) -> Word:
        pool = [rng.choice(transpositions) for _ in range(t)]
        pool += [rng.choice(three_cycles) for _ in range(c)]
        rng.shuffle(pool)
        return Word(3, tuple(pool))

    def orbit_of(word: Word) -> set:
        key = (len(word), word.product(), frozenset(word.type_vector().items()))
        if key not in orbit_cache:
            orbit, exhausted = _orbit_ids(
                tables, tables.encode(word), limits.max_states
            )
            if not exhausted:
                raise AssertionError("orbit budget exhausted")
            orbit_cache[key] = orbit
        return orbit_cache[key]

    pairs = 0
    attempts = 0
    while pairs < pair_target:
        attempts += 1
        if attempts > 100 * pair_target:
            raise AssertionError("instance generation stalled")
        t = rng.choice([6, 7, 8, 9])
        c = rng.randint(0, 9 - t)
        w1, w2 = random_word(t, c), random_word(t, c)
        if w1.product() != w2.product():
            continue
        if w1.generated_subgroup().tag != "full_symmetric":
            continue
        if w2.generated_subgroup().tag != "full_symmetric":
            continue
        orbit = orbit_of(w1)
        if tables.encode(w2) not in orbit:
            return CheckResult(
                "stable-range", False, f"inequivalent pair {w1} vs {w2}", {}
            )
        reconstruction = stable_canonical_form(w1).reconstruction()
        if tables.encode(reconstruction) not in orbit:
            return CheckResult(
                "stable-range", False, f"reconstruction left the orbit of {w1}", {}
            )
        pairs += 1
    return CheckResult(
        "stable-range",
        True,
        f"{pairs} random pairs equivalent; {len(orbit_cache)} orbits enumerated",
        {"orbits": len(orbit_cache)},
    )


# ---------------------------------------------------------------------------
# 7. degree-3 presentation and classifiers


_SIGMA3_RELATION_NAMES = [
    "commuting generators",
    "absorbed squares",
    "cube exchange",
    "square-pair relations",
    "triple product relation",
    "mixed power relations",
    "cross relations",
]


def _sigma3_relation_pairs() -> list[tuple[str, Word, Word]]:
    s = sigma3_generators()
    pairs: list[tuple[str, Word, Word]] = []
    for i in range(7):
        for j in range(i + 1, 7):
            pairs.append((f"s{i+1}*s{j+1} = s{j+1}*s{i+1}", s[i] + s[j], s[j] + s[i]))
    for k in range(3, 7):
        for i in range(3):
            for j in range(i + 1, 3):
                pairs.append(
                    (
                        f"s{i+1}*s{k+1} = s{j+1}*s{k+1}",
                        s[i] + s[k],
                        s[j] + s[k],
                    )
                )
    for i in range(3):
        pairs.append((f"s{i+1}*s6 = s{i+1}*s7", s[i] + s[5], s[i] + s[6]))
    pairs.append(("s1*s2 = s1*s3", s[0] + s[1], s[0] + s[2]))
    pairs.append(("s1*s2 = s2*s3", s[0] + s[1], s[1] + s[2]))
    pairs.append(("s4^3 = s6*s7", s[3] + s[3] + s[3], s[5] + s[6]))
    pairs.append(("s5^2 = s1^2*s4", s[4] + s[4], s[0] + s[0] + s[3]))
    pairs.append(("s5^3 = s1^3*s6", s[4] + s[4] + s[4], s[0] + s[0] + s[0] + s[5]))
    pairs.append(("s4*s5 = s1*s6", s[3] + s[4], s[0] + s[5]))
    pairs.append(("s4*s5 = s1*s7", s[3] + s[4], s[0] + s[6]))
    return pairs


def check_sigma3_presentation(options: dict) -> CheckResult:
    """All listed relations among the seven generators hold in the oracle;
    the exact and up-to-conjugation classifiers agree with the oracle on
    every degree-3 word up to the configured length (exhaustive).  Also
    checks that the seven generators are pairwise inequivalent."""
    limits = _limits(options)
    max_length = options.get("max_length", 7)
    generators = sigma3_generators()
    for i in range(7):
        for j in range(i + 1, 7):
            if hurwitz_equivalent(generators[i], generators[j], limits):
                return CheckResult(
                    "sigma3-presentation",
                    False,
                    f"generators s{i+1} and s{j+1} are equivalent",
                    {},
                )
    for name, lhs, rhs in _sigma3_relation_pairs():
        if not hurwitz_equivalent(lhs, rhs, limits):
            return CheckResult(
                "sigma3-presentation", False, f"relation {name} fails", {}
            )

    letters = sorted(all_permutations(3, include_identity=False), key=Perm.sort_key)
    tables = MoveTables(3, letters)
    conjugators = list(all_permutations(3))
    orbit_totals = {}
    for length in range(0, max_length + 1):
        ids = [
            tuple(tables.index[p] for p in combo)
            for combo in itertools.product(letters, repeat=length)
        ]
        partition = orbit_partition(3, ids, tables, limits)
        parent = list(range(len(partition.canonicals)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for index, state in enumerate(partition.canonicals):
            word = tables.decode(state)
            for g in conjugators:
                other = partition.orbit_of[
                    tables.encode(word.simultaneous_conjugate(g))
                ]
                a, b = find(index), find(other)
                if a != b:
                    parent[a] = b

        exact_by_orbit: dict[int, tuple] = {}
        conj_by_class: dict[int, tuple] = {}
        for state in ids:
            word = tables.decode(state)
            orbit_id = partition.orbit_of[state]
            if word.product().is_identity():
                form = sigma3_normal_form(word)
                if not form.exact:
                    return CheckResult(
                        "sigma3-presentation", False, "identity word not exact", {}
                    )
                key = (form.family, form.params)
                if exact_by_orbit.setdefault(orbit_id, key) != key:
                    return CheckResult(
                        "sigma3-presentation",
                        False,
                        f"exact form not orbit-constant at length {length}",
                        {},
                    )
            class_form = conjugacy_class_form(word)
            key = (class_form.family, class_form.params)
            if conj_by_class.setdefault(find(orbit_id), key) != key:
                return CheckResult(
                    "sigma3-presentation",
                    False,
                    f"class form not class-constant at length {length}",
                    {},
                )
        if len(set(exact_by_orbit.values())) != len(exact_by_orbit):
            return CheckResult(
                "sigma3-presentation",
                False,
                f"exact forms collide across orbits at length {length}",
                {},
            )
        if len(set(conj_by_class.values())) != len(conj_by_class):
            return CheckResult(
                "sigma3-presentation",
                False,
                f"class forms collide across classes at length {length}",
                {},
            )
        orbit_totals[length] = (len(exact_by_orbit), len(conj_by_class))
    return CheckResult(
        "sigma3-presentation",
        True,
        f"all relations hold; classifiers exact on lengths 0..{max_length}",
        {"identity_orbits_and_classes": orbit_totals},
    )


# ---------------------------------------------------------------------------
# 8. braid relations and the commutation properties


def _random_word(rng: random.Random, degree: int, length: int) -> Word:
    letters = [p for p in all_permutations(degree, include_identity=False)]
    return Word(degree, tuple(rng.choice(letters) for _ in range(length)))


def _slide_identity_block_right(word: Word, start: int, size: int) -> Word:
    """Move an identity-product block one slot right; crossed letter and the
    block both come back unchanged (1-based block start)."""
    for i in range(start + size - 1, start - 1, -1):
        word = word.hurwitz_move(i)
    return word


def _conjugate_power_prefix(word: Word, n: int, r: int) -> Word:
    """For a word ``x_g^n * s`` with g of order n, pull the first r letters
    of s through the block and slide the (central) block back to the front;
    the block becomes ``x_{h^-1 g h}^n`` for h the length-r prefix product
    of s, and s is restored."""
    for j in range(1, r + 1):
        word = pull_letter_left(word, n + j, j)
    for base in range(r, 0, -1):
        for i in range(base, base + n):
            word = word.hurwitz_move(i, inverse=True)
    return word


def check_braid_relations(options: dict) -> CheckResult:
    """Randomized suites, 1000 instances each by default:

    - the move actions satisfy the braid relations as word equalities;
    - the concatenation rule u*v = v*conj(u, product(v)) is realized by an
      explicit move sequence (spot-checked against the oracle);
    - identity-product prefixes commute past anything by explicit moves;
    - central-letter commutation holds when products are centralized
      (oracle);
    - powers of conjugate letters absorb into words generating the full
      group: x_g1^n * s = x_g2^n * s, realized by explicit move sequences.
    """
    limits = _limits(options)
    instances = options.get("instances", 1000)
    rng = random.Random(options.get("seed", 97))

    # Suite A: braid relations.
    for _ in range(instances):
        degree = rng.randint(2, 4)
        length = rng.randint(3, 7)
        word = _random_word(rng, degree, length)
        i = rng.randint(1, length - 2)
        lhs = word.hurwitz_move(i).hurwitz_move(i + 1).hurwitz_move(i)
        rhs = word.hurwitz_move(i + 1).hurwitz_move(i).hurwitz_move(i + 1)
        if lhs != rhs:
            return CheckResult("braid-relations", False, "adjacent relation fails", {})
        if length >= 4:
            k = rng.choice([k for k in range(1, length) if abs(k - i) >= 2])
            if word.hurwitz_move(i).hurwitz_move(k) != word.hurwitz_move(
                k
            ).hurwitz_move(i):
                return CheckResult(
                    "braid-relations", False, "distant moves do not commute", {}
                )

    # Suite B: concatenation conjugation rule, by explicit moves.
    for index in range(instances):
        degree = rng.randint(2, 4)
        u = _random_word(rng, degree, rng.randint(0, 4))
        v = _random_word(rng, degree, rng.randint(0, 7 - len(u)))
        word = u + v
        moved = word
        for j in range(1, len(v) + 1):
            moved = pull_letter_left(moved, len(u) + j, j)
        expected = v + u.simultaneous_conjugate(v.product())
        if moved != expected:
            return CheckResult(
                "braid-relations", False, "concatenation rule fails", {}
            )
        if index < 20 and not hurwitz_equivalent(word, expected, limits):
            return CheckResult(
                "braid-relations", False, "concatenation rule oracle check fails", {}
            )

    # Suite C: identity-product prefixes are central (explicit moves).
    produced = 0
    while produced < instances:
        degree = rng.randint(2, 4)
        u = _random_word(rng, degree, rng.randint(0, 4))
        if not u.product().is_identity():
            continue
        v = _random_word(rng, degree, rng.randint(0, 7 - len(u)))
        word = u + v
        moved = word
        for start in range(1, len(v) + 1):
            moved = _slide_identity_block_right(moved, start, len(u))
        if moved != v + u:
            return CheckResult(
                "braid-relations", False, "identity prefix does not commute", {}
            )
        if produced < 20 and not hurwitz_equivalent(word, v + u, limits):
            return CheckResult(
                "braid-relations", False, "identity prefix oracle check fails", {}
            )
        produced += 1

    # Suite D: a letter whose extended product is centralized commutes
    # (oracle, on instances built to satisfy the hypothesis).
    produced = 0
    while produced < instances:
        degree = rng.randint(2, 4)
        s = _random_word(rng, degree, rng.randint(1, 4))
        if produced % 2 == 0:
            g = s.product().inverse()
            if g.is_identity():
                continue
        else:
            base = rng.choice(
                [p for p in all_permutations(degree, include_identity=False)]
            )
            power = rng.randint(1, base.order() - 1) if base.order() > 1 else 1
            letters = tuple(
                base ** rng.randint(1, base.order() - 1) for _ in range(len(s))
            )
            s = Word(degree, letters)
            if len(s) == 0:
                continue
            g = base**power
            if g.is_identity():
                continue
        extended = s + Word(degree, (g,))
        info_letters = frozenset(extended.letters)
        product = extended.product()
        if any(
            product * h != h * product
            for h in info_letters
        ):
            continue
        if not hurwitz_equivalent(extended, Word(degree, (g,)) + s, limits):
            return CheckResult(
                "braid-relations", False, "centralized letter fails to commute", {}
            )
        produced += 1

    # Suite E: conjugate letter powers absorb (explicit move path).
    produced = 0
    letters3 = sorted(all_permutations(3, include_identity=False), key=Perm.sort_key)
    while produced < instances:
        s = Word(3, tuple(rng.choice(letters3) for _ in range(rng.randint(2, 4))))
        if s.generated_subgroup().tag != "full_symmetric":
            continue
        g1 = rng.choice(letters3)
        n = g1.order()
        conjugates = sorted(
            {g1.conjugate(g) for g in all_permutations(3)}, key=Perm.sort_key
        )
        g2 = rng.choice(conjugates)
        prefix_products = []
        acc = Perm.identity(3)
        for letter in s.letters:
            acc = acc * letter
            prefix_products.append(acc)
        # BFS from g1 to g2 through prefix-product conjugations.
        frontier = {g1: []}
        reached = dict(frontier)
        while g2 not in reached and frontier:
            next_frontier = {}
            for current, path in frontier.items():
                for r, h in enumerate(prefix_products, start=1):
                    image = current.conjugate(h)
                    if image not in reached:
                        entry = path + [r]
                        reached[image] = entry
                        next_frontier[image] = entry
            frontier = next_frontier
        if g2 not in reached:
            return CheckResult(
                "braid-relations",
                False,
                f"conjugate {g2} unreachable from {g1} over {s}",
                {},
            )
        word = Word(3, (g1,) * n) + s
        for r in reached[g2]:
            word = _conjugate_power_prefix(word, n, r)
        if word != Word(3, (g2,) * n) + s:
            return CheckResult(
                "braid-relations", False, "power absorption path fails", {}
            )
        if produced < 20 and not hurwitz_equivalent(
            Word(3, (g1,) * n) + s, Word(3, (g2,) * n) + s, limits
        ):
            return CheckResult(
                "braid-relations", False, "power absorption oracle check fails", {}
            )
        produced += 1

    return CheckResult(
        "braid-relations",
        True,
        f"five suites passed with {instances} instances each",
        {"instances": instances},
    )


# ---------------------------------------------------------------------------
# 9. origins of upward-closed subsemigroups


def check_origins(options: dict) -> CheckResult:
    """Origin antichains agree with brute-force box closures on random
    instances; ascending generator chains stabilize; origins are
    idempotent."""
    instances = options.get("instances", 500)
    rng = random.Random(options.get("seed", 5))
    for _ in range(instances):
        dimension = rng.randint(1, 4)
        count = rng.randint(1, 6)
        generators = [
            tuple(rng.randint(0, 6) for _ in range(dimension)) for _ in range(count)
        ]
        origin_set = origins(generators)
        if origins(origin_set.sorted_points()).points != origin_set.points:
            return CheckResult("origins", False, "origins not idempotent", {})
        for _ in range(40):
            point = tuple(rng.randint(0, 7) for _ in range(dimension))
            brute = any(dominates(point, g) for g in generators)
            if member(origin_set, point) != brute:
                return CheckResult(
                    "origins",
                    False,
                    f"membership mismatch at {point} for {generators}",
                    {},
                )
        # ascending chain: adding generators one at a time stabilizes
        chain = OriginSet(dimension, frozenset({generators[0]}))
        strict_growth = 0
        for g in generators[1:]:
            extended = union(chain, origins([g]))
            if extended.points != chain.points:
                strict_growth += 1
            chain = extended
        if strict_growth > count - 1:
            return CheckResult("origins", False, "chain grew too often", {})
    return CheckResult(
        "origins",
        True,
        f"{instances} random instances agree with brute-force closure",
        {"instances": instances},
    )


# ---------------------------------------------------------------------------
# 10. regular embeddings


def check_cayley(options: dict) -> CheckResult:
    """Structure of the regular embedding for Z3, Z4, Z2xZ2 and the
    symmetric group on 3 points; plus: identity-product classes of the
    6-element symmetric group are pinned by their letter-class multiset for
    lengths up to 4."""
    limits = _limits(options)
    groups = {
        "Z3": cyclic_table(3),
        "Z4": cyclic_table(4),
        "Z2xZ2": klein_four_table(),
        "S3": symmetric3_table(),
    }
    details = {}
    for name, table in groups.items():
        report = cayley_structure_check(table)
        details[name] = {
            "centralizer": report.centralizer_order,
            "normalizer": report.normalizer_order,
            "aut": report.aut_order,
            "amalgam": f"{report.amalgam_order}/{report.amalgam_expected}",
        }
        if not report.passed:
            return CheckResult("cayley", False, f"structure check fails for {name}", details)
    s3 = groups["S3"]
    for length in range(1, options.get("max_length", 4) + 1):
        count, representatives = galois_components(s3, length, limits)
        vectors = [word_class_vector(s3, w) for w in representatives]
        if len(set(vectors)) != count:
            return CheckResult(
                "cayley",
                False,
                f"class multiset does not pin components at length {length}",
                details,
            )
        details[f"S3 components b={length}"] = count
    return CheckResult(
        "cayley",
        True,
        "regular-embedding structure and component typing verified",
        details,
    )


# ---------------------------------------------------------------------------
# registry


CHECKS: dict[str, Callable[[dict], CheckResult]] = {
    "clebsch-hurwitz": check_clebsch_hurwitz,
    "transposition-normal-form": check_transposition_normal_form,
    "genus-addition": check_genus_addition,
    "deg3-counts": check_deg3_counts,
    "triple-types": check_triple_types,
    "stable-range": check_stable_range,
    "sigma3-presentation": check_sigma3_presentation,
    "braid-relations": check_braid_relations,
    "origins": check_origins,
    "cayley": check_cayley,
}


def run_check(name: str, **options) -> CheckResult:
    if name not in CHECKS:
        raise ValueError(f"unknown check {name!r}; known: {', '.join(sorted(CHECKS))}")
    return CHECKS[name](options)


def run_all(names: list[str] | None = None, **options) -> list[CheckResult]:
    return [run_check(name, **options) for name in (names or list(CHECKS))]
